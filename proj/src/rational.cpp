#include "plap/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace plap {

void Rational::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::from_double(double v) {
    if (!std::isfinite(v)) throw std::domain_error("Rational: non-finite double");
    if (v == 0.0) return Rational();
    int exp;
    double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
    // scale the mantissa to an exact 53-bit integer
    long long m = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    BigInt num(m), den(1);
    if (exp >= 0) {
        num = num.shifted_left(static_cast<unsigned>(exp));
    } else {
        den = den.shifted_left(static_cast<unsigned>(-exp));
    }
    return Rational(std::move(num), std::move(den));
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(BigInt::from_string(s), BigInt(1));
    }
    BigInt num = BigInt::from_string(s.substr(0, slash));
    BigInt den = BigInt::from_string(s.substr(slash + 1));
    return Rational(std::move(num), std::move(den));
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational out;
    out.num_ = den_;
    out.den_ = num_;
    if (out.den_.is_negative()) {
        out.num_ = -out.num_;
        out.den_ = -out.den_;
    }
    return out;
}

Rational& Rational::operator+=(const Rational& o) {
    // a/b + c/d with g = gcd(b, d) to curb intermediate growth
    BigInt g = BigInt::gcd(den_, o.den_);
    BigInt b_r = den_ / g, d_r = o.den_ / g;
    num_ = num_ * d_r + o.num_ * b_r;
    den_ = den_ * d_r;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    return *this += -o;
}

Rational& Rational::operator*=(const Rational& o) {
    // cross-reduce before multiplying
    BigInt g1 = BigInt::gcd(num_, o.den_);
    BigInt g2 = BigInt::gcd(o.num_, den_);
    num_ = (num_ / g1) * (o.num_ / g2);
    den_ = (den_ / g2) * (o.den_ / g1);
    if (num_.is_zero()) den_ = BigInt(1);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    return *this *= o.inverse();
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

double Rational::to_double() const {
    int en, ed;
    double mn = num_.to_double_scaled(en);
    if (mn == 0.0) return 0.0;
    double md = den_.to_double_scaled(ed);
    return std::ldexp(mn / md, en - ed);
}

}  // namespace plap
