#include "plap/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plap {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? -static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    while (m != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffull));
        m >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

BigInt BigInt::from_string(std::string_view s) {
    size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt out;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in numeral");
        // out = out*10 + digit, done on limbs directly
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (auto& limb : out.limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * 10 + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        while (carry) {
            out.limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffull));
            carry >>= 32;
        }
    }
    out.sign_ = out.limbs_.empty() ? 0 : sign;
    out.trim();
    return out;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int mag = compare_magnitude(a, b);
    return a.sign_ >= 0 ? mag : -mag;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> out;
    out.reserve(hi.size() + 1);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out.push_back(static_cast<std::uint32_t>(cur & 0xffffffffull));
        carry = cur >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

// requires |a| >= |b|
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                           (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (cur < 0) {
            cur += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(cur));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        if (ai == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Knuth algorithm D on base-2^32 limbs.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q,
                        std::vector<std::uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    q.clear();
    r.clear();
    if (a.size() < b.size()) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        std::uint64_t d = b[0];
        q.assign(a.size(), 0);
        std::uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }

    // Normalize so the top limb of the divisor has its high bit set.
    int shift = 0;
    {
        std::uint32_t top = b.back();
        while ((top & 0x80000000u) == 0) {
            top <<= 1;
            ++shift;
        }
    }
    const size_t n = b.size();
    const size_t m = a.size() - n;
    std::vector<std::uint32_t> u(a.size() + 1, 0), v(n, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(a[i]) << shift;
        u[i] |= static_cast<std::uint32_t>(cur & 0xffffffffull);
        if (shift) u[i + 1] |= static_cast<std::uint32_t>(cur >> 32);
    }
    for (size_t i = 0; i < n; ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(b[i]) << shift;
        v[i] |= static_cast<std::uint32_t>(cur & 0xffffffffull);
        if (shift && i + 1 < n) v[i + 1] |= static_cast<std::uint32_t>(cur >> 32);
    }

    q.assign(m + 1, 0);
    const std::uint64_t vtop = v[n - 1];
    const std::uint64_t vsecond = v[n - 2];
    for (size_t j = m + 1; j-- > 0;) {
        std::uint64_t numerator = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = numerator / vtop;
        std::uint64_t rhat = numerator % vtop;
        if (qhat > 0xffffffffull) {
            qhat = 0xffffffffull;
            rhat = numerator - qhat * vtop;
        }
        while (rhat <= 0xffffffffull &&
               qhat * vsecond > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
        }
        // u[j .. j+n] -= qhat * v
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            std::uint64_t prod = qhat * v[i] + carry;
            carry = prod >> 32;
            std::int64_t cur = static_cast<std::int64_t>(u[j + i]) - borrow -
                               static_cast<std::int64_t>(prod & 0xffffffffull);
            if (cur < 0) {
                cur += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[j + i] = static_cast<std::uint32_t>(cur);
        }
        std::int64_t cur = static_cast<std::int64_t>(u[j + n]) - borrow -
                           static_cast<std::int64_t>(carry);
        if (cur < 0) {
            // qhat was one too large; add v back
            cur += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(u[j + i]) + v[i] + c2;
                u[j + i] = static_cast<std::uint32_t>(s & 0xffffffffull);
                c2 = s >> 32;
            }
            cur += static_cast<std::int64_t>(c2);
            cur &= 0xffffffffll;
        }
        u[j + n] = static_cast<std::uint32_t>(cur);
        q[j] = static_cast<std::uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();

    r.assign(u.begin(), u.begin() + n);
    if (shift) {
        for (size_t i = 0; i < r.size(); ++i) {
            std::uint32_t hi = (i + 1 < r.size()) ? r[i + 1] : 0;
            r[i] = static_cast<std::uint32_t>(
                ((static_cast<std::uint64_t>(hi) << 32 | r[i]) >> shift) & 0xffffffffull);
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) {
        *this = o;
        return *this;
    }
    if (sign_ == o.sign_) {
        limbs_ = add_mag(limbs_, o.limbs_);
        return *this;
    }
    int mag = compare_magnitude(*this, o);
    if (mag == 0) {
        sign_ = 0;
        limbs_.clear();
        return *this;
    }
    if (mag > 0) {
        limbs_ = sub_mag(limbs_, o.limbs_);
    } else {
        limbs_ = sub_mag(o.limbs_, limbs_);
        sign_ = o.sign_;
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    return *this += -o;
}

BigInt& BigInt::operator*=(const BigInt& o) {
    if (sign_ == 0 || o.sign_ == 0) {
        sign_ = 0;
        limbs_.clear();
        return *this;
    }
    if (limbs_.size() == 1 && o.limbs_.size() == 1) {
        std::uint64_t prod = static_cast<std::uint64_t>(limbs_[0]) * o.limbs_[0];
        limbs_[0] = static_cast<std::uint32_t>(prod & 0xffffffffull);
        if (prod >> 32) limbs_.push_back(static_cast<std::uint32_t>(prod >> 32));
        sign_ = sign_ * o.sign_;
        return *this;
    }
    limbs_ = mul_mag(limbs_, o.limbs_);
    sign_ = sign_ * o.sign_;
    trim();
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
}

BigInt& BigInt::operator/=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    *this = std::move(q);
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    *this = std::move(r);
    return *this;
}

BigInt BigInt::shifted_left(unsigned bits) const {
    if (is_zero() || bits == 0) return *this;
    BigInt out;
    out.sign_ = sign_;
    unsigned limb_shift = bits / 32, bit_shift = bits % 32;
    out.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
        out.limbs_[i + limb_shift] |= static_cast<std::uint32_t>(cur & 0xffffffffull);
        out.limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(cur >> 32);
    }
    out.trim();
    return out;
}

BigInt BigInt::shifted_right(unsigned bits) const {
    if (is_zero() || bits == 0) return *this;
    unsigned limb_shift = bits / 32, bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) return BigInt();
    BigInt out;
    out.sign_ = sign_;
    out.limbs_.assign(limbs_.begin() + limb_shift, limbs_.end());
    if (bit_shift) {
        for (size_t i = 0; i < out.limbs_.size(); ++i) {
            std::uint32_t hi = (i + 1 < out.limbs_.size()) ? out.limbs_[i + 1] : 0;
            out.limbs_[i] = static_cast<std::uint32_t>(
                ((static_cast<std::uint64_t>(hi) << 32 | out.limbs_[i]) >> bit_shift) &
                0xffffffffull);
        }
    }
    out.trim();
    return out;
}

unsigned BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    unsigned bits = 0;
    while (top) {
        top >>= 1;
        ++bits;
    }
    return static_cast<unsigned>((limbs_.size() - 1) * 32) + bits;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    // binary gcd on magnitudes
    BigInt u = a.abs(), v = b.abs();
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    if (u.limbs_.size() <= 2 && v.limbs_.size() <= 2) {
        auto low = [](const BigInt& x) {
            std::uint64_t m = x.limbs_[0];
            if (x.limbs_.size() == 2) m |= static_cast<std::uint64_t>(x.limbs_[1]) << 32;
            return m;
        };
        std::uint64_t x = low(u), y = low(v);
        while (y) {
            std::uint64_t t = x % y;
            x = y;
            y = t;
        }
        BigInt out;
        out.sign_ = 1;
        out.limbs_.push_back(static_cast<std::uint32_t>(x & 0xffffffffull));
        if (x >> 32) out.limbs_.push_back(static_cast<std::uint32_t>(x >> 32));
        return out;
    }
    unsigned shift = 0;
    while (u.is_even() && v.is_even()) {
        u = u.shifted_right(1);
        v = v.shifted_right(1);
        ++shift;
    }
    while (u.is_even()) u = u.shifted_right(1);
    while (!v.is_zero()) {
        while (v.is_even()) v = v.shifted_right(1);
        if (compare_magnitude(u, v) > 0) std::swap(u, v);
        v -= u;
    }
    return u.shifted_left(shift);
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    return (a.abs() / gcd(a, b)) * b.abs();
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> mag = limbs_;
    std::string digits;
    while (!mag.empty()) {
        // divide magnitude by 10^9 to peel chunks of 9 decimal digits
        std::uint64_t rem = 0;
        for (size_t i = mag.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
            if (mag.empty() && rem == 0) break;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double BigInt::to_double_scaled(int& exp2_out) const {
    if (is_zero()) {
        exp2_out = 0;
        return 0.0;
    }
    const unsigned bl = bit_length();
    // top (up to) 64 significant bits of the magnitude
    std::uint64_t mant = 0;
    unsigned bits = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        unsigned limb_bits =
            (i + 1 == limbs_.size())
                ? bl - 32u * static_cast<unsigned>(limbs_.size() - 1)
                : 32u;
        if (bits + limb_bits <= 64) {
            mant = (mant << limb_bits) | limbs_[i];
            bits += limb_bits;
        } else {
            unsigned take = 64 - bits;
            if (take > 0) mant = (mant << take) | (limbs_[i] >> (limb_bits - take));
            bits = 64;
        }
        if (bits == 64) break;
    }
    double m = std::ldexp(static_cast<double>(mant), -static_cast<int>(bits));
    exp2_out = static_cast<int>(bl);
    return sign_ < 0 ? -m : m;
}

double BigInt::to_double() const {
    int e;
    double m = to_double_scaled(e);
    return std::ldexp(m, e);
}

bool BigInt::fits_int64(long long& out) const {
    if (limbs_.size() > 2) return false;
    unsigned long long mag = 0;
    if (limbs_.size() >= 1) mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<unsigned long long>(limbs_[1]) << 32;
    if (sign_ >= 0) {
        if (mag > 0x7fffffffffffffffull) return false;
        out = static_cast<long long>(mag);
    } else {
        if (mag > 0x8000000000000000ull) return false;
        out = -static_cast<long long>(mag - 1) - 1;
    }
    return true;
}

}  // namespace plap
