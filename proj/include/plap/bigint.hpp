#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace plap {

/// Arbitrary-precision signed integer.
///
/// Sign-magnitude representation with base 2^32 limbs stored little-endian.
/// An empty limb vector encodes zero. Division truncates toward zero, like
/// built-in integer division.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const { return sign_ > 0 && limbs_.size() == 1 && limbs_[0] == 1; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    BigInt& operator/=(const BigInt& o);
    BigInt& operator%=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

    /// Quotient and remainder in one pass; remainder has the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    static BigInt gcd(const BigInt& a, const BigInt& b);
    static BigInt lcm(const BigInt& a, const BigInt& b);

    BigInt shifted_left(unsigned bits) const;
    BigInt shifted_right(unsigned bits) const;

    /// Number of bits in the magnitude; 0 for zero.
    unsigned bit_length() const;
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    /// Magnitude comparison ignoring signs: -1, 0, +1.
    static int compare_magnitude(const BigInt& a, const BigInt& b);
    static int compare(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    std::string to_string() const;

    /// Nearest double; +/-inf on overflow.
    double to_double() const;

    /// Mantissa in [0.5, 1) and exponent e with value = m * 2^e. Zero gives (0, 0).
    double to_double_scaled(int& exp2_out) const;

    /// Exact value if it fits in long long.
    bool fits_int64(long long& out) const;

private:
    int sign_ = 0;                   // -1, 0, +1; 0 iff limbs_ empty
    std::vector<std::uint32_t> limbs_;

    void trim();
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r);
};

}  // namespace plap
