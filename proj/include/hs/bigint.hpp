// Arbitrary-precision signed integers.
//
// Magnitude is a little-endian vector of 32-bit limbs with no leading zero
// limb; sign is -1/0/+1 and is 0 exactly when the magnitude is empty.
// Sized for desk-scale computer algebra: schoolbook multiplication and
// Knuth division are plenty here.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hs {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s);  // optional leading '-'

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const;
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator/(const BigInt& o) const;  // truncated toward zero
    BigInt operator%(const BigInt& o) const;  // sign follows dividend

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // quotient truncated toward zero, remainder with dividend's sign
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    static BigInt gcd(BigInt a, BigInt b);  // non-negative
    BigInt pow(unsigned long long e) const;

    BigInt shifted_left(std::size_t bits) const;
    BigInt shifted_right(std::size_t bits) const;  // magnitude shift, keeps sign

    std::size_t bit_length() const;  // 0 for zero
    bool bit(std::size_t i) const;

    int compare(const BigInt& o) const;  // -1/0/+1
    bool operator==(const BigInt& o) const { return compare(o) == 0; }
    bool operator!=(const BigInt& o) const { return compare(o) != 0; }
    bool operator<(const BigInt& o) const { return compare(o) < 0; }
    bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
    bool operator>(const BigInt& o) const { return compare(o) > 0; }
    bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

    std::string to_string() const;  // base 10
    double to_double() const;
    bool fits_int64() const;
    long long to_int64() const;  // caller checks fits_int64

    const std::vector<std::uint32_t>& limbs() const { return mag_; }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

}  // namespace hs
