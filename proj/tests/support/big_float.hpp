// Test-only high-precision float and the brute-force Green oracle.
//
// Value = mantissa * 2^exp with a signed BigInt mantissa truncated to
// `precision` bits after every operation. Truncation instead of rounding
// costs at most a few ulps at 200 bits, far below the 1e-6 comparisons the
// oracle serves. ln is computed from atanh series on the mantissa, so the
// oracle is independent of the double-precision engine end to end.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "hs/bigint.hpp"
#include "hs/poly_map.hpp"

namespace hs::testing {

class BigFloat {
public:
    static constexpr int kPrecision = 200;

    BigFloat() = default;
    static BigFloat from_int(long long v);
    static BigFloat from_double(double d);  // exact (doubles are dyadic)
    static BigFloat from_rational(const BigRational& r);

    bool is_zero() const { return mant_.is_zero(); }
    int sign() const { return mant_.sign(); }

    BigFloat operator-() const;
    BigFloat operator+(const BigFloat& o) const;
    BigFloat operator-(const BigFloat& o) const;
    BigFloat operator*(const BigFloat& o) const;
    BigFloat operator/(const BigFloat& o) const;
    BigFloat div_int(long long k) const;

    // floor(log2 |x|) + 1, i.e. the bit position of the leading bit
    long long mag2() const;

    double to_double() const;

    static BigFloat ln2();
    BigFloat ln() const;  // requires positive

private:
    BigInt mant_;
    long long exp_ = 0;
    void normalize();
};

struct ComplexBF {
    BigFloat re, im;
    ComplexBF operator+(const ComplexBF& o) const { return {re + o.re, im + o.im}; }
    ComplexBF operator*(const ComplexBF& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigFloat norm_sq() const { return re * re + im * im; }
};

// d^-n * log^+ ||F^n(z)|| with n = `steps` brute-force iterations at 200-bit
// precision (stopping early once the orbit is astronomically large, where
// the remaining tail is far below double resolution)
double green_oracle(const PolyMap& F, int d, std::span<const std::complex<double>> z, int steps);

}  // namespace hs::testing
