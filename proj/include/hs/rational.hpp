// Exact rationals and Gaussian rationals (a + b*i with rational a, b).
//
// Invariant kept by every operation: denominators are positive and in
// lowest terms. Equality is therefore plain field-by-field comparison.

#pragma once

#include <complex>
#include <string>

#include "hs/bigint.hpp"

namespace hs {

class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(long long n) : num_(n), den_(1) {}
    BigRational(long long n, long long d);
    BigRational(BigInt n, BigInt d);

    static BigRational from_string(std::string_view s);  // "n" or "n/d"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    BigRational operator-() const;
    BigRational operator+(const BigRational& o) const;
    BigRational operator-(const BigRational& o) const;
    BigRational operator*(const BigRational& o) const;
    BigRational operator/(const BigRational& o) const;

    bool operator==(const BigRational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const BigRational& o) const { return !(*this == o); }
    int compare(const BigRational& o) const;
    bool operator<(const BigRational& o) const { return compare(o) < 0; }

    std::string to_string() const;
    double to_double() const;

private:
    BigInt num_, den_;
    void normalize();
};

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long long n) : re_(n) {}
    GaussianRational(BigRational re) : re_(std::move(re)) {}
    GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(BigRational(0), BigRational(1)); }

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational operator-() const;
    GaussianRational operator+(const GaussianRational& o) const;
    GaussianRational operator-(const GaussianRational& o) const;
    GaussianRational operator*(const GaussianRational& o) const;
    GaussianRational operator/(const GaussianRational& o) const;
    GaussianRational inverse() const;
    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    GaussianRational pow(unsigned long long e) const;

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    // "a/b", "c/d*i", or "a/b+c/d*i"; integers printed without "/1"
    std::string to_string() const;
    std::complex<double> to_complex() const;

private:
    BigRational re_, im_;
};

}  // namespace hs
