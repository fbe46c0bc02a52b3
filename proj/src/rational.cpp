#include "hs/rational.hpp"

#include <stdexcept>

namespace hs {

BigRational::BigRational(long long n, long long d) : num_(n), den_(d) { normalize(); }
BigRational::BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

void BigRational::normalize() {
    if (den_.is_zero()) throw std::domain_error("BigRational: zero denominator");
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
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

BigRational BigRational::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return BigRational(BigInt::from_string(s), BigInt(1));
    return BigRational(BigInt::from_string(s.substr(0, slash)),
                       BigInt::from_string(s.substr(slash + 1)));
}

BigRational BigRational::operator-() const {
    BigRational r = *this;
    r.num_ = -r.num_;
    return r;
}

BigRational BigRational::operator+(const BigRational& o) const {
    return BigRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

BigRational BigRational::operator-(const BigRational& o) const {
    return BigRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

BigRational BigRational::operator*(const BigRational& o) const {
    return BigRational(num_ * o.num_, den_ * o.den_);
}

BigRational BigRational::operator/(const BigRational& o) const {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    return BigRational(num_ * o.den_, den_ * o.num_);
}

int BigRational::compare(const BigRational& o) const {
    return (num_ * o.den_).compare(o.num_ * den_);
}

std::string BigRational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

double BigRational::to_double() const {
    // shift both parts down so the double division cannot overflow
    std::size_t bn = num_.bit_length(), bd = den_.bit_length();
    std::size_t top = bn > bd ? bn : bd;
    std::size_t shift = top > 500 ? top - 500 : 0;
    double n = num_.shifted_right(shift).to_double();
    double d = den_.shifted_right(shift).to_double();
    if (d == 0.0) d = 1.0;
    return n / d;
}

GaussianRational GaussianRational::operator-() const { return GaussianRational(-re_, -im_); }

GaussianRational GaussianRational::operator+(const GaussianRational& o) const {
    return GaussianRational(re_ + o.re_, im_ + o.im_);
}

GaussianRational GaussianRational::operator-(const GaussianRational& o) const {
    return GaussianRational(re_ - o.re_, im_ - o.im_);
}

GaussianRational GaussianRational::operator*(const GaussianRational& o) const {
    return GaussianRational(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
    BigRational n = re_ * re_ + im_ * im_;
    return GaussianRational(re_ / n, -(im_ / n));
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    return *this * o.inverse();
}

GaussianRational GaussianRational::pow(unsigned long long e) const {
    GaussianRational base = *this;
    GaussianRational acc(1);
    while (e) {
        if (e & 1ull) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag = im_.is_one() ? "i"
                     : (-im_).is_one() ? "-i"
                                       : im_.to_string() + "*i";
    if (re_.is_zero()) return imag;
    if (im_.sign() > 0) return re_.to_string() + "+" + imag;
    return re_.to_string() + "-" + (im_.is_one() || (-im_).is_one() ? std::string("i")
                                                                    : (-im_).to_string() + "*i");
}

std::complex<double> GaussianRational::to_complex() const {
    return {re_.to_double(), im_.to_double()};
}

}  // namespace hs
