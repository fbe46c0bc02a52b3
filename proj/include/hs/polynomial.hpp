// Sparse multivariate polynomials over the Gaussian rationals.
//
// Terms live in a std::map keyed by exponent vector under graded-lex order
// (higher total degree first, ties broken by lexicographically larger
// exponent vector). Zero coefficients are never stored, so two polynomials
// are equal iff their term maps are equal, and iteration order doubles as
// the canonical serialization order.
//
// Parametric coefficients are handled by convention rather than nesting:
// a polynomial in k "main" variables with P parameters is simply a
// polynomial in k+P variables, with the parameter block appended after the
// main block. Helpers for splitting along that boundary live in the
// symmetry layer.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hs/rational.hpp"

namespace hs {

struct Budget {
    int max_degree = 256;
    std::size_t max_terms = 1000000;
};

class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<std::uint32_t> v) : e(std::move(v)) {}

    int total_degree() const {
        int d = 0;
        for (auto x : e) d += static_cast<int>(x);
        return d;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// graded-lex, higher degree first
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        return a.e > b.e;
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussianRational, MonomialOrder>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, GaussianRational c);
    static Polynomial variable(int nvars, int index);
    static Polynomial monomial(int nvars, Monomial m, GaussianRational c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    // total degree; -1 for the zero polynomial
    int degree() const;
    int degree_in(int var) const;
    bool depends_on(int var) const { return degree_in(var) > 0; }

    GaussianRational constant_term() const;
    GaussianRational coefficient(const Monomial& m) const;
    // sum of terms with exponent `power` in `var`, that variable zeroed out
    Polynomial coefficient_of(int var, std::uint32_t power) const;
    // sum of terms of total degree == degree(); requires nonzero
    Polynomial homogeneous_top() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const GaussianRational& c) const;
    Polynomial pow(unsigned e, const Budget* budget = nullptr) const;

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // replace variable j by maps[j]; all maps share one variable count
    Polynomial substitute(std::span<const Polynomial> maps, const Budget* budget = nullptr) const;

    // append `extra` fresh variables after the existing block
    Polynomial extended(int extra) const;
    // re-index variables: new exponent[perm[j]] = old exponent[j]
    Polynomial remapped(const std::vector<int>& perm, int new_nvars) const;

    GaussianRational eval_exact(std::span<const GaussianRational> z) const;
    // term-wise in canonical order, powers by repeated multiplication;
    // the fixed order keeps results reproducible
    std::complex<double> eval_float(std::span<const std::complex<double>> z) const;

    void add_term(const Monomial& m, const GaussianRational& c);

    std::string to_string(std::span<const std::string> names) const;
    std::string to_string() const;  // default names x1..xn

    static std::vector<std::string> default_names(int nvars);

private:
    int nvars_ = 0;
    TermMap terms_;
    void check_same_vars(const Polynomial& o) const;
};

}  // namespace hs
