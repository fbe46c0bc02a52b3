#include "hs/polynomial.hpp"

#include <algorithm>

namespace hs {

Polynomial Polynomial::constant(int nvars, GaussianRational c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Monomial(static_cast<std::size_t>(nvars)), std::move(c));
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("Polynomial: variable index");
    Monomial m(static_cast<std::size_t>(nvars));
    m.e[static_cast<std::size_t>(index)] = 1;
    return monomial(nvars, std::move(m), GaussianRational(1));
}

Polynomial Polynomial::monomial(int nvars, Monomial m, GaussianRational c) {
    if (static_cast<int>(m.e.size()) != nvars) throw std::invalid_argument("Polynomial: monomial arity");
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.total_degree();  // map is sorted by degree desc
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[static_cast<std::size_t>(var)]));
    return d;
}

GaussianRational Polynomial::constant_term() const {
    return coefficient(Monomial(static_cast<std::size_t>(nvars_)));
}

GaussianRational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
}

Polynomial Polynomial::coefficient_of(int var, std::uint32_t power) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.e[static_cast<std::size_t>(var)] != power) continue;
        Monomial m2 = m;
        m2.e[static_cast<std::size_t>(var)] = 0;
        r.add_term(m2, c);
    }
    return r;
}

Polynomial Polynomial::homogeneous_top() const {
    if (terms_.empty()) throw std::domain_error("homogeneous_top: zero polynomial");
    int d = degree();
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.total_degree() == d) r.terms_.emplace(m, c);
    }
    return r;
}

void Polynomial::check_same_vars(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial: variable-count mismatch");
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_vars(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_vars(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_vars(o);
    Polynomial r(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] += mb.e[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
    Polynomial r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e, const Budget* budget) const {
    Polynomial acc = constant(nvars_, GaussianRational(1));
    Polynomial base = *this;
    while (e) {
        if (budget) {
            if (base.degree() > budget->max_degree)
                throw BudgetError("degree budget exceeded in pow");
        }
        if (e & 1u) {
            acc = acc * base;
            if (budget && acc.degree() > budget->max_degree)
                throw BudgetError("degree budget exceeded in pow");
            if (budget && acc.term_count() > budget->max_terms)
                throw BudgetError("term budget exceeded in pow");
        }
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> maps, const Budget* budget) const {
    if (static_cast<int>(maps.size()) != nvars_)
        throw std::invalid_argument("substitute: arity mismatch");
    int target = maps.empty() ? 0 : maps[0].nvars();
    for (const auto& m : maps) {
        if (m.nvars() != target) throw std::invalid_argument("substitute: maps disagree on arity");
    }
    Polynomial r(target);
    // powers of each replacement are cached; exponents stay small here
    std::vector<std::vector<Polynomial>> cache(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i)
        cache[i].push_back(Polynomial::constant(target, GaussianRational(1)));

    // degree checks run before each multiplication so a budget violation is
    // cheap to detect rather than discovered after an enormous product
    // degree and pair-size checks run before each multiplication so a budget
    // violation is cheap to detect rather than discovered after an enormous
    // product; the pair bound is generous since products collapse
    auto pair_guard = [&](const Polynomial& a, const Polynomial& b) {
        if (!budget) return;
        if (a.degree() + b.degree() > budget->max_degree)
            throw BudgetError("degree budget exceeded in substitute");
        if (a.term_count() * b.term_count() > 50 * budget->max_terms)
            throw BudgetError("term budget exceeded in substitute (product too large)");
    };
    auto power_of = [&](std::size_t var, std::uint32_t e) -> const Polynomial& {
        auto& col = cache[var];
        while (col.size() <= e) {
            pair_guard(col.back(), maps[var]);
            Polynomial next = col.back() * maps[var];
            if (budget && next.term_count() > budget->max_terms)
                throw BudgetError("term budget exceeded in substitute");
            col.push_back(std::move(next));
        }
        return col[e];
    };

    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < maps.size(); ++i) {
            if (m.e[i] == 0) continue;
            const Polynomial& p = power_of(i, m.e[i]);
            pair_guard(t, p);
            t = t * p;
            if (budget && t.term_count() > budget->max_terms)
                throw BudgetError("term budget exceeded in substitute");
        }
        r += t;
        if (budget && r.term_count() > budget->max_terms)
            throw BudgetError("term budget exceeded in substitute");
    }
    return r;
}

Polynomial Polynomial::extended(int extra) const {
    Polynomial r(nvars_ + extra);
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        m2.e.resize(static_cast<std::size_t>(nvars_ + extra), 0);
        r.terms_.emplace(std::move(m2), c);
    }
    return r;
}

Polynomial Polynomial::remapped(const std::vector<int>& perm, int new_nvars) const {
    if (static_cast<int>(perm.size()) != nvars_) throw std::invalid_argument("remapped: perm arity");
    Polynomial r(new_nvars);
    for (const auto& [m, c] : terms_) {
        Monomial m2(static_cast<std::size_t>(new_nvars));
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            m2.e[static_cast<std::size_t>(perm[i])] += m.e[i];
        }
        r.add_term(m2, c);
    }
    return r;
}

GaussianRational Polynomial::eval_exact(std::span<const GaussianRational> z) const {
    if (static_cast<int>(z.size()) != nvars_) throw std::invalid_argument("eval_exact: arity");
    GaussianRational acc;
    for (const auto& [m, c] : terms_) {
        GaussianRational t = c;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i]) t = t * z[i].pow(m.e[i]);
        }
        acc = acc + t;
    }
    return acc;
}

std::complex<double> Polynomial::eval_float(std::span<const std::complex<double>> z) const {
    if (static_cast<int>(z.size()) != nvars_) throw std::invalid_argument("eval_float: arity");
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            for (std::uint32_t k = 0; k < m.e[i]; ++k) t *= z[i];
        }
        acc += t;
    }
    return acc;
}

std::vector<std::string> Polynomial::default_names(int nvars) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

std::string Polynomial::to_string() const {
    auto names = default_names(nvars_);
    return to_string(names);
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    if (static_cast<int>(names.size()) != nvars_) throw std::invalid_argument("to_string: names arity");
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool has_vars = m.total_degree() > 0;

        // decide the joining sign; complex coefficients with both parts are
        // parenthesized and joined with '+'
        GaussianRational coeff = c;
        bool paren = !coeff.re().is_zero() && !coeff.im().is_zero();
        std::string joiner = " + ";
        if (!paren) {
            int sgn = coeff.is_real() ? coeff.re().sign() : coeff.im().sign();
            if (sgn < 0) {
                joiner = " - ";
                coeff = -coeff;
            }
        }
        std::string cs = coeff.to_string();
        std::string body;
        if (!has_vars) {
            body = paren ? "(" + cs + ")" : cs;
        } else {
            std::string mono;
            for (std::size_t i = 0; i < m.e.size(); ++i) {
                if (m.e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
            }
            if (paren) {
                body = "(" + cs + ")*" + mono;
            } else if (coeff.is_one()) {
                body = mono;
            } else {
                body = cs + "*" + mono;
            }
        }
        if (first) {
            out = joiner == " - " ? "-" + body : body;
            first = false;
        } else {
            out += joiner + body;
        }
    }
    return out;
}

}  // namespace hs
