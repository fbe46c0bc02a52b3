#include "hs/solver.hpp"

#include <algorithm>
#include <limits>

namespace hs {

namespace {

// divide away the leading coefficient so stored residuals are monic-ish
Polynomial normalize_leading(const Polynomial& p) {
    if (p.is_zero()) return p;
    GaussianRational lead = p.terms().begin()->second;
    return p.scaled(lead.inverse());
}

}  // namespace

Polynomial PowerResidual::as_polynomial(int nparams) const {
    Polynomial p(nparams);
    Monomial m(static_cast<std::size_t>(nparams));
    m.e[static_cast<std::size_t>(param)] = static_cast<std::uint32_t>(order);
    p.add_term(m, GaussianRational(1));
    p.add_term(Monomial(static_cast<std::size_t>(nparams)), -value);
    return p;
}

SolutionFamily SolutionFamily::empty_for(const ParamAffine& ansatz) {
    SolutionFamily f;
    f.nparams = ansatz.nparams;
    f.param_names = ansatz.param_names;
    return f;
}

Polynomial SolutionFamily::reduce(const Polynomial& p) const {
    Polynomial r = p;
    if (!assignments.empty()) {
        std::vector<Polynomial> subst;
        subst.reserve(static_cast<std::size_t>(nparams));
        for (int i = 0; i < nparams; ++i) {
            auto it = assignments.find(i);
            subst.push_back(it != assignments.end() ? it->second : Polynomial::variable(nparams, i));
        }
        r = r.substitute(subst);
    }
    for (const auto& pr : power_residuals)
        r = cyclo_reduce(r, CycloRule{pr.param, pr.order, pr.value});
    return r;
}

ParamAffine SolutionFamily::reduce(const ParamAffine& a) const {
    ParamAffine r = a;
    for (auto& row : r.lin)
        for (auto& e : row) e = reduce(e);
    for (auto& e : r.tr) e = reduce(e);
    return r;
}

std::optional<unsigned long long> SolutionFamily::element_count() const {
    if (inconsistent) return 0;
    if (status() != Status::solved) return std::nullopt;
    unsigned long long count = 1;
    for (int p = 0; p < nparams; ++p) {
        if (is_assigned(p)) continue;
        int found = 0;
        for (const auto& pr : power_residuals)
            if (pr.param == p) ++found;
        if (found != 1) return std::nullopt;  // free or over-constrained parameter
        for (const auto& pr : power_residuals)
            if (pr.param == p) count *= static_cast<unsigned long long>(pr.order);
    }
    return count;
}

std::string SolutionFamily::to_text() const {
    std::string out;
    out += "status = ";
    out += status() == Status::solved ? "solved" : "unsolved";
    out += "\n";
    for (const auto& [p, rhs] : assignments)
        out += param_names[static_cast<std::size_t>(p)] + " = " + rhs.to_string(param_names) + "\n";
    for (const auto& pr : power_residuals)
        out += param_names[static_cast<std::size_t>(pr.param)] + "^" + std::to_string(pr.order) +
               " = " + pr.value.to_string() + "\n";
    for (const auto& r : other_residuals)
        out += "residual: " + r.to_string(param_names) + " = 0\n";
    if (auto n = element_count()) out += "elements = " + std::to_string(*n) + "\n";
    return out;
}

namespace {

class Engine {
public:
    Engine(SolutionFamily& f) : f_(f) {}

    void run(const ConstraintSet& c) {
        for (const auto& d : c.disequalities) diseq_.push_back(d);
        for (const auto& d : f_.disequalities) diseq_.push_back(d);
        f_.disequalities.clear();
        for (const auto& e : c.equations) pending_.push_back(e);
        // residuals from earlier rounds may become solvable now
        for (auto& e : f_.other_residuals) pending_.push_back(e);
        f_.other_residuals.clear();

        refresh_units();
        bool changed = true;
        while (changed && !f_.inconsistent) {
            changed = false;
            renormalize();
            if (f_.inconsistent) break;
            if (rule_linear()) { changed = true; continue; }
            if (rule_monomial_and_power()) { changed = true; continue; }
            if (refresh_units()) { changed = true; continue; }
        }
        if (!f_.inconsistent) {
            for (auto& e : pending_) {
                if (e.is_zero()) continue;
                f_.other_residuals.push_back(e);
                note("unsolved residual: " + e.to_string(f_.param_names) + " = 0");
            }
        }
        f_.disequalities = diseq_;
        pending_.clear();
    }

private:
    SolutionFamily& f_;
    std::vector<Polynomial> pending_;
    std::vector<Polynomial> diseq_;

    void note(const std::string& s) { f_.trace.push_back(s); }

    void renormalize() {
        std::vector<Polynomial> out;
        for (auto& e : pending_) {
            Polynomial r = strip_units(f_.reduce(e));
            if (r.is_zero()) continue;
            if (r.is_constant()) {
                f_.inconsistent = true;
                note("inconsistent: nonzero constant constraint");
                return;
            }
            out.push_back(normalize_leading(r));
        }
        // dedupe, then order smallest-first so the simplest facts fire first
        std::vector<std::pair<std::string, Polynomial>> keyed;
        for (auto& e : out) {
            std::string key = e.to_string(f_.param_names);
            bool seen = false;
            for (const auto& [k, v] : keyed)
                if (k == key) { seen = true; break; }
            if (!seen) keyed.emplace_back(std::move(key), std::move(e));
        }
        std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
            auto ta = a.second.term_count(), tb = b.second.term_count();
            if (ta != tb) return ta < tb;
            return a.first < b.first;
        });
        pending_.clear();
        for (auto& [k, v] : keyed) pending_.push_back(std::move(v));
    }

    // divide out unit-parameter factors common to every term
    Polynomial strip_units(const Polynomial& p) const {
        if (p.is_zero()) return p;
        std::vector<std::uint32_t> mins(static_cast<std::size_t>(f_.nparams),
                                        std::numeric_limits<std::uint32_t>::max());
        for (const auto& [m, c] : p.terms())
            for (std::size_t i = 0; i < m.e.size(); ++i) mins[i] = std::min(mins[i], m.e[i]);
        bool any = false;
        for (int v = 0; v < f_.nparams; ++v) {
            if (mins[static_cast<std::size_t>(v)] > 0 && f_.units.count(v)) any = true;
            else mins[static_cast<std::size_t>(v)] = 0;
        }
        if (!any) return p;
        Polynomial r(p.nvars());
        for (const auto& [m, c] : p.terms()) {
            Monomial m2 = m;
            for (std::size_t i = 0; i < m2.e.size(); ++i) m2.e[i] -= mins[i];
            r.add_term(m2, c);
        }
        return r;
    }

    void assign(int p, Polynomial rhs) {
        rhs = f_.reduce(rhs);
        f_.assignments[p] = rhs;
        note(f_.param_names[static_cast<std::size_t>(p)] + " = " + rhs.to_string(f_.param_names));
        // keep every stored object expressed in free parameters only
        for (auto& [q, r] : f_.assignments) {
            if (q != p) r = f_.reduce(r);
        }
        // a power residual on an assigned parameter becomes an equation again;
        // detach it before reducing or its own reduction rule would erase it
        std::vector<PowerResidual> keep, released;
        for (const auto& pr : f_.power_residuals)
            (pr.param == p ? released : keep).push_back(pr);
        f_.power_residuals = std::move(keep);
        for (const auto& pr : released)
            pending_.push_back(f_.reduce(pr.as_polynomial(f_.nparams)));
        for (auto& d : diseq_) d = f_.reduce(d);
    }

    bool rule_linear() {
        for (std::size_t idx = 0; idx < pending_.size(); ++idx) {
            const Polynomial& e = pending_[idx];
            for (int p = 0; p < f_.nparams; ++p) {
                if (f_.is_assigned(p)) continue;
                if (e.degree_in(p) != 1) continue;
                Polynomial coeff = e.coefficient_of(p, 1);
                if (!coeff.is_constant() || coeff.is_zero()) continue;
                Polynomial rest = e.coefficient_of(p, 0);
                GaussianRational c = coeff.constant_term();
                Polynomial rhs = (-rest).scaled(c.inverse());
                pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(idx));
                assign(p, std::move(rhs));
                return true;
            }
        }
        return false;
    }

    bool rule_monomial_and_power() {
        for (std::size_t idx = 0; idx < pending_.size(); ++idx) {
            const Polynomial& e = pending_[idx];
            if (e.term_count() == 1) {
                const Monomial& m = e.terms().begin()->first;
                std::vector<int> vars;
                for (std::size_t i = 0; i < m.e.size(); ++i)
                    if (m.e[i] > 0) vars.push_back(static_cast<int>(i));
                if (vars.size() == 1) {
                    int p = vars[0];
                    pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(idx));
                    assign(p, Polynomial(f_.nparams));
                    return true;
                }
                continue;  // product of several non-units: cannot split
            }
            if (e.term_count() == 2) {
                // alpha*p^n + beta with constant nonzero beta and n >= 2
                int var = -1;
                bool univariate = true;
                for (int p = 0; p < f_.nparams && univariate; ++p) {
                    if (e.degree_in(p) == 0) continue;
                    if (var >= 0) univariate = false;
                    else var = p;
                }
                if (!univariate || var < 0) continue;
                int n = e.degree_in(var);
                if (n < 2) continue;
                Polynomial alpha = e.coefficient_of(var, static_cast<std::uint32_t>(n));
                Polynomial beta = e.coefficient_of(var, 0);
                if (!alpha.is_constant() || alpha.is_zero()) continue;
                if (beta.is_zero() || !beta.is_constant()) continue;
                GaussianRational value = -(beta.constant_term() / alpha.constant_term());
                pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(idx));
                f_.power_residuals.push_back(PowerResidual{var, n, value});
                f_.units.insert(var);
                note("residual: " + f_.param_names[static_cast<std::size_t>(var)] + "^" +
                     std::to_string(n) + " = " + value.to_string());
                // fold the new exponent reduction through everything stored
                for (auto& [q, r] : f_.assignments) r = f_.reduce(r);
                return true;
            }
        }
        return false;
    }

    bool refresh_units() {
        bool changed = false;
        for (auto& d : diseq_) {
            Polynomial r = f_.reduce(d);
            if (r.is_zero()) {
                f_.inconsistent = true;
                note("inconsistent: disequality forced to zero");
                return true;
            }
            if (r.term_count() == 1) {
                const Monomial& m = r.terms().begin()->first;
                for (std::size_t i = 0; i < m.e.size(); ++i) {
                    if (m.e[i] > 0 && !f_.units.count(static_cast<int>(i))) {
                        f_.units.insert(static_cast<int>(i));
                        note("unit: " + f_.param_names[i]);
                        changed = true;
                    }
                }
            }
        }
        return changed;
    }
};

}  // namespace

SolutionFamily solve_constraints(const ConstraintSet& c, SolutionFamily family) {
    Engine eng(family);
    eng.run(c);
    return family;
}

}  // namespace hs
