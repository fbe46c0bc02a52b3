#include "hs/symmetry.hpp"

#include <algorithm>

namespace hs {

namespace {

// lift a parameter-ring polynomial into the combined ring (params last)
Polynomial lift_params(const Polynomial& p, int k) {
    std::vector<int> perm(static_cast<std::size_t>(p.nvars()));
    for (int i = 0; i < p.nvars(); ++i) perm[static_cast<std::size_t>(i)] = k + i;
    return p.remapped(perm, k + p.nvars());
}

std::vector<Polynomial> apply_affine_to(const ParamAffine& beta,
                                        const std::vector<Polynomial>& args, int k) {
    int total = k + beta.nparams;
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(beta.k));
    for (int i = 0; i < beta.k; ++i) {
        Polynomial acc = lift_params(beta.tr[static_cast<std::size_t>(i)], k);
        for (int j = 0; j < beta.k; ++j) {
            const Polynomial& entry = beta.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (entry.is_zero()) continue;
            acc += lift_params(entry, k) * args[static_cast<std::size_t>(j)];
        }
        if (acc.nvars() != total) acc = acc.extended(total - acc.nvars());
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<Polynomial> substitution_slots(const std::vector<Polynomial>& main_images, int k,
                                           int nparams) {
    int total = k + nparams;
    std::vector<Polynomial> slots = main_images;
    for (int t = 0; t < nparams; ++t) slots.push_back(Polynomial::variable(total, k + t));
    return slots;
}

std::vector<Polynomial> reduce_all(std::vector<Polynomial> comps, const ParamAffine& beta, int k) {
    if (beta.cyclo) {
        CycloRule rule = *beta.cyclo;
        rule.param += k;
        for (auto& c : comps) c = cyclo_reduce(c, rule);
    }
    return comps;
}

}  // namespace

Polynomial lift_main(const Polynomial& p, int nparams) { return p.extended(nparams); }

std::vector<Polynomial> conjugate(const PolyMap& F, const PolyMap& Finv, const ParamAffine& beta,
                                  const Budget& budget) {
    if (F.dim() != beta.k || Finv.dim() != beta.k)
        throw std::invalid_argument("conjugate: dimension mismatch");
    int k = beta.k;
    // beta o F^-1, with F^-1 lifted into the combined ring
    std::vector<Polynomial> finv_lifted;
    finv_lifted.reserve(static_cast<std::size_t>(k));
    for (const auto& c : Finv.components()) finv_lifted.push_back(lift_main(c, beta.nparams));
    std::vector<Polynomial> inner = apply_affine_to(beta, finv_lifted, k);

    auto slots = substitution_slots(inner, k, beta.nparams);
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(k));
    for (const auto& c : F.components())
        out.push_back(lift_main(c, beta.nparams).substitute(slots, &budget));
    return reduce_all(std::move(out), beta, k);
}

std::vector<Polynomial> conjugate_map_by_affine(const ParamAffine& beta, const PolyMap& F,
                                                const Budget& budget) {
    if (F.dim() != beta.k) throw std::invalid_argument("conjugate_map_by_affine: dimension mismatch");
    int k = beta.k;
    ParamAffine binv = affine_inverse(beta);
    int total = k + beta.nparams;
    std::vector<Polynomial> vars;
    vars.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) vars.push_back(Polynomial::variable(total, j));
    std::vector<Polynomial> inner = apply_affine_to(binv, vars, k);

    auto slots = substitution_slots(inner, k, beta.nparams);
    std::vector<Polynomial> mids;
    mids.reserve(static_cast<std::size_t>(k));
    for (const auto& c : F.components())
        mids.push_back(lift_main(c, beta.nparams).substitute(slots, &budget));
    return reduce_all(apply_affine_to(beta, mids, k), beta, k);
}

ConstraintSet affinity_constraints(const std::vector<Polynomial>& conj, int k, int nparams) {
    ConstraintSet cs;
    for (const auto& comp : conj) {
        std::map<Monomial, Polynomial, MonomialOrder> grouped;
        for (const auto& [m, c] : comp.terms()) {
            Monomial main(static_cast<std::size_t>(k));
            int main_deg = 0;
            for (int j = 0; j < k; ++j) {
                main.e[static_cast<std::size_t>(j)] = m.e[static_cast<std::size_t>(j)];
                main_deg += static_cast<int>(m.e[static_cast<std::size_t>(j)]);
            }
            if (main_deg < 2) continue;
            Monomial par(static_cast<std::size_t>(nparams));
            for (int t = 0; t < nparams; ++t)
                par.e[static_cast<std::size_t>(t)] = m.e[static_cast<std::size_t>(k + t)];
            auto [it, fresh] = grouped.try_emplace(main, Polynomial(nparams));
            it->second.add_term(par, c);
        }
        for (auto& [m, eq] : grouped) {
            if (!eq.is_zero()) cs.equations.push_back(std::move(eq));
        }
    }
    return cs;
}

ParamAffine affine_part(const std::vector<Polynomial>& conj, const ParamAffine& like) {
    ParamAffine out = like;
    int k = like.k;
    for (auto& row : out.lin)
        for (auto& e : row) e = Polynomial(like.nparams);
    for (auto& e : out.tr) e = Polynomial(like.nparams);

    for (int i = 0; i < k; ++i) {
        for (const auto& [m, c] : conj[static_cast<std::size_t>(i)].terms()) {
            int main_deg = 0;
            int var = -1;
            for (int j = 0; j < k; ++j) {
                if (m.e[static_cast<std::size_t>(j)]) {
                    main_deg += static_cast<int>(m.e[static_cast<std::size_t>(j)]);
                    var = j;
                }
            }
            if (main_deg >= 2) continue;
            Monomial par(static_cast<std::size_t>(like.nparams));
            for (int t = 0; t < like.nparams; ++t)
                par.e[static_cast<std::size_t>(t)] = m.e[static_cast<std::size_t>(k + t)];
            if (main_deg == 0) {
                out.tr[static_cast<std::size_t>(i)].add_term(par, c);
            } else {
                out.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(var)].add_term(par, c);
            }
        }
    }
    return out;
}

NResult compute_N(const PolyMap& F, const PolyMap& Finv, const NOptions& opts) {
    if (!verify_inverse(F, Finv, opts.budget))
        throw NotRegularError("compute_N: claimed inverse does not verify");
    int k = F.dim();

    std::optional<AffineMask> mask;
    if (opts.use_mask) {
        mask = mask_from_forms(indeterminacy_forms(F), indeterminacy_forms(Finv));
    }

    NResult res;
    res.ansatz = generic_affine(k, mask ? &*mask : nullptr);
    res.family = SolutionFamily::empty_for(res.ansatz);
    res.family.trace.push_back(std::string("ansatz: ") + res.ansatz.to_string() +
                               (mask ? " (indeterminacy-fixing mask)" : " (full ansatz)"));

    // the family consists of automorphisms: det != 0
    ConstraintSet init;
    init.disequalities.push_back(res.ansatz.det());
    res.family = solve_constraints(init, res.family);

    ParamAffine current = res.ansatz;
    std::vector<ParamAffine> history{res.ansatz};

    for (int round = 1; round <= opts.max_rounds; ++round) {
        ParamAffine carried = res.family.reduce(current);
        std::size_t carry_terms = 0;
        for (const auto& row : carried.lin)
            for (const auto& e : row) carry_terms = std::max(carry_terms, e.term_count());
        for (const auto& e : carried.tr) carry_terms = std::max(carry_terms, e.term_count());
        if (carry_terms > opts.carry_term_cap) {
            res.family.trace.push_back("refinement stopped before round " + std::to_string(round) +
                                       ": a carried entry reaches " + std::to_string(carry_terms) +
                                       " terms");
            break;
        }
        res.rounds_used = round;
        res.family.trace.push_back("round " + std::to_string(round));
        std::vector<Polynomial> conj;
        try {
            conj = conjugate(F, Finv, carried, opts.budget);
        } catch (const BudgetError& e) {
            // refinement could not finish; report what was established
            res.family.trace.push_back(std::string("round aborted: ") + e.what());
            res.stabilized = false;
            res.reduced = res.family.reduce(res.ansatz);
            return res;
        }
        ConstraintSet cs = affinity_constraints(conj, k, res.ansatz.nparams);
        ParamAffine next = affine_part(conj, res.ansatz);
        if (mask) {
            // the conjugated family must lie in the masked shape: record the
            // masked entries as equations, then zero them in the carried map
            // so constrained quantities do not compound across rounds
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (mask->zero[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
                        !next.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) {
                        cs.equations.push_back(next.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                        next.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                            Polynomial(res.ansatz.nparams);
                    }
        }

        std::string before = res.family.to_text();
        res.family = solve_constraints(cs, res.family);
        bool new_facts = res.family.to_text() != before;
        if (res.family.inconsistent) break;

        if (!new_facts) {
            ParamAffine cur_red = res.family.reduce(next);
            for (const auto& h : history) {
                if (res.family.reduce(h).same_map(cur_red)) {
                    res.stabilized = true;
                    break;
                }
            }
        }
        history.push_back(next);
        current = next;
        if (res.stabilized) {
            res.family.trace.push_back("stabilized after round " + std::to_string(round));
            break;
        }
    }
    res.reduced = res.family.reduce(res.ansatz);
    return res;
}

bool verify_membership(const PolyMap& F, const PolyMap& Finv, const ParamAffine& beta, int rounds,
                       const Budget& budget) {
    if (rounds < 1) throw std::invalid_argument("verify_membership: rounds >= 1");
    ParamAffine current = beta;
    for (int j = 0; j < rounds; ++j) {
        auto conj = conjugate(F, Finv, current, budget);
        ConstraintSet cs = affinity_constraints(conj, F.dim(), beta.nparams);
        for (const auto& eq : cs.equations) {
            if (!eq.is_zero()) return false;
        }
        current = affine_part(conj, beta);
    }
    return true;
}

std::vector<ParamAffine> enumerate_members(const NResult& r) {
    auto count = r.family.element_count();
    if (!count) throw std::logic_error("enumerate_members: family is not finite");
    if (r.family.status() != SolutionFamily::Status::solved)
        throw std::logic_error("enumerate_members: family unsolved");

    std::vector<int> free_params;
    for (int p = 0; p < r.family.nparams; ++p)
        if (!r.family.is_assigned(p)) free_params.push_back(p);

    if (free_params.empty()) {
        ParamAffine m = r.reduced;
        return {m};
    }
    if (free_params.size() != 1 || r.family.power_residuals.size() != 1 ||
        !r.family.power_residuals[0].value.is_one())
        throw std::logic_error("enumerate_members: only single root-of-unity residuals supported");

    const PowerResidual& pr = r.family.power_residuals[0];
    // re-express entries over a single-parameter cyclotomic ring
    int old = r.family.nparams;
    std::vector<int> perm(static_cast<std::size_t>(old), 0);  // every other param is assigned
    ParamAffine base;
    base.k = r.reduced.k;
    base.nparams = 1;
    base.param_names = {r.family.param_names[static_cast<std::size_t>(pr.param)]};
    base.cyclo = CycloRule{0, pr.order, pr.value};
    base.lin.assign(static_cast<std::size_t>(base.k),
                    std::vector<Polynomial>(static_cast<std::size_t>(base.k), Polynomial(1)));
    base.tr.assign(static_cast<std::size_t>(base.k), Polynomial(1));
    perm[static_cast<std::size_t>(pr.param)] = 0;
    for (int i = 0; i < base.k; ++i) {
        for (int j = 0; j < base.k; ++j)
            base.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                r.reduced.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].remapped(perm, 1);
        base.tr[static_cast<std::size_t>(i)] = r.reduced.tr[static_cast<std::size_t>(i)].remapped(perm, 1);
    }

    std::vector<ParamAffine> members;
    members.reserve(static_cast<std::size_t>(pr.order));
    for (int j = 0; j < pr.order; ++j) members.push_back(specialize_member(base, j));
    return members;
}

ParamAffine specialize_member(const ParamAffine& member, int j) {
    if (!member.cyclo) throw std::logic_error("specialize_member: not a cyclotomic member");
    int n = member.cyclo->order;
    auto remap = [&](const Polynomial& p) {
        Polynomial out(p.nvars());
        for (const auto& [m, c] : p.terms()) {
            Monomial m2 = m;
            std::size_t idx = static_cast<std::size_t>(member.cyclo->param);
            m2.e[idx] = static_cast<std::uint32_t>((static_cast<long long>(m.e[idx]) * j) % n);
            out.add_term(m2, c);
        }
        return out;
    };
    ParamAffine out = member;
    for (auto& row : out.lin)
        for (auto& e : row) e = remap(e);
    for (auto& e : out.tr) e = remap(e);
    return out;
}

std::optional<SharedIterate> shared_iterate_search(const PolyMap& F, const PolyMap& G, int n_max,
                                                   const Budget& budget) {
    if (n_max < 1) throw std::invalid_argument("shared_iterate_search: n_max >= 1");
    if (F.dim() != G.dim()) throw std::invalid_argument("shared_iterate_search: dimension mismatch");
    int dF = F.degree(), dG = G.degree();
    std::vector<std::optional<PolyMap>> fit(static_cast<std::size_t>(n_max) + 1),
        git(static_cast<std::size_t>(n_max) + 1);
    auto iter_of = [&](const PolyMap& M, std::vector<std::optional<PolyMap>>& cache, int n) -> const PolyMap& {
        if (!cache[static_cast<std::size_t>(n)])
            cache[static_cast<std::size_t>(n)] = iterate(M, n, budget);
        return *cache[static_cast<std::size_t>(n)];
    };
    for (int n = 1; n <= n_max; ++n) {
        for (int m = 1; m <= n_max; ++m) {
            BigInt lhs = BigInt(dF).pow(static_cast<unsigned long long>(n));
            BigInt rhs = BigInt(dG).pow(static_cast<unsigned long long>(m));
            if (lhs != rhs) continue;  // iterates can only agree when degrees do
            if (iter_of(F, fit, n) == iter_of(G, git, m)) return SharedIterate{n, m};
        }
    }
    return std::nullopt;
}

}  // namespace hs
