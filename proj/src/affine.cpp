#include "hs/affine.hpp"

#include <algorithm>

namespace hs {

Polynomial cyclo_reduce(const Polynomial& p, const CycloRule& rule) {
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t e = m.e[static_cast<std::size_t>(rule.param)];
        if (e < static_cast<std::uint32_t>(rule.order)) {
            r.add_term(m, c);
            continue;
        }
        Monomial m2 = m;
        std::uint32_t q = e / static_cast<std::uint32_t>(rule.order);
        m2.e[static_cast<std::size_t>(rule.param)] = e % static_cast<std::uint32_t>(rule.order);
        r.add_term(m2, c * rule.value.pow(q));
    }
    return r;
}

ParamAffine ParamAffine::identity(int k) {
    ParamAffine a;
    a.k = k;
    a.lin.assign(static_cast<std::size_t>(k),
                 std::vector<Polynomial>(static_cast<std::size_t>(k), Polynomial(0)));
    a.tr.assign(static_cast<std::size_t>(k), Polynomial(0));
    for (int i = 0; i < k; ++i)
        a.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
            Polynomial::constant(0, GaussianRational(1));
    return a;
}

ParamAffine ParamAffine::from_constants(const std::vector<std::vector<GaussianRational>>& m,
                                        const std::vector<GaussianRational>& t) {
    ParamAffine a = identity(static_cast<int>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) throw std::invalid_argument("from_constants: not square");
        for (std::size_t j = 0; j < m.size(); ++j)
            a.lin[i][j] = Polynomial::constant(0, m[i][j]);
        a.tr[i] = Polynomial::constant(0, t[i]);
    }
    return a;
}

ParamAffine ParamAffine::diagonal(const std::vector<GaussianRational>& d) {
    ParamAffine a = identity(static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) a.lin[i][i] = Polynomial::constant(0, d[i]);
    return a;
}

ParamAffine ParamAffine::diagonal_cyclo(const std::vector<int>& exponents, int order,
                                        const std::string& name) {
    ParamAffine a;
    a.k = static_cast<int>(exponents.size());
    a.nparams = 1;
    a.param_names = {name};
    a.cyclo = CycloRule{0, order, GaussianRational(1)};
    a.lin.assign(static_cast<std::size_t>(a.k),
                 std::vector<Polynomial>(static_cast<std::size_t>(a.k), Polynomial(1)));
    a.tr.assign(static_cast<std::size_t>(a.k), Polynomial(1));
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        int e = exponents[i] % order;
        if (e < 0) e += order;
        Monomial m(1);
        m.e[0] = static_cast<std::uint32_t>(e);
        a.lin[i][i] = Polynomial::monomial(1, m, GaussianRational(1));
    }
    return a;
}

Polynomial ParamAffine::det() const {
    // cofactor expansion; k stays small here
    std::vector<int> cols(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) cols[static_cast<std::size_t>(j)] = j;

    auto rec = [&](auto&& self, int row, std::vector<int>& cs) -> Polynomial {
        if (cs.empty()) return Polynomial::constant(nparams, GaussianRational(1));
        Polynomial acc(nparams);
        for (std::size_t jj = 0; jj < cs.size(); ++jj) {
            int col = cs[jj];
            const Polynomial& entry = lin[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (entry.is_zero()) continue;
            std::vector<int> rest;
            rest.reserve(cs.size() - 1);
            for (std::size_t t = 0; t < cs.size(); ++t)
                if (t != jj) rest.push_back(cs[t]);
            Polynomial sub = self(self, row + 1, rest);
            Polynomial term = entry * sub;
            acc = (jj % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return rec(rec, 0, cols);
}

ParamAffine ParamAffine::reduced(const CycloRule& rule) const {
    ParamAffine a = *this;
    for (auto& row : a.lin)
        for (auto& e : row) e = cyclo_reduce(e, rule);
    for (auto& e : a.tr) e = cyclo_reduce(e, rule);
    return a;
}

std::string ParamAffine::to_string() const {
    std::string out = "[";
    for (int i = 0; i < k; ++i) {
        if (i) out += "; ";
        for (int j = 0; j < k; ++j) {
            if (j) out += ", ";
            out += lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].to_string(param_names);
        }
        out += " | " + tr[static_cast<std::size_t>(i)].to_string(param_names);
    }
    return out + "]";
}

bool ParamAffine::same_map(const ParamAffine& o) const {
    return k == o.k && lin == o.lin && tr == o.tr;
}

bool ParamAffine::is_identity_map() const {
    for (int i = 0; i < k; ++i) {
        if (!tr[static_cast<std::size_t>(i)].is_zero()) return false;
        for (int j = 0; j < k; ++j) {
            const Polynomial& e = lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!e.is_constant()) return false;
            if (e.constant_term() != (i == j ? GaussianRational(1) : GaussianRational())) return false;
        }
    }
    return true;
}

std::vector<std::complex<double>> ParamAffine::apply_float(
    std::span<const std::complex<double>> z) const {
    if (nparams != 0) throw std::logic_error("apply_float: parametric map");
    std::vector<std::complex<double>> out(static_cast<std::size_t>(k), 0.0);
    for (int i = 0; i < k; ++i) {
        std::complex<double> acc = tr[static_cast<std::size_t>(i)].constant_term().to_complex();
        for (int j = 0; j < k; ++j)
            acc += lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].constant_term().to_complex() *
                   z[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

ParamAffine affine_compose(const ParamAffine& a, const ParamAffine& b) {
    if (a.k != b.k || a.nparams != b.nparams)
        throw std::invalid_argument("affine_compose: shape mismatch");
    ParamAffine r = a;
    auto reduce = [&](Polynomial p) {
        if (a.cyclo) p = cyclo_reduce(p, *a.cyclo);
        return p;
    };
    for (int i = 0; i < a.k; ++i) {
        for (int j = 0; j < a.k; ++j) {
            Polynomial acc(a.nparams);
            for (int t = 0; t < a.k; ++t)
                acc += a.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] *
                       b.lin[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
            r.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = reduce(acc);
        }
        Polynomial acc = a.tr[static_cast<std::size_t>(i)];
        for (int t = 0; t < a.k; ++t)
            acc += a.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] *
                   b.tr[static_cast<std::size_t>(t)];
        r.tr[static_cast<std::size_t>(i)] = reduce(acc);
    }
    return r;
}

ParamAffine affine_inverse(const ParamAffine& a) {
    if (a.is_concrete()) {
        // Gauss-Jordan over the Gaussian rationals on [L | I], then -L^{ -1 } t
        int k = a.k;
        std::vector<std::vector<GaussianRational>> m(static_cast<std::size_t>(k),
                                                     std::vector<GaussianRational>(static_cast<std::size_t>(2 * k)));
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    a.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].constant_term();
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k + i)] = GaussianRational(1);
        }
        for (int col = 0; col < k; ++col) {
            int pivot = -1;
            for (int r = col; r < k; ++r) {
                if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) throw std::domain_error("affine_inverse: singular linear part");
            std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(pivot)]);
            GaussianRational inv = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)].inverse();
            for (auto& x : m[static_cast<std::size_t>(col)]) x = x * inv;
            for (int r = 0; r < k; ++r) {
                if (r == col) continue;
                GaussianRational f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
                if (f.is_zero()) continue;
                for (int c = 0; c < 2 * k; ++c)
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                        f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
            }
        }
        std::vector<std::vector<GaussianRational>> linv(static_cast<std::size_t>(k),
                                                        std::vector<GaussianRational>(static_cast<std::size_t>(k)));
        std::vector<GaussianRational> tinv(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                linv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k + j)];
        for (int i = 0; i < k; ++i) {
            GaussianRational acc;
            for (int j = 0; j < k; ++j)
                acc = acc + linv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                            a.tr[static_cast<std::size_t>(j)].constant_term();
            tinv[static_cast<std::size_t>(i)] = -acc;
        }
        return ParamAffine::from_constants(linv, tinv);
    }

    // parametric case: supported for monomial-entried generalized
    // permutations under a cyclotomic rule (covers enumerated family members)
    if (!a.cyclo) throw std::logic_error("affine_inverse: unsupported parametric map");
    ParamAffine r = a;
    int n = a.cyclo->order;
    for (int i = 0; i < a.k; ++i) {
        if (!a.tr[static_cast<std::size_t>(i)].is_zero())
            throw std::logic_error("affine_inverse: unsupported translation in cyclotomic map");
    }
    for (auto& row : r.lin)
        for (auto& e : row) e = Polynomial(a.nparams);
    for (int i = 0; i < a.k; ++i) {
        int found = -1;
        for (int j = 0; j < a.k; ++j) {
            const Polynomial& e = a.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (e.is_zero()) continue;
            if (found >= 0 || e.term_count() != 1)
                throw std::logic_error("affine_inverse: not a monomial generalized permutation");
            found = j;
        }
        if (found < 0) throw std::domain_error("affine_inverse: singular linear part");
        const auto& [m, c] = *a.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(found)].terms().begin();
        int e = static_cast<int>(m.e[static_cast<std::size_t>(a.cyclo->param)]) % n;
        Monomial minv(static_cast<std::size_t>(a.nparams));
        minv.e[static_cast<std::size_t>(a.cyclo->param)] = static_cast<std::uint32_t>((n - e) % n);
        if (!a.cyclo->value.is_one())
            throw std::logic_error("affine_inverse: cyclotomic value must be 1");
        r.lin[static_cast<std::size_t>(found)][static_cast<std::size_t>(i)] =
            Polynomial::monomial(a.nparams, minv, c.inverse());
    }
    return r;
}

std::optional<AffineMask> mask_from_forms(const HomogeneousSystem& iplus,
                                          const HomogeneousSystem& iminus) {
    int k = iplus.nvars;
    auto var_set = [&](const HomogeneousSystem& sys, std::vector<bool>& vars) -> bool {
        for (const auto& f : sys.forms) {
            if (f.term_count() != 1) return false;
            const Monomial& m = f.terms().begin()->first;
            int var = -1;
            for (std::size_t i = 0; i < m.e.size(); ++i) {
                if (m.e[i] == 0) continue;
                if (var >= 0) return false;  // mixed monomial
                var = static_cast<int>(i);
            }
            if (var < 0) return false;
            vars[static_cast<std::size_t>(var)] = true;
        }
        return true;
    };
    std::vector<bool> vplus(static_cast<std::size_t>(k), false), vminus(static_cast<std::size_t>(k), false);
    if (!var_set(iplus, vplus) || !var_set(iminus, vminus)) return std::nullopt;

    AffineMask mask;
    mask.zero.assign(static_cast<std::size_t>(k), std::vector<bool>(static_cast<std::size_t>(k), false));
    // fixing span{e_j : j outside V} forces L_ij = 0 for i in V, j outside V
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (vplus[static_cast<std::size_t>(i)] && !vplus[static_cast<std::size_t>(j)])
                mask.zero[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
            if (vminus[static_cast<std::size_t>(i)] && !vminus[static_cast<std::size_t>(j)])
                mask.zero[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        }
    }
    return mask;
}

ParamAffine generic_affine(int k, const AffineMask* mask) {
    if (k < 1) throw std::invalid_argument("generic_affine: k >= 1");
    ParamAffine a;
    a.k = k;

    std::vector<std::string> names;
    std::vector<std::pair<int, int>> lin_slots;
    std::string letters = "abcdefghjklmnopqrstuvw";  // 'i' is the imaginary unit
    std::size_t next_letter = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (mask && mask->zero[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
            names.push_back(next_letter < letters.size()
                                ? std::string(1, letters[next_letter])
                                : "c" + std::to_string(next_letter));
            ++next_letter;
            lin_slots.emplace_back(i, j);
        }
    }
    std::vector<std::string> tr_names;
    if (k <= 3) {
        const char* base[] = {"x0", "y0", "z0"};
        for (int i = 0; i < k; ++i) tr_names.push_back(base[i]);
    } else {
        for (int i = 0; i < k; ++i) tr_names.push_back("t" + std::to_string(i + 1));
    }
    names.insert(names.end(), tr_names.begin(), tr_names.end());

    a.nparams = static_cast<int>(names.size());
    a.param_names = names;
    a.lin.assign(static_cast<std::size_t>(k),
                 std::vector<Polynomial>(static_cast<std::size_t>(k), Polynomial(a.nparams)));
    a.tr.assign(static_cast<std::size_t>(k), Polynomial(a.nparams));
    for (std::size_t s = 0; s < lin_slots.size(); ++s) {
        auto [i, j] = lin_slots[s];
        a.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            Polynomial::variable(a.nparams, static_cast<int>(s));
    }
    for (int i = 0; i < k; ++i)
        a.tr[static_cast<std::size_t>(i)] =
            Polynomial::variable(a.nparams, static_cast<int>(lin_slots.size()) + i);
    return a;
}

}  // namespace hs
