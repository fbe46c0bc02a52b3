#include "hs/regularity.hpp"

#include <algorithm>

namespace hs {

namespace {

// all monomials of total degree d in n variables, deterministic order
void enumerate_monomials(int n, int d, std::vector<std::uint32_t>& cur, int pos,
                         std::vector<Monomial>& out) {
    if (pos == n - 1) {
        cur[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(d);
        out.emplace_back(cur);
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(e);
        enumerate_monomials(n, d - e, cur, pos + 1, out);
    }
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(n), 0);
    enumerate_monomials(n, d, cur, 0, out);
    return out;
}

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// exact rank by Gaussian elimination over the Gaussian rationals
std::size_t rank_exact(std::vector<std::vector<GaussianRational>>& rows, std::size_t ncols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        GaussianRational inv = rows[rank][col].inverse();
        for (std::size_t c = col; c < ncols; ++c) rows[rank][c] = rows[rank][c] * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            GaussianRational f = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] = rows[r][c] - f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::string HomogeneousSystem::to_string(std::span<const std::string> names) const {
    std::string out = "{";
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (i) out += ", ";
        out += forms[i].to_string(names);
    }
    return out + "}";
}

HomogeneousSystem indeterminacy_forms(const PolyMap& F) {
    int d = F.degree();
    if (d < 2) throw NotRegularError("not Henon-Sibony (degree " + std::to_string(std::max(d, 0)) + ")");
    HomogeneousSystem sys;
    sys.nvars = F.dim();
    sys.map_degree = d;
    for (const auto& c : F.components()) {
        if (c.degree() == d) sys.forms.push_back(c.homogeneous_top());
    }
    return sys;
}

bool projective_disjointness(const HomogeneousSystem& A, const HomogeneousSystem& B) {
    std::vector<Polynomial> forms = A.forms;
    forms.insert(forms.end(), B.forms.begin(), B.forms.end());
    if (forms.empty()) throw std::invalid_argument("projective_disjointness: empty system");
    int k = forms[0].nvars();
    int max_deg = 0, sum_deg = 0;
    for (const auto& f : forms) {
        if (f.is_zero() || f.nvars() != k) throw std::invalid_argument("projective_disjointness: bad form");
        max_deg = std::max(max_deg, f.degree());
        sum_deg += f.degree();
    }
    int bound = sum_deg - static_cast<int>(forms.size()) + 1;

    for (int D = max_deg; D <= std::max(bound, max_deg); ++D) {
        auto basis = monomials_of_degree(k, D);
        std::map<std::vector<std::uint32_t>, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].e, i);
        std::size_t full = binom(static_cast<std::size_t>(D + k - 1), static_cast<std::size_t>(k - 1));

        std::vector<std::vector<GaussianRational>> rows;
        for (const auto& f : forms) {
            for (const auto& mu : monomials_of_degree(k, D - f.degree())) {
                std::vector<GaussianRational> row(basis.size());
                for (const auto& [m, c] : f.terms()) {
                    Monomial prod = m;
                    for (std::size_t i = 0; i < prod.e.size(); ++i) prod.e[i] += mu.e[i];
                    row[index.at(prod.e)] = c;
                }
                rows.push_back(std::move(row));
            }
        }
        if (rank_exact(rows, basis.size()) == full) return true;
    }
    return false;
}

std::string RegularityReport::to_text(std::span<const std::string> names) const {
    std::string out;
    out += "k = " + std::to_string(k) + "\n";
    out += "d = " + std::to_string(d) + "\n";
    out += "delta = " + std::to_string(delta) + "\n";
    out += "s = " + (degree_identity_holds ? std::to_string(s) : std::string("none")) + "\n";
    out += "degree_identity = " + std::string(degree_identity_holds ? "true" : "false") + "\n";
    out += "indeterminacy_disjoint = " + std::string(indeterminacy_disjoint ? "true" : "false") + "\n";
    out += "regular = " + std::string(is_regular() ? "true" : "false") + "\n";
    out += "I_plus_forms = " + iplus.to_string(names) + "\n";
    out += "I_minus_forms = " + iminus.to_string(names) + "\n";
    if (is_regular()) {
        out += "dim_I_plus (predicted) = " + std::to_string(predicted_dim_iplus()) + "\n";
        out += "dim_I_minus (predicted) = " + std::to_string(predicted_dim_iminus()) + "\n";
    }
    return out;
}

RegularityReport regularity_report(const PolyMap& F, const PolyMap& Finv, const Budget& budget) {
    if (!verify_inverse(F, Finv, budget)) throw NotRegularError("claimed inverse does not verify");
    RegularityReport rep;
    rep.k = F.dim();
    rep.d = F.degree();
    rep.delta = Finv.degree();
    if (rep.d < 2 || rep.delta < 2)
        throw NotRegularError("not Henon-Sibony (degree " + std::to_string(std::min(rep.d, rep.delta)) + ")");

    rep.iplus = indeterminacy_forms(F);
    rep.iminus = indeterminacy_forms(Finv);

    // unique integer 1 <= s <= k-1 with d^s = delta^(k-s), if any
    for (int s = 1; s <= rep.k - 1; ++s) {
        BigInt lhs = BigInt(rep.d).pow(static_cast<unsigned long long>(s));
        BigInt rhs = BigInt(rep.delta).pow(static_cast<unsigned long long>(rep.k - s));
        if (lhs == rhs) {
            rep.s = s;
            rep.degree_identity_holds = true;
            break;
        }
    }
    rep.indeterminacy_disjoint = projective_disjointness(rep.iplus, rep.iminus);
    return rep;
}

}  // namespace hs
