#include "hs/poly_map.hpp"

namespace hs {

PolyMap::PolyMap(std::vector<Polynomial> comps) : comps_(std::move(comps)) {
    int k = static_cast<int>(comps_.size());
    for (const auto& c : comps_) {
        if (c.nvars() != k) throw std::invalid_argument("PolyMap: components must be k polynomials in k variables");
    }
}

PolyMap PolyMap::identity(int k) {
    std::vector<Polynomial> comps;
    comps.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comps.push_back(Polynomial::variable(k, i));
    return PolyMap(std::move(comps));
}

int PolyMap::degree() const {
    int d = -1;
    for (const auto& c : comps_) d = std::max(d, c.degree());
    return d;
}

const PolyMap& PolyMap::claimed_inverse() const {
    if (!inverse_) throw std::logic_error("PolyMap: no claimed inverse");
    return *inverse_;
}

void PolyMap::set_claimed_inverse(PolyMap inv) {
    if (inv.dim() != dim()) throw std::invalid_argument("PolyMap: inverse dimension mismatch");
    inverse_ = std::make_shared<const PolyMap>(std::move(inv));
}

std::vector<GaussianRational> PolyMap::eval_exact(std::span<const GaussianRational> z) const {
    std::vector<GaussianRational> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(c.eval_exact(z));
    return out;
}

std::vector<std::complex<double>> PolyMap::eval_float(std::span<const std::complex<double>> z) const {
    std::vector<std::complex<double>> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(c.eval_float(z));
    return out;
}

std::string PolyMap::to_string(std::span<const std::string> names) const {
    std::string out = "(";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) out += ", ";
        out += comps_[i].to_string(names);
    }
    return out + ")";
}

PolyMap compose(const PolyMap& F, const PolyMap& G, const Budget& budget) {
    if (F.dim() != G.dim()) throw std::invalid_argument("compose: dimension mismatch");
    std::vector<Polynomial> comps;
    comps.reserve(static_cast<std::size_t>(F.dim()));
    for (const auto& c : F.components()) comps.push_back(c.substitute(G.components(), &budget));
    return PolyMap(std::move(comps));
}

PolyMap iterate(const PolyMap& F, int n, const Budget& budget) {
    if (n < 0) throw std::invalid_argument("iterate: negative exponent");
    PolyMap acc = PolyMap::identity(F.dim());
    for (int i = 0; i < n; ++i) acc = compose(F, acc, budget);
    if (F.has_claimed_inverse()) {
        PolyMap inv_acc = PolyMap::identity(F.dim());
        for (int i = 0; i < n; ++i) inv_acc = compose(F.claimed_inverse(), inv_acc, budget);
        acc.set_claimed_inverse(std::move(inv_acc));
    }
    return acc;
}

bool verify_inverse(const PolyMap& F, const PolyMap& G, const Budget& budget) {
    if (F.dim() != G.dim()) throw std::invalid_argument("verify_inverse: dimension mismatch");
    PolyMap id = PolyMap::identity(F.dim());
    return compose(F, G, budget) == id && compose(G, F, budget) == id;
}

}  // namespace hs
