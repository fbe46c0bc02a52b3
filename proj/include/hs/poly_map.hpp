// Polynomial self-maps of C^k, with optional claimed inverses.
//
// A map is a k-tuple of polynomials in k variables. The claimed inverse is
// carried along unverified; verify_inverse composes both ways and checks
// the identity exactly.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hs/polynomial.hpp"

namespace hs {

class PolyMap {
public:
    PolyMap() = default;
    explicit PolyMap(std::vector<Polynomial> comps);

    static PolyMap identity(int k);

    int dim() const { return static_cast<int>(comps_.size()); }
    const std::vector<Polynomial>& components() const { return comps_; }
    const Polynomial& component(int i) const { return comps_[static_cast<std::size_t>(i)]; }

    // max total degree over components; identity has degree 1
    int degree() const;

    bool has_claimed_inverse() const { return inverse_ != nullptr; }
    const PolyMap& claimed_inverse() const;
    void set_claimed_inverse(PolyMap inv);

    bool operator==(const PolyMap& o) const { return comps_ == o.comps_; }
    bool operator!=(const PolyMap& o) const { return !(*this == o); }

    std::vector<GaussianRational> eval_exact(std::span<const GaussianRational> z) const;
    std::vector<std::complex<double>> eval_float(std::span<const std::complex<double>> z) const;

    std::string to_string(std::span<const std::string> names) const;

private:
    std::vector<Polynomial> comps_;
    std::shared_ptr<const PolyMap> inverse_;
};

// F after G, i.e. z -> F(G(z))
PolyMap compose(const PolyMap& F, const PolyMap& G, const Budget& budget = {});

// F^n by repeated composition; F^0 is the identity. When both F and its
// claimed inverse are available the result carries the matching inverse.
PolyMap iterate(const PolyMap& F, int n, const Budget& budget = {});

// true iff F(G(z)) and G(F(z)) are both exactly the identity
bool verify_inverse(const PolyMap& F, const PolyMap& G, const Budget& budget = {});

}  // namespace hs
