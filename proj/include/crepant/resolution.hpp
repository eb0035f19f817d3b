#pragma once

#include <vector>

#include "crepant/base_geometry.hpp"
#include "crepant/chen_ruan.hpp"
#include "crepant/ring_element.hpp"

namespace crepant {

/// Classical cohomology ring H*(Z) of the crepant resolution in the model
/// H*(Y) + (+)_{l=1..n} H^{*-2}(S) E_l, where E_l stands for j_l* pi_l^*.
///
/// Exceptional products follow the closed formulas: for n = 1,
/// E.E = -2 sigma + 2 kap E; for n >= 2 the sigma part of E_i.E_j is
/// (c_n)_{ij} sigma and the E_l coefficients are linear in em and kap with
/// weights taken from c_n^{-1} (indices 0 and n+1 read as zero).
class ResolutionRing {
public:
    explicit ResolutionRing(Geometry geometry);

    const Geometry& geometry() const noexcept { return geometry_; }
    int n() const noexcept { return geometry_.n(); }

    template <class K>
    RingElement<ResTag, K> mul(const RingElement<ResTag, K>& x, const RingElement<ResTag, K>& y) const;

    /// Integral over Z of x.y; exceptional classes push forward to zero.
    template <class K>
    K pairing(const RingElement<ResTag, K>& x, const RingElement<ResTag, K>& y) const;

    /// Coefficient of E_l in E_i . E_j (degree-2 class), 1-based.
    const GradedClass& exceptional_coefficient(int i, int j, int l) const;
    /// E_i . E_j as a full class.
    ResClass exceptional_product(int i, int j) const;

    ResClass rho_pull(const TotalClass& delta) const;
    ResClass exc_push(int l, const GradedClass& alpha) const;
    ResClass unit() const;

    std::vector<BasisElement> basis() const { return model_basis<ResTag>(geometry_); }

private:
    Geometry geometry_;
    // coefficients_[i-1][j-1][l-1]
    std::vector<std::vector<std::vector<GradedClass>>> coefficients_;
};

RingTable<ResClass> resolution_table(const ResolutionRing& ring);

extern template RingElement<ResTag, Rational> ResolutionRing::mul(const RingElement<ResTag, Rational>&,
                                                                  const RingElement<ResTag, Rational>&) const;
extern template RingElement<ResTag, CycNum> ResolutionRing::mul(const RingElement<ResTag, CycNum>&,
                                                                const RingElement<ResTag, CycNum>&) const;
extern template Rational ResolutionRing::pairing(const RingElement<ResTag, Rational>&,
                                                 const RingElement<ResTag, Rational>&) const;
extern template CycNum ResolutionRing::pairing(const RingElement<ResTag, CycNum>&,
                                               const RingElement<ResTag, CycNum>&) const;

}  // namespace crepant
