#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crepant/base_geometry.hpp"
#include "crepant/ring_element.hpp"

namespace crepant {

/// Degree-shifting number sum(exponents) / order of a local group element
/// acting with eigenvalues exp(2 pi i m_k / order).
Rational age(int order, std::span<const int> exponents);

/// Normalisation applied to twisted-twisted products whose sectors add up
/// to something other than n+1.
enum class TwistConvention { PlusOne, PlusInverse, MinusInverse, MinusOne };

struct ConventionFlags {
    TwistConvention twist = TwistConvention::MinusInverse;

    /// +1, +1/(n+1), -1/(n+1) or -1.
    Rational twist_value(int n) const;
    std::string describe() const;

    /// Accepts "1", "+1", "-1", "1/(n+1)", "+1/(n+1)", "-1/(n+1)" or the
    /// literal rational for this n (e.g. "-1/3" when n = 2).
    static ConventionFlags parse(const std::string& text, int n);

    friend bool operator==(const ConventionFlags&, const ConventionFlags&) = default;
};

/// Which tautological class the obstruction bundle of sectors (a1, a2)
/// carries.
enum class Obstruction { Ell, Em, None };

Obstruction obstruction_class(int n, int a1, int a2);

/// Chen-Ruan cohomology ring of a transversal A_n orbifold with trivial
/// monodromy, in the model H*(Y) + (+)_{a=1..n} H^{*-2}(S) e_a.
class OrbifoldRing {
public:
    explicit OrbifoldRing(Geometry geometry, ConventionFlags flags = {});

    const Geometry& geometry() const noexcept { return geometry_; }
    const ConventionFlags& flags() const noexcept { return flags_; }
    int n() const noexcept { return geometry_.n(); }

    template <class K>
    RingElement<OrbTag, K> mul(const RingElement<OrbTag, K>& x, const RingElement<OrbTag, K>& y) const;

    template <class K>
    K pairing(const RingElement<OrbTag, K>& x, const RingElement<OrbTag, K>& y) const;

    /// delta placed in the untwisted sector.
    OrbClass untwisted(const TotalClass& delta) const;
    /// alpha e_a.
    OrbClass twisted(int a, const GradedClass& alpha) const;
    OrbClass unit() const;

    std::vector<BasisElement> basis() const { return model_basis<OrbTag>(geometry_); }

private:
    Geometry geometry_;
    ConventionFlags flags_;
    Rational twist_;
};

/// Pairwise products of a ring's basis, in basis order with i <= j.
template <class Element>
struct RingTable {
    struct Entry {
        std::string left;
        std::string right;
        Element product;
    };
    std::vector<Entry> entries;
};

RingTable<OrbClass> orbifold_table(const OrbifoldRing& ring);

/// Surface case (S a point): e_i e_j = sigma/(n+1) when i + j = 0 mod n+1.
RingTable<OrbClass> surface_table(int n);

extern template RingElement<OrbTag, Rational> OrbifoldRing::mul(const RingElement<OrbTag, Rational>&,
                                                                const RingElement<OrbTag, Rational>&) const;
extern template RingElement<OrbTag, CycNum> OrbifoldRing::mul(const RingElement<OrbTag, CycNum>&,
                                                              const RingElement<OrbTag, CycNum>&) const;
extern template Rational OrbifoldRing::pairing(const RingElement<OrbTag, Rational>&,
                                               const RingElement<OrbTag, Rational>&) const;
extern template CycNum OrbifoldRing::pairing(const RingElement<OrbTag, CycNum>&,
                                             const RingElement<OrbTag, CycNum>&) const;

}  // namespace crepant
