#include "crepant/base_geometry.hpp"

namespace crepant {

namespace {

GradedClass degree_two(const BaseRing& ring, const Rational& multiple) {
    return GradedClass::monomial(ring.size(), 1, multiple);
}

}  // namespace

BaseRing BaseRing::projective_space(int k) {
    if (k < 0) throw ValidationError("projective space dimension must be non-negative");
    return BaseRing(k);
}

TautClasses TautClasses::make(const BaseRing& ring, int n, Rational ell_multiple, Rational em_multiple,
                              Rational kap_multiple) {
    if (n < 1) throw ValidationError("singularity index n must be at least 1");
    if (n == 1) {
        ell_multiple = Rational(0);
        em_multiple = Rational(0);
    } else if (ell_multiple + em_multiple != Rational(n + 1) * kap_multiple) {
        throw ValidationError("tautological classes violate l + m = (n+1) k: " + ell_multiple.to_string() +
                              " + " + em_multiple.to_string() + " != " + std::to_string(n + 1) + " * " +
                              kap_multiple.to_string());
    }
    TautClasses t;
    t.n = n;
    t.ell = degree_two(ring, ell_multiple);
    t.em = degree_two(ring, em_multiple);
    t.kap = degree_two(ring, kap_multiple);
    t.ell_multiple = std::move(ell_multiple);
    t.em_multiple = std::move(em_multiple);
    t.kap_multiple = std::move(kap_multiple);
    return t;
}

Geometry Geometry::make(int n, const BaseRing& base, Rational ell_multiple, Rational em_multiple,
                        Rational kap_multiple) {
    return Geometry{base, TautClasses::make(base, n, std::move(ell_multiple), std::move(em_multiple),
                                            std::move(kap_multiple))};
}

GradedClass Geometry::h_multiple(const Rational& c) const { return degree_two(base, c); }

}  // namespace crepant
