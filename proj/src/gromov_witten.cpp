#include "crepant/gromov_witten.hpp"

#include "crepant/errors.hpp"

namespace crepant {

Insertion classify_insertion(const ResClass& gamma) {
    Insertion out;
    int touched = 0;
    for (int l = 1; l <= gamma.n(); ++l) {
        if (gamma.twisted[l - 1].is_zero()) continue;
        ++touched;
        out.kind = Insertion::Kind::Exceptional;
        out.index = l;
        out.alpha = gamma.twisted[l - 1];
    }
    if (touched == 0) {
        out.alpha = GradedClass(gamma.size());
        return out;
    }
    if (touched > 1 || !gamma.y.is_zero()) {
        throw ValidationError("GW insertion must be a pure rho^* class or a single alpha*E_l; decompose it first");
    }
    return out;
}

Rational gw_invariant(const Geometry& geometry, const CurveClass& gamma, const std::array<ResClass, 3>& insertions) {
    if (gamma.n() != geometry.n()) throw ValidationError("curve class belongs to a different A_n chain");
    if (gamma.is_zero()) throw ValidationError("GW invariants need a nonzero curve class");
    std::array<Insertion, 3> parts;
    for (std::size_t t = 0; t < 3; ++t) {
        insertions[t].check_shape(ResClass::zero(geometry));
        parts[t] = classify_insertion(insertions[t]);
    }
    for (const auto& p : parts) {
        if (p.kind == Insertion::Kind::Pullback) return Rational(0);
    }
    const auto span = gamma.as_span_multiple();
    if (!span) return Rational(0);
    const CurveClass beta = curve_class(geometry.n(), span->i, span->j);
    Rational coefficient(1);
    for (const auto& p : parts) coefficient *= Rational(intersection(p.index, beta));
    if (coefficient.is_zero()) return coefficient;
    const GradedClass integrand = parts[0].alpha * parts[1].alpha * parts[2].alpha * geometry.taut.kap;
    return coefficient * integrate_S(geometry.base, integrand);
}

bool gw_vanishing_symplectic(const TautClasses& taut) { return taut.kap.is_zero(); }

}  // namespace crepant
