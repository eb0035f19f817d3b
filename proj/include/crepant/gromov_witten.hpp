#pragma once

#include <array>
#include <string>

#include "crepant/base_geometry.hpp"
#include "crepant/cartan.hpp"
#include "crepant/ring_element.hpp"

namespace crepant {

/// Stated in every report that uses invariants: the closed formulas are
/// applied without checking their ampleness / rigidity hypotheses.
inline constexpr const char* kGwAssumption =
    "genus-zero invariants of exceptional classes taken from the closed formulas for all "
    "transversal A_n geometries; ampleness and deformation hypotheses are not checked";

/// A GW insertion split into its shape: a pulled-back class rho^*(delta)
/// or a single exceptional monomial alpha.E_l.
struct Insertion {
    enum class Kind { Pullback, Exceptional };
    Kind kind = Kind::Pullback;
    int index = 0;  // l for exceptional insertions
    GradedClass alpha;
};

/// Classifies a resolution class; throws ValidationError for classes that
/// mix a rho^* part with exceptional parts or touch several E_l.
Insertion classify_insertion(const ResClass& gamma);

/// Psi^Z_Gamma(g1, g2, g3) for Gamma in the span of the exceptional fibres.
/// Nonzero only for Gamma = a*beta_ij with three exceptional insertions,
/// where it equals prod_t (E_{l_t}.beta_ij) * int_S a1 a2 a3 kap.
Rational gw_invariant(const Geometry& geometry, const CurveClass& gamma, const std::array<ResClass, 3>& insertions);

/// True when kap = 0, in which case every invariant above vanishes.
bool gw_vanishing_symplectic(const TautClasses& taut);

}  // namespace crepant
