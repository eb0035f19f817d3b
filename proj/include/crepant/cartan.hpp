#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crepant/linalg.hpp"
#include "crepant/rational.hpp"

namespace crepant {

/// Curve class sum_l a_l beta_l in the span of the exceptional fibre
/// classes. multiplicities[l - 1] holds a_l.
struct CurveClass {
    std::vector<int> multiplicities;

    int n() const noexcept { return static_cast<int>(multiplicities.size()); }
    bool is_zero() const;

    /// Returns (i, j, a) when the class is a * beta_ij for some a >= 1.
    struct Span {
        int i;
        int j;
        int multiple;
    };
    std::optional<Span> as_span_multiple() const;

    /// "b(1,2)", "2*b(1,1)", or "1*b1+2*b2" for general classes.
    std::string to_string() const;

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

/// Type A_n Cartan matrix: -2 on the diagonal, 1 on the first off-diagonals.
IntMatrix cartan_matrix(int n);

/// Exact inverse, (c_n^{-1})_{ij} = -min(i,j)(n+1-max(i,j))/(n+1).
RatMatrix cartan_inverse(int n);

/// Single entry of the inverse with 1-based indices; indices 0 and n+1
/// return 0 (boundary convention of the exceptional-divisor formulas).
Rational cartan_inverse_entry(int n, int i, int j);

/// beta_i + ... + beta_j in an A_n chain (1-based, i <= j).
CurveClass curve_class(int n, int i, int j);

/// Intersection number E_l . Gamma = sum_m a_m (c_n)_{lm}.
long intersection(int l, const CurveClass& gamma);

/// Parses "b(i,j)", "a*b(i,j)", "b(i)" or a comma list of multiplicities
/// "1,0,2" for an A_n chain.
CurveClass parse_curve_class(int n, const std::string& text);

}  // namespace crepant
