#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crepant/chen_ruan.hpp"
#include "crepant/cyclotomic.hpp"
#include "crepant/linalg.hpp"
#include "crepant/quantum.hpp"
#include "crepant/resolution.hpp"

namespace crepant {

/// Which way the matrix acts. ResolutionToOrbifold: Phi(E_i) = sum_a A_ia e_a.
/// OrbifoldToResolution: Phi(e_a) = sum_i A_ai E_i. Y-parts map identically.
enum class MapDirection { ResolutionToOrbifold, OrbifoldToResolution };

struct HomCandidate {
    Matrix<CycNum> matrix;
    QPoint q;
    ConventionFlags flags;
    MapDirection direction = MapDirection::ResolutionToOrbifold;
};

struct Violation {
    std::string where;      // "E1*h*E2", or "(e1*e1)*e2" for associativity
    std::string component;  // basis label of the target component
    CycNum difference;      // lhs - rhs
};

struct HomReport {
    bool pass = false;
    bool singular = false;
    std::vector<Violation> violations;
};

/// Exact check of Phi(x * y) = Phi(x) * Phi(y) on every pair of source basis
/// elements, with the quantum product at c.q on the resolution side. Throws
/// PoleError when the quantum product needs a pole atom.
HomReport check_ring_hom(const HomCandidate& c, const Geometry& geometry);

/// The four solutions of ab = -3, a^2 + b^2 = 3 in Q(zeta3), from
/// a + b = +-sqrt(-3) = +-(1 + 2 zeta3) and a - b = +-3.
std::vector<std::pair<CycNum, CycNum>> a2_symmetric_candidates();

struct A2Solution {
    int order = 0;
    int power = 0;
    QPoint q;
    CycNum a;
    CycNum b;
};

struct A2PoleRecord {
    int order = 0;
    int power = 0;
    QPoint q;
    QAtom span;
};

struct A2SolveReport {
    std::vector<A2Solution> solutions;
    std::vector<A2PoleRecord> poles;
    std::vector<QPoint> searched;
};

/// Searches q1 = q2 = zeta_N^k (gcd(k, N) = 1, N <= max_order) for symmetric
/// isomorphisms A = [[a, b], [b, a]] (resolution -> orbifold). Results are
/// sorted by root order, then power.
A2SolveReport solve_a2_symmetric(const Geometry& geometry, int max_order = 12, ConventionFlags flags = {});

/// Deterministic sample of `count` cyclotomic scalars with conductor <= 8,
/// never equal to +-i/2.
std::vector<CycNum> a1_scalar_sample(std::size_t count = 200);

/// (delta, alpha) -> (delta, c alpha) from the orbifold ring to H*(Z)(q), n = 1.
HomReport verify_a1(const Geometry& geometry, const CycNum& c, const QPoint& q, ConventionFlags flags = {});

enum class RingId { Orbifold, Resolution, Quantum };

/// (xy)z = x(yz) over all basis triples. The QPoint is only read for the
/// quantum ring.
HomReport check_associativity(RingId ring, const Geometry& geometry, const QPoint& q = {}, ConventionFlags flags = {});

/// Determinant of the Poincare pairing Gram matrix on the model basis
/// (orbifold or classical resolution ring).
Rational gram_determinant(RingId ring, const Geometry& geometry);
bool check_pairing_nondegenerate(RingId ring, const Geometry& geometry);

/// One coefficient slot of the displayed A_2 quantum products: the sigma
/// part (only `m` used) or an E_l coefficient written as m*M + l*L.
struct ReconcileSlot {
    std::string product;  // "E1*E1"
    std::string slot;     // "sigma", "E1", "E2"
    QSeries printed_m;
    QSeries printed_l;
    QSeries derived_m;
    QSeries derived_l;
};

struct ReconcileMismatch {
    std::string product;
    std::string slot;
    std::string component;  // "sigma", "M" or "L"
    QSeries difference;     // transformed printed - derived, with q1 = q2
};

struct ReconcileTransform {
    std::string name;
    bool scale = false;
    bool swap = false;
    bool match = false;
    std::vector<ReconcileMismatch> mismatches;
};

/// A pair of displayed slots that the E1<->E2, L<->M, delta_1<->delta_2
/// symmetry should exchange but which disagree.
struct SymmetryBreak {
    std::string slot;    // "E2*E2:E2"
    std::string mirror;  // "E1*E1:E1"
    std::string component;
    QSeries difference;  // slot - mirror image of the partner
    bool immaterial = false;  // vanishes once delta_1 = delta_2
};

struct ReconcileReport {
    std::vector<ReconcileSlot> slots;
    std::vector<ReconcileTransform> transforms;
    std::vector<std::string> matching;
    /// Transformation with the fewest residual components.
    std::string best;
    std::size_t best_residuals = 0;
    /// Internal symmetry audit of the displayed expressions.
    std::vector<SymmetryBreak> display_symmetry_breaks;
    /// Slots that match under the best transformation only after
    /// identifying delta_1 with delta_2.
    std::vector<std::string> needs_equal_deltas;
};

/// Compares the derived quantum products for n = 2 (expressed in M and L via
/// K = (L + M)/3) against the displayed expressions under {identity,
/// scale 1/3, L<->M, both}. The scale applies to E_l slots only.
ReconcileReport reconcile_6_2(const Geometry& geometry);

}  // namespace crepant
