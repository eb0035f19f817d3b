#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crepant/base_geometry.hpp"
#include "crepant/cyclotomic.hpp"
#include "crepant/ring_element.hpp"

namespace crepant {

/// delta_rs = q_r...q_s / (1 - q_r...q_s), 1 <= r <= s <= n.
struct QAtom {
    int r = 1;
    int s = 1;
    friend auto operator<=>(const QAtom&, const QAtom&) = default;
    std::string to_string() const;
};

/// constant + sum_atoms c * delta_rs with exact rational coefficients.
/// Zero coefficients are never stored.
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(Rational constant) : constant_(std::move(constant)) {}
    static QSeries atom(QAtom a, Rational coeff = Rational(1));

    const Rational& constant() const noexcept { return constant_; }
    const std::map<QAtom, Rational>& atoms() const noexcept { return atoms_; }
    Rational coefficient(QAtom a) const;
    bool is_zero() const { return constant_.is_zero() && atoms_.empty(); }

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o) { return *this += o * Rational(-1); }
    QSeries& operator*=(const Rational& c);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
    friend bool operator==(const QSeries&, const QSeries&) = default;

    /// Replaces every atom by `f(atom)` (used to specialise q_1 = q_2).
    template <class F>
    QSeries substitute(F f) const {
        QSeries out(constant_);
        for (const auto& [a, c] : atoms_) out += atom(f(a), c);
        return out;
    }

    /// "2 - 8*d(1,1) + d(2,2)"; "0" for the zero series.
    std::string to_string() const;

private:
    void add_atom(QAtom a, const Rational& c);

    Rational constant_;
    std::map<QAtom, Rational> atoms_;
};

/// Exact evaluation point (q_1, ..., q_n).
struct QPoint {
    std::vector<CycNum> q;

    int n() const noexcept { return static_cast<int>(q.size()); }
    static QPoint constant(int n, const CycNum& value) { return QPoint{std::vector<CycNum>(n, value)}; }
    std::string to_string() const;
    friend bool operator==(const QPoint&, const QPoint&) = default;
};

/// Comma-separated scalars, each in the parse_cyc grammar ("zeta3,zeta3",
/// "-1,-1", "0,1/2"). Exactly n tokens are required.
QPoint parse_qpoint(const std::string& text, int n);

/// Value of delta_rs at q, or nullopt when q_r...q_s = 1.
std::optional<CycNum> atom_value(QAtom a, const QPoint& q);

/// Throws PoleError(r, s) for the first atom of the series sitting on a pole.
CycNum evaluate(const QSeries& series, const QPoint& q);

/// R_ijm(q) = sum_{r<=s} (E_i.beta_rs)(E_j.beta_rs)(E_m.beta_rs) delta_rs.
QSeries r_poly(int i, int j, int m, int n);

/// Quantum corrected 3-point function sum_{r<=s} Psi_{beta_rs}(g1,g2,g3) delta_rs,
/// the geometric series over multiples a*beta_rs summed in closed form.
QSeries qc_three_point(const Geometry& geometry, const ResClass& g1, const ResClass& g2, const ResClass& g3);

/// Degree-2 class em_coeff*M + kap_coeff*K.
struct ClassForm {
    Rational em;
    Rational kap;
    GradedClass evaluate(const TautClasses& taut) const { return taut.em * em + taut.kap * kap; }
    friend bool operator==(const ClassForm&, const ClassForm&) = default;
};

/// The correction vectors alpha_ij = (alpha_ij1, ..., alpha_ijn).
std::vector<ClassForm> alpha_vectors(int i, int j, int n);

/// E_l coefficient of E_i * E_j as a symbolic class: em_coeff * M plus
/// (constant + atoms) * K.
struct SymbolicCoefficient {
    Rational em;
    QSeries kap;
    friend bool operator==(const SymbolicCoefficient&, const SymbolicCoefficient&) = default;
};

/// sum_m (c_n^{-1})_lm (R_ijm(q) K + alpha_ijm).
SymbolicCoefficient quantum_coefficient(int i, int j, int l, int n);

/// H*(Z)(q): the classical resolution product with the exceptional
/// products replaced by their quantum corrected versions, evaluated at an
/// exact point q. A PoleError is raised only when a product actually needs
/// an atom sitting on a pole.
class QuantumRing {
public:
    QuantumRing(Geometry geometry, QPoint q);

    const Geometry& geometry() const noexcept { return geometry_; }
    const QPoint& point() const noexcept { return q_; }
    int n() const noexcept { return geometry_.n(); }

    CycResClass mul(const CycResClass& x, const CycResClass& y) const;
    CycNum pairing(const CycResClass& x, const CycResClass& y) const;

    /// First pole hit by E_i * E_j, if any.
    std::optional<QAtom> pole(int i, int j) const;

    std::vector<BasisElement> basis() const { return model_basis<ResTag>(geometry_); }

private:
    struct Product {
        std::optional<QAtom> pole;
        std::vector<CycGradedClass> coefficients;  // E_l coefficient, l = 1..n
    };

    Geometry geometry_;
    QPoint q_;
    std::vector<std::vector<Product>> products_;
};

struct QuantumTableEntry {
    std::string left;
    std::string right;
    CycResClass product;
};

/// Pairwise products of the resolution basis at q (i <= j).
std::vector<QuantumTableEntry> quantum_table(const QuantumRing& ring);

}  // namespace crepant
