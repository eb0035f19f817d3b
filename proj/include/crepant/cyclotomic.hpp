#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crepant/rational.hpp"

namespace crepant {

/// Euler's totient.
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int n);

/// Largest conductor any CycNum may carry. Defaults to 120.
int max_conductor();
void set_max_conductor(int cap);

/// Exact element of the cyclotomic field Q(zeta_N), stored as the residue of
/// a polynomial in zeta modulo Phi_N. Coefficients are in the power basis
/// 1, zeta, ..., zeta^(phi(N)-1), so equality at a fixed conductor is
/// coefficient-wise. Operands of different conductors are embedded into
/// Q(zeta_lcm) first.
class CycNum {
public:
    CycNum() : CycNum(Rational(0)) {}
    CycNum(const Rational& r);  // NOLINT(implicit)
    CycNum(int v) : CycNum(Rational(v)) {}  // NOLINT(implicit)

    /// Reduces `poly` (coefficient of zeta^k at index k) modulo Phi_N.
    static CycNum from_poly(int conductor, std::span<const Rational> poly);
    static CycNum from_poly(int conductor, std::initializer_list<Rational> poly);

    /// zeta_N^k.
    static CycNum zeta(int conductor, int power = 1);
    /// sqrt(-1), living in Q(zeta_4).
    static CycNum imaginary_unit() { return zeta(4); }

    int conductor() const noexcept { return conductor_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    std::optional<Rational> as_rational() const;

    /// Image under Q(zeta_N) -> Q(zeta_M); M must be a multiple of N.
    CycNum embed(int target_conductor) const;
    /// Same value expressed over the smallest conductor that contains it.
    CycNum minimized() const;

    CycNum conj() const;
    CycNum inv() const;
    CycNum pow(long e) const;

    std::complex<double> to_complex() const;
    /// Human-readable form such as "2 + zeta3" or "-1/2*zeta4".
    std::string to_string() const;

    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const CycNum& o) { return *this *= o.inv(); }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    friend CycNum operator-(const CycNum& a);

    friend bool operator==(const CycNum& a, const CycNum& b);

private:
    CycNum(int conductor, std::vector<Rational> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    int conductor_ = 1;
    std::vector<Rational> coeffs_;
};

/// Parses the exact scalar grammar shared by q-specs and scalars: a signed
/// sum of terms `[p/q][*](i|zetaN[^k])[/q]` or plain rationals, e.g.
/// "zeta3", "zeta12^5", "-1", "3/4", "i/2", "2+zeta3", "zeta3-1".
/// Decimal literals are rejected.
CycNum parse_cyc(std::string_view text);

}  // namespace crepant
