#include "crepant/resolution.hpp"

#include <cstdlib>

#include "crepant/cartan.hpp"
#include "crepant/errors.hpp"

namespace crepant {

namespace {

// E_l coefficient of E_i . E_j for n >= 2, read off the closed formulas.
GradedClass chain_coefficient(const Geometry& g, int i, int j, int l) {
    const int n = g.n();
    auto inv = [n](int a, int b) { return cartan_inverse_entry(n, a, b); };
    Rational em_coeff;
    Rational kap_coeff;
    if (i == j) {
        em_coeff = inv(i - 1, l) - inv(i + 1, l);
        kap_coeff = Rational(-(i - 1)) * inv(i - 1, l) - Rational(4) * inv(i, l) + Rational(i + 1) * inv(i + 1, l);
    } else if (std::abs(i - j) == 1) {
        const int u = std::max(i, j);
        em_coeff = inv(u, l) - inv(u - 1, l);
        kap_coeff = Rational(u) * inv(u - 1, l) - Rational(u - 1) * inv(u, l);
    } else {
        return GradedClass(g.size());
    }
    return g.taut.em * em_coeff + g.taut.kap * kap_coeff;
}

long cartan_entry(int i, int j) {
    if (i == j) return -2;
    if (std::abs(i - j) == 1) return 1;
    return 0;
}

}  // namespace

ResolutionRing::ResolutionRing(Geometry geometry) : geometry_(std::move(geometry)) {
    const int n = geometry_.n();
    coefficients_.assign(n, std::vector<std::vector<GradedClass>>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            auto& row = coefficients_[i - 1][j - 1];
            for (int l = 1; l <= n; ++l) {
                if (n == 1) {
                    row.push_back(geometry_.taut.kap * Rational(2));
                } else {
                    row.push_back(chain_coefficient(geometry_, i, j, l));
                }
            }
        }
    }
}

const GradedClass& ResolutionRing::exceptional_coefficient(int i, int j, int l) const {
    const int n = this->n();
    if (i < 1 || i > n || j < 1 || j > n || l < 1 || l > n) {
        throw ValidationError("exceptional index out of range");
    }
    return coefficients_[i - 1][j - 1][l - 1];
}

ResClass ResolutionRing::exceptional_product(int i, int j) const {
    const GradedClass one = GradedClass::monomial(geometry_.size(), 0);
    return mul(exc_push(i, one), exc_push(j, one));
}

template <class K>
RingElement<ResTag, K> ResolutionRing::mul(const RingElement<ResTag, K>& x,
                                           const RingElement<ResTag, K>& y) const {
    const int n = this->n();
    if (x.n() != n || y.n() != n || x.size() != geometry_.size() || y.size() != geometry_.size()) {
        throw ValidationError("resolution product of elements from a different geometry");
    }
    auto r = RingElement<ResTag, K>::zero(geometry_);
    r.y = y_mul(x.y, y.y);
    const Graded<K> x_restricted = i_pull(x.y);
    const Graded<K> y_restricted = i_pull(y.y);
    for (std::size_t l = 0; l < static_cast<std::size_t>(n); ++l) {
        r.twisted[l] += x.twisted[l] * y_restricted;
        r.twisted[l] += y.twisted[l] * x_restricted;
    }
    for (int i = 1; i <= n; ++i) {
        const auto& alpha = x.twisted[i - 1];
        if (alpha.is_zero()) continue;
        for (int j = 1; j <= n; ++j) {
            const auto& beta = y.twisted[j - 1];
            if (beta.is_zero()) continue;
            const Graded<K> prod = alpha * beta;
            if (const long c = cartan_entry(i, j); c != 0) r.y += i_push(prod) * K(Rational(c));
            for (int l = 1; l <= n; ++l) {
                const auto& coeff = coefficients_[i - 1][j - 1][l - 1];
                if (coeff.is_zero()) continue;
                r.twisted[l - 1] += prod * coeff.template lift<K>();
            }
        }
    }
    return r;
}

template <class K>
K ResolutionRing::pairing(const RingElement<ResTag, K>& x, const RingElement<ResTag, K>& y) const {
    return integrate_Y(geometry_.base, mul(x, y).y);
}

template RingElement<ResTag, Rational> ResolutionRing::mul(const RingElement<ResTag, Rational>&,
                                                           const RingElement<ResTag, Rational>&) const;
template RingElement<ResTag, CycNum> ResolutionRing::mul(const RingElement<ResTag, CycNum>&,
                                                         const RingElement<ResTag, CycNum>&) const;
template Rational ResolutionRing::pairing(const RingElement<ResTag, Rational>&,
                                          const RingElement<ResTag, Rational>&) const;
template CycNum ResolutionRing::pairing(const RingElement<ResTag, CycNum>&,
                                        const RingElement<ResTag, CycNum>&) const;

ResClass ResolutionRing::rho_pull(const TotalClass& delta) const {
    if (delta.size() != geometry_.size()) throw ValidationError("class from a different base ring");
    auto x = ResClass::zero(geometry_);
    x.y = delta;
    return x;
}

ResClass ResolutionRing::exc_push(int l, const GradedClass& alpha) const {
    if (l < 1 || l > n()) throw ValidationError("exceptional divisor E_" + std::to_string(l) + " out of range");
    if (alpha.size() != geometry_.size()) throw ValidationError("class from a different base ring");
    auto x = ResClass::zero(geometry_);
    x.twisted[l - 1] = alpha;
    return x;
}

ResClass ResolutionRing::unit() const {
    auto x = ResClass::zero(geometry_);
    x.y.base[0] = Rational(1);
    return x;
}

RingTable<ResClass> resolution_table(const ResolutionRing& ring) {
    RingTable<ResClass> table;
    const auto basis = ring.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto x = make_basis_element<ResTag, Rational>(ring.geometry(), basis[i]);
        for (std::size_t j = i; j < basis.size(); ++j) {
            const auto y = make_basis_element<ResTag, Rational>(ring.geometry(), basis[j]);
            table.entries.push_back({basis[i].label, basis[j].label, ring.mul(x, y)});
        }
    }
    return table;
}

}  // namespace crepant
