#include "crepant/chen_ruan.hpp"

#include "crepant/errors.hpp"

namespace crepant {

Rational age(int order, std::span<const int> exponents) {
    if (order < 1) throw ValidationError("element order must be positive");
    long sum = 0;
    for (int e : exponents) {
        if (e < 0 || e >= order) {
            throw ValidationError("eigenvalue exponent " + std::to_string(e) + " outside [0, " +
                                  std::to_string(order) + ")");
        }
        sum += e;
    }
    return Rational(sum, order);
}

Rational ConventionFlags::twist_value(int n) const {
    switch (twist) {
        case TwistConvention::PlusOne: return Rational(1);
        case TwistConvention::PlusInverse: return Rational(1, n + 1);
        case TwistConvention::MinusInverse: return Rational(-1, n + 1);
        case TwistConvention::MinusOne: return Rational(-1);
    }
    return Rational(0);
}

std::string ConventionFlags::describe() const {
    switch (twist) {
        case TwistConvention::PlusOne: return "+1";
        case TwistConvention::PlusInverse: return "+1/(n+1)";
        case TwistConvention::MinusInverse: return "-1/(n+1)";
        case TwistConvention::MinusOne: return "-1";
    }
    return "?";
}

ConventionFlags ConventionFlags::parse(const std::string& text, int n) {
    std::string t = text;
    if (t.rfind("t=", 0) == 0) t = t.substr(2);
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    if (t == "1/(n+1)") return {TwistConvention::PlusInverse};
    if (t == "-1/(n+1)") return {TwistConvention::MinusInverse};
    Rational value;
    try {
        value = Rational::parse(t);
    } catch (const Error&) {
        throw ValidationError("unknown twist convention '" + text + "'");
    }
    // Literal values; +-1 wins over +-1/(n+1) when they coincide (n = 0 never occurs).
    for (auto c : {TwistConvention::PlusOne, TwistConvention::MinusOne, TwistConvention::PlusInverse,
                   TwistConvention::MinusInverse}) {
        if (ConventionFlags{c}.twist_value(n) == value) return {c};
    }
    throw ValidationError("twist value " + value.to_string() + " is not one of +1, +1/(n+1), -1/(n+1), -1");
}

Obstruction obstruction_class(int n, int a1, int a2) {
    if (a1 < 1 || a1 > n || a2 < 1 || a2 > n) throw ValidationError("sector label out of range");
    if (a1 + a2 < n + 1) return Obstruction::Ell;
    if (a1 + a2 > n + 1) return Obstruction::Em;
    return Obstruction::None;
}

OrbifoldRing::OrbifoldRing(Geometry geometry, ConventionFlags flags)
    : geometry_(std::move(geometry)), flags_(flags), twist_(flags.twist_value(geometry_.n())) {}

template <class K>
RingElement<OrbTag, K> OrbifoldRing::mul(const RingElement<OrbTag, K>& x, const RingElement<OrbTag, K>& y) const {
    const int n = this->n();
    if (x.n() != n || y.n() != n || x.size() != geometry_.size() || y.size() != geometry_.size()) {
        throw ValidationError("orbifold product of elements from a different geometry");
    }
    auto r = RingElement<OrbTag, K>::zero(geometry_);
    r.y = y_mul(x.y, y.y);
    const Graded<K> x_restricted = i_pull(x.y);
    const Graded<K> y_restricted = i_pull(y.y);
    for (std::size_t a = 0; a < static_cast<std::size_t>(n); ++a) {
        r.twisted[a] += x.twisted[a] * y_restricted;
        r.twisted[a] += y.twisted[a] * x_restricted;
    }
    const Graded<K> ell = geometry_.taut.ell.template lift<K>();
    const Graded<K> em = geometry_.taut.em.template lift<K>();
    const K twist(twist_);
    const K inverse_order(Rational(1, n + 1));
    for (int a1 = 1; a1 <= n; ++a1) {
        const auto& alpha = x.twisted[a1 - 1];
        if (alpha.is_zero()) continue;
        for (int a2 = 1; a2 <= n; ++a2) {
            const auto& beta = y.twisted[a2 - 1];
            if (beta.is_zero()) continue;
            const Graded<K> prod = alpha * beta;
            switch (obstruction_class(n, a1, a2)) {
                case Obstruction::None: r.y += i_push(prod) * inverse_order; break;
                case Obstruction::Ell: r.twisted[a1 + a2 - 1] += prod * ell * twist; break;
                case Obstruction::Em: r.twisted[a1 + a2 - (n + 1) - 1] += prod * em * twist; break;
            }
        }
    }
    return r;
}

template <class K>
K OrbifoldRing::pairing(const RingElement<OrbTag, K>& x, const RingElement<OrbTag, K>& y) const {
    const int n = this->n();
    K total = integrate_Y(geometry_.base, y_mul(x.y, y.y));
    const K inverse_order(Rational(1, n + 1));
    for (int a = 1; a <= n; ++a) {
        total += inverse_order * integrate_S(geometry_.base, x.twisted[a - 1] * y.twisted[n - a]);
    }
    return total;
}

template RingElement<OrbTag, Rational> OrbifoldRing::mul(const RingElement<OrbTag, Rational>&,
                                                         const RingElement<OrbTag, Rational>&) const;
template RingElement<OrbTag, CycNum> OrbifoldRing::mul(const RingElement<OrbTag, CycNum>&,
                                                       const RingElement<OrbTag, CycNum>&) const;
template Rational OrbifoldRing::pairing(const RingElement<OrbTag, Rational>&,
                                        const RingElement<OrbTag, Rational>&) const;
template CycNum OrbifoldRing::pairing(const RingElement<OrbTag, CycNum>&,
                                      const RingElement<OrbTag, CycNum>&) const;

OrbClass OrbifoldRing::untwisted(const TotalClass& delta) const {
    auto x = OrbClass::zero(geometry_);
    if (delta.size() != geometry_.size()) throw ValidationError("class from a different base ring");
    x.y = delta;
    return x;
}

OrbClass OrbifoldRing::twisted(int a, const GradedClass& alpha) const {
    if (a < 1 || a > n()) throw ValidationError("twisted sector " + std::to_string(a) + " out of range");
    if (alpha.size() != geometry_.size()) throw ValidationError("class from a different base ring");
    auto x = OrbClass::zero(geometry_);
    x.twisted[a - 1] = alpha;
    return x;
}

OrbClass OrbifoldRing::unit() const {
    auto x = OrbClass::zero(geometry_);
    x.y.base[0] = Rational(1);
    return x;
}

RingTable<OrbClass> orbifold_table(const OrbifoldRing& ring) {
    RingTable<OrbClass> table;
    const auto basis = ring.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto x = make_basis_element<OrbTag, Rational>(ring.geometry(), basis[i]);
        for (std::size_t j = i; j < basis.size(); ++j) {
            const auto y = make_basis_element<OrbTag, Rational>(ring.geometry(), basis[j]);
            table.entries.push_back({basis[i].label, basis[j].label, ring.mul(x, y)});
        }
    }
    return table;
}

RingTable<OrbClass> surface_table(int n) {
    const OrbifoldRing ring(Geometry::make(n, BaseRing::point(), 0, 0, 0));
    RingTable<OrbClass> table;
    const GradedClass one = GradedClass::monomial(1, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            table.entries.push_back({"e" + std::to_string(i), "e" + std::to_string(j),
                                     ring.mul(ring.twisted(i, one), ring.twisted(j, one))});
        }
    }
    return table;
}

}  // namespace crepant
