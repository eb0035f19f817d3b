#include "crepant/verify.hpp"

#include <cstdint>
#include <numeric>
#include <random>

#include "crepant/cartan.hpp"
#include "crepant/errors.hpp"

namespace crepant {

namespace {

template <class Tag, class K>
std::vector<K> flatten(const RingElement<Tag, K>& x) {
    std::vector<K> out;
    for (std::size_t j = 0; j < x.size(); ++j) out.push_back(x.y.base[j]);
    for (std::size_t j = 0; j < x.size(); ++j) out.push_back(x.y.sigma[j]);
    for (const auto& t : x.twisted) {
        for (std::size_t j = 0; j < x.size(); ++j) out.push_back(t[j]);
    }
    return out;
}

// Compares two elements of the same ring component by component and appends
// every nonzero difference.
template <class Tag, class K>
void compare_into(const Geometry& g, const std::string& where, const RingElement<Tag, K>& lhs,
                  const RingElement<Tag, K>& rhs, std::vector<Violation>& out) {
    const auto labels = model_basis<Tag>(g);
    const auto l = flatten(lhs);
    const auto r = flatten(rhs);
    for (std::size_t k = 0; k < l.size(); ++k) {
        if (l[k] == r[k]) continue;
        out.push_back({where, labels[k].label, CycNum(l[k] - r[k])});
    }
}

// out.twisted[col] = sum_row A(row, col) x.twisted[row].
template <class To, class From>
RingElement<To, CycNum> apply_matrix(const RingElement<From, CycNum>& x, const Matrix<CycNum>& a) {
    RingElement<To, CycNum> out{x.y, {}};
    const std::size_t n = x.twisted.size();
    for (std::size_t col = 0; col < n; ++col) {
        CycGradedClass slot(x.size());
        for (std::size_t row = 0; row < n; ++row) {
            if (a(row, col).is_zero()) continue;
            slot += x.twisted[row] * a(row, col);
        }
        out.twisted.push_back(std::move(slot));
    }
    return out;
}

template <class From, class To, class SourceMul, class TargetMul>
void check_pairs(const Geometry& g, const Matrix<CycNum>& a, SourceMul source_mul, TargetMul target_mul,
                 std::vector<Violation>& out) {
    const auto basis = model_basis<From>(g);
    std::vector<RingElement<From, CycNum>> elems;
    std::vector<RingElement<To, CycNum>> images;
    for (const auto& b : basis) {
        elems.push_back(make_basis_element<From, CycNum>(g, b));
        images.push_back(apply_matrix<To>(elems.back(), a));
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i; j < elems.size(); ++j) {
            const auto lhs = apply_matrix<To>(source_mul(elems[i], elems[j]), a);
            const auto rhs = target_mul(images[i], images[j]);
            compare_into(g, basis[i].label + "*" + basis[j].label, lhs, rhs, out);
        }
    }
}

}  // namespace

HomReport check_ring_hom(const HomCandidate& c, const Geometry& geometry) {
    const auto n = static_cast<std::size_t>(geometry.n());
    if (c.matrix.rows() != n || c.matrix.cols() != n) {
        throw ValidationError("candidate matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    HomReport report;
    report.singular = determinant(c.matrix).is_zero();
    const OrbifoldRing orb(geometry, c.flags);
    const QuantumRing quantum(geometry, c.q);
    auto orb_mul = [&orb](const CycOrbClass& x, const CycOrbClass& y) { return orb.mul(x, y); };
    auto q_mul = [&quantum](const CycResClass& x, const CycResClass& y) { return quantum.mul(x, y); };
    if (c.direction == MapDirection::ResolutionToOrbifold) {
        check_pairs<ResTag, OrbTag>(geometry, c.matrix, q_mul, orb_mul, report.violations);
    } else {
        check_pairs<OrbTag, ResTag>(geometry, c.matrix, orb_mul, q_mul, report.violations);
    }
    report.pass = !report.singular && report.violations.empty();
    return report;
}

std::vector<std::pair<CycNum, CycNum>> a2_symmetric_candidates() {
    const CycNum sqrt_minus_three = CycNum(1) + CycNum::zeta(3) * CycNum(2);
    std::vector<std::pair<CycNum, CycNum>> out;
    for (int s : {1, -1}) {
        for (int t : {1, -1}) {
            const CycNum sum = sqrt_minus_three * CycNum(s);
            const CycNum diff(3 * t);
            out.emplace_back((sum + diff) * CycNum(Rational(1, 2)), (sum - diff) * CycNum(Rational(1, 2)));
        }
    }
    return out;
}

A2SolveReport solve_a2_symmetric(const Geometry& geometry, int max_order, ConventionFlags flags) {
    if (geometry.n() != 2) throw ValidationError("the A_2 solver needs n = 2");
    if (max_order < 1) throw ValidationError("max order must be positive");
    A2SolveReport report;
    const auto candidates = a2_symmetric_candidates();
    for (int order = 1; order <= max_order; ++order) {
        for (int power = 1; power <= order; ++power) {
            if (std::gcd(power, order) != 1) continue;
            const QPoint q = QPoint::constant(2, CycNum::zeta(order, power));
            report.searched.push_back(q);
            const QuantumRing ring(geometry, q);
            std::optional<QAtom> pole;
            for (int i = 1; i <= 2 && !pole; ++i) {
                for (int j = 1; j <= 2 && !pole; ++j) pole = ring.pole(i, j);
            }
            if (pole) {
                report.poles.push_back({order, power, q, *pole});
                continue;
            }
            for (const auto& [a, b] : candidates) {
                Matrix<CycNum> m(2, 2);
                m(0, 0) = a;
                m(0, 1) = b;
                m(1, 0) = b;
                m(1, 1) = a;
                if (check_ring_hom({m, q, flags, MapDirection::ResolutionToOrbifold}, geometry).pass) {
                    report.solutions.push_back({order, power, q, a, b});
                }
            }
        }
    }
    return report;
}

std::vector<CycNum> a1_scalar_sample(std::size_t count) {
    std::mt19937 rng(20061);
    const CycNum half_i = CycNum::imaginary_unit() * CycNum(Rational(1, 2));
    std::vector<CycNum> out;
    while (out.size() < count) {
        const int conductor = 1 + static_cast<int>(rng() % 8);
        std::vector<Rational> poly;
        for (int k = 0; k < euler_phi(conductor); ++k) {
            const long num = static_cast<long>(rng() % 7) - 3;
            const long den = 1 + static_cast<long>(rng() % 3);
            poly.emplace_back(num, den);
        }
        CycNum c = CycNum::from_poly(conductor, poly);
        if (c == half_i || c == -half_i) continue;
        bool seen = false;
        for (const auto& o : out) seen = seen || o == c;
        if (!seen) out.push_back(std::move(c));
    }
    return out;
}

HomReport verify_a1(const Geometry& geometry, const CycNum& c, const QPoint& q, ConventionFlags flags) {
    if (geometry.n() != 1) throw ValidationError("the A_1 check needs n = 1");
    Matrix<CycNum> m(1, 1);
    m(0, 0) = c;
    return check_ring_hom({m, q, flags, MapDirection::OrbifoldToResolution}, geometry);
}

namespace {

template <class Tag, class K, class Mul>
HomReport associativity(const Geometry& g, Mul mul) {
    const auto basis = model_basis<Tag>(g);
    std::vector<RingElement<Tag, K>> elems;
    for (const auto& b : basis) elems.push_back(make_basis_element<Tag, K>(g, b));
    const std::size_t size = elems.size();
    std::vector<std::vector<RingElement<Tag, K>>> pair(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) pair[i].push_back(mul(elems[i], elems[j]));
    }
    HomReport report;
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            for (std::size_t k = 0; k < size; ++k) {
                const auto lhs = mul(pair[i][j], elems[k]);
                const auto rhs = mul(elems[i], pair[j][k]);
                if (lhs == rhs) continue;
                compare_into(g, "(" + basis[i].label + "*" + basis[j].label + ")*" + basis[k].label, lhs, rhs,
                             report.violations);
            }
        }
    }
    report.pass = report.violations.empty();
    return report;
}

}  // namespace

HomReport check_associativity(RingId ring, const Geometry& geometry, const QPoint& q, ConventionFlags flags) {
    switch (ring) {
        case RingId::Orbifold: {
            const OrbifoldRing orb(geometry, flags);
            return associativity<OrbTag, Rational>(
                geometry, [&orb](const OrbClass& x, const OrbClass& y) { return orb.mul(x, y); });
        }
        case RingId::Resolution: {
            const ResolutionRing res(geometry);
            return associativity<ResTag, Rational>(
                geometry, [&res](const ResClass& x, const ResClass& y) { return res.mul(x, y); });
        }
        case RingId::Quantum: {
            const QuantumRing quantum(geometry, q);
            return associativity<ResTag, CycNum>(
                geometry, [&quantum](const CycResClass& x, const CycResClass& y) { return quantum.mul(x, y); });
        }
    }
    throw ValidationError("unknown ring");
}

namespace {

template <class Tag, class Pairing>
Rational gram(const Geometry& g, Pairing pairing) {
    const auto basis = model_basis<Tag>(g);
    RatMatrix m(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto x = make_basis_element<Tag, Rational>(g, basis[i]);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            m(i, j) = pairing(x, make_basis_element<Tag, Rational>(g, basis[j]));
        }
    }
    return determinant(m);
}

}  // namespace

Rational gram_determinant(RingId ring, const Geometry& geometry) {
    switch (ring) {
        case RingId::Orbifold: {
            const OrbifoldRing orb(geometry);
            return gram<OrbTag>(geometry, [&orb](const OrbClass& x, const OrbClass& y) { return orb.pairing(x, y); });
        }
        case RingId::Resolution: {
            const ResolutionRing res(geometry);
            return gram<ResTag>(geometry, [&res](const ResClass& x, const ResClass& y) { return res.pairing(x, y); });
        }
        case RingId::Quantum: break;
    }
    throw ValidationError("pairing determinant is defined for the orbifold and resolution rings");
}

bool check_pairing_nondegenerate(RingId ring, const Geometry& geometry) {
    return !gram_determinant(ring, geometry).is_zero();
}

namespace {

QSeries affine(long constant, std::initializer_list<std::pair<QAtom, long>> atoms) {
    QSeries out{Rational(constant)};
    for (const auto& [a, c] : atoms) out += QSeries::atom(a, Rational(c));
    return out;
}

constexpr QAtom d1{1, 1};
constexpr QAtom d2{2, 2};
constexpr QAtom d3{1, 2};

struct PrintedSlot {
    const char* product;
    const char* slot;
    QSeries m;
    QSeries l;
};

// The displayed n = 2 products, coefficient of M and of L per slot (the
// sigma rows keep their value in `m`).
std::vector<PrintedSlot> printed_products() {
    return {
        {"E1*E1", "sigma", affine(-2, {}), {}},
        {"E1*E1", "E1", affine(2, {{d1, 4}, {d3, 1}}), affine(3, {{d1, 4}, {d3, 1}})},
        {"E1*E1", "E2", affine(0, {{d1, 1}, {d3, 1}}), affine(2, {{d2, 1}, {d3, 1}})},
        {"E1*E2", "sigma", affine(1, {}), {}},
        {"E1*E2", "E1", affine(-1, {{d1, -2}, {d3, 1}}), affine(0, {{d1, -2}, {d3, 1}})},
        {"E1*E2", "E2", affine(0, {{d2, -2}, {d3, 1}}), affine(-1, {{d2, -2}, {d3, 1}})},
        {"E2*E2", "sigma", affine(-2, {}), {}},
        {"E2*E2", "E1", affine(2, {{d1, 1}, {d3, 1}}), affine(0, {{d1, 1}, {d3, 1}})},
        {"E2*E2", "E2", affine(3, {{d2, 4}, {d3, 1}}), affine(2, {{d2, 1}, {d3, 1}})},
    };
}

QSeries equal_deltas(const QSeries& s) {
    return s.substitute([](QAtom a) { return a == d2 ? d1 : a; });
}

}  // namespace

ReconcileReport reconcile_6_2(const Geometry& geometry) {
    if (geometry.n() != 2) throw ValidationError("the A_2 reconciliation needs n = 2");
    ReconcileReport report;
    const Rational third(1, 3);
    for (auto& p : printed_products()) {
        ReconcileSlot slot{p.product, p.slot, p.m, p.l, {}, {}};
        const int i = p.product[1] - '0';
        const int j = p.product[4] - '0';
        if (slot.slot == "sigma") {
            slot.derived_m = QSeries(Rational(cartan_matrix(2)(i - 1, j - 1)));
        } else {
            // em*M + kap*K with K = (L + M)/3.
            const auto c = quantum_coefficient(i, j, slot.slot[1] - '0', 2);
            slot.derived_m = QSeries(c.em) + c.kap * third;
            slot.derived_l = c.kap * third;
        }
        report.slots.push_back(std::move(slot));
    }

    const std::vector<std::pair<bool, bool>> choices = {{false, false}, {true, false}, {false, true}, {true, true}};
    const char* names[] = {"identity", "scale 1/3", "swap L<->M", "scale 1/3 + swap L<->M"};
    for (std::size_t t = 0; t < choices.size(); ++t) {
        ReconcileTransform tr{names[t], choices[t].first, choices[t].second, false, {}};
        for (const auto& s : report.slots) {
            auto compare = [&](const std::string& component, const QSeries& printed, const QSeries& derived) {
                const QSeries diff = equal_deltas(printed) - equal_deltas(derived);
                if (!diff.is_zero()) tr.mismatches.push_back({s.product, s.slot, component, diff});
            };
            if (s.slot == "sigma") {
                compare("sigma", s.printed_m, s.derived_m);
                continue;
            }
            const Rational scale = tr.scale ? third : Rational(1);
            const QSeries m = (tr.swap ? s.printed_l : s.printed_m) * scale;
            const QSeries l = (tr.swap ? s.printed_m : s.printed_l) * scale;
            compare("M", m, s.derived_m);
            compare("L", l, s.derived_l);
        }
        tr.match = tr.mismatches.empty();
        if (tr.match) report.matching.push_back(tr.name);
        report.transforms.push_back(std::move(tr));
    }

    const ReconcileTransform* best = &report.transforms.front();
    for (const auto& tr : report.transforms) {
        if (tr.mismatches.size() < best->mismatches.size()) best = &tr;
    }
    report.best = best->name;
    report.best_residuals = best->mismatches.size();
    const Rational scale = best->scale ? third : Rational(1);
    for (const auto& s : report.slots) {
        if (s.slot == "sigma") continue;
        const QSeries m = (best->swap ? s.printed_l : s.printed_m) * scale;
        const QSeries l = (best->swap ? s.printed_m : s.printed_l) * scale;
        const bool raw = m == s.derived_m && l == s.derived_l;
        const bool specialised = equal_deltas(m) == equal_deltas(s.derived_m) && equal_deltas(l) == equal_deltas(s.derived_l);
        if (!raw && specialised) report.needs_equal_deltas.push_back(s.product + ":" + s.slot);
    }

    // Mirror of slot (Ei*Ej, El) is (E(3-j)*E(3-i), E(3-l)) with M and L
    // exchanged and delta_1, delta_2 swapped.
    auto mirror_atoms = [](const QSeries& x) {
        return x.substitute([](QAtom a) { return a == d1 ? d2 : (a == d2 ? d1 : a); });
    };
    auto find = [&report](const std::string& product, const std::string& slot) -> const ReconcileSlot& {
        for (const auto& s : report.slots) {
            if (s.product == product && s.slot == slot) return s;
        }
        throw ValidationError("missing slot " + product + ":" + slot);
    };
    for (const auto& s : report.slots) {
        if (s.slot == "sigma") continue;
        const int i = s.product[1] - '0';
        const int j = s.product[4] - '0';
        const int l = s.slot[1] - '0';
        const std::string mirror_product = "E" + std::to_string(3 - j) + "*E" + std::to_string(3 - i);
        const std::string mirror_slot = "E" + std::to_string(3 - l);
        const std::string here = s.product + ":" + s.slot;
        const std::string there = mirror_product + ":" + mirror_slot;
        if (there < here) continue;
        const auto& partner = find(mirror_product, mirror_slot);
        auto audit = [&](const std::string& component, const QSeries& mine, const QSeries& theirs) {
            const QSeries diff = mine - mirror_atoms(theirs);
            if (diff.is_zero()) return;
            report.display_symmetry_breaks.push_back({here, there, component, diff, equal_deltas(diff).is_zero()});
        };
        audit("M", s.printed_m, partner.printed_l);
        audit("L", s.printed_l, partner.printed_m);
    }
    return report;
}

}  // namespace crepant
