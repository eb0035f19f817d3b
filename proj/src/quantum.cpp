#include "crepant/quantum.hpp"

#include <cstdlib>
#include <sstream>

#include "crepant/cartan.hpp"
#include "crepant/errors.hpp"
#include "crepant/gromov_witten.hpp"

namespace crepant {

std::string QAtom::to_string() const { return "d(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

QSeries QSeries::atom(QAtom a, Rational coeff) {
    if (a.r < 1 || a.r > a.s) throw ValidationError("atom span must satisfy 1 <= r <= s");
    QSeries out;
    out.add_atom(a, coeff);
    return out;
}

Rational QSeries::coefficient(QAtom a) const {
    const auto it = atoms_.find(a);
    return it == atoms_.end() ? Rational(0) : it->second;
}

void QSeries::add_atom(QAtom a, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = atoms_.try_emplace(a, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) atoms_.erase(it);
}

QSeries& QSeries::operator+=(const QSeries& o) {
    constant_ += o.constant_;
    for (const auto& [a, c] : o.atoms_) add_atom(a, c);
    return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
    if (c.is_zero()) {
        *this = QSeries();
        return *this;
    }
    constant_ *= c;
    for (auto& [a, v] : atoms_) v *= c;
    return *this;
}

std::string QSeries::to_string() const {
    std::string out;
    auto append = [&out](const Rational& c, const std::string& unit) {
        const bool negative = c.sign() < 0;
        const Rational magnitude = negative ? -c : c;
        std::string term;
        if (unit.empty()) {
            term = magnitude.to_string();
        } else {
            term = magnitude == Rational(1) ? unit : magnitude.to_string() + "*" + unit;
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    };
    if (!constant_.is_zero()) append(constant_, "");
    for (const auto& [a, c] : atoms_) append(c, a.to_string());
    return out.empty() ? "0" : out;
}

std::string QPoint::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (k) out += ",";
        out += q[k].to_string();
    }
    return out;
}

QPoint parse_qpoint(const std::string& text, int n) {
    QPoint point;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) point.q.push_back(parse_cyc(token));
    if (point.n() != n) {
        throw ValidationError("q-spec '" + text + "' has " + std::to_string(point.n()) + " entries, expected " +
                              std::to_string(n));
    }
    return point;
}

std::optional<CycNum> atom_value(QAtom a, const QPoint& q) {
    if (a.r < 1 || a.s > q.n() || a.r > a.s) throw ValidationError("atom " + a.to_string() + " outside the q-point");
    CycNum product(1);
    for (int t = a.r; t <= a.s; ++t) product *= q.q[t - 1];
    const CycNum denominator = CycNum(1) - product;
    if (denominator.is_zero()) return std::nullopt;
    return product / denominator;
}

CycNum evaluate(const QSeries& series, const QPoint& q) {
    CycNum total(series.constant());
    for (const auto& [a, c] : series.atoms()) {
        const auto value = atom_value(a, q);
        if (!value) throw PoleError(a.r, a.s);
        total += *value * CycNum(c);
    }
    return total;
}

QSeries r_poly(int i, int j, int m, int n) {
    if (i < 1 || i > n || j < 1 || j > n || m < 1 || m > n) throw ValidationError("R index out of range");
    QSeries out;
    for (int r = 1; r <= n; ++r) {
        for (int s = r; s <= n; ++s) {
            const CurveClass beta = curve_class(n, r, s);
            const long c = intersection(i, beta) * intersection(j, beta) * intersection(m, beta);
            out += QSeries::atom({r, s}, Rational(c));
        }
    }
    return out;
}

QSeries qc_three_point(const Geometry& geometry, const ResClass& g1, const ResClass& g2, const ResClass& g3) {
    const int n = geometry.n();
    QSeries out;
    for (int r = 1; r <= n; ++r) {
        for (int s = r; s <= n; ++s) {
            out += QSeries::atom({r, s}, gw_invariant(geometry, curve_class(n, r, s), {g1, g2, g3}));
        }
    }
    return out;
}

std::vector<ClassForm> alpha_vectors(int i, int j, int n) {
    if (i < 1 || i > n || j < 1 || j > n) throw ValidationError("alpha index out of range");
    std::vector<ClassForm> out(static_cast<std::size_t>(n));
    auto put = [&out, n](int position, ClassForm form) {
        if (position >= 1 && position <= n) out[position - 1] = std::move(form);
    };
    if (i == j) {
        put(i - 1, {Rational(1), Rational(-(i - 1))});
        put(i, {Rational(0), Rational(-4)});
        put(i + 1, {Rational(-1), Rational(i + 1)});
    } else if (std::abs(i - j) == 1) {
        const int u = std::max(i, j);
        put(u - 1, {Rational(-1), Rational(u)});
        put(u, {Rational(1), Rational(-(u - 1))});
    }
    return out;
}

SymbolicCoefficient quantum_coefficient(int i, int j, int l, int n) {
    if (l < 1 || l > n) throw ValidationError("E index out of range");
    const auto alpha = alpha_vectors(i, j, n);
    SymbolicCoefficient out;
    for (int m = 1; m <= n; ++m) {
        const Rational w = cartan_inverse_entry(n, l, m);
        out.em += w * alpha[m - 1].em;
        out.kap += (r_poly(i, j, m, n) + QSeries(alpha[m - 1].kap)) * w;
    }
    return out;
}

namespace {

long cartan_entry(int i, int j) {
    if (i == j) return -2;
    if (std::abs(i - j) == 1) return 1;
    return 0;
}

}  // namespace

QuantumRing::QuantumRing(Geometry geometry, QPoint q) : geometry_(std::move(geometry)), q_(std::move(q)) {
    const int n = geometry_.n();
    if (q_.n() != n) throw ValidationError("q-point has " + std::to_string(q_.n()) + " entries, expected " + std::to_string(n));
    products_.assign(n, std::vector<Product>(n));
    const CycGradedClass em = geometry_.taut.em.lift<CycNum>();
    const CycGradedClass kap = geometry_.taut.kap.lift<CycNum>();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Product& p = products_[i - 1][j - 1];
            for (int m = 1; m <= n && !p.pole; ++m) {
                const QSeries r = r_poly(i, j, m, n);
                for (const auto& [a, c] : r.atoms()) {
                    if (!atom_value(a, q_)) {
                        p.pole = a;
                        break;
                    }
                }
            }
            if (p.pole) continue;
            for (int l = 1; l <= n; ++l) {
                const auto coeff = quantum_coefficient(i, j, l, n);
                p.coefficients.push_back(em * CycNum(coeff.em) + kap * evaluate(coeff.kap, q_));
            }
        }
    }
}

std::optional<QAtom> QuantumRing::pole(int i, int j) const {
    if (i < 1 || i > n() || j < 1 || j > n()) throw ValidationError("E index out of range");
    return products_[i - 1][j - 1].pole;
}

CycResClass QuantumRing::mul(const CycResClass& x, const CycResClass& y) const {
    const int n = this->n();
    if (x.n() != n || y.n() != n || x.size() != geometry_.size() || y.size() != geometry_.size()) {
        throw ValidationError("quantum product of elements from a different geometry");
    }
    auto r = CycResClass::zero(geometry_);
    r.y = y_mul(x.y, y.y);
    const CycGradedClass x_restricted = i_pull(x.y);
    const CycGradedClass y_restricted = i_pull(y.y);
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
            const Product& p = products_[i - 1][j - 1];
            if (p.pole) throw PoleError(p.pole->r, p.pole->s);
            const CycGradedClass prod = alpha * beta;
            if (const long c = cartan_entry(i, j); c != 0) r.y += i_push(prod) * CycNum(c);
            for (int l = 1; l <= n; ++l) r.twisted[l - 1] += prod * p.coefficients[l - 1];
        }
    }
    return r;
}

CycNum QuantumRing::pairing(const CycResClass& x, const CycResClass& y) const {
    return integrate_Y(geometry_.base, mul(x, y).y);
}

std::vector<QuantumTableEntry> quantum_table(const QuantumRing& ring) {
    std::vector<QuantumTableEntry> table;
    const auto basis = ring.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto x = make_basis_element<ResTag, CycNum>(ring.geometry(), basis[i]);
        for (std::size_t j = i; j < basis.size(); ++j) {
            const auto y = make_basis_element<ResTag, CycNum>(ring.geometry(), basis[j]);
            table.push_back({basis[i].label, basis[j].label, ring.mul(x, y)});
        }
    }
    return table;
}

}  // namespace crepant
