#pragma once

#include <string>
#include <vector>

#include "crepant/base_geometry.hpp"

namespace crepant {

struct OrbTag {
    static constexpr const char* generator = "e";
    static constexpr const char* ring_name = "orbifold";
};

struct ResTag {
    static constexpr const char* generator = "E";
    static constexpr const char* ring_name = "resolution";
};

/// Element y + sum_a alpha_a g_a of H*(Y) + (+)_a H^{*-2}(S).g_a, where g_a
/// is the twisted-sector generator e_a (orbifold ring) or the exceptional
/// class E_a (resolution ring). twisted[a - 1] holds alpha_a.
template <class Tag, class K>
struct RingElement {
    Total<K> y;
    std::vector<Graded<K>> twisted;

    static RingElement zero(const Geometry& g) {
        return RingElement{Total<K>::zero(g.size()),
                           std::vector<Graded<K>>(static_cast<std::size_t>(g.n()), Graded<K>(g.size()))};
    }

    int n() const noexcept { return static_cast<int>(twisted.size()); }
    std::size_t size() const noexcept { return y.size(); }

    bool is_zero() const {
        if (!y.is_zero()) return false;
        for (const auto& t : twisted) {
            if (!t.is_zero()) return false;
        }
        return true;
    }

    RingElement& operator+=(const RingElement& o) {
        check_shape(o);
        y += o.y;
        for (std::size_t a = 0; a < twisted.size(); ++a) twisted[a] += o.twisted[a];
        return *this;
    }
    RingElement& operator-=(const RingElement& o) {
        check_shape(o);
        y -= o.y;
        for (std::size_t a = 0; a < twisted.size(); ++a) twisted[a] -= o.twisted[a];
        return *this;
    }
    RingElement& operator*=(const K& c) {
        y *= c;
        for (auto& t : twisted) t *= c;
        return *this;
    }

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const K& c) { return a *= c; }
    friend RingElement operator*(const K& c, RingElement a) { return a *= c; }
    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.y == b.y && a.twisted == b.twisted;
    }

    template <class U>
    RingElement<Tag, U> lift() const {
        RingElement<Tag, U> r{y.template lift<U>(), {}};
        for (const auto& t : twisted) r.twisted.push_back(t.template lift<U>());
        return r;
    }

    void check_shape(const RingElement& o) const {
        if (o.twisted.size() != twisted.size() || o.size() != size()) {
            throw ValidationError("ring elements belong to different geometries");
        }
    }
};

using OrbClass = RingElement<OrbTag, Rational>;
using ResClass = RingElement<ResTag, Rational>;
using CycOrbClass = RingElement<OrbTag, CycNum>;
using CycResClass = RingElement<ResTag, CycNum>;

/// One vector of the monomial basis of the model: h^power placed in the
/// base part, the sigma part, or the twisted slot `index` (1-based).
struct BasisElement {
    enum class Slot { Base, Sigma, Twisted };
    Slot slot = Slot::Base;
    int power = 0;
    int index = 0;
    std::string label;
    int degree = 0;
};

/// Monomial basis of H*(Y) + twisted parts, ordered base, sigma, then
/// twisted slots 1..n. Labels look like "1", "h", "sigma", "h*sigma", "e1",
/// "h*E2".
template <class Tag>
std::vector<BasisElement> model_basis(const Geometry& g) {
    auto power_prefix = [](int p) -> std::string {
        if (p == 0) return "";
        if (p == 1) return "h*";
        return "h^" + std::to_string(p) + "*";
    };
    std::vector<BasisElement> out;
    const int top = g.base.dim();
    for (int p = 0; p <= top; ++p) {
        std::string label = p == 0 ? "1" : (p == 1 ? "h" : "h^" + std::to_string(p));
        out.push_back({BasisElement::Slot::Base, p, 0, label, 2 * p});
    }
    for (int p = 0; p <= top; ++p) {
        out.push_back({BasisElement::Slot::Sigma, p, 0, power_prefix(p) + "sigma", 2 * p + 4});
    }
    for (int a = 1; a <= g.n(); ++a) {
        for (int p = 0; p <= top; ++p) {
            out.push_back({BasisElement::Slot::Twisted, p, a,
                           power_prefix(p) + Tag::generator + std::to_string(a), 2 * p + 2});
        }
    }
    return out;
}

template <class Tag, class K>
RingElement<Tag, K> make_basis_element(const Geometry& g, const BasisElement& b) {
    auto x = RingElement<Tag, K>::zero(g);
    const auto p = static_cast<std::size_t>(b.power);
    switch (b.slot) {
        case BasisElement::Slot::Base: x.y.base[p] = K(1); break;
        case BasisElement::Slot::Sigma: x.y.sigma[p] = K(1); break;
        case BasisElement::Slot::Twisted: x.twisted[static_cast<std::size_t>(b.index - 1)][p] = K(1); break;
    }
    return x;
}

/// True when every nonzero component sits in cohomological degree `degree`
/// (twisted slots are shifted by 2).
template <class Tag, class K>
bool is_homogeneous_of(const RingElement<Tag, K>& x, int degree) {
    for (std::size_t j = 0; j < x.size(); ++j) {
        const int d = static_cast<int>(2 * j);
        if (!x.y.base[j].is_zero() && d != degree) return false;
        if (!x.y.sigma[j].is_zero() && d + 4 != degree) return false;
        for (const auto& t : x.twisted) {
            if (!t[j].is_zero() && d + 2 != degree) return false;
        }
    }
    return true;
}

}  // namespace crepant
