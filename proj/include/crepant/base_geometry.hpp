#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crepant/cyclotomic.hpp"
#include "crepant/errors.hpp"
#include "crepant/rational.hpp"

namespace crepant {

/// Finite model of H*(S): either a point or P^k, with basis 1, h, ..., h^k
/// and h^(k+1) = 0. Integration picks the coefficient of h^k (times a
/// weight that is 1 for every standard model).
class BaseRing {
public:
    static BaseRing point() { return BaseRing(0); }
    static BaseRing projective_space(int k);

    /// Same ring with integral of h^k set to `weight`.
    BaseRing with_top_integral(Rational weight) const {
        BaseRing r = *this;
        r.top_integral_ = std::move(weight);
        return r;
    }

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(dim_) + 1; }
    const Rational& top_integral() const noexcept { return top_integral_; }

    /// The square-zero model of H*(Y) is only exact when dim_C S <= 1.
    bool model_dependent() const noexcept { return dim_ >= 2; }

    std::string model_name() const { return dim_ == 0 ? "point" : "projective_space"; }

    friend bool operator==(const BaseRing&, const BaseRing&) = default;

private:
    explicit BaseRing(int dim) : dim_(dim) {}

    int dim_ = 0;
    Rational top_integral_{1};
};

/// Element of H*(S) with coefficients in K (Rational or CycNum). Index j is
/// the coefficient of h^j, which has cohomological degree 2j.
template <class K>
class Graded {
public:
    Graded() = default;
    explicit Graded(std::size_t size) : coeffs_(size, K(0)) {}

    static Graded monomial(std::size_t size, std::size_t power, K coeff = K(1)) {
        Graded g(size);
        if (power < size) g.coeffs_[power] = std::move(coeff);
        return g;
    }

    std::size_t size() const noexcept { return coeffs_.size(); }
    const K& operator[](std::size_t j) const { return coeffs_[j]; }
    K& operator[](std::size_t j) { return coeffs_[j]; }
    const std::vector<K>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_) {
            if (!c.is_zero()) return false;
        }
        return true;
    }

    Graded& operator+=(const Graded& o) {
        check_same(o);
        for (std::size_t j = 0; j < size(); ++j) coeffs_[j] += o.coeffs_[j];
        return *this;
    }
    Graded& operator-=(const Graded& o) {
        check_same(o);
        for (std::size_t j = 0; j < size(); ++j) coeffs_[j] -= o.coeffs_[j];
        return *this;
    }
    Graded& operator*=(const K& c) {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    friend Graded operator+(Graded a, const Graded& b) { return a += b; }
    friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
    friend Graded operator-(Graded a) { return a *= K(-1); }
    friend Graded operator*(Graded a, const K& c) { return a *= c; }
    friend Graded operator*(const K& c, Graded a) { return a *= c; }

    /// Cup product in H*(S), truncated above the top degree.
    friend Graded operator*(const Graded& a, const Graded& b) {
        a.check_same(b);
        Graded r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < a.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    friend bool operator==(const Graded& a, const Graded& b) { return a.coeffs_ == b.coeffs_; }

    template <class U>
    Graded<U> lift() const {
        Graded<U> g(size());
        for (std::size_t j = 0; j < size(); ++j) g[j] = U(coeffs_[j]);
        return g;
    }

private:
    void check_same(const Graded& o) const {
        if (o.size() != size()) throw ValidationError("graded classes over different base rings");
    }

    std::vector<K> coeffs_;
};

using GradedClass = Graded<Rational>;
using CycGradedClass = Graded<CycNum>;

/// Element of the square-zero model H*(S) + H*(S).sigma of H*(Y), where
/// sigma = i_*(1) has degree 4, sigma^2 = 0 and i^* sigma = 0.
template <class K>
struct Total {
    Graded<K> base;
    Graded<K> sigma;

    static Total zero(std::size_t size) { return Total{Graded<K>(size), Graded<K>(size)}; }

    std::size_t size() const noexcept { return base.size(); }
    bool is_zero() const { return base.is_zero() && sigma.is_zero(); }

    Total& operator+=(const Total& o) {
        base += o.base;
        sigma += o.sigma;
        return *this;
    }
    Total& operator-=(const Total& o) {
        base -= o.base;
        sigma -= o.sigma;
        return *this;
    }
    Total& operator*=(const K& c) {
        base *= c;
        sigma *= c;
        return *this;
    }
    friend Total operator+(Total a, const Total& b) { return a += b; }
    friend Total operator-(Total a, const Total& b) { return a -= b; }
    friend Total operator*(Total a, const K& c) { return a *= c; }
    friend bool operator==(const Total& a, const Total& b) {
        return a.base == b.base && a.sigma == b.sigma;
    }

    template <class U>
    Total<U> lift() const {
        return Total<U>{base.template lift<U>(), sigma.template lift<U>()};
    }
};

using TotalClass = Total<Rational>;

/// (a, b) . (a', b') = (a a', a b' + a' b).
template <class K>
Total<K> y_mul(const Total<K>& x, const Total<K>& y) {
    return Total<K>{x.base * y.base, x.base * y.sigma + y.base * x.sigma};
}

template <class K>
Total<K> i_push(const Graded<K>& alpha) {
    return Total<K>{Graded<K>(alpha.size()), alpha};
}

template <class K>
Graded<K> i_pull(const Total<K>& delta) {
    return delta.base;
}

template <class K>
K integrate_S(const BaseRing& ring, const Graded<K>& alpha) {
    if (alpha.size() != ring.size()) throw ValidationError("class does not belong to this base ring");
    return alpha[ring.size() - 1] * K(ring.top_integral());
}

template <class K>
K integrate_Y(const BaseRing& ring, const Total<K>& delta) {
    return integrate_S(ring, delta.sigma);
}

/// First Chern classes of the line bundles L, M, K on S, each a rational
/// multiple of h. For n >= 2 they satisfy ell + em = (n + 1) kap; for n = 1
/// only kap (the class of R^1 pi_* N_{E/Z}) is meaningful and ell = em = 0.
struct TautClasses {
    int n = 1;
    Rational ell_multiple;
    Rational em_multiple;
    Rational kap_multiple;
    GradedClass ell;
    GradedClass em;
    GradedClass kap;

    static TautClasses make(const BaseRing& ring, int n, Rational ell_multiple, Rational em_multiple,
                            Rational kap_multiple);
};

/// A transversal A_n geometry with trivial monodromy: the base model of S
/// together with its tautological classes.
struct Geometry {
    BaseRing base;
    TautClasses taut;

    static Geometry make(int n, const BaseRing& base, Rational ell_multiple, Rational em_multiple,
                         Rational kap_multiple);

    int n() const noexcept { return taut.n; }
    std::size_t size() const noexcept { return base.size(); }
    bool model_dependent() const noexcept { return base.model_dependent(); }

    /// Degree-2 class c * h (zero on a point).
    GradedClass h_multiple(const Rational& c) const;

    friend bool operator==(const Geometry& a, const Geometry& b) {
        return a.base == b.base && a.taut.n == b.taut.n && a.taut.ell == b.taut.ell &&
               a.taut.em == b.taut.em && a.taut.kap == b.taut.kap;
    }
};

}  // namespace crepant
