#include <vector>

#include "crepant/cartan.hpp"
#include "crepant/linalg.hpp"
#include "crepant/quantum.hpp"
#include "crepant/resolution.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace crepant;

namespace {

std::vector<Geometry> geometries(int max_n) {
    std::vector<Geometry> out;
    for (int n = 1; n <= max_n; ++n) {
        out.push_back(Geometry::make(n, BaseRing::point(), 0, 0, 0));
        out.push_back(Geometry::make(n, BaseRing::projective_space(1), 1, n, 1));
        out.push_back(Geometry::make(n, BaseRing::projective_space(1), 3, 2 * n - 1, 2));
    }
    return out;
}

std::vector<ResClass> basis_of(const ResolutionRing& ring) {
    std::vector<ResClass> out;
    for (const auto& b : ring.basis()) out.push_back(make_basis_element<ResTag, Rational>(ring.geometry(), b));
    return out;
}

// Mirror geometry: ell and em exchanged.
Geometry mirror(const Geometry& g) {
    return Geometry::make(g.n(), g.base, g.taut.em_multiple, g.taut.ell_multiple, g.taut.kap_multiple);
}

// E_l <-> E_{n+1-l} on a class.
ResClass flip(const ResClass& x) {
    ResClass y = x;
    const int n = x.n();
    for (int l = 0; l < n; ++l) y.twisted[l] = x.twisted[n - 1 - l];
    return y;
}

}  // namespace

TEST_SUITE("resolution ring, printed formulas") {
    TEST_CASE("A_1: E.E = -2 [S] + 2 kap E") {
        const auto g = Geometry::make(1, BaseRing::projective_space(1), 0, 0, 3);
        const ResolutionRing ring(g);
        const auto one = GradedClass::monomial(2, 0);
        const auto e = ring.exc_push(1, one);
        const auto expected = ring.rho_pull(i_push(one) * Rational(-2)) + ring.exc_push(1, g.taut.kap * Rational(2));
        CHECK(ring.mul(e, e) == expected);
        // general elements: (d1 + a1 E)(d2 + a2 E)
        const auto h = GradedClass::monomial(2, 1);
        const ResClass x = ring.rho_pull({one, h}) + ring.exc_push(1, one + h);
        const ResClass y = ring.rho_pull({h, one}) + ring.exc_push(1, h);
        auto want = ResClass::zero(g);
        const auto a12 = x.twisted[0] * y.twisted[0];
        want.y = y_mul(x.y, y.y) + i_push(a12) * Rational(-2);
        want.twisted[0] = i_pull(x.y) * y.twisted[0] + x.twisted[0] * i_pull(y.y) + g.taut.kap * a12 * Rational(2);
        CHECK(ring.mul(x, y) == want);
    }

    TEST_CASE("A_n exceptional products against the three-case rule, n <= 6") {
        for (int n = 2; n <= 6; ++n) {
            const auto g = Geometry::make(n, BaseRing::projective_space(1), 3, 2 * n - 1, 2);
            const ResolutionRing ring(g);
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j) {
                    const auto p = ring.exceptional_product(i, j);
                    const long cij = i == j ? -2 : (std::abs(i - j) == 1 ? 1 : 0);
                    CHECK(p.y.sigma == GradedClass::monomial(2, 0, Rational(cij)));
                    CHECK(p.y.base.is_zero());
                    for (int l = 1; l <= n; ++l) {
                        const auto [m, k] = oracle::exceptional_coefficient(i, j, l, n);
                        CHECK(p.twisted[l - 1] == g.taut.em * m + g.taut.kap * k);
                        CHECK(ring.exceptional_coefficient(i, j, l) == p.twisted[l - 1]);
                    }
                }
            }
        }
    }

    TEST_CASE("index checks") {
        const ResolutionRing ring(Geometry::make(2, BaseRing::projective_space(1), 1, 2, 1));
        CHECK_THROWS_AS(ring.exc_push(0, GradedClass::monomial(2, 0)), ValidationError);
        CHECK_THROWS_AS(ring.exc_push(3, GradedClass::monomial(2, 0)), ValidationError);
    }
}

TEST_SUITE("resolution ring properties") {
    TEST_CASE("associative, commutative, unital and graded, n <= 4") {
        for (const auto& g : geometries(4)) {
            const ResolutionRing ring(g);
            const auto labels = ring.basis();
            const auto basis = basis_of(ring);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                CHECK(ring.mul(ring.unit(), basis[i]) == basis[i]);
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    const auto xy = ring.mul(basis[i], basis[j]);
                    CHECK(xy == ring.mul(basis[j], basis[i]));
                    CHECK(is_homogeneous_of(xy, labels[i].degree + labels[j].degree));
                    for (const auto& z : basis) CHECK(ring.mul(xy, z) == ring.mul(basis[i], ring.mul(basis[j], z)));
                }
            }
        }
    }

    TEST_CASE("E_l <-> E_{n+1-l} with ell <-> em is an automorphism, n <= 4") {
        for (const auto& g : geometries(4)) {
            const ResolutionRing ring(g);
            const ResolutionRing mirrored(mirror(g));
            const auto basis = basis_of(ring);
            for (const auto& x : basis) {
                for (const auto& y : basis) CHECK(flip(ring.mul(x, y)) == mirrored.mul(flip(x), flip(y)));
            }
        }
    }

    TEST_CASE("pairing: Y block hyperbolic, exceptional block c_n") {
        for (const auto& g : geometries(4)) {
            const ResolutionRing ring(g);
            const auto basis = basis_of(ring);
            RatMatrix gram(basis.size(), basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i) {
                for (std::size_t j = 0; j < basis.size(); ++j) gram(i, j) = ring.pairing(basis[i], basis[j]);
            }
            CHECK_FALSE(determinant(gram).is_zero());
            const auto one = GradedClass::monomial(g.size(), 0);
            const auto top = GradedClass::monomial(g.size(), g.size() - 1);
            for (int i = 1; i <= g.n(); ++i) {
                for (int j = 1; j <= g.n(); ++j) {
                    const long cij = i == j ? -2 : (std::abs(i - j) == 1 ? 1 : 0);
                    CHECK(ring.pairing(ring.exc_push(i, one), ring.exc_push(j, top)) == Rational(cij));
                }
            }
        }
    }

    TEST_CASE("twisted part of E_i E_j equals the alpha contraction, n <= 4") {
        for (int n = 1; n <= 4; ++n) {
            const auto g = Geometry::make(n, BaseRing::projective_space(1), 1, n, 1);
            const ResolutionRing ring(g);
            const auto inv = oracle::cartan_inverse(n);
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j) {
                    const auto alpha = alpha_vectors(i, j, n);
                    for (int l = 1; l <= n; ++l) {
                        GradedClass contraction(g.size());
                        for (int m = 1; m <= n; ++m) {
                            contraction += alpha[m - 1].evaluate(g.taut) * oracle::cinv(inv, l, m);
                        }
                        CHECK(ring.exceptional_product(i, j).twisted[l - 1] == contraction);
                    }
                }
            }
        }
    }

    TEST_CASE("table covers every unordered basis pair") {
        const ResolutionRing ring(Geometry::make(2, BaseRing::projective_space(1), 1, 2, 1));
        const auto size = ring.basis().size();
        CHECK(resolution_table(ring).entries.size() == size * (size + 1) / 2);
    }
}
