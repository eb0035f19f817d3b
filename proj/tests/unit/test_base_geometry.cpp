#include <vector>

#include "crepant/base_geometry.hpp"
#include "crepant/linalg.hpp"
#include "doctest.h"

using namespace crepant;

namespace {

// Monomial basis of the square-zero model H*(S) + H*(S) sigma.
std::vector<TotalClass> y_basis(const BaseRing& s) {
    std::vector<TotalClass> out;
    for (std::size_t p = 0; p < s.size(); ++p) {
        auto t = TotalClass::zero(s.size());
        t.base[p] = Rational(1);
        out.push_back(t);
    }
    for (std::size_t p = 0; p < s.size(); ++p) {
        auto t = TotalClass::zero(s.size());
        t.sigma[p] = Rational(1);
        out.push_back(t);
    }
    return out;
}

std::vector<BaseRing> small_bases() {
    return {BaseRing::point(), BaseRing::projective_space(1), BaseRing::projective_space(2)};
}

}  // namespace

TEST_SUITE("base ring") {
    TEST_CASE("projective space truncation and integral") {
        const auto p2 = BaseRing::projective_space(2);
        const auto h = GradedClass::monomial(p2.size(), 1);
        CHECK((h * h * h).is_zero());
        CHECK(integrate_S(p2, h * h) == Rational(1));
        CHECK(integrate_S(p2, h) == Rational(0));
        CHECK(GradedClass::monomial(p2.size(), 5).is_zero());
        CHECK(p2.model_dependent());
        CHECK_FALSE(BaseRing::projective_space(1).model_dependent());
        CHECK_THROWS_AS(BaseRing::projective_space(-1), ValidationError);
    }

    TEST_CASE("grading is additive") {
        const auto p3 = BaseRing::projective_space(3);
        for (std::size_t a = 0; a < p3.size(); ++a) {
            for (std::size_t b = 0; b < p3.size(); ++b) {
                const auto x = GradedClass::monomial(p3.size(), a) * GradedClass::monomial(p3.size(), b);
                if (a + b < p3.size()) CHECK(x == GradedClass::monomial(p3.size(), a + b));
                else CHECK(x.is_zero());
            }
        }
    }

    TEST_CASE("weighted top integral") {
        const auto s = BaseRing::projective_space(1).with_top_integral(Rational(0));
        CHECK(integrate_S(s, GradedClass::monomial(s.size(), 1)) == Rational(0));
    }

    TEST_CASE("classes from a different base are rejected") {
        const auto p1 = BaseRing::projective_space(1);
        CHECK_THROWS_AS(integrate_S(p1, GradedClass::monomial(3, 2)), ValidationError);
        CHECK_THROWS_AS(GradedClass(2) + GradedClass(3), ValidationError);
    }
}

TEST_SUITE("Y model") {
    TEST_CASE("y_mul is associative, commutative and unital on the basis") {
        for (const auto& s : small_bases()) {
            const auto basis = y_basis(s);
            auto one = TotalClass::zero(s.size());
            one.base[0] = Rational(1);
            for (const auto& x : basis) {
                CHECK(y_mul(one, x) == x);
                CHECK(y_mul(x, one) == x);
                for (const auto& y : basis) {
                    CHECK(y_mul(x, y) == y_mul(y, x));
                    for (const auto& z : basis) CHECK(y_mul(y_mul(x, y), z) == y_mul(x, y_mul(y, z)));
                }
            }
        }
    }

    TEST_CASE("sigma squares to zero and restricts to zero") {
        const auto s = BaseRing::projective_space(1);
        const auto sigma = i_push(GradedClass::monomial(s.size(), 0));
        CHECK(y_mul(sigma, sigma).is_zero());
        CHECK(i_pull(sigma).is_zero());
    }

    TEST_CASE("projection formula") {
        for (const auto& s : small_bases()) {
            for (std::size_t p = 0; p < s.size(); ++p) {
                const auto alpha = GradedClass::monomial(s.size(), p);
                for (const auto& delta : y_basis(s)) {
                    CHECK(i_push(alpha * i_pull(delta)) == y_mul(i_push(alpha), delta));
                }
            }
        }
    }

    TEST_CASE("Y pairing is nondegenerate") {
        for (const auto& s : small_bases()) {
            const auto basis = y_basis(s);
            RatMatrix gram(basis.size(), basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i) {
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    gram(i, j) = integrate_Y(s, y_mul(basis[i], basis[j]));
                }
            }
            CHECK_FALSE(determinant(gram).is_zero());
        }
    }
}

TEST_SUITE("tautological classes") {
    TEST_CASE("relation l + m = (n+1) k") {
        const auto p1 = BaseRing::projective_space(1);
        CHECK_NOTHROW(Geometry::make(2, p1, 1, 2, 1));
        CHECK_NOTHROW(Geometry::make(3, p1, Rational(1, 2), Rational(3, 2), Rational(1, 2)));
        CHECK_THROWS_AS(Geometry::make(2, p1, 1, 1, 1), ValidationError);
        CHECK_THROWS_AS(Geometry::make(0, p1, 0, 0, 0), ValidationError);
    }

    TEST_CASE("n = 1 keeps only kap") {
        const auto g = Geometry::make(1, BaseRing::projective_space(1), 5, 7, 1);
        CHECK(g.taut.ell.is_zero());
        CHECK(g.taut.em.is_zero());
        CHECK(g.taut.kap == g.h_multiple(Rational(1)));
    }

    TEST_CASE("classes are degree two multiples of h") {
        const auto g = Geometry::make(2, BaseRing::projective_space(1), 1, 2, 1);
        CHECK(g.taut.em == GradedClass::monomial(2, 1, Rational(2)));
        CHECK(g.taut.ell + g.taut.em == g.taut.kap * Rational(3));
        const auto pt = Geometry::make(2, BaseRing::point(), 1, 2, 1);
        CHECK(pt.taut.kap.is_zero());
    }
}
