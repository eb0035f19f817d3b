#include "crepant/cartan.hpp"
#include "crepant/linalg.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace crepant;

TEST_SUITE("cartan") {
    TEST_CASE("matrix shape") {
        const auto c = cartan_matrix(4);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                const long expected = i == j ? -2 : (i + 1 == j || j + 1 == i ? 1 : 0);
                CHECK(c(i, j) == expected);
                CHECK(c(i, j) == c(j, i));
            }
        }
        CHECK_THROWS_AS(cartan_matrix(0), ValidationError);
    }

    TEST_CASE("closed-form inverse equals elimination, n <= 12") {
        for (int n = 1; n <= 12; ++n) {
            const auto closed = cartan_inverse(n);
            const auto reference = oracle::cartan_inverse(n);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) CHECK(closed(i, j) == reference[i][j]);
            }
            CHECK(cartan_matrix(n).cast<Rational>() * closed == RatMatrix::identity(n));
            CHECK(closed * cartan_matrix(n).cast<Rational>() == RatMatrix::identity(n));
        }
    }

    TEST_CASE("determinant is +-(n+1)") {
        for (int n = 1; n <= 10; ++n) {
            const Rational det = determinant(cartan_matrix(n).cast<Rational>());
            CHECK(det == Rational(n % 2 == 0 ? n + 1 : -(n + 1)));
        }
    }

    TEST_CASE("boundary entries vanish") {
        for (int n = 1; n <= 6; ++n) {
            for (int l = 0; l <= n + 1; ++l) {
                CHECK(cartan_inverse_entry(n, 0, l).is_zero());
                CHECK(cartan_inverse_entry(n, n + 1, l).is_zero());
                CHECK(cartan_inverse_entry(n, l, 0).is_zero());
            }
        }
        CHECK(cartan_inverse_entry(2, 1, 1) == Rational(-2, 3));
    }

    TEST_CASE("intersection numbers, exhaustive n <= 8") {
        for (int n = 1; n <= 8; ++n) {
            for (int i = 1; i <= n; ++i) {
                for (int j = i; j <= n; ++j) {
                    const auto beta = curve_class(n, i, j);
                    for (int l = 1; l <= n; ++l) {
                        long expected = 0;
                        if (i == j && l == i) expected = -2;
                        else if (i != j && (l == i || l == j)) expected = -1;
                        else if (l == i - 1 || l == j + 1) expected = 1;
                        CHECK(intersection(l, beta) == expected);
                        CHECK(intersection(l, beta) == oracle::intersection(l, i, j));
                    }
                }
            }
        }
    }

    TEST_CASE("curve classes") {
        const auto beta = curve_class(4, 2, 3);
        CHECK(beta.multiplicities == std::vector<int>{0, 1, 1, 0});
        const auto span = beta.as_span_multiple();
        REQUIRE(span.has_value());
        CHECK(span->i == 2);
        CHECK(span->j == 3);
        CHECK(span->multiple == 1);

        const auto two = parse_curve_class(3, "2*b(1,3)");
        CHECK(two.multiplicities == std::vector<int>{2, 2, 2});
        CHECK(two.as_span_multiple()->multiple == 2);
        CHECK(parse_curve_class(3, "b(2)") == curve_class(3, 2, 2));
        CHECK(parse_curve_class(3, "1,0,1").as_span_multiple() == std::nullopt);
        CHECK(parse_curve_class(3, "1,2,1").as_span_multiple() == std::nullopt);
        CHECK(parse_curve_class(3, "0,0,0").is_zero());
        CHECK(parse_curve_class(3, two.to_string()) == two);
        CHECK_THROWS_AS(parse_curve_class(3, "b(1,4)"), ValidationError);
        CHECK_THROWS_AS(parse_curve_class(3, "b(3,1)"), ValidationError);
        CHECK_THROWS_AS(curve_class(3, 0, 1), ValidationError);
    }
}
