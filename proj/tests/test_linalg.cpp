#include "qh/complexity.hpp"
#include "qh/linalg.hpp"
#include "qh/matrix.hpp"
#include "qh/rings.hpp"
#include "qh/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qh;

TEST_CASE("matrix basics")
{
    RatMatrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    CHECK(determinant(m) == 18);
    CHECK(inverse(m) * m == RatMatrix::identity(3));
    CHECK(rank(RatMatrix{{1, 2}, {2, 4}}) == 1);
    CHECK_THROWS_AS(inverse(RatMatrix{{1, 2}, {2, 4}}), std::domain_error);
    auto ns = nullspace(RatMatrix{{1, 2}, {2, 4}});
    REQUIRE(ns.size() == 1);
    CHECK(is_zero(RatMatrix{{1, 2}, {2, 4}} * ns[0]));
    RatVector b{1, 2, 3};
    CHECK(m * solve(m, b) == b);
    CHECK(m.is_symmetric());
    CHECK(m.transpose() == m);
}

TEST_CASE("characteristic polynomial")
{
    // ascending coefficients, monic
    CHECK(char_poly(RatMatrix::identity(2)) == Poly{1, -2, 1});
    CHECK(char_poly(RatMatrix{{0, 1}, {0, 0}}) == Poly{0, 0, 1});
    CHECK(char_poly(RatMatrix{{2, 1}, {1, 2}}) == Poly{3, -4, 1});
}

TEST_CASE("Cayley-Hamilton on random matrices")
{
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 8; ++n) {
        RatMatrix m = random_rational_matrix(rng, n);
        CHECK(poly_eval(char_poly(m), m).is_zero());
    }
}

TEST_CASE("rational roots with multiplicity")
{
    // (x - 1/2)(x + 3)^2 (x^2 + 1) x
    Poly p{0, 1};
    p = poly_mul(p, Poly{frac(-1, 2), 1});
    p = poly_mul(p, Poly{3, 1});
    p = poly_mul(p, Poly{3, 1});
    p = poly_mul(p, Poly{1, 0, 1});
    auto roots = rational_roots(p);
    std::map<Rational, int> got(roots.begin(), roots.end());
    CHECK(got.size() == 3);
    CHECK(got[frac(1, 2)] == 1);
    CHECK(got[Rational(-3)] == 2);
    CHECK(got[Rational(0)] == 1);
}

TEST_CASE("eigenstructure")
{
    SUBCASE("diagonal")
    {
        auto es = rational_eigenstructure(RatMatrix::diagonal({2, 2, 3}));
        REQUIRE(es.split_over_rationals);
        REQUIRE(es.eigen.size() == 2);
        for (const auto& e : es.eigen) {
            if (e.value == 2) {
                CHECK(e.multiplicity == 2);
                CHECK(e.blocks == std::vector<int>{1, 1});
            } else {
                CHECK(e.value == 3);
                CHECK(e.multiplicity == 1);
            }
        }
    }
    SUBCASE("Jordan block")
    {
        auto es = rational_eigenstructure(RatMatrix{{5, 1}, {0, 5}});
        REQUIRE(es.eigen.size() == 1);
        CHECK(es.eigen[0].value == 5);
        CHECK(es.eigen[0].blocks == std::vector<int>{2});
    }
    SUBCASE("irrational spectrum")
    {
        auto es = rational_eigenstructure(RatMatrix{{0, 2}, {1, 0}});
        CHECK_FALSE(es.split_over_rationals);
        CHECK(es.eigen.empty());
    }
}

TEST_CASE("Sylvester certificate")
{
    auto id = is_positive_definite(RatMatrix::identity(3));
    CHECK(id.positive);
    CHECK(id.minors == std::vector<Rational>{1, 1, 1});
    auto bad = is_positive_definite(RatMatrix{{1, 2}, {2, 1}});
    CHECK_FALSE(bad.positive);
    CHECK(bad.minors.back() == -3);
    auto a0 = is_positive_definite(RatMatrix{{15, 9, 3}, {9, 27, 9}, {3, 9, 15}});
    CHECK(a0.positive);
    CHECK(a0.minors == std::vector<Rational>{15, 324, 3888});
    CHECK_THROWS(is_positive_definite(RatMatrix{{1, 2}, {0, 1}}));
}

TEST_CASE("Krylov rank")
{
    CHECK(krylov_rank(RatMatrix::identity(4), RatVector{1, 2, 3, 4}, 10) == 1);
    RatMatrix n(5, 5);
    for (int i = 0; i + 1 < 5; ++i) n(i, i + 1) = 1;
    CHECK(krylov_rank(n, RatVector{0, 0, 0, 0, 1}, 10) == 5);
    FrobeniusRing r = grassmannian(2, 5);
    CHECK(krylov_rank(mult_matrix(r, handle_element(r)), r.unit().at_q(1), 100) == 10);
    CHECK_THROWS(krylov_rank(n, RatVector(5), 10));
}

TEST_CASE("float symmetric eigenvalues")
{
    auto e = sym_float_eigs(RatMatrix{{2, 1}, {1, 2}});
    REQUIRE(e.size() == 2);
    CHECK(e[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(e[1] == doctest::Approx(1.0).epsilon(1e-12));
    auto d = sym_float_eigs(RatMatrix::diagonal({1, 4, -2}));
    CHECK(d == std::vector<double>{4, 1, -2});
    auto a0 = sym_float_eigs(RatMatrix{{15, 9, 3}, {9, 27, 9}, {3, 9, 15}});
    REQUIRE(a0.size() == 3);
    for (double x : a0) CHECK(x > 0);
    // product of eigenvalues against the exact determinant
    CHECK(a0[0] * a0[1] * a0[2] == doctest::Approx(3888.0).epsilon(1e-9));
}

TEST_CASE("limit points of explicit matrices")
{
    SUBCASE("single dominant eigenvalue")
    {
        auto l = limit_points_real(RatMatrix::diagonal({2, 1}), RatVector{1, 1});
        REQUIRE(l.exact_points.size() == 1);
        CHECK(l.exact_points[0] == ProjState(RatVector{1, 0}));
        CHECK(*l.lambda_exact == 2);
        CHECK(l.depth == 1);
    }
    SUBCASE("plus and minus lambda")
    {
        auto l = limit_points_real(RatMatrix::diagonal({2, -2}), RatVector{1, 1});
        REQUIRE(l.exact_points.size() == 2);
        CHECK(l.exact_points[0] == ProjState(RatVector{1, 1}));
        CHECK(l.exact_points[1] == ProjState(RatVector{1, -1}));
        CHECK(l.finite_orbit);
    }
    SUBCASE("Jordan-dominant limit converges like 1/k")
    {
        RatMatrix j{{3, 1}, {0, 3}};
        auto l = limit_points_real(j, RatVector{0, 1});
        REQUIRE(l.exact_points.size() == 1);
        CHECK(l.exact_points[0] == ProjState(RatVector{1, 0}));
        CHECK(l.depth == 2);
        // [J^k z] = [(k/3, 1)]: distance to the limit decreases but only polynomially
        double prev = 1;
        RatVector v{0, 1};
        for (int k = 1; k <= 200; ++k) {
            v = j * v;
            if (k % 50 == 0) {
                double d = chordal(ProjState(v), l.exact_points[0]);
                CHECK(d < prev);
                CHECK(d == doctest::Approx(3.0 / k).epsilon(0.01));
                prev = d;
            }
        }
        CHECK(prev > 1e-6);
    }
    SUBCASE("nilpotent vector")
    {
        auto l = limit_points_real(RatMatrix{{0, 1}, {0, 0}}, RatVector{0, 1});
        CHECK(l.finite_orbit);
        CHECK(l.size() == 0);
    }
    CHECK_THROWS(limit_points_real(RatMatrix::identity(2), RatVector{0, 0}));
    CHECK_THROWS_AS(limit_points_real(RatMatrix{{0, 2}, {1, 0}}, RatVector{1, 0}), std::domain_error);
}
