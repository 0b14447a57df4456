#include "qh/complexity.hpp"
#include "qh/rings.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace qh;

namespace {

ProjState st(const FrobeniusRing& r, const RingElement& x) { return ProjState(x.at_q(1)); }
ProjState lab(const FrobeniusRing& r, const std::string& l) { return ProjState(r.basis(r.index_of(l)).at_q(1)); }

}  // namespace

TEST_CASE("projective states")
{
    ProjState a(RatVector{0, 2, 4});
    CHECK(a.coords() == RatVector{0, 1, 2});
    CHECK(a == ProjState(RatVector{0, -1, -2}));
    CHECK_THROWS(ProjState(RatVector{0, 0}));
    CHECK(chordal(a, a) == doctest::Approx(0.0));
    CHECK(chordal(ProjState(RatVector{1, 0}), ProjState(RatVector{0, 1})) == doctest::Approx(1.0));
    // huge coordinates do not overflow the float conversion
    ProjState big(RatVector{1, Rational(Integer("1" + std::string(400, '0')))});
    CHECK(chordal(big, ProjState(RatVector{0, 1})) < 1e-300 + 1e-12);
}

TEST_CASE("projective plane orbit")
{
    FrobeniusRing p2 = projective_space(2);
    ProjState one = st(p2, p2.unit());
    Trajectory t = trajectory(p2, one, 6);
    REQUIRE(t.states.size() == 7);
    CHECK(t.states[0] == one);
    CHECK(t.states[1] == lab(p2, "H^2"));
    CHECK(t.states[2] == lab(p2, "H"));
    CHECK(t.states[3] == one);
    CHECK(t.states[6] == one);
    CHECK(t.cycle_start == 0);
    CHECK(t.cycle_length == 3);
    CHECK(*exact_complexity(p2, one, lab(p2, "H"), 30) == 2);
    CHECK(*exact_complexity(p2, one, one, 30) == 0);
    auto fs = finite_state_set(p2, one, 30);
    CHECK(fs.closed);
    CHECK(fs.states.size() == 3);
    CHECK(s_infinity(p2, one).size() == 0);
}

TEST_CASE("trajectories follow the power map")
{
    for (const char* id : {"quadric:5", "gr:2,5", "fci:2,3;r=3"}) {
        FrobeniusRing r = build_ring(id);
        RingElement d = handle_element(r);
        ProjState one = st(r, r.unit());
        Trajectory t = trajectory(r, one, 12);
        for (int k = 0; k <= 12; ++k) CHECK(t.states[k] == st(r, power(r, d, static_cast<unsigned>(k))));
        // starting from Delta^j shifts the sequence
        Trajectory s = trajectory(r, st(r, power(r, d, 3)), 9);
        for (int k = 0; k <= 9; ++k) CHECK(s.states[k] == t.states[k + 3]);
    }
}

TEST_CASE("quadric convergence")
{
    FrobeniusRing q4 = quadric(4);
    ProjState one = st(q4, q4.unit());
    ProjState x1 = st(q4, q4.unit() + q4.point());
    Trajectory t = trajectory(q4, one, 200);
    CHECK_FALSE(t.closed());
    CHECK_FALSE(exact_complexity(q4, one, x1, 200).has_value());
    auto k3 = approx_complexity(q4, one, x1, 1e-3, 200);
    auto k6 = approx_complexity(q4, one, x1, 1e-6, 200);
    REQUIRE(k3);
    REQUIRE(k6);
    CHECK(*k3 < *k6);
    CHECK(chordal(t.states.back(), x1) < 1e-12);
    // monotone in eps
    int prev = 0;
    for (double eps : {1e-1, 1e-2, 1e-4, 1e-8}) {
        auto k = approx_complexity(q4, one, x1, eps, 200);
        REQUIRE(k);
        CHECK(*k >= prev);
        prev = *k;
    }
    CHECK(*approx_complexity(q4, one, one, 1e-9, 10) == 0);
    CHECK_THROWS(approx_complexity(q4, one, x1, 0.0, 10));

    LimitReport l = s_infinity(q4, one);
    REQUIRE(l.exact_points.size() == 1);
    CHECK(l.exact_points[0] == x1);
    CHECK(l.method == "rational-spectrum exact");
}

TEST_CASE("finite orbits never approach other states")
{
    FrobeniusRing p2 = projective_space(2);
    ProjState one = st(p2, p2.unit());
    ProjState target = st(p2, p2.basis(1) + p2.basis(2));
    double dmin = 1;
    for (const auto& s : finite_state_set(p2, one, 30).states) dmin = std::min(dmin, chordal(s, target));
    CHECK(dmin > 0.5);
    CHECK_FALSE(approx_complexity(p2, one, target, dmin / 2, 300).has_value());
}

TEST_CASE("limit sets and finite states are disjoint")
{
    std::mt19937_64 rng(3);
    for (const char* id : {"quadric:3", "quadric:6", "gr:2,4", "fci:4;r=3"}) {
        FrobeniusRing r = build_ring(id);
        for (int t = 0; t < 5; ++t) {
            RatVector z(r.dim());
            for (auto& x : z) x = static_cast<long>(rng() % 11) - 5;
            if (is_zero(z)) z[0] = 1;
            ProjState s0(z);
            LimitReport l = s_infinity(r, s0);
            auto fs = finite_state_set(r, s0, 10 * static_cast<int>(r.dim()));
            for (const auto& p : l.exact_points)
                CHECK(std::find(fs.states.begin(), fs.states.end(), p) == fs.states.end());
        }
    }
}

TEST_CASE("theta-periodic bound on Grassmannians")
{
    std::mt19937_64 rng(11);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {2, 6}, {3, 6}}) {
        FrobeniusRing g = grassmannian(k, n);
        const int theta = theta_order(g).theta;
        for (int t = 0; t < 20; ++t) {
            RatVector z(g.dim());
            for (auto& x : z) x = frac(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 3));
            if (is_zero(z)) z[0] = 1;
            LimitReport l = s_infinity(g, ProjState(z));
            CHECK(static_cast<int>(l.size()) <= theta);
            if (l.method == "theta-periodic float") CHECK(l.witness_distance < 1e-6);
        }
    }
}

TEST_CASE("complete intersections have at most two limit points")
{
    std::mt19937_64 rng(5);
    for (const char* id : {"fci:4;r=3", "fci:2,3;r=3", "fci:5;r=4", "fci:3;r=3"}) {
        FrobeniusRing r = build_ring(id);
        for (int t = 0; t < 20; ++t) {
            RatVector z(r.dim());
            for (auto& x : z) x = frac(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 3));
            if (is_zero(z)) z[0] = 1;
            CHECK(s_infinity(r, ProjState(z)).size() <= 2);
        }
    }
    FrobeniusRing cubic = build_ring("fci:3;r=3");
    LimitReport l = s_infinity(cubic, ProjState(cubic.unit().at_q(1)));
    CHECK(l.size() == 0);
    CHECK(l.finite_orbit);
    CHECK(l.excluded.size() == 4);
}
