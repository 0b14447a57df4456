#include "qh/fci_analysis.hpp"
#include "qh/rings.hpp"

#include <doctest.h>

using namespace qh;

TEST_CASE("ring identifiers")
{
    auto s = parse_ring_spec("fci:2,3;r=3");
    CHECK(s.kind == "fci");
    CHECK(s.args == std::vector<int>{2, 3});
    CHECK(s.r == 3);
    CHECK(parse_ring_spec("gr:2,5").args == std::vector<int>{2, 5});
    CHECK_THROWS(parse_ring_spec("gr:2"));
    CHECK_THROWS(parse_ring_spec("torus:3"));
    CHECK(build_ring("gr:1,4").dim() == 4);  // P^3
    CHECK_THROWS(build_ring("quadric:2"));
}

TEST_CASE("quadric relations")
{
    for (int r = 3; r <= 8; ++r) {
        FrobeniusRing x = quadric(r);
        CHECK(x.dim() == static_cast<std::size_t>(r % 2 ? r + 1 : r + 2));
        CHECK(x.tau == r);
        RingElement h = x.basis(x.index_of("s1"));
        // H^{*r} = 2 sigma_r + 2q
        CHECK(power(x, h, static_cast<unsigned>(r)) ==
              x.point() * QLaurent(2) + x.unit() * QLaurent(Rational(2), 1));
    }
    FrobeniusRing q6 = quadric(6);
    RingElement p = q6.basis(q6.index_of("s3+")), m = q6.basis(q6.index_of("s3-"));
    CHECK(product(q6, p, m) == q6.point());
    CHECK(product(q6, p, p) == q6.unit() * QLaurent(Rational(1), 1));
    CHECK(product(q6, q6.point(), p) == m * QLaurent(Rational(1), 1));
}

TEST_CASE("rim-hook reduction")
{
    auto a = reduce_sigma_hat(2, 5, {5, 3});
    CHECK(a.sign == 1);
    CHECK(a.q_exp == 1);
    CHECK(a.lambda == Partition{2, 1});
    auto b = reduce_sigma_hat(2, 6, {8, 0});
    CHECK(b.sign == -1);
    CHECK(b.q_exp == 1);
    CHECK(b.lambda == Partition{2});
    for (const auto& l : partitions_in_box(3, 7)) {
        auto s = reduce_sigma_hat(3, 7, l.parts());
        CHECK(s.sign == 1);
        CHECK(s.q_exp == 0);
        CHECK(s.lambda == l);
    }
    // rim-hook check: a 5-hook off (4,4) leaves (3), spanning 2 rows
    auto c = reduce_sigma_hat(2, 5, {4, 4});
    CHECK(c.sign == 1);
    CHECK(c.q_exp == 1);
    CHECK(c.lambda == Partition{3});
    CHECK(reduce_sigma_hat(2, 5, {4, 0}).sign == 0);  // (-1,0) collides
    CHECK(reduce_sigma_hat(2, 5, {1, 1, 1}).sign == 0);
}

TEST_CASE("phi for two rows")
{
    for (int n = 4; n <= 8; ++n)
        for (int s = 1; s <= (n - 2) / 2; ++s) {
            Partition nu{n - 3 - s, s - 1};
            CHECK(phi_map(2, n, nu, {1}) == Partition{2 * n - 3 - s, s - 1});
            CHECK(phi_map(2, n, nu, {2}) == Partition{n + s - 2, n - s - 2});
        }
    CHECK_THROWS(phi_map(2, 6, Partition{1}, {1}));
}

TEST_CASE("Grassmannian handle element in closed form")
{
    FrobeniusRing g = grassmannian(2, 6);
    const QLaurent q(Rational(1), 1);
    RingElement want = g.basis(g.index_of("[4,4]"), QLaurent(15)) + g.basis(g.index_of("[2]"), q * QLaurent(9)) +
                       g.basis(g.index_of("[1,1]"), q * QLaurent(3));
    CHECK(delta_closed_form(2, 6) == want);
    CHECK(delta_gr2_corollary(6) == want);
    CHECK(handle_element(g) == want);
    CHECK(delta_closed_form(2, 5) == handle_element(grassmannian(2, 5)));
}

TEST_CASE("point class shifts degree by dim modulo n")
{
    for (int n = 5; n <= 8; ++n) {
        FrobeniusRing g = grassmannian(2, n);
        RingElement pt = g.point();
        for (std::size_t i = 0; i < g.dim(); ++i) {
            RingElement x = product(g, pt, g.basis(i));
            for (auto j : x.support()) CHECK(((g.degrees[j] - g.degrees[i]) % n + n) % n == (2 * (n - 2)) % n);
        }
    }
}

TEST_CASE("Euler characteristic oracle")
{
    CHECK(fci_euler({2}, 3) == 4);
    CHECK(fci_euler({3}, 3) == -6);
    CHECK(fci_euler({2, 2}, 3) == 0);
    CHECK(fci_euler({2, 3}, 3) == -36);
    CHECK(fci_euler({4}, 3) == -56);
    CHECK(fci_euler({5}, 4) == 825);
    // a hypersurface of degree 1 is P^r
    for (int r = 1; r <= 6; ++r) CHECK(fci_euler({1}, r) == r + 1);
}

TEST_CASE("Fano complete intersection models")
{
    FciModel c = fci_model({3}, 3);
    CHECK(c.tau == 2);
    CHECK(c.kappa == 1);
    CHECK_FALSE(c.hat_basis);
    CHECK(c.primitive_dim == 10);

    FciModel h = fci_model({2, 3}, 3);
    CHECK(h.hat_basis);
    CHECK(h.tau == 1);
    CHECK(h.zeta == 640);
    CHECK(h.omega != 0);

    FciModel w = fci_model({2, 3}, 3, Integer(-77));
    CHECK(w.omega == 0);
    CHECK(w.chi_override);

    CHECK_THROWS(fci_model({7}, 3));  // not Fano
    CHECK_THROWS(fci_model({1, 3}, 3));
    CHECK_THROWS(fci_model({3}, 2));

    FrobeniusRing r = fano_ci(c);
    CHECK(r.dim() == 4);
    REQUIRE(r.installed_handle);
    CHECK(handle_report(r).installed);
}

TEST_CASE("FCI closed forms agree with computation")
{
    for (auto [m, r] : std::vector<std::pair<std::vector<int>, int>>{{{3}, 3}, {{2, 2}, 3}, {{4}, 3}, {{5}, 4}}) {
        FciReport f = fci_report(fci_model(m, r));
        CHECK(f.states_match());
        CHECK(static_cast<long>(f.computed_dim_f) == f.predicted_dim_f);
        if (f.a) CHECK(f.a_shape_ok());
    }
    FciReport cubic = fci_report(fci_model({3}, 3));
    CHECK(cubic.computed.closed);
    CHECK(cubic.computed.states.size() == 4);
    FciReport top = fci_report(fci_model({2, 3}, 3, Integer(4)));
    CHECK(top.branch == "Hh chi=r+1");
    CHECK(top.predicted_dim_f == 3);
    CHECK(top.states_match());
}
