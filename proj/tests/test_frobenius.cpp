#include "qh/frobenius.hpp"
#include "qh/linalg.hpp"
#include "qh/rings.hpp"

#include <doctest.h>

#include <set>

using namespace qh;

namespace {

RingElement lab(const FrobeniusRing& r, const std::string& l, const QLaurent& c = QLaurent(1))
{
    return r.basis(r.index_of(l), c);
}

const QLaurent q(Rational(1), 1);

}  // namespace

TEST_CASE("products")
{
    FrobeniusRing p2 = projective_space(2);
    CHECK(product(p2, lab(p2, "H"), lab(p2, "H^2")) == p2.unit() * q);
    FrobeniusRing q4 = quadric(4);
    CHECK(product(q4, q4.point(), q4.point()) == q4.unit() * (q * q));
    FrobeniusRing g = grassmannian(2, 4);
    CHECK(product(g, lab(g, "[1]"), lab(g, "[1]")) == lab(g, "[2]") + lab(g, "[1,1]"));
}

TEST_CASE("handle elements")
{
    for (int n = 1; n <= 5; ++n) {
        FrobeniusRing r = projective_space(n);
        HandleReport h = handle_report(r);
        CHECK(h.delta == r.basis(static_cast<std::size_t>(n), QLaurent(n + 1)));
        CHECK(h.formulas_agree);
        REQUIRE(h.pairing_sum);
        REQUIRE(h.dual_basis_sum);
    }
    FrobeniusRing q4 = quadric(4);
    CHECK(handle_element(q4) == lab(q4, "s4", QLaurent(6)) + q4.unit() * (q * QLaurent(2)));
    FrobeniusRing g = grassmannian(2, 5);
    CHECK(handle_element(g) == lab(g, "[3,3]", QLaurent(10)) + lab(g, "[1]", q * QLaurent(5)));
}

TEST_CASE("multiplication matrices and powers")
{
    FrobeniusRing p2 = projective_space(2);
    CHECK(mult_matrix(p2, p2.unit()) == RatMatrix::identity(3));
    RatMatrix d = mult_matrix(p2, handle_element(p2));
    CHECK(d.power(3) == RatMatrix::identity(3) * Rational(27));
    CHECK(power(p2, handle_element(p2), 2) == lab(p2, "H", q * QLaurent(9)));
    CHECK(power(p2, handle_element(p2), 0) == p2.unit());

    FrobeniusRing q4 = quadric(4);
    RingElement d2 = power(q4, handle_element(q4), 2);
    for (auto i : d2.support()) CHECK((i == q4.unit_index || i == *q4.point_index));
    auto es = rational_eigenstructure(mult_matrix(q4, handle_element(q4)));
    REQUIRE(es.split_over_rationals);
    std::set<Rational> vals;
    for (const auto& e : es.eigen) vals.insert(e.value);
    CHECK(vals == std::set<Rational>{-4, 8});

    // negative exponents need an explicit value of q
    RingElement inv = pt_inverse(p2);
    CHECK_THROWS(mult_matrix(p2, inv));
    CHECK(mult_matrix(p2, inv, Rational(1)) * mult_matrix(p2, p2.point()) == RatMatrix::identity(3));
}

TEST_CASE("point class periodicity")
{
    auto t = theta_order(quadric(5));
    CHECK(t.theta == 2);
    CHECK(t.n_x == 2);
    t = theta_order(grassmannian(2, 4));
    CHECK(t.theta == 2);
    CHECK(t.n_x == 2);
    t = theta_order(projective_space(2));
    CHECK(t.theta == 3);
    CHECK(t.n_x == 2);

    FrobeniusRing q6 = quadric(6);
    CHECK(pt_inverse(q6) == q6.point() * QLaurent(Rational(1), -2));
    FrobeniusRing p2 = projective_space(2);
    CHECK(pt_inverse(p2) == lab(p2, "H", QLaurent(Rational(1), -1)));
    FrobeniusRing g = grassmannian(2, 4);
    CHECK(pt_inverse(g) == g.point() * QLaurent(Rational(1), -2));
}

TEST_CASE("graded pieces and the dimension bound")
{
    FrobeniusRing g = grassmannian(2, 6);
    std::set<std::string> v0;
    for (auto i : vj_split(g, 0)) v0.insert(g.labels[i]);
    CHECK(v0 == std::set<std::string>{"[]", "[4,2]", "[3,3]"});
    CHECK(dim_bound(g) == 9);
    CHECK(f_span_dim(g).dim == 9);

    FrobeniusRing q4 = quadric(4);
    std::set<std::string> q0;
    for (auto i : vj_split(q4, 0)) q0.insert(q4.labels[i]);
    CHECK(q0 == std::set<std::string>{"1", "s4"});
    CHECK(dim_bound(q4) == 2);

    FrobeniusRing p3 = projective_space(3);
    for (int j = 0; j <= 3; ++j) {
        auto v = vj_split(p3, j);
        REQUIRE(v.size() == 1);
        CHECK(p3.degrees[v[0]] == j);
    }
    CHECK(dim_bound(grassmannian(4, 8)) == 10);
}

TEST_CASE("validation names the failing labels")
{
    FrobeniusRing r = projective_space(2);
    r.structure[1 * 3 + 1] = {{0, QLaurent(1)}};  // H * H = 1 breaks grading
    try {
        validate(r);
        FAIL("expected a RingError");
    } catch (const RingError& e) {
        CHECK(std::string(e.what()).find("H") != std::string::npos);
    }
    FrobeniusRing s = projective_space(2);
    s.pairing[0] = QLaurent(1);  // <1,1> = 1 is not graded
    CHECK_THROWS_AS(validate(s), RingError);
    FrobeniusRing u = projective_space(2);
    u.unit_index = 1;
    CHECK_THROWS_AS(validate(u), RingError);
}
