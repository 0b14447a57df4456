#include "qh/partition.hpp"

#include <doctest.h>

using namespace qh;

TEST_CASE("partition validation and text")
{
    CHECK(Partition{3, 1, 0}.parts() == std::vector<int>{3, 1});
    CHECK(Partition{3, 1}.str() == "[3,1]");
    CHECK(Partition().str() == "[]");
    CHECK_THROWS(Partition{1, 2});
    CHECK_THROWS(Partition{2, -1});
    CHECK(parse_partition("[4,2]") == Partition{4, 2});
    CHECK(Partition{3, 1}.in_box(2, 5));
    CHECK_FALSE(Partition{4, 1}.in_box(2, 5));
}

TEST_CASE("complement")
{
    CHECK(complement(Partition{3, 1}, 2, 5) == Partition{2});
    CHECK(complement(Partition(), 2, 4) == Partition{2, 2});
    CHECK(complement(Partition{3, 3, 3}, 3, 6) == Partition());
    CHECK_THROWS(complement(Partition{4}, 2, 5));
}

TEST_CASE("box enumeration order")
{
    auto b = partitions_in_box(2, 4);
    REQUIRE(b.size() == 6);
    CHECK(b.front() == Partition());
    CHECK(b[1] == Partition{1});
    CHECK(b[2] == Partition{2});
    CHECK(b[3] == Partition{1, 1});
    CHECK(b.back() == Partition{2, 2});
}

TEST_CASE("Littlewood-Richardson coefficients")
{
    CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2}) == 1);
    CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
    CHECK(lr_coefficient(Partition{2, 1}, Partition(), Partition{2, 1}) == 1);
    CHECK(lr_coefficient(Partition{2}, Partition{2}, Partition{3}) == 0);
    auto e = lr_expand(Partition{1}, Partition{1}, 2);
    CHECK(e.size() == 2);
    CHECK(e[Partition{2}] == 1);
    CHECK(e[Partition{1, 1}] == 1);
}

TEST_CASE("LR symmetry for weights up to 8")
{
    long bad = 0, n = 0;
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b < a; ++b)
            for (const auto& l : partitions_of(a, a, a))
                for (const auto& m : partitions_of(b, b, b))
                    for (const auto& [nu, c] : lr_expand(l, m, a + b)) {
                        ++n;
                        if (lr_coefficient(m, l, nu) != c) ++bad;
                    }
    CHECK(n > 0);
    CHECK(bad == 0);
}

TEST_CASE("two-row closed form")
{
    CHECK(lr_coefficient_len2(Partition{2, 1}, Partition{2, 1}, Partition{3, 3}) == 1);
    CHECK(lr_coefficient_len2(Partition{2, 1}, Partition{2, 1}, Partition{5, 1}) == 0);
    CHECK(lr_coefficient_len2(Partition{2, 1}, Partition(), Partition{2, 1}) == 1);
    CHECK_THROWS(lr_coefficient_len2(Partition{1, 1, 1}, Partition(), Partition{1, 1, 1}));
}

TEST_CASE("restricted partition counts")
{
    CHECK(restricted_count(0, 3, 0) == 1);
    CHECK(restricted_count(0, 0, 5) == 1);
    CHECK(restricted_count(5, 3, 2) == 1);
    CHECK(restricted_count(8, 4, 4) == 8);
    for (int m = 0; m <= 6; ++m)
        for (int l = 0; l <= 6; ++l)
            for (int i = 0; i <= 20; ++i)
                CHECK(restricted_count(i, m, l) == static_cast<long>(partitions_of(i, l, m).size()));
}

TEST_CASE("dimension estimate")
{
    CHECK(est_bound(2, 6) == 9);
    CHECK(est_bound(3, 7) == 35);
    CHECK(est_bound(4, 8) == 10);
    CHECK_THROWS(est_bound(5, 5));
    CHECK_THROWS(est_bound(0, 5));
}

TEST_CASE("symmetric group characters")
{
    // S_3 table: rows (3), (2,1), (1,1,1); classes 1^3, 2 1, 3
    CHECK(sn_character(Partition{3}, Partition{1, 1, 1}) == 1);
    CHECK(sn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(sn_character(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(sn_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(sn_character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
    // dimension of the (3,2) representation of S_5 is 5
    CHECK(sn_character(Partition{3, 2}, Partition{1, 1, 1, 1, 1}) == 5);
    CHECK(centralizer_size(Partition{2, 1, 1}) == 4);
    CHECK(centralizer_size(Partition{1, 1, 1}) == 6);
}
