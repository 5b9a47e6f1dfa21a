#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "disjrel/catalog.hpp"
#include "disjrel/order.hpp"

using namespace disjrel;

TEST_CASE("inequality generator") {
    const BoolRelation tri = gen_inequality(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(tri.related(i, j) == (i != j));
    CHECK(check_disjunctive(tri).disjunctive);

    CHECK(check_disjunctive(gen_inequality(1)).disjunctive); // vacuous extensionality
    CHECK(check_disjunctive(gen_inequality(2)).disjunctive); // rows {1} and {0} differ

    // disjunctive across the whole small range
    for (int n = 1; n <= 6; ++n)
        CHECK(check_disjunctive(gen_inequality(n)).disjunctive);

    CHECK_THROWS_AS(gen_inequality(0), std::invalid_argument);
    CHECK_THROWS_AS(gen_inequality(65), std::invalid_argument);
}

TEST_CASE("powerset-disjointness generator without the empty set") {
    const BoolRelation r = gen_powerset_disjoint(2, false);
    REQUIRE(r.size() == 3);
    CHECK(r.ground().labels() == std::vector<std::string>{"{1}", "{2}", "{1,2}"});
    // only {1} <> {2}
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(r.related(i, j) == ((i == 0 && j == 1) || (i == 1 && j == 0)));
    CHECK(check_disjunctive(r).disjunctive);

    const BoolRelation single = gen_powerset_disjoint(1, false);
    REQUIRE(single.size() == 1);
    CHECK(single.ground().label(0) == "{1}");
    CHECK_FALSE(single.related(0, 0));
    CHECK(check_disjunctive(single).disjunctive);

    for (int m = 1; m <= 4; ++m)
        CHECK(check_disjunctive(gen_powerset_disjoint(m, false)).disjunctive);
}

TEST_CASE("powerset-disjointness generator with the empty set fails irreflexivity at it") {
    for (int m = 1; m <= 5; ++m) {
        const BoolRelation r = gen_powerset_disjoint(m, true);
        REQUIRE(r.size() == 1 << m);
        CHECK(r.ground().label(0) == "{}");
        const auto res = check_irreflexive(r);
        CHECK_FALSE(res.pass);
        CHECK(*res.witness == 0); // the empty set is disjoint from itself
        CHECK_FALSE(check_disjunctive(r).disjunctive);
    }

    CHECK_THROWS_AS(gen_powerset_disjoint(0, false), std::invalid_argument);
    CHECK_THROWS_AS(gen_powerset_disjoint(6, false), std::invalid_argument);
}

TEST_CASE("pair generator") {
    const BoolRelation r = gen_pair(3, 0, 1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(r.related(i, j) == ((i == 0 && j == 1) || (i == 1 && j == 0)));
    CHECK(check_disjunctive(r).disjunctive);
    CHECK(check_disjunctive(gen_pair(2, 0, 1)).disjunctive);

    // two isolated elements share the empty neighborhood from n=4 on
    const BoolRelation wide = gen_pair(4, 0, 1);
    const auto ext = check_extensional(wide);
    CHECK_FALSE(ext.pass);
    CHECK(*ext.witness == IndexPair{2, 3});

    for (int n = 2; n <= 6; ++n)
        CHECK(check_disjunctive(gen_pair(n, 0, 1)).disjunctive == (n <= 3));

    CHECK_THROWS_AS(gen_pair(3, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_pair(3, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(gen_pair(1, 0, 0), std::invalid_argument);
}

TEST_CASE("three-element worked example") {
    const BoolRelation r = gen_example_abc();
    CHECK(r.ground().labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(check_disjunctive(r).disjunctive);

    // same cells as gen_pair(3, 0, 1), different labels
    const BoolRelation pair = gen_pair(3, 0, 1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(r.related(i, j) == pair.related(i, j));

    CHECK(render_table(r) == "  a b c\n"
                             "a F T F\n"
                             "b T F F\n"
                             "c F F F\n");

    // induced strict part: a and b below c only
    const OrderRelation o = induced_order(r);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(o.leq(i, j) == (i == j || j == 2));
}
