#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "disjrel/enumeration.hpp"
#include "disjrel/order.hpp"

using namespace disjrel;

namespace {

template <typename F>
void for_each_general(int n, F&& visit) {
    const GroundSet ground(n);
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    for (std::uint64_t cells = 0; cells < total; ++cells) {
        std::vector<IndexPair> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (cells >> (i * n + j) & 1u)
                    pairs.emplace_back(i, j);
        visit(BoolRelation(ground, pairs));
    }
}

// Quantifier form of the induced order: i precedes j iff every neighbor of j
// is a neighbor of i. Test-side oracle for the containment implementation.
bool leq_quantifier_form(const BoolRelation& r, int i, int j) {
    for (int y = 0; y < r.size(); ++y)
        if (r.related(j, y) && !r.related(i, y))
            return false;
    return true;
}

// Downward-closure oracle built on the quantifier form only.
bool downward_closed_oracle(const BoolRelation& r) {
    for (int i = 0; i < r.size(); ++i)
        for (int j = 0; j < r.size(); ++j)
            for (int k = 0; k < r.size(); ++k)
                if (r.related(i, j) && leq_quantifier_form(r, k, j) && !r.related(i, k))
                    return false;
    return true;
}

OrderRelation order_from_pairs(const GroundSet& ground, const std::vector<IndexPair>& pairs) {
    std::vector<Bitset> rows(static_cast<std::size_t>(ground.size()), Bitset(ground.size()));
    for (auto [i, j] : pairs)
        rows[static_cast<std::size_t>(i)].set(j);
    return OrderRelation(ground, std::move(rows));
}

// Reflexive-transitive closure of a Hasse edge list, as an oracle for
// closure(hasse(o)) == o.
OrderRelation closure(const HasseDiagram& h) {
    const int n = h.ground.size();
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i)
        reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (auto [i, j] : h.edges)
        reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                    reach[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    std::vector<IndexPair> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                pairs.emplace_back(i, j);
    return order_from_pairs(h.ground, pairs);
}

BoolRelation abc_example() {
    return BoolRelation(GroundSet(3, {"a", "b", "c"}), std::vector<IndexPair>{{0, 1}, {1, 0}});
}

BoolRelation inequality(int n) {
    std::vector<IndexPair> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                pairs.emplace_back(i, j);
    return BoolRelation(GroundSet(n), pairs);
}

} // namespace

TEST_CASE("induced order of the a/b/c example") {
    const OrderRelation o = induced_order(abc_example());
    // strict part: a and b below c only; diagonal reflexive
    for (int i = 0; i < 3; ++i)
        CHECK(o.leq(i, i));
    CHECK(o.leq(0, 2));
    CHECK(o.leq(1, 2));
    CHECK_FALSE(o.leq(0, 1));
    CHECK_FALSE(o.leq(1, 0));
    CHECK_FALSE(o.leq(2, 0));
    CHECK_FALSE(o.leq(2, 1));
}

TEST_CASE("induced order edge cases") {
    // identical empty neighborhoods compare both ways
    const OrderRelation all = induced_order(BoolRelation(GroundSet(2), std::vector<IndexPair>{}));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(all.leq(i, j));

    // full-complement neighborhoods are incomparable: identity matrix
    const OrderRelation id = induced_order(inequality(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(id.leq(i, j) == (i == j));
}

TEST_CASE("partial order verification") {
    CHECK(verify_partial_order(induced_order(abc_example())).partial_order);
    CHECK(verify_partial_order(induced_order(inequality(4))).partial_order);

    const OrderReport rep =
        verify_partial_order(induced_order(BoolRelation(GroundSet(2), std::vector<IndexPair>{})));
    CHECK(rep.reflexive);
    CHECK(rep.transitive.pass);
    CHECK_FALSE(rep.antisymmetric.pass);
    CHECK(*rep.antisymmetric.witness == IndexPair{0, 1});
    CHECK_FALSE(rep.partial_order);
}

TEST_CASE("downward closure holds on the a/b/c example and runs on any input") {
    CHECK(check_downward_closure(abc_example()).pass);

    const BoolRelation oneway(GroundSet(2), std::vector<IndexPair>{{0, 1}});
    CHECK(check_downward_closure(oneway).pass == downward_closed_oracle(oneway));
}

TEST_CASE("downward closure checker agrees with its oracle, n<=3 sweep") {
    for (int n = 1; n <= 3; ++n) {
        for_each_general(n, [](const BoolRelation& r) {
            const TripleCheck res = check_downward_closure(r);
            REQUIRE(res.pass == downward_closed_oracle(r));
            if (res.witness) {
                auto [i, j, k] = *res.witness;
                REQUIRE(r.related(i, j));
                REQUIRE(leq_quantifier_form(r, k, j));
                REQUIRE(!r.related(i, k));
            }
        });
    }
}

TEST_CASE("every disjunctive relation up to n=4 is downward closed and induces a partial order") {
    for (int n = 1; n <= 4; ++n) {
        enumerate_labeled(n, [](EdgeMask, const BoolRelation& r) {
            const TripleCheck res = check_downward_closure(r);
            REQUIRE(res.pass);
            REQUIRE_FALSE(res.witness.has_value());
            REQUIRE(verify_partial_order(induced_order(r)).partial_order);
        });
    }
}

TEST_CASE("containment and quantifier forms of the order agree, n<=4") {
    for (int n = 1; n <= 4; ++n) {
        for_each_general(n, [n](const BoolRelation& r) {
            const OrderRelation o = induced_order(r);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    REQUIRE(o.leq(i, j) == leq_quantifier_form(r, i, j));
        });
    }
}

TEST_CASE("induced order is always reflexive and transitive; antisymmetric iff extensional") {
    for (int n = 1; n <= 3; ++n) {
        for_each_general(n, [](const BoolRelation& r) {
            const OrderReport rep = verify_partial_order(induced_order(r));
            REQUIRE(rep.reflexive);
            REQUIRE(rep.transitive.pass);
            REQUIRE(rep.antisymmetric.pass == check_extensional(r).pass);
        });
    }
    // symmetric irreflexive sweep reaches n=5
    for (int n = 2; n <= 5; ++n) {
        oracle_filter(n, Sweep::symmetric_irreflexive, [](const BoolRelation& r) {
            const OrderReport rep = verify_partial_order(induced_order(r));
            REQUIRE(rep.reflexive);
            REQUIRE(rep.transitive.pass);
            REQUIRE(rep.antisymmetric.pass == check_extensional(r).pass);
            return true;
        });
    }
}

TEST_CASE("hasse diagram of the a/b/c example") {
    const HasseDiagram h = hasse_diagram(induced_order(abc_example()));
    CHECK(h.edges == std::vector<IndexPair>{{0, 2}, {1, 2}});
}

TEST_CASE("hasse diagram of discrete and chain orders") {
    const HasseDiagram discrete = hasse_diagram(induced_order(inequality(3)));
    CHECK(discrete.edges.empty());

    const GroundSet g3(3);
    const OrderRelation chain = order_from_pairs(
        g3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}});
    const HasseDiagram h = hasse_diagram(chain);
    CHECK(h.edges == std::vector<IndexPair>{{0, 1}, {1, 2}});
}

TEST_CASE("hasse rejects non-partial-orders naming axiom and witness") {
    const OrderRelation bad = induced_order(BoolRelation(GroundSet(2), std::vector<IndexPair>{}));
    std::string msg;
    try {
        hasse_diagram(bad);
    } catch (const std::invalid_argument& e) {
        msg = e.what();
    }
    CHECK(msg.find("antisymmetry") != std::string::npos);
    CHECK(msg.find("(x0,x1)") != std::string::npos);
    CHECK_THROWS_AS(extremes(bad), std::invalid_argument);
}

TEST_CASE("extremes") {
    const Extremes ex = extremes(induced_order(abc_example()));
    CHECK(ex.minimal == std::vector<int>{0, 1});
    CHECK(ex.maximal == std::vector<int>{2});

    const Extremes discrete = extremes(induced_order(inequality(3)));
    CHECK(discrete.minimal == std::vector<int>{0, 1, 2});
    CHECK(discrete.maximal == std::vector<int>{0, 1, 2});

    const GroundSet g3(3);
    const Extremes chain = extremes(order_from_pairs(
        g3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}}));
    CHECK(chain.minimal == std::vector<int>{0});
    CHECK(chain.maximal == std::vector<int>{2});
}

TEST_CASE("closure of the hasse diagram recovers the order, and minimally so") {
    for (int n = 1; n <= 4; ++n) {
        enumerate_labeled(n, [](EdgeMask, const BoolRelation& r) {
            const OrderRelation o = induced_order(r);
            const HasseDiagram h = hasse_diagram(o);
            REQUIRE(closure(h) == o);
            for (auto [i, j] : h.edges)
                REQUIRE(i != j);
            // dropping any edge loses the closure: the edge set is minimal,
            // hence the unique minimal one for a finite order
            for (std::size_t drop = 0; drop < h.edges.size(); ++drop) {
                HasseDiagram smaller{h.ground, {}};
                for (std::size_t e = 0; e < h.edges.size(); ++e)
                    if (e != drop)
                        smaller.edges.push_back(h.edges[e]);
                REQUIRE_FALSE(closure(smaller) == o);
            }
        });
    }
}

TEST_CASE("dot output is byte-stable and carries the axiom header") {
    const BoolRelation r = abc_example();
    const std::string dot = to_dot(hasse_diagram(induced_order(r)), check_disjunctive(r));
    CHECK(dot == "// n=3 extensional=pass symmetric=pass irreflexive=pass disjunctive=true\n"
                 "digraph hasse {\n"
                 "  \"a\";\n"
                 "  \"b\";\n"
                 "  \"c\";\n"
                 "  \"a\" -> \"c\";\n"
                 "  \"b\" -> \"c\";\n"
                 "}\n");
}
