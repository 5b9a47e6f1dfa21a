#ifndef DISJREL_ORDER_HPP
#define DISJREL_ORDER_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "disjrel/relation.hpp"

namespace disjrel {

// Reflexive order-candidate matrix over a ground set: leq(i, j) reads
// "x_i precedes-or-equals x_j". Whether it actually is a partial order is a
// checked property, not an invariant.
class OrderRelation {
public:
    OrderRelation(GroundSet ground, std::vector<Bitset> leq_rows);

    const GroundSet& ground() const { return ground_; }
    int size() const { return ground_.size(); }
    bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i)].test(j); }
    bool strictly_less(int i, int j) const { return i != j && leq(i, j); }

    bool operator==(const OrderRelation&) const = default;

private:
    GroundSet ground_;
    std::vector<Bitset> leq_;
};

struct TripleCheck {
    bool pass = true;
    std::optional<std::array<int, 3>> witness; // present exactly when !pass
};

struct OrderReport {
    bool reflexive = false;
    PairCheck antisymmetric; // witness: least (i, j), i != j, leq both ways
    TripleCheck transitive;  // witness: least (i, j, k) breaking transitivity
    bool partial_order = false;
};

// Containment order induced by a relation: leq(i, j) iff row(j) is a subset
// of row(i), equivalently every neighbor of j is a neighbor of i. Defined
// for any relation, disjunctive or not; it is always reflexive and
// transitive, and antisymmetric exactly when the source is extensional.
OrderRelation induced_order(const BoolRelation& r);

// Checks reflexivity, antisymmetry and transitivity directly on the matrix.
OrderReport verify_partial_order(const OrderRelation& o);

// Checks that relatedness propagates downwards through the induced order:
// whenever i <> j and k precedes j, then i <> k. Holds for every disjunctive
// relation; the checker runs on any input and reports the least failing
// triple (i, j, k).
TripleCheck check_downward_closure(const BoolRelation& r);

// Covering-pair presentation of a partial order: (i, j) means i is covered
// by j. Edges are sorted lexicographically and never reflexive.
struct HasseDiagram {
    GroundSet ground;
    std::vector<IndexPair> edges;
};

// Transitive reduction of a partial order. Throws std::invalid_argument
// naming the failed axiom and witness when o is not a partial order.
HasseDiagram hasse_diagram(const OrderRelation& o);

struct Extremes {
    std::vector<int> minimal; // no strict predecessor
    std::vector<int> maximal; // no strict successor
};

// Minimal and maximal elements of a partial order; same rejection as
// hasse_diagram on non-partial-order input.
Extremes extremes(const OrderRelation& o);

// DOT rendering of a Hasse diagram: one node per element, one edge per
// covering pair, in sorted order. The header comment records n and the
// source relation's axiom verdicts. Byte-stable.
std::string to_dot(const HasseDiagram& h, const AxiomReport& source_axioms);

} // namespace disjrel

#endif
