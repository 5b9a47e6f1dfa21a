#ifndef DISJREL_CATALOG_HPP
#define DISJREL_CATALOG_HPP

#include "disjrel/relation.hpp"

namespace disjrel {

// Direct generators are capped so rows stay desk-scale.
inline constexpr int kMaxGeneratorSize = 64;
inline constexpr int kMaxPowersetBase = 5;

// Inequality relation: i <> j iff i != j (the complete graph). 1 <= n <= 64.
BoolRelation gen_inequality(int n);

// Subset-disjointness relation on the power set of {1..m}: elements are the
// subsets (all of them, or only the nonempty ones), ordered by ascending
// characteristic mask and labeled "{1,3}"-style with "{}" for the empty set;
// s <> t iff s and t are disjoint. 1 <= m <= 5. With include_empty the empty
// set is related to itself, so irreflexivity fails there.
BoolRelation gen_powerset_disjoint(int m, bool include_empty);

// Single-pair relation: exactly i <> j and j <> i. 2 <= n <= 64, i != j.
// Disjunctive only for n <= 3; at n >= 4 two isolated elements share the
// empty neighborhood.
BoolRelation gen_pair(int n, int i, int j);

// The worked three-element example: ground {a, b, c} with a <> b only.
// Equals gen_pair(3, 0, 1) up to labels.
BoolRelation gen_example_abc();

} // namespace disjrel

#endif
