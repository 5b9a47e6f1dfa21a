#ifndef DISJREL_ENUMERATION_HPP
#define DISJREL_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "disjrel/relation.hpp"

namespace disjrel {

// Encoding of a symmetric irreflexive relation on n elements as the integer
// over its strictly-upper-triangular cells: bit k holds pair k in row-major
// order (0,1), (0,2), .., (0,n-1), (1,2), .. Symmetry and irreflexivity are
// built into the encoding, so of the three disjunctive axioms only
// extensionality remains to check on a mask.
using EdgeMask = std::uint32_t;

// Hard guard ceilings; exceeding one is an error, not a warning.
inline constexpr int kMaxEnumerationSize = 8;  // 2^28 masks
inline constexpr int kMaxClassSize = 7;        // n! relabelings per orbit
inline constexpr int kMaxGeneralSweepSize = 5; // 2^(n^2) matrices

int edge_pair_count(int n);                // n(n-1)/2
int edge_bit(int n, int i, int j);         // bit position of pair (i, j), i < j
BoolRelation relation_from_mask(int n, EdgeMask mask);

// Inverse of relation_from_mask. Rejects asymmetric or reflexive input with
// the axiom witness; requires n <= 8.
EdgeMask mask_from_relation(const BoolRelation& r);

// Relabels mask by perm (element i becomes perm[i]). perm.size() == n.
EdgeMask permute_mask(int n, EdgeMask mask, const std::vector<int>& perm);

// Visits every disjunctive relation on n labeled elements in strictly
// ascending EdgeMask order; returns how many were visited. 1 <= n <= 8.
std::uint64_t enumerate_labeled(
    int n, const std::function<void(EdgeMask, const BoolRelation&)>& visit);

// Number of disjunctive relations on n labeled elements. Prunes the search
// as soon as two completed rows collide; must agree exactly with the
// unpruned oracle_filter sweep. 1 <= n <= 8.
std::uint64_t count_labeled(int n);

// Minimum EdgeMask over all n! relabelings; equal canonical forms
// characterize isomorphic relations. Same preconditions as
// mask_from_relation.
EdgeMask canonical_form(const BoolRelation& r);
EdgeMask canonical_mask(int n, EdgeMask mask);

struct RelationClass {
    EdgeMask canonical = 0;           // minimal representative, its own canonical form
    std::uint64_t automorphisms = 0;  // permutations fixing the representative
    std::uint64_t orbit_size = 0;     // n! / automorphisms
};

struct EnumerationResult {
    int n = 0;
    std::uint64_t labeled_count = 0;
    std::vector<RelationClass> classes; // ascending by canonical mask
};

// Partitions the disjunctive relations on n labeled elements into
// isomorphism classes. Verifies internally that the orbit sizes sum to
// labeled_count. 1 <= n <= 7.
EnumerationResult enumerate_classes(int n);

enum class Sweep {
    general,               // all 2^(n^2) boolean matrices, n <= 5
    symmetric_irreflexive, // all 2^(n(n-1)/2) edge masks, n <= 8
};

// Unpruned ground-truth sweep: counts relations satisfying pred by direct
// evaluation. The reference against which every faster path is tested.
std::uint64_t oracle_filter(int n, Sweep sweep,
                            const std::function<bool(const BoolRelation&)>& pred);

} // namespace disjrel

#endif
