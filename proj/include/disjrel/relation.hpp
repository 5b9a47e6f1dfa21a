#ifndef DISJREL_RELATION_HPP
#define DISJREL_RELATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "disjrel/bitset.hpp"
#include "disjrel/ground_set.hpp"

namespace disjrel {

using IndexPair = std::pair<int, int>;

// Arbitrary binary relation on a ground set, stored row-wise: row(i) is the
// neighborhood of element i, i.e. the set of j with i <> j. Construction
// never enforces the disjunctive axioms; the checkers below diagnose them,
// so non-disjunctive inputs stay representable.
class BoolRelation {
public:
    BoolRelation(GroundSet ground, const std::vector<IndexPair>& pairs);
    BoolRelation(GroundSet ground, std::vector<Bitset> rows);

    const GroundSet& ground() const { return ground_; }
    int size() const { return ground_.size(); }
    bool related(int i, int j) const { return rows_[static_cast<std::size_t>(i)].test(j); }
    const Bitset& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

    bool operator==(const BoolRelation&) const = default;

private:
    GroundSet ground_;
    std::vector<Bitset> rows_;
};

struct ElementCheck {
    bool pass = true;
    std::optional<int> witness; // present exactly when !pass
};

struct PairCheck {
    bool pass = true;
    std::optional<IndexPair> witness; // present exactly when !pass
};

// Per-axiom verdicts with counterexample witnesses; `disjunctive` is the
// conjunction of the three verdicts.
struct AxiomReport {
    PairCheck extensional;
    PairCheck symmetric;
    ElementCheck irreflexive;
    bool disjunctive = false;
};

// Passes iff no i has i <> i. Witness: least such i.
ElementCheck check_irreflexive(const BoolRelation& r);

// Passes iff i <> j implies j <> i. Witness: lexicographically least (i, j)
// with i <> j but not j <> i.
PairCheck check_symmetric(const BoolRelation& r);

// Passes iff all rows are pairwise distinct as sets, i.e. distinct elements
// have distinct neighborhoods. Witness: least (i, j), i < j, with equal rows.
PairCheck check_extensional(const BoolRelation& r);

// Runs all three checkers independently (no short-circuit), so every failing
// axiom carries its witness.
AxiomReport check_disjunctive(const BoolRelation& r);

// (n+1) x (n+1) text grid: header row/column of labels, body cells T/F with
// cell (i, j) = T iff i <> j. Left-justified columns, single-space separated,
// no trailing spaces, every line newline-terminated. Byte-stable.
std::string render_table(const BoolRelation& r);

// The three table properties a disjunctive relation exhibits.
struct TableProperties {
    bool diagonal_all_false = false;
    bool transpose_symmetric = false;
    bool rows_distinct = false;

    bool all() const { return diagonal_all_false && transpose_symmetric && rows_distinct; }
};

// Scans a rendered table purely at text level, independent of the axiom
// checkers. Input must be render_table output; anything else throws.
TableProperties scan_table(const std::string& table_text);

} // namespace disjrel

#endif
