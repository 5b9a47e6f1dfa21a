#include "disjrel/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace disjrel {

namespace {

void check_guard(const char* what, int n, int lo, int hi) {
    if (n < lo || n > hi)
        throw std::invalid_argument(std::string(what) + " requires " + std::to_string(lo) +
                                    " <= n <= " + std::to_string(hi) + ", got " +
                                    std::to_string(n));
}

// rows[i] = neighborhood of i as an n-bit word, n <= 8.
void rows_from_mask(int n, EdgeMask mask, std::uint16_t* rows) {
    std::fill(rows, rows + n, 0);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1u) {
                rows[i] |= std::uint16_t(1u << j);
                rows[j] |= std::uint16_t(1u << i);
            }
}

bool rows_distinct(int n, const std::uint16_t* rows) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rows[i] == rows[j])
                return false;
    return true;
}

BoolRelation relation_from_rows(const GroundSet& ground, int n, const std::uint16_t* rows) {
    std::vector<Bitset> bitrows(static_cast<std::size_t>(n), Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rows[i] >> j & 1u)
                bitrows[static_cast<std::size_t>(i)].set(j);
    return BoolRelation(ground, std::move(bitrows));
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k)
        f *= static_cast<std::uint64_t>(k);
    return f;
}

} // namespace

int edge_pair_count(int n) {
    return n * (n - 1) / 2;
}

int edge_bit(int n, int i, int j) {
    if (!(0 <= i && i < j && j < n))
        throw std::invalid_argument("edge_bit expects 0 <= i < j < n");
    // pairs (0,1)..(0,n-1) come first, then (1,2).., row-major
    return edge_pair_count(n) - edge_pair_count(n - i) + (j - i - 1);
}

BoolRelation relation_from_mask(int n, EdgeMask mask) {
    check_guard("relation_from_mask", n, 1, kMaxEnumerationSize);
    if (edge_pair_count(n) < 32 && (mask >> edge_pair_count(n)) != 0)
        throw std::invalid_argument("mask has bits beyond pair " +
                                    std::to_string(edge_pair_count(n)));
    std::uint16_t rows[kMaxEnumerationSize];
    rows_from_mask(n, mask, rows);
    return relation_from_rows(GroundSet(n), n, rows);
}

EdgeMask mask_from_relation(const BoolRelation& r) {
    const int n = r.size();
    check_guard("mask_from_relation", n, 1, kMaxEnumerationSize);
    const GroundSet& g = r.ground();
    if (auto irr = check_irreflexive(r); !irr.pass)
        throw std::invalid_argument("relation is not irreflexive: witness " +
                                    g.label(*irr.witness));
    if (auto sym = check_symmetric(r); !sym.pass) {
        auto [i, j] = *sym.witness;
        throw std::invalid_argument("relation is not symmetric: witness (" + g.label(i) + "," +
                                    g.label(j) + ")");
    }
    EdgeMask mask = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (r.related(i, j))
                mask |= EdgeMask{1} << bit;
    return mask;
}

EdgeMask permute_mask(int n, EdgeMask mask, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation size does not match n");
    EdgeMask image = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1u) {
                const int a = std::min(perm[static_cast<std::size_t>(i)],
                                       perm[static_cast<std::size_t>(j)]);
                const int b = std::max(perm[static_cast<std::size_t>(i)],
                                       perm[static_cast<std::size_t>(j)]);
                image |= EdgeMask{1} << edge_bit(n, a, b);
            }
    return image;
}

std::uint64_t enumerate_labeled(
    int n, const std::function<void(EdgeMask, const BoolRelation&)>& visit) {
    check_guard("enumerate_labeled", n, 1, kMaxEnumerationSize);
    const GroundSet ground(n);
    const std::uint64_t total = std::uint64_t{1} << edge_pair_count(n);
    std::uint16_t rows[kMaxEnumerationSize];
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        rows_from_mask(n, static_cast<EdgeMask>(mask), rows);
        if (!rows_distinct(n, rows))
            continue;
        ++count;
        if (visit)
            visit(static_cast<EdgeMask>(mask), relation_from_rows(ground, n, rows));
    }
    return count;
}

namespace {

// Depth-first construction by row suffix. After choosing the suffix of row
// i, rows 0..i are final, so a collision between two of them kills every
// completion at once.
void count_rec(int n, int i, std::uint16_t* rows, std::uint64_t& count) {
    if (i == n) {
        ++count;
        return;
    }
    const int suffix_bits = n - 1 - i;
    for (std::uint32_t suffix = 0; suffix < (1u << suffix_bits); ++suffix) {
        const std::uint16_t row_i = rows[i] | std::uint16_t(suffix << (i + 1));
        bool collision = false;
        for (int k = 0; k < i && !collision; ++k)
            collision = rows[k] == row_i;
        if (collision)
            continue;
        const std::uint16_t saved = rows[i];
        rows[i] = row_i;
        for (int j = i + 1; j < n; ++j)
            if (suffix >> (j - i - 1) & 1u)
                rows[j] |= std::uint16_t(1u << i);
        count_rec(n, i + 1, rows, count);
        for (int j = i + 1; j < n; ++j)
            if (suffix >> (j - i - 1) & 1u)
                rows[j] &= std::uint16_t(~(1u << i));
        rows[i] = saved;
    }
}

} // namespace

std::uint64_t count_labeled(int n) {
    check_guard("count_labeled", n, 1, kMaxEnumerationSize);
    std::uint16_t rows[kMaxEnumerationSize] = {0};
    std::uint64_t count = 0;
    count_rec(n, 0, rows, count);
    return count;
}

EdgeMask canonical_mask(int n, EdgeMask mask) {
    check_guard("canonical_mask", n, 1, kMaxEnumerationSize);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    EdgeMask best = mask;
    do {
        best = std::min(best, permute_mask(n, mask, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

EdgeMask canonical_form(const BoolRelation& r) {
    return canonical_mask(r.size(), mask_from_relation(r));
}

EnumerationResult enumerate_classes(int n) {
    check_guard("enumerate_classes", n, 1, kMaxClassSize);
    const int pairs = edge_pair_count(n);
    const std::uint64_t total = std::uint64_t{1} << pairs;
    const std::uint64_t group = factorial(n);

    std::vector<bool> seen(total, false);
    std::uint16_t rows[kMaxEnumerationSize];
    std::vector<int> perm(static_cast<std::size_t>(n));

    EnumerationResult result;
    result.n = n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        rows_from_mask(n, static_cast<EdgeMask>(mask), rows);
        if (!rows_distinct(n, rows))
            continue;
        ++result.labeled_count;
        if (seen[mask])
            continue;

        // Ascending scan makes this mask the least of its orbit, i.e. the
        // canonical representative.
        RelationClass cls;
        cls.canonical = static_cast<EdgeMask>(mask);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            const EdgeMask image = permute_mask(n, cls.canonical, perm);
            if (image == cls.canonical)
                ++cls.automorphisms;
            if (!seen[image]) {
                seen[image] = true;
                ++cls.orbit_size;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        if (cls.orbit_size != group / cls.automorphisms)
            throw std::logic_error("orbit size disagrees with automorphism count");
        result.classes.push_back(cls);
    }

    std::uint64_t orbit_total = 0;
    for (const auto& cls : result.classes)
        orbit_total += cls.orbit_size;
    if (orbit_total != result.labeled_count)
        throw std::logic_error("orbit sizes do not sum to the labeled count");
    return result;
}

std::uint64_t oracle_filter(int n, Sweep sweep,
                            const std::function<bool(const BoolRelation&)>& pred) {
    const GroundSet ground(n > 0 ? n : 1);
    std::uint64_t count = 0;
    if (sweep == Sweep::general) {
        check_guard("oracle_filter (general sweep)", n, 1, kMaxGeneralSweepSize);
        const std::uint64_t total = std::uint64_t{1} << (n * n);
        for (std::uint64_t cells = 0; cells < total; ++cells) {
            std::vector<Bitset> bitrows(static_cast<std::size_t>(n), Bitset(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (cells >> (i * n + j) & 1u)
                        bitrows[static_cast<std::size_t>(i)].set(j);
            if (pred(BoolRelation(ground, std::move(bitrows))))
                ++count;
        }
    } else {
        check_guard("oracle_filter (symmetric-irreflexive sweep)", n, 1, kMaxEnumerationSize);
        const std::uint64_t total = std::uint64_t{1} << edge_pair_count(n);
        std::uint16_t rows[kMaxEnumerationSize];
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            rows_from_mask(n, static_cast<EdgeMask>(mask), rows);
            if (pred(relation_from_rows(ground, n, rows)))
                ++count;
        }
    }
    return count;
}

} // namespace disjrel
