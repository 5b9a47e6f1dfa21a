#include "disjrel/catalog.hpp"

#include <stdexcept>

namespace disjrel {

namespace {

void check_range(const char* name, int value, int lo, int hi) {
    if (value < lo || value > hi)
        throw std::invalid_argument(std::string(name) + " must be between " + std::to_string(lo) +
                                    " and " + std::to_string(hi) + ", got " +
                                    std::to_string(value));
}

std::string subset_label(unsigned mask) {
    std::string label = "{";
    bool first = true;
    for (int b = 0; mask >> b; ++b) {
        if (!(mask >> b & 1u))
            continue;
        if (!first)
            label += ',';
        label += std::to_string(b + 1);
        first = false;
    }
    return label + "}";
}

} // namespace

BoolRelation gen_inequality(int n) {
    check_range("n", n, 1, kMaxGeneratorSize);
    std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                rows[static_cast<std::size_t>(i)].set(j);
    return BoolRelation(GroundSet(n), std::move(rows));
}

BoolRelation gen_powerset_disjoint(int m, bool include_empty) {
    check_range("m", m, 1, kMaxPowersetBase);
    std::vector<unsigned> masks;
    for (unsigned mask = include_empty ? 0 : 1; mask < (1u << m); ++mask)
        masks.push_back(mask);

    const int n = static_cast<int>(masks.size());
    std::vector<std::string> labels;
    labels.reserve(masks.size());
    for (unsigned mask : masks)
        labels.push_back(subset_label(mask));

    std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((masks[static_cast<std::size_t>(i)] & masks[static_cast<std::size_t>(j)]) == 0)
                rows[static_cast<std::size_t>(i)].set(j);
    return BoolRelation(GroundSet(n, std::move(labels)), std::move(rows));
}

BoolRelation gen_pair(int n, int i, int j) {
    check_range("n", n, 2, kMaxGeneratorSize);
    check_range("i", i, 0, n - 1);
    check_range("j", j, 0, n - 1);
    if (i == j)
        throw std::invalid_argument("i and j must be distinct, got " + std::to_string(i) +
                                    " twice");
    return BoolRelation(GroundSet(n), std::vector<IndexPair>{{i, j}, {j, i}});
}

BoolRelation gen_example_abc() {
    return BoolRelation(GroundSet(3, {"a", "b", "c"}), std::vector<IndexPair>{{0, 1}, {1, 0}});
}

} // namespace disjrel
