#include "disjrel/order.hpp"

#include <stdexcept>

namespace disjrel {

OrderRelation::OrderRelation(GroundSet ground, std::vector<Bitset> leq_rows)
    : ground_(std::move(ground)), leq_(std::move(leq_rows)) {
    const int n = ground_.size();
    if (static_cast<int>(leq_.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " order rows, got " +
                                    std::to_string(leq_.size()));
    for (const auto& row : leq_)
        if (row.size() != n)
            throw std::invalid_argument("order row width does not match ground set size " +
                                        std::to_string(n));
}

OrderRelation induced_order(const BoolRelation& r) {
    const int n = r.size();
    std::vector<Bitset> leq(static_cast<std::size_t>(n), Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (r.row(j).is_subset_of(r.row(i)))
                leq[static_cast<std::size_t>(i)].set(j);
    return OrderRelation(r.ground(), std::move(leq));
}

OrderReport verify_partial_order(const OrderRelation& o) {
    const int n = o.size();
    OrderReport report;

    report.reflexive = true;
    for (int i = 0; i < n; ++i)
        if (!o.leq(i, i))
            report.reflexive = false;

    for (int i = 0; i < n && report.antisymmetric.pass; ++i)
        for (int j = 0; j < n && report.antisymmetric.pass; ++j)
            if (i != j && o.leq(i, j) && o.leq(j, i))
                report.antisymmetric = {false, IndexPair{i, j}};

    for (int i = 0; i < n && report.transitive.pass; ++i)
        for (int j = 0; j < n && report.transitive.pass; ++j)
            for (int k = 0; k < n && report.transitive.pass; ++k)
                if (o.leq(i, j) && o.leq(j, k) && !o.leq(i, k))
                    report.transitive = {false, std::array<int, 3>{i, j, k}};

    report.partial_order =
        report.reflexive && report.antisymmetric.pass && report.transitive.pass;
    return report;
}

TripleCheck check_downward_closure(const BoolRelation& r) {
    const int n = r.size();
    const OrderRelation o = induced_order(r);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (r.related(i, j) && o.leq(k, j) && !r.related(i, k))
                    return {false, std::array<int, 3>{i, j, k}};
    return {};
}

namespace {

void require_partial_order(const OrderRelation& o) {
    const OrderReport report = verify_partial_order(o);
    if (report.partial_order)
        return;
    const GroundSet& g = o.ground();
    std::string what = "not a partial order: ";
    if (!report.reflexive) {
        what += "reflexivity fails";
    } else if (!report.antisymmetric.pass) {
        auto [i, j] = *report.antisymmetric.witness;
        what += "antisymmetry fails at (" + g.label(i) + "," + g.label(j) + ")";
    } else {
        auto [i, j, k] = *report.transitive.witness;
        what += "transitivity fails at (" + g.label(i) + "," + g.label(j) + "," + g.label(k) + ")";
    }
    throw std::invalid_argument(what);
}

} // namespace

HasseDiagram hasse_diagram(const OrderRelation& o) {
    require_partial_order(o);
    const int n = o.size();
    HasseDiagram h{o.ground(), {}};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!o.strictly_less(i, j))
                continue;
            bool covering = true;
            for (int k = 0; k < n && covering; ++k)
                if (k != i && k != j && o.strictly_less(i, k) && o.strictly_less(k, j))
                    covering = false;
            if (covering)
                h.edges.emplace_back(i, j);
        }
    }
    return h; // edges already lexicographic: i ascending, j ascending
}

Extremes extremes(const OrderRelation& o) {
    require_partial_order(o);
    const int n = o.size();
    Extremes ex;
    for (int i = 0; i < n; ++i) {
        bool has_pred = false;
        bool has_succ = false;
        for (int j = 0; j < n; ++j) {
            has_pred = has_pred || o.strictly_less(j, i);
            has_succ = has_succ || o.strictly_less(i, j);
        }
        if (!has_pred)
            ex.minimal.push_back(i);
        if (!has_succ)
            ex.maximal.push_back(i);
    }
    return ex;
}

std::string to_dot(const HasseDiagram& h, const AxiomReport& source_axioms) {
    const GroundSet& g = h.ground;
    auto pf = [](bool pass) { return pass ? "pass" : "fail"; };

    std::string out = "// n=" + std::to_string(g.size());
    out += std::string(" extensional=") + pf(source_axioms.extensional.pass);
    out += std::string(" symmetric=") + pf(source_axioms.symmetric.pass);
    out += std::string(" irreflexive=") + pf(source_axioms.irreflexive.pass);
    out += std::string(" disjunctive=") + (source_axioms.disjunctive ? "true" : "false");
    out += "\ndigraph hasse {\n";
    for (int i = 0; i < g.size(); ++i)
        out += "  \"" + g.label(i) + "\";\n";
    for (auto [i, j] : h.edges)
        out += "  \"" + g.label(i) + "\" -> \"" + g.label(j) + "\";\n";
    out += "}\n";
    return out;
}

} // namespace disjrel
