// disjrel: validate finite binary relations against the disjunctive axioms,
// derive the induced containment order, render truth tables and Hasse
// diagrams, generate the example relation families and enumerate all
// disjunctive relations on small ground sets.
//
// Exit status: 0 = the checked property holds, 1 = it fails (a witness is
// reported), 2 = usage, parse or guard error. Every nonzero exit prints one
// line on stderr.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "disjrel/catalog.hpp"
#include "disjrel/enumeration.hpp"
#include "disjrel/order.hpp"
#include "disjrel/relation.hpp"
#include "disjrel/text_format.hpp"

namespace {

using namespace disjrel;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* kUsage =
    "usage: disjrel <command> [arguments]\n"
    "\n"
    "commands:\n"
    "  validate [file|-] [--format text|kv]   check the three disjunctive axioms\n"
    "  order    [file|-] [--format text|kv]   induced order matrix and its axioms\n"
    "  hasse    [file|-]                      covering diagram as DOT\n"
    "  table    [file|-] [--check]            truth table; --check scans its properties\n"
    "  gen <generator> [key=value...]         emit a relation in the text format\n"
    "  enumerate n=<n> [--mode count|list|classes]\n"
    "  verify-props n_max=<n>                 exhaustive property sweep up to n_max\n"
    "\n"
    "generators:\n"
    "  inequality n=<n>                       i <> j iff i != j\n"
    "  powerset-disjoint m=<m> [include_empty=true|false]\n"
    "                                         subsets of {1..m}, related iff disjoint\n"
    "  pair n=<n> i=<i> j=<j>                 exactly i <> j and j <> i\n"
    "  section2                               the 3-element a/b/c example\n"
    "\n"
    "relations are read from a file argument or standard input (\"-\").\n";

int fail(const std::string& message) {
    std::cerr << "disjrel: fail: " << message << "\n";
    return kExitFail;
}

// ---- argument handling -----------------------------------------------------

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> params; // key=value tokens
    std::string format;                        // --format
    std::string mode;                          // --mode
    bool check = false;                        // --check
};

Args parse_args(const std::vector<std::string>& tokens) {
    Args args;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
        const std::string& tok = tokens[t];
        auto flag_value = [&](const std::string& name) {
            if (t + 1 >= tokens.size())
                throw UsageError(name + " requires a value");
            return tokens[++t];
        };
        if (tok == "--check") {
            args.check = true;
        } else if (tok == "--format") {
            args.format = flag_value(tok);
        } else if (tok == "--mode") {
            args.mode = flag_value(tok);
        } else if (tok.rfind("--", 0) == 0) {
            throw UsageError("unknown flag '" + tok + "'");
        } else if (tok.find('=') != std::string::npos) {
            const auto eq = tok.find('=');
            const std::string key = tok.substr(0, eq);
            if (key.empty())
                throw UsageError("malformed parameter '" + tok + "'");
            if (!args.params.emplace(key, tok.substr(eq + 1)).second)
                throw UsageError("duplicate parameter '" + key + "'");
        } else {
            args.positional.push_back(tok);
        }
    }
    return args;
}

int param_int(const Args& args, const std::string& key) {
    auto it = args.params.find(key);
    if (it == args.params.end())
        throw UsageError("missing parameter " + key + "=<integer>");
    try {
        std::size_t pos = 0;
        const int value = std::stoi(it->second, &pos);
        if (pos != it->second.size())
            throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        throw UsageError("parameter " + key + " must be an integer, got '" + it->second + "'");
    }
}

bool param_bool(const Args& args, const std::string& key, bool fallback) {
    auto it = args.params.find(key);
    if (it == args.params.end())
        return fallback;
    if (it->second == "true")
        return true;
    if (it->second == "false")
        return false;
    throw UsageError("parameter " + key + " must be true or false, got '" + it->second + "'");
}

void reject_unknown_params(const Args& args, std::initializer_list<const char*> known) {
    for (const auto& [key, value] : args.params) {
        bool ok = false;
        for (const char* k : known)
            ok = ok || key == k;
        if (!ok)
            throw UsageError("unknown parameter '" + key + "'");
    }
}

std::string pick_format(const Args& args, std::initializer_list<const char*> allowed) {
    std::string format = args.format.empty() ? *allowed.begin() : args.format;
    for (const char* a : allowed)
        if (format == a)
            return format;
    throw UsageError("unsupported --format '" + format + "' for this command");
}

BoolRelation read_relation(const Args& args) {
    if (args.positional.size() > 1)
        throw UsageError("expected at most one input file");
    const std::string path = args.positional.empty() ? "-" : args.positional[0];
    if (path == "-")
        return parse_relation(std::cin);
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    return parse_relation(in);
}

// ---- report rendering ------------------------------------------------------

const char* pf(bool pass) {
    return pass ? "pass" : "fail";
}

std::string pair_str(const GroundSet& g, const IndexPair& p) {
    return "(" + g.label(p.first) + "," + g.label(p.second) + ")";
}

std::string triple_str(const GroundSet& g, const std::array<int, 3>& t) {
    return "(" + g.label(t[0]) + "," + g.label(t[1]) + "," + g.label(t[2]) + ")";
}

void emit_axioms_kv(std::ostream& out, const GroundSet& g, const AxiomReport& rep) {
    out << "axiom.extensional=" << pf(rep.extensional.pass) << "\n";
    if (!rep.extensional.pass)
        out << "witness.extensional=" << pair_str(g, *rep.extensional.witness) << "\n";
    out << "axiom.symmetric=" << pf(rep.symmetric.pass) << "\n";
    if (!rep.symmetric.pass)
        out << "witness.symmetric=" << pair_str(g, *rep.symmetric.witness) << "\n";
    out << "axiom.irreflexive=" << pf(rep.irreflexive.pass) << "\n";
    if (!rep.irreflexive.pass)
        out << "witness.irreflexive=" << g.label(*rep.irreflexive.witness) << "\n";
    out << "disjunctive=" << (rep.disjunctive ? "true" : "false") << "\n";
}

void emit_axioms_text(std::ostream& out, const GroundSet& g, const AxiomReport& rep) {
    out << "extensional: " << pf(rep.extensional.pass);
    if (!rep.extensional.pass)
        out << " (witness " << pair_str(g, *rep.extensional.witness) << ")";
    out << "\nsymmetric: " << pf(rep.symmetric.pass);
    if (!rep.symmetric.pass)
        out << " (witness " << pair_str(g, *rep.symmetric.witness) << ")";
    out << "\nirreflexive: " << pf(rep.irreflexive.pass);
    if (!rep.irreflexive.pass)
        out << " (witness " << g.label(*rep.irreflexive.witness) << ")";
    out << "\ndisjunctive: " << (rep.disjunctive ? "true" : "false") << "\n";
}

std::vector<IndexPair> strict_pairs(const OrderRelation& o) {
    std::vector<IndexPair> pairs;
    for (int i = 0; i < o.size(); ++i)
        for (int j = 0; j < o.size(); ++j)
            if (o.strictly_less(i, j))
                pairs.emplace_back(i, j);
    return pairs;
}

// The induced order as a T/F grid, reusing the table layout.
std::string render_order_grid(const OrderRelation& o) {
    std::vector<IndexPair> pairs;
    for (int i = 0; i < o.size(); ++i)
        for (int j = 0; j < o.size(); ++j)
            if (o.leq(i, j))
                pairs.emplace_back(i, j);
    return render_table(BoolRelation(o.ground(), pairs));
}

std::string order_failure_message(const GroundSet& g, const OrderReport& rep) {
    if (!rep.reflexive)
        return "not a partial order: reflexivity fails";
    if (!rep.antisymmetric.pass)
        return "not a partial order: antisymmetry fails at " +
               pair_str(g, *rep.antisymmetric.witness);
    return "not a partial order: transitivity fails at " + triple_str(g, *rep.transitive.witness);
}

// ---- commands ----------------------------------------------------------------

int cmd_validate(const Args& args) {
    const std::string format = pick_format(args, {"text", "kv"});
    const BoolRelation r = read_relation(args);
    const AxiomReport rep = check_disjunctive(r);
    if (format == "kv")
        emit_axioms_kv(std::cout, r.ground(), rep);
    else
        emit_axioms_text(std::cout, r.ground(), rep);
    return rep.disjunctive ? kExitPass : fail("relation is not disjunctive");
}

int cmd_order(const Args& args) {
    const std::string format = pick_format(args, {"text", "kv"});
    const BoolRelation r = read_relation(args);
    const AxiomReport axioms = check_disjunctive(r);
    const OrderRelation o = induced_order(r);
    const OrderReport rep = verify_partial_order(o);
    const GroundSet& g = r.ground();

    if (format == "kv") {
        emit_axioms_kv(std::cout, g, axioms);
        std::cout << "order.reflexive=" << pf(rep.reflexive) << "\n";
        std::cout << "order.antisymmetric=" << pf(rep.antisymmetric.pass) << "\n";
        if (!rep.antisymmetric.pass)
            std::cout << "witness.antisymmetric=" << pair_str(g, *rep.antisymmetric.witness)
                      << "\n";
        std::cout << "order.transitive=" << pf(rep.transitive.pass) << "\n";
        if (!rep.transitive.pass)
            std::cout << "witness.transitive=" << triple_str(g, *rep.transitive.witness) << "\n";
        std::cout << "order.partial=" << (rep.partial_order ? "true" : "false") << "\n";
        std::cout << "order.strict=";
        bool first = true;
        for (const auto& p : strict_pairs(o)) {
            if (!first)
                std::cout << ",";
            std::cout << pair_str(g, p);
            first = false;
        }
        std::cout << "\n";
    } else {
        std::cout << render_order_grid(o);
        std::cout << "reflexive: " << pf(rep.reflexive) << "\n";
        std::cout << "antisymmetric: " << pf(rep.antisymmetric.pass);
        if (!rep.antisymmetric.pass)
            std::cout << " (witness " << pair_str(g, *rep.antisymmetric.witness) << ")";
        std::cout << "\ntransitive: " << pf(rep.transitive.pass);
        if (!rep.transitive.pass)
            std::cout << " (witness " << triple_str(g, *rep.transitive.witness) << ")";
        std::cout << "\npartial-order: " << (rep.partial_order ? "true" : "false") << "\n";
        std::cout << "strict-pairs:";
        for (const auto& p : strict_pairs(o))
            std::cout << " " << pair_str(g, p);
        std::cout << "\n";
    }
    return rep.partial_order ? kExitPass : fail(order_failure_message(g, rep));
}

int cmd_hasse(const Args& args) {
    pick_format(args, {"dot"});
    const BoolRelation r = read_relation(args);
    const AxiomReport axioms = check_disjunctive(r);
    const OrderRelation o = induced_order(r);
    const OrderReport rep = verify_partial_order(o);
    if (!rep.partial_order)
        return fail(order_failure_message(r.ground(), rep));
    std::cout << to_dot(hasse_diagram(o), axioms);
    return kExitPass;
}

int cmd_table(const Args& args) {
    pick_format(args, {"text"});
    const BoolRelation r = read_relation(args);
    const std::string table = render_table(r);
    std::cout << table;
    if (!args.check)
        return kExitPass;
    const TableProperties props = scan_table(table);
    std::cout << "\n";
    std::cout << "diagonal-all-false: " << (props.diagonal_all_false ? "true" : "false") << "\n";
    std::cout << "transpose-symmetric: " << (props.transpose_symmetric ? "true" : "false") << "\n";
    std::cout << "rows-distinct: " << (props.rows_distinct ? "true" : "false") << "\n";
    return props.all() ? kExitPass : fail("table properties violated");
}

int cmd_gen(const Args& args) {
    if (args.positional.size() != 1)
        throw UsageError("gen expects exactly one generator name");
    const std::string& name = args.positional[0];
    std::optional<BoolRelation> rel;
    if (name == "inequality") {
        reject_unknown_params(args, {"n"});
        rel = gen_inequality(param_int(args, "n"));
    } else if (name == "powerset-disjoint") {
        reject_unknown_params(args, {"m", "include_empty"});
        rel = gen_powerset_disjoint(param_int(args, "m"), param_bool(args, "include_empty", false));
    } else if (name == "pair") {
        reject_unknown_params(args, {"n", "i", "j"});
        rel = gen_pair(param_int(args, "n"), param_int(args, "i"), param_int(args, "j"));
    } else if (name == "section2") {
        reject_unknown_params(args, {});
        rel = gen_example_abc();
    } else {
        throw UsageError("unknown generator '" + name + "'");
    }
    std::cout << format_relation(*rel);
    return kExitPass;
}

int cmd_enumerate(const Args& args) {
    reject_unknown_params(args, {"n"});
    const int n = param_int(args, "n");
    // the mode is spelled either --mode <m> or as a bare word
    std::string mode = args.mode;
    if (!args.positional.empty()) {
        if (args.positional.size() > 1 || !mode.empty())
            throw UsageError("enumerate takes a single mode");
        mode = args.positional[0];
    }
    if (mode.empty())
        mode = "count";

    if (mode == "count") {
        std::cout << count_labeled(n) << "\n";
    } else if (mode == "list") {
        bool first = true;
        enumerate_labeled(n, [&](EdgeMask, const BoolRelation& r) {
            if (!first)
                std::cout << "\n";
            std::cout << format_relation(r);
            first = false;
        });
    } else if (mode == "classes") {
        const EnumerationResult result = enumerate_classes(n);
        std::cout << result.classes.size() << "\n";
        for (const auto& cls : result.classes) {
            std::cout << "\n";
            std::cout << format_relation(relation_from_mask(n, cls.canonical));
        }
    } else {
        throw UsageError("unsupported --mode '" + mode + "' (expected count, list or classes)");
    }
    return kExitPass;
}

int cmd_verify_props(const Args& args) {
    reject_unknown_params(args, {"n_max"});
    if (!args.positional.empty())
        throw UsageError("verify-props takes no positional arguments");
    const int n_max = param_int(args, "n_max");
    if (n_max < 1 || n_max > 5)
        throw std::invalid_argument("verify-props requires 1 <= n_max <= 5, got " +
                                    std::to_string(n_max));

    bool all_pass = true;
    for (int n = 1; n <= n_max; ++n) {
        bool pairs_distinct = true;   // related elements are distinct
        bool downward_closed = true;  // relatedness propagates down the order
        bool partial_order = true;    // induced order satisfies all three axioms
        const std::uint64_t relations =
            enumerate_labeled(n, [&](EdgeMask, const BoolRelation& r) {
                for (int i = 0; i < n; ++i)
                    if (r.related(i, i))
                        pairs_distinct = false;
                if (!check_downward_closure(r).pass)
                    downward_closed = false;
                if (!verify_partial_order(induced_order(r)).partial_order)
                    partial_order = false;
            });
        std::cout << "n=" << n << " relations=" << relations
                  << " pairs-distinct=" << pf(pairs_distinct)
                  << " downward-closure=" << pf(downward_closed)
                  << " partial-order=" << pf(partial_order) << "\n";
        all_pass = all_pass && pairs_distinct && downward_closed && partial_order;
    }
    std::cout << "result=" << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? kExitPass : fail("property sweep found a counterexample");
}

int dispatch(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "disjrel: error: missing command (try --help)\n";
        return kExitError;
    }
    const std::string command = argv[1];
    if (command == "--help" || command == "-h" || command == "help") {
        std::cout << kUsage;
        return kExitPass;
    }
    const Args args = parse_args({argv + 2, argv + argc});

    if (command == "validate")
        return cmd_validate(args);
    if (command == "order")
        return cmd_order(args);
    if (command == "hasse")
        return cmd_hasse(args);
    if (command == "table")
        return cmd_table(args);
    if (command == "gen")
        return cmd_gen(args);
    if (command == "enumerate")
        return cmd_enumerate(args);
    if (command == "verify-props")
        return cmd_verify_props(args);
    throw UsageError("unknown command '" + command + "'");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "disjrel: error: " << e.what() << "\n";
        return kExitError;
    }
}
