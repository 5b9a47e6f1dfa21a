#include "disjrel/text_format.hpp"

#include <istream>
#include <sstream>

namespace disjrel {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> split_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

bool blank(const std::string& s) {
    for (char c : s)
        if (c != ' ' && c != '\t')
            return false;
    return true;
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;)
        out.push_back(tok);
    return out;
}

int parse_count(const std::string& line) {
    const auto toks = tokens(line);
    if (toks.size() != 1)
        throw ParseError(1, "expected the element count");
    const std::string& tok = toks[0];
    std::size_t pos = 0;
    long n = 0;
    try {
        n = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(1, "invalid element count '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(1, "invalid element count '" + tok + "'");
    if (n < 1)
        throw ParseError(1, "element count must be at least 1, got " + tok);
    return static_cast<int>(n);
}

GroundSet parse_ground(int n, const std::string& line) {
    auto toks = tokens(line);
    if (toks.size() == 1 && toks[0] == "-")
        return GroundSet(n);
    if (static_cast<int>(toks.size()) != n)
        throw ParseError(2, "expected \"-\" or " + std::to_string(n) + " labels, got " +
                                std::to_string(toks.size()));
    try {
        return GroundSet(n, std::move(toks));
    } catch (const std::invalid_argument& e) {
        throw ParseError(2, e.what());
    }
}

} // namespace

BoolRelation parse_relation(std::istream& in) {
    const auto lines = split_lines(in);

    if (lines.empty() || blank(lines[0]))
        throw ParseError(1, "expected the element count");
    const int n = parse_count(lines[0]);

    if (lines.size() < 2)
        throw ParseError(2, "expected the label line");
    GroundSet ground = parse_ground(n, lines[1]);

    std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(n));
    for (int i = 0; i < n; ++i) {
        const int line_no = i + 3;
        if (static_cast<std::size_t>(i) + 2 >= lines.size())
            throw ParseError(line_no, "expected relation row " + std::to_string(i + 1) + " of " +
                                          std::to_string(n));
        const std::string& row = lines[static_cast<std::size_t>(i) + 2];
        if (static_cast<int>(row.size()) != n)
            throw ParseError(line_no, "row has " + std::to_string(row.size()) +
                                          " cells, expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) {
            switch (row[static_cast<std::size_t>(j)]) {
            case 'T':
            case '1':
                rows[static_cast<std::size_t>(i)].set(j);
                break;
            case 'F':
            case '0':
                break;
            default:
                throw ParseError(line_no, std::string("invalid cell '") +
                                              row[static_cast<std::size_t>(j)] +
                                              "' (expected T, F, 1 or 0)");
            }
        }
    }

    for (std::size_t k = static_cast<std::size_t>(n) + 2; k < lines.size(); ++k)
        if (!blank(lines[k]))
            throw ParseError(static_cast<int>(k) + 1, "trailing content after relation rows");

    return BoolRelation(std::move(ground), std::move(rows));
}

BoolRelation parse_relation(const std::string& text) {
    std::istringstream in(text);
    return parse_relation(in);
}

std::string format_relation(const BoolRelation& r) {
    const GroundSet& g = r.ground();
    const int n = g.size();

    std::string out = std::to_string(n);
    out += '\n';
    if (g.has_default_labels()) {
        out += '-';
    } else {
        for (int i = 0; i < n; ++i) {
            if (i > 0)
                out += ' ';
            out += g.label(i);
        }
    }
    out += '\n';
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            out += r.related(i, j) ? 'T' : 'F';
        out += '\n';
    }
    return out;
}

} // namespace disjrel
