#include "disjrel/relation.hpp"

#include <sstream>
#include <stdexcept>

namespace disjrel {

BoolRelation::BoolRelation(GroundSet ground, const std::vector<IndexPair>& pairs)
    : ground_(std::move(ground)),
      rows_(static_cast<std::size_t>(ground_.size()), Bitset(ground_.size())) {
    const int n = ground_.size();
    for (auto [i, j] : pairs) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") out of range for ground set of size " +
                                        std::to_string(n));
        rows_[static_cast<std::size_t>(i)].set(j);
    }
}

BoolRelation::BoolRelation(GroundSet ground, std::vector<Bitset> rows)
    : ground_(std::move(ground)), rows_(std::move(rows)) {
    const int n = ground_.size();
    if (static_cast<int>(rows_.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " rows, got " +
                                    std::to_string(rows_.size()));
    for (const auto& row : rows_)
        if (row.size() != n)
            throw std::invalid_argument("row width does not match ground set size " +
                                        std::to_string(n));
}

ElementCheck check_irreflexive(const BoolRelation& r) {
    for (int i = 0; i < r.size(); ++i)
        if (r.related(i, i))
            return {false, i};
    return {};
}

PairCheck check_symmetric(const BoolRelation& r) {
    for (int i = 0; i < r.size(); ++i)
        for (int j = 0; j < r.size(); ++j)
            if (r.related(i, j) && !r.related(j, i))
                return {false, IndexPair{i, j}};
    return {};
}

PairCheck check_extensional(const BoolRelation& r) {
    for (int i = 0; i < r.size(); ++i)
        for (int j = i + 1; j < r.size(); ++j)
            if (r.row(i) == r.row(j))
                return {false, IndexPair{i, j}};
    return {};
}

AxiomReport check_disjunctive(const BoolRelation& r) {
    AxiomReport report;
    report.extensional = check_extensional(r);
    report.symmetric = check_symmetric(r);
    report.irreflexive = check_irreflexive(r);
    report.disjunctive =
        report.extensional.pass && report.symmetric.pass && report.irreflexive.pass;
    return report;
}

namespace {

void append_padded(std::string& line, const std::string& cell, std::size_t width) {
    line += cell;
    if (cell.size() < width)
        line.append(width - cell.size(), ' ');
}

void trim_and_push(std::string& out, std::string& line) {
    while (!line.empty() && line.back() == ' ')
        line.pop_back();
    out += line;
    out += '\n';
    line.clear();
}

} // namespace

std::string render_table(const BoolRelation& r) {
    const GroundSet& g = r.ground();
    const int n = g.size();

    std::size_t head_width = 0;
    for (int i = 0; i < n; ++i)
        head_width = std::max(head_width, g.label(i).size());
    std::vector<std::size_t> col_width(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        col_width[static_cast<std::size_t>(j)] = std::max<std::size_t>(1, g.label(j).size());

    std::string out;
    std::string line;
    append_padded(line, "", head_width);
    for (int j = 0; j < n; ++j) {
        line += ' ';
        append_padded(line, g.label(j), col_width[static_cast<std::size_t>(j)]);
    }
    trim_and_push(out, line);

    for (int i = 0; i < n; ++i) {
        append_padded(line, g.label(i), head_width);
        for (int j = 0; j < n; ++j) {
            line += ' ';
            append_padded(line, r.related(i, j) ? "T" : "F",
                          col_width[static_cast<std::size_t>(j)]);
        }
        trim_and_push(out, line);
    }
    return out;
}

TableProperties scan_table(const std::string& table_text) {
    std::istringstream in(table_text);
    std::string line;

    if (!std::getline(in, line))
        throw std::invalid_argument("table text is empty");
    std::istringstream header(line);
    std::vector<std::string> col_labels;
    for (std::string tok; header >> tok;)
        col_labels.push_back(tok);
    const std::size_t n = col_labels.size();
    if (n == 0)
        throw std::invalid_argument("table header has no labels");

    std::vector<std::string> row_labels;
    std::vector<std::string> cells; // row i as a string of 'T'/'F'
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::string label;
        row >> label;
        std::string body;
        for (std::string tok; row >> tok;) {
            if (tok != "T" && tok != "F")
                throw std::invalid_argument("table cell must be T or F, got '" + tok + "'");
            body += tok;
        }
        if (body.size() != n)
            throw std::invalid_argument("table row '" + label + "' has " +
                                        std::to_string(body.size()) + " cells, expected " +
                                        std::to_string(n));
        row_labels.push_back(label);
        cells.push_back(body);
    }
    if (cells.size() != n)
        throw std::invalid_argument("table has " + std::to_string(cells.size()) +
                                    " rows, expected " + std::to_string(n));
    if (row_labels != col_labels)
        throw std::invalid_argument("table row labels do not match column labels");

    TableProperties props;
    props.diagonal_all_false = true;
    for (std::size_t i = 0; i < n; ++i)
        if (cells[i][i] != 'F')
            props.diagonal_all_false = false;

    props.transpose_symmetric = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (cells[i][j] != cells[j][i])
                props.transpose_symmetric = false;

    props.rows_distinct = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cells[i] == cells[j])
                props.rows_distinct = false;

    return props;
}

} // namespace disjrel
