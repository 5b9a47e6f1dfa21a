#ifndef DISJREL_TEXT_FORMAT_HPP
#define DISJREL_TEXT_FORMAT_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "disjrel/relation.hpp"

namespace disjrel {

// Failure while reading the relation text format; line numbers are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

// Relation text format:
//   line 1:        element count n (n >= 1)
//   line 2:        "-" for default labels, or n whitespace-separated
//                  distinct labels
//   lines 3..n+2:  n cells each from {T, F, 1, 0}; cell j of row i is i <> j
// The trailing newline is optional; any other content is a ParseError
// carrying the offending line number.
BoolRelation parse_relation(std::istream& in);
BoolRelation parse_relation(const std::string& text);

// Canonical writer: T/F cells, "-" label line when labels are the defaults,
// newline after every line. parse_relation(format_relation(r)) == r.
std::string format_relation(const BoolRelation& r);

} // namespace disjrel

#endif
