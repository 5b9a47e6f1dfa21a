#include "disjrel/ground_set.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace disjrel {

std::vector<std::string> default_labels(int size) {
    std::vector<std::string> labels;
    labels.reserve(size > 0 ? static_cast<std::size_t>(size) : 0);
    for (int i = 0; i < size; ++i)
        labels.push_back("x" + std::to_string(i));
    return labels;
}

namespace {

void validate_label(const std::string& label) {
    if (label.empty())
        throw std::invalid_argument("ground set label must be nonempty");
    if (label == "-")
        throw std::invalid_argument("ground set label \"-\" is reserved");
    for (char c : label) {
        if (std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument("ground set label '" + label + "' contains whitespace");
        if (c == '"')
            throw std::invalid_argument("ground set label '" + label + "' contains '\"'");
    }
}

} // namespace

GroundSet::GroundSet(int size) : GroundSet(size, default_labels(size)) {}

GroundSet::GroundSet(int size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
    if (size < 1)
        throw std::invalid_argument("ground set must be nonempty (size >= 1), got " +
                                    std::to_string(size));
    if (static_cast<int>(labels_.size()) != size)
        throw std::invalid_argument("expected " + std::to_string(size) + " labels, got " +
                                    std::to_string(labels_.size()));
    std::unordered_set<std::string> seen;
    for (const auto& label : labels_) {
        validate_label(label);
        if (!seen.insert(label).second)
            throw std::invalid_argument("duplicate ground set label '" + label + "'");
    }
}

bool GroundSet::has_default_labels() const {
    return labels_ == default_labels(size_);
}

} // namespace disjrel
