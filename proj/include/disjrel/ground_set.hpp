#ifndef DISJREL_GROUND_SET_HPP
#define DISJREL_GROUND_SET_HPP

#include <string>
#include <vector>

namespace disjrel {

// Default element labels "x0".."x{n-1}".
std::vector<std::string> default_labels(int size);

// Finite indexed universe. Elements are the indices 0..size-1; labels are
// presentation only. Labels must be nonempty, pairwise distinct, free of
// whitespace and '"', and not the literal "-" (reserved by the text format).
class GroundSet {
public:
    explicit GroundSet(int size);
    GroundSet(int size, std::vector<std::string> labels);

    int size() const { return size_; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool has_default_labels() const;

    bool operator==(const GroundSet&) const = default;

private:
    int size_ = 0;
    std::vector<std::string> labels_;
};

} // namespace disjrel

#endif
