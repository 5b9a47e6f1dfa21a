#ifndef DISJREL_BITSET_HPP
#define DISJREL_BITSET_HPP

#include <cassert>
#include <cstdint>
#include <vector>

namespace disjrel {

// Fixed-width dynamic bitset backing relation rows. Width is chosen at
// construction; all binary operations require equal widths.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits)
        : nbits_(nbits), words_((static_cast<std::size_t>(nbits) + 63) / 64, 0) {
        assert(nbits >= 0);
    }

    int size() const { return nbits_; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u;
    }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
    }

    bool is_subset_of(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~other.words_[w])
                return false;
        return true;
    }

    bool operator==(const Bitset&) const = default;

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace disjrel

#endif
