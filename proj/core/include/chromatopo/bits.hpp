#pragma once

#include <cstdint>
#include <vector>

namespace chromatopo {

// Fixed-width bit vector backed by 64-bit words. Used for graph adjacency
// rows and for dense GF(2) linear algebra.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    bool test(int i) const {
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void flip(int i) { words_[static_cast<std::size_t>(i) >> 6] ^= std::uint64_t(1) << (i & 63); }

    void xor_with(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    }
    void and_with(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    }
    void or_with(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    // Index of the lowest set bit, or -1.
    int first_set() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64) + __builtin_ctzll(words_[i]);
        return -1;
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(static_cast<int>(i * 64) + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
        return out;
    }

    bool operator==(const BitVec&) const = default;

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Rank of a GF(2) matrix given as bit rows (rows are consumed by elimination).
int gf2_rank(std::vector<BitVec> rows);

// Whether `target` lies in the GF(2) span of `rows`.
bool gf2_in_span(std::vector<BitVec> rows, BitVec target);

}  // namespace chromatopo
