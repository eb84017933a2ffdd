#ifndef SYMRIG_GF2_HPP
#define SYMRIG_GF2_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace symrig {

/// Bit-packed GF(2) row vector.
class Gf2Vec {
public:
    Gf2Vec() = default;
    explicit Gf2Vec(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    bool test(std::size_t i) const {
        return (words_[i / 64] >> (i % 64)) & 1u;
    }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    Gf2Vec& operator^=(const Gf2Vec& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    /// Index of the lowest set bit; size() if zero.
    std::size_t lowest() const;

    bool operator==(const Gf2Vec&) const = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Incremental GF(2) elimination. Rows are added one at a time; a dependent
/// row is reported together with the set of previously added rows whose sum
/// equals it. If the previously added rows were all independent, that set
/// plus the new row is a minimal dependent set (a matroid circuit).
class Gf2Eliminator {
public:
    /// Returns std::nullopt if the row is independent of everything added so
    /// far; otherwise the indices (in addition order) of a combination.
    std::optional<std::vector<std::size_t>> add(Gf2Vec row);

    std::size_t rank() const { return basis_.size(); }
    std::size_t rows_added() const { return added_; }

private:
    struct BasisRow {
        Gf2Vec row;
        std::vector<std::size_t> combo_idx;  // sorted added-row indices
        std::size_t pivot;
    };
    std::vector<BasisRow> basis_;
    std::size_t added_ = 0;
};

std::size_t gf2_rank(const std::vector<Gf2Vec>& rows);

}  // namespace symrig

#endif
