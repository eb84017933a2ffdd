#include "symrig/gf2.hpp"

#include <algorithm>
#include <bit>

namespace symrig {

std::size_t Gf2Vec::lowest() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    return bits_;
}

namespace {

// symmetric difference of two sorted index lists
std::vector<std::size_t> sym_diff(const std::vector<std::size_t>& a,
                                  const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> Gf2Eliminator::add(Gf2Vec row) {
    std::vector<std::size_t> combo;
    for (const BasisRow& b : basis_) {
        if (row.test(b.pivot)) {
            row ^= b.row;
            combo = sym_diff(combo, b.combo_idx);
        }
    }
    std::size_t idx = added_++;
    if (!row.any()) return combo;

    BasisRow b;
    b.pivot = row.lowest();
    b.row = std::move(row);
    b.combo_idx = sym_diff(combo, {idx});
    basis_.push_back(std::move(b));
    return std::nullopt;
}

std::size_t gf2_rank(const std::vector<Gf2Vec>& rows) {
    Gf2Eliminator e;
    for (const Gf2Vec& r : rows) e.add(r);
    return e.rank();
}

}  // namespace symrig
