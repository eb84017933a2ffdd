#include "symrig/rational.hpp"

#include <utility>

namespace symrig {

std::size_t rational_rank(const RationalMatrix& rows) {
    if (rows.empty()) return 0;
    std::size_t ncols = rows.front().size();

    std::vector<std::vector<Int>> a;
    a.reserve(rows.size());
    for (const auto& row : rows) {
        Int lcm = 1;
        for (const auto& x : row) {
            Int den = boost::multiprecision::denominator(x);
            lcm = boost::multiprecision::lcm(lcm, den);
        }
        std::vector<Int> r;
        r.reserve(ncols);
        for (const auto& x : row)
            r.push_back(boost::multiprecision::numerator(x) *
                        (lcm / boost::multiprecision::denominator(x)));
        a.push_back(std::move(r));
    }

    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < ncols && rank < a.size(); ++col) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][col] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

bool RationalEliminator::add(RationalRow row) {
    for (const auto& b : basis_) {
        const Rational& c = row[b.pivot];
        if (c == 0) continue;
        for (std::size_t j = 0; j < row.size(); ++j) row[j] -= c * b.row[j];
    }
    std::size_t pivot = row.size();
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot == row.size()) return false;
    Rational inv = row[pivot];
    for (auto& x : row) x /= inv;
    basis_.push_back({std::move(row), pivot});
    return true;
}

}  // namespace symrig
