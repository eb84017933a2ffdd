#ifndef SYMRIG_RATIONAL_HPP
#define SYMRIG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace symrig {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalRow = std::vector<Rational>;
using RationalMatrix = std::vector<RationalRow>;

/// Exact rank. Rows are cleared of denominators and eliminated fraction-free
/// (Bareiss), so intermediate entries stay polynomial in size.
std::size_t rational_rank(const RationalMatrix& rows);

/// Incremental exact elimination for picking out independent row subsets.
class RationalEliminator {
public:
    /// True iff the row is independent of everything added so far (dependent
    /// rows are not retained).
    bool add(RationalRow row);
    std::size_t rank() const { return basis_.size(); }

private:
    struct BasisRow {
        RationalRow row;
        std::size_t pivot;
    };
    std::vector<BasisRow> basis_;
};

}  // namespace symrig

#endif
