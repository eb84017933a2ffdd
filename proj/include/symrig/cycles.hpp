#ifndef SYMRIG_CYCLES_HPP
#define SYMRIG_CYCLES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "symrig/core.hpp"
#include "symrig/gf2.hpp"

namespace symrig {

struct CircuitDecomposition {
    std::vector<MultiComplex> parts;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool is_cycle(const MultiComplex& S);

/// {F, F} for a single face F.
bool is_trivial_circuit(const MultiComplex& S);

/// Non-empty cycle whose facet boundary rows have GF(2) rank |S| - 1; this
/// matches minimality over all proper sub-multisets.
bool is_circuit(const MultiComplex& S);

/// Greedy circuit extraction from a non-empty cycle. Deterministic for a
/// given seed; seed 0 uses the canonical facet order.
CircuitDecomposition decompose_into_circuits(const MultiComplex& S,
                                             std::uint64_t seed = 0);

/// GF(2) boundary rows for a list of facet occurrences. The column map is
/// filled with the (k-1)-face -> column assignment used.
std::vector<Gf2Vec> boundary_rows(const std::vector<Face>& occurrences,
                                  std::map<Face, std::size_t>& columns);

/// Partition of occurrence indices into circuits. Each block is a circuit of
/// the boundary-row matroid; blocks cover all indices.
std::vector<std::vector<std::size_t>> partition_circuit_indices(
    const std::vector<Face>& occurrences, std::uint64_t seed = 0);

}  // namespace symrig

#endif
