#ifndef SYMRIG_FOGELSANGER_HPP
#define SYMRIG_FOGELSANGER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symrig/core.hpp"
#include "symrig/cycles.hpp"
#include "symrig/symmetric.hpp"

namespace symrig {

/// Decomposition of a circuit (or invariant cycle) at an edge uv. `parts`
/// holds the augmented pieces Sᵢ⁺, `raw_parts` the pulled-back pieces Sᵢ,
/// `contracted_parts` the pieces Sᵢ′ of the contraction, and `dagger_parts`
/// the added clique faces Sᵢ†. In the symmetric case the edge is xy and the
/// starred copies (Sᵢ†)* are merged into `parts` but not into `dagger_parts`.
struct FogDecomposition {
    MultiComplex base;
    VertexId u = -1;
    VertexId v = -1;
    std::vector<MultiComplex> parts;
    std::vector<MultiComplex> raw_parts;
    std::vector<MultiComplex> contracted_parts;
    std::vector<MultiComplex> dagger_parts;
    bool symmetric = false;
    std::optional<Involution> involution;
    std::uint64_t seed = 0;

    std::size_t m() const { return parts.size(); }
};

struct PropertyCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct PropertyReport {
    std::vector<PropertyCheck> checks;
    bool all_passed() const;
    const PropertyCheck* find(const std::string& name) const;
};

/// Decomposition of a nontrivial circuit S at an edge uv: contract v onto u,
/// split the contraction into circuits, pull back, augment each piece with
/// its clique faces.
FogDecomposition fog_decompose(const MultiComplex& S, VertexId u, VertexId v,
                               std::uint64_t seed = 0);

/// Checks properties (a)-(f) of the decomposition lemma. Property (f) is
/// exponential in the number of parts and capped at m <= 12.
PropertyReport verify_fog_properties(const FogDecomposition& D);

/// Symmetric decomposition of a nontrivial invariant irreducible cycle at xy.
/// Requires xy in E and xy* not in E; contracts xy and x*y* together and
/// splits into minimal invariant cycles.
FogDecomposition z2_fog_decompose(const SymmetricComplex& S, VertexId x,
                                  VertexId y, std::uint64_t seed = 0);

/// Checks properties (a)-(g) of the symmetric decomposition lemma. Property
/// (g) backtracks exhaustively when the greedy order fails; capped at m <= 12.
PropertyReport verify_z2_fog_properties(const FogDecomposition& D,
                                        const Involution& sigma);

/// For each part whose contracted piece splits as T' ⊔ T'* with overlap
/// h' <= 2k-2 (h' = 0 for the trivial pattern), asserts the part itself
/// splits with overlap h <= h' + 2. Other parts are reported not applicable.
PropertyReport overlap_growth_check(const FogDecomposition& D,
                                    const Involution& sigma);

}  // namespace symrig

#endif
