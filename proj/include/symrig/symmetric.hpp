#ifndef SYMRIG_SYMMETRIC_HPP
#define SYMRIG_SYMMETRIC_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symrig/core.hpp"
#include "symrig/cycles.hpp"

namespace symrig {

/// A fixed-point-free pairing on a vertex subset X.
class Involution {
public:
    Involution() = default;
    static Involution from_pairs(
        const std::vector<std::pair<VertexId, VertexId>>& pairs);

    bool in_domain(VertexId v) const { return map_.count(v) > 0; }
    VertexId image(VertexId v) const;
    Face image(const Face& f) const;  // starred face; all vertices must be in X
    std::set<VertexId> domain() const;
    /// Canonical pair list, each pair once with smaller id first.
    std::vector<std::pair<VertexId, VertexId>> pairs() const;
    std::size_t domain_size() const { return map_.size(); }

    /// Restriction to X_W = (X ∩ W) ∩ (X ∩ W)*: keeps a vertex only if its
    /// partner also lies in W.
    Involution restricted(const std::set<VertexId>& W) const;

    /// True if no edge of g joins a vertex to its partner.
    bool non_adjacent_on(const Graph& g) const;
    /// True if * maps V(g) onto itself and preserves edges.
    bool is_automorphism_of(const Graph& g) const;

    bool operator==(const Involution&) const = default;

private:
    std::map<VertexId, VertexId> map_;
};

Involution induced_pairing(const Involution& sigma, const std::set<VertexId>& W);

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A complex together with a free simplicial involution total on V(S).
struct SymmetricComplex {
    MultiComplex complex;
    Involution involution;
};

/// Checks facet-multiset invariance and freeness on every face; throws a
/// ValidationError naming a witness otherwise.
SymmetricComplex validate(const MultiComplex& S, const Involution& sigma);

enum class IrreducibleKind {
    NotZ2Cycle,          // not a cycle, or reducible
    TrivialIrreducible,  // two disjoint trivial circuits swapped by *
    Circuit,
    SplitPair,  // S = T ⊔ T* for a nontrivial circuit T
};

struct IrreducibleClassification {
    IrreducibleKind kind;
    std::optional<MultiComplex> split_part;  // T, when kind == SplitPair
    int overlap = -1;                        // h = |V(T) ∩ V(T*)|
};

IrreducibleClassification classify(const SymmetricComplex& S);
bool is_z2_irreducible(const SymmetricComplex& S);

/// Partition of facet-occurrence indices into minimal *-invariant cycles.
/// star_of maps each occurrence index to the occurrence of its starred facet.
std::vector<std::vector<std::size_t>> partition_z2_irreducible_indices(
    const std::vector<Face>& occurrences, const std::vector<std::size_t>& star_of);

/// Occurrence-level star map pairing the i-th copy of F with the i-th copy
/// of F*; throws ValidationError if multiplicities do not match.
std::vector<std::size_t> occurrence_star_map(const std::vector<Face>& occurrences,
                                             const Involution& sigma);

struct MinVertexReport {
    bool passed = false;
    bool equality = false;
    bool trivial_case = false;
    bool crosspolytope = false;
    std::string detail;
};

/// |V(S)| >= 2k+2, with the equality cases recognised.
MinVertexReport min_vertex_count_check(const SymmetricComplex& S);

enum class SeparatorDichotomy { SplitPairOverlap, CrosspolytopeGraph, Unresolved };

struct SeparatorResult {
    std::set<VertexId> separator;
    SeparatorDichotomy dichotomy;
};

/// Exhaustive search over *-invariant vertex subsets of size <= bound for an
/// inclusion-minimal separator of G(S). Requires bound <= 2k.
std::optional<SeparatorResult> invariant_separator(const SymmetricComplex& S,
                                                   int bound);

/// max{2(k-t), k+1, 2t}
int c_threshold(int k, int t);

struct MainTheoremReport {
    bool cond_ii = false;
    bool cond_iii = false;
    bool agree = false;
    int threshold = 0;
    IrreducibleClassification classification;
    std::optional<std::set<VertexId>> small_separator;  // witness when (iii) fails
};

/// Verdicts (ii) and (iii) of the main classification theorem; the two must
/// agree on every valid input.
MainTheoremReport main_theorem_conditions(const SymmetricComplex& S, int t);

}  // namespace symrig

#endif
