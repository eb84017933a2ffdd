#ifndef SYMRIG_RIGIDITY_HPP
#define SYMRIG_RIGIDITY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symrig/core.hpp"
#include "symrig/rational.hpp"
#include "symrig/symmetric.hpp"

namespace symrig {

/// The order-2 point group generated by the diagonal matrix with first t
/// entries +1 and the remaining d-t entries -1.
struct PointGroup {
    int t = 0;
    int d = 3;

    bool operator==(const PointGroup&) const = default;
};

struct Framework {
    Graph graph;
    std::map<VertexId, RationalRow> coords;
    int d = 0;
};

/// A framework whose paired vertices satisfy p(u*) = I_{t,d} p(u) exactly.
struct GammaFramework {
    Framework framework;
    Involution pairing;
    PointGroup group;
};

enum class Confidence { Deterministic, Certified, Sampled };

struct BlockData {
    std::size_t rank_sym = 0;
    std::size_t rank_ant = 0;
    int dim_trivial_sym = 0;
    int dim_trivial_ant = 0;
};

struct RigidityReport {
    std::size_t rank = 0;
    std::size_t rows = 0;
    long dof = 0;
    int trivial_dim = 0;
    bool rigid = false;
    Confidence confidence = Confidence::Deterministic;
    std::optional<BlockData> block;
    std::vector<Face> degenerate_edges;
};

struct MaxwellBound {
    long bound = 0;
    bool hypothesis_ok = true;  // requires |V| >= 2d
};

/// Apply the group generator to a point.
RationalRow reflect(const PointGroup& g, const RationalRow& p);

/// |E| x d|V| matrix; the row of edge ij carries p(i)-p(j) in block i and
/// its negation in block j. Vertex blocks follow the sorted vertex order.
RationalMatrix rigidity_matrix(const Framework& F);

/// Evaluated basis of motions of the form v -> S v + c with S skew: d
/// translations followed by the C(d,2) rotation generators.
RationalMatrix trivial_motions(const Framework& F);

int affine_span_dim(const std::vector<RationalRow>& points);

/// Exact rank test. Throws PreconditionError when the affine span of the
/// coordinates has dimension < d-1 (the rank criterion assumes otherwise).
RigidityReport is_inf_rigid(const Framework& F);

Framework sample_generic(const Graph& G, int d, std::uint64_t seed);

/// One random representative per orbit, partner set to I_{t,d} p(u).
/// Unpaired vertices are sampled independently.
GammaFramework sample_gamma_generic(const Graph& G, const Involution& sigma,
                                    const PointGroup& group, std::uint64_t seed);

/// Best rank over `trials` symmetric samples. A rigid verdict is exact; a
/// flexible verdict is Certified when the symmetric Maxwell count already
/// forbids rigidity and Sampled otherwise.
RigidityReport is_gamma_rigid(const Graph& G, const Involution& sigma,
                              const PointGroup& group, int trials = 3,
                              std::uint64_t seed = 1);

/// d n - 2 min{C(t+1,2)+C(d-t,2), C(d+1,2)-C(t+1,2)-C(d-t,2)}
MaxwellBound symmetric_maxwell_bound(const PointGroup& group, int n);

/// Ranks of the rigidity matrix restricted to the symmetric and the
/// anti-symmetric motion subspaces, plus the dimensions of their
/// intersections with the trivial motions. Requires the pairing to be total
/// on V and an automorphism.
BlockData symmetric_block_split(const GammaFramework& GF);

/// dim aff(P union gamma(P)), exactly.
int affine_span_dim_symmetric(const std::vector<RationalRow>& P,
                              const PointGroup& group);

struct GluingReport {
    int m = 0;            // |X_{V1} ∩ X_{V2}|
    std::size_t shared = 0;  // |V1 ∩ V2|
    long required = 0;
    bool implied = false;
};

/// Numeric hypotheses of the gluing theorem; does not test rigidity of the
/// two pieces.
GluingReport check_gluing(const Graph& G1, const Graph& G2,
                          const Involution& sigma, const PointGroup& group);

struct ConeResult {
    Framework framework;  // dimension d+1
    VertexId apex = -1;
    bool apex_in_hyperplane = false;
};

/// Embed F in the hyperplane x_{d+1} = 0 and join a new apex to everything.
ConeResult cone(const Framework& F, const RationalRow& apex);

/// Split `at` into itself and `new_vertex`: the new vertex is joined to `at`
/// and to every vertex of `along`; the edges from `at` to `transfer` move to
/// the new vertex. The symmetric variant applies the starred copy of the
/// same data with `new_vertex_star`.
struct SplitSpec {
    VertexId at = -1;
    VertexId new_vertex = -1;
    std::vector<VertexId> along;
    std::vector<VertexId> transfer;
    std::optional<VertexId> new_vertex_star;
    // starred-side data; the images of `along`/`transfer` when absent
    std::optional<std::vector<VertexId>> along_star;
    std::optional<std::vector<VertexId>> transfer_star;
};

struct WitnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Vertex split with an explicit realization: picks a direction off the
/// forbidden subspaces and shrinks the step until the rows of the new
/// rigidity matrix are independent. Requires independent rows on input.
Framework split_and_realize(const Framework& F, const SplitSpec& spec,
                            std::uint64_t seed = 1);
GammaFramework split_and_realize(const GammaFramework& F, const SplitSpec& spec,
                                 std::uint64_t seed = 1);

struct ContractionReport {
    bool hypotheses_ok = false;
    std::string failure;
    std::vector<VertexId> witness_set;  // the set C used
    RigidityReport contracted;
    bool witness_built = false;
    std::optional<GammaFramework> witness;
    bool implied_rigid = false;
};

/// Double-contraction inference: if (G/xy)/x*y* is Γ-rigid and witness sets
/// C, D exist, build and verify a Γ-rigid realization of G by a symmetric
/// double vertex split.
ContractionReport rigidity_via_contraction(const Graph& G, const Involution& sigma,
                                           VertexId x, VertexId y,
                                           const PointGroup& group,
                                           int trials = 3, std::uint64_t seed = 1);

struct PlainContractionReport {
    bool hypotheses_ok = false;
    std::string failure;
    std::vector<VertexId> witness_set;
    RigidityReport contracted;
    bool witness_built = false;
    std::optional<Framework> witness;
    bool implied_rigid = false;
};

/// Single-contraction version without a symmetry constraint.
PlainContractionReport rigidity_via_contraction(const Graph& G, VertexId x,
                                                VertexId y, int d, int trials = 3,
                                                std::uint64_t seed = 1);

}  // namespace symrig

#endif
