#include "symrig/rigidity.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "symrig/cycles.hpp"

namespace symrig {

namespace {

long binom2(long a) { return a * (a - 1) / 2; }

void check_group(const PointGroup& g) {
    if (g.d < 1 || g.t < 0 || g.t > g.d - 1)
        throw std::invalid_argument("point group requires 0 <= t <= d-1");
}

std::vector<VertexId> vertex_order(const Graph& G) {
    return {G.vertices().begin(), G.vertices().end()};
}

std::map<VertexId, std::size_t> vertex_index(const std::vector<VertexId>& vs) {
    std::map<VertexId, std::size_t> idx;
    for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = i;
    return idx;
}

const RationalRow& coord(const Framework& F, VertexId v) {
    auto it = F.coords.find(v);
    if (it == F.coords.end())
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " has no coordinates");
    return it->second;
}

RationalRow sample_point(int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-65536, 65536);
    RationalRow p(d);
    for (int k = 0; k < d; ++k) p[k] = Rational(dist(rng));
    return p;
}

std::vector<RationalRow> point_list(const Framework& F) {
    std::vector<RationalRow> pts;
    for (VertexId v : F.graph.vertices()) pts.push_back(coord(F, v));
    return pts;
}

bool symmetric_coords(const GammaFramework& GF) {
    for (auto [u, v] : GF.pairing.pairs()) {
        if (!GF.framework.graph.has_vertex(u) || !GF.framework.graph.has_vertex(v))
            continue;
        if (coord(GF.framework, v) != reflect(GF.group, coord(GF.framework, u)))
            return false;
    }
    return true;
}

std::uint64_t subseed(std::mt19937_64& master) {
    std::uint64_t s = master();
    return s ? s : 1;
}

}  // namespace

RationalRow reflect(const PointGroup& g, const RationalRow& p) {
    check_group(g);
    RationalRow q = p;
    for (int k = g.t; k < g.d && k < static_cast<int>(q.size()); ++k) q[k] = -q[k];
    return q;
}

RationalMatrix rigidity_matrix(const Framework& F) {
    const int d = F.d;
    std::vector<VertexId> vs = vertex_order(F.graph);
    auto idx = vertex_index(vs);
    RationalMatrix R;
    R.reserve(F.graph.edges().size());
    for (const Face& e : F.graph.edges()) {
        VertexId i = e.vertices()[0], j = e.vertices()[1];
        const RationalRow &pi = coord(F, i), &pj = coord(F, j);
        RationalRow row(d * vs.size());
        for (int k = 0; k < d; ++k) {
            Rational diff = pi[k] - pj[k];
            row[idx[i] * d + k] = diff;
            row[idx[j] * d + k] = -diff;
        }
        R.push_back(std::move(row));
    }
    return R;
}

RationalMatrix trivial_motions(const Framework& F) {
    const int d = F.d;
    std::vector<VertexId> vs = vertex_order(F.graph);
    RationalMatrix rows;
    for (int k = 0; k < d; ++k) {
        RationalRow row(d * vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i) row[i * d + k] = 1;
        rows.push_back(std::move(row));
    }
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            RationalRow row(d * vs.size());
            for (std::size_t i = 0; i < vs.size(); ++i) {
                const RationalRow& p = coord(F, vs[i]);
                row[i * d + a] = p[b];
                row[i * d + b] = -p[a];
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

int affine_span_dim(const std::vector<RationalRow>& points) {
    if (points.empty()) return -1;
    RationalMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RationalRow r(points[i].size());
        for (std::size_t k = 0; k < r.size(); ++k)
            r[k] = points[i][k] - points[0][k];
        diffs.push_back(std::move(r));
    }
    return static_cast<int>(rational_rank(diffs));
}

RigidityReport is_inf_rigid(const Framework& F) {
    const int d = F.d;
    const long n = static_cast<long>(F.graph.vertices().size());
    if (affine_span_dim(point_list(F)) < d - 1)
        throw PreconditionError(
            "is_inf_rigid: affine span of the configuration is below d-1");

    RigidityReport rep;
    rep.trivial_dim = static_cast<int>(rational_rank(trivial_motions(F)));
    RationalMatrix R = rigidity_matrix(F);
    rep.rows = R.size();
    rep.rank = rational_rank(R);
    {
        std::size_t r = 0;
        for (const Face& e : F.graph.edges()) {
            bool zero = true;
            for (const auto& x : R[r])
                if (x != 0) {
                    zero = false;
                    break;
                }
            if (zero) rep.degenerate_edges.push_back(e);
            ++r;
        }
    }
    long target = d * n - binom2(d + 1);
    rep.rigid = static_cast<long>(rep.rank) == target;
    rep.dof = target - static_cast<long>(rep.rank);
    rep.confidence = Confidence::Deterministic;
    return rep;
}

Framework sample_generic(const Graph& G, int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Framework F{G, {}, d};
    for (VertexId v : G.vertices()) F.coords[v] = sample_point(d, rng);
    return F;
}

GammaFramework sample_gamma_generic(const Graph& G, const Involution& sigma,
                                    const PointGroup& group, std::uint64_t seed) {
    check_group(group);
    if (!sigma.non_adjacent_on(G))
        throw PreconditionError(
            "sample_gamma_generic: pairing joins adjacent vertices");
    std::mt19937_64 rng(seed);
    Framework F{G, {}, group.d};
    for (VertexId v : G.vertices()) {
        if (sigma.in_domain(v)) {
            VertexId w = sigma.image(v);
            if (G.has_vertex(w) && w < v) {
                F.coords[v] = reflect(group, F.coords.at(w));
                continue;
            }
        }
        F.coords[v] = sample_point(group.d, rng);
    }
    return GammaFramework{std::move(F), sigma, group};
}

MaxwellBound symmetric_maxwell_bound(const PointGroup& group, int n) {
    check_group(group);
    const long t = group.t, d = group.d;
    long fixed = binom2(t + 1) + binom2(d - t);
    long bound = d * n - 2 * std::min(fixed, binom2(d + 1) - fixed);
    return {bound, n >= 2 * group.d};
}

RigidityReport is_gamma_rigid(const Graph& G, const Involution& sigma,
                              const PointGroup& group, int trials,
                              std::uint64_t seed) {
    check_group(group);
    if (!sigma.non_adjacent_on(G))
        throw PreconditionError("is_gamma_rigid: pairing joins adjacent vertices");
    const int d = group.d;
    const long n = static_cast<long>(G.vertices().size());
    const long target = d * n - binom2(d + 1);

    std::mt19937_64 master(seed);
    RigidityReport best;
    bool have = false;
    for (int trial = 0; trial < trials; ++trial) {
        GammaFramework GF{{}, sigma, group};
        bool sampled = false;
        for (int attempt = 0; attempt < 10; ++attempt) {
            GF = sample_gamma_generic(G, sigma, group, subseed(master));
            if (affine_span_dim(point_list(GF.framework)) >= d - 1) {
                sampled = true;
                break;
            }
        }
        if (!sampled)
            throw PreconditionError(
                "is_gamma_rigid: degenerate span after resampling cap");
        RigidityReport rep = is_inf_rigid(GF.framework);
        if (!have || rep.rank > best.rank) {
            best = rep;
            have = true;
        }
        if (best.rigid) break;
    }
    if (best.rigid) {
        best.confidence = Confidence::Deterministic;
        return best;
    }
    const long edges = static_cast<long>(G.edges().size());
    bool certified = edges < target;  // counting bound, no symmetry needed
    if (!certified && sigma.is_automorphism_of(G) && n >= 2 * d) {
        MaxwellBound mb = symmetric_maxwell_bound(group, static_cast<int>(n));
        certified = mb.hypothesis_ok && edges < mb.bound;
    }
    best.confidence = certified ? Confidence::Certified : Confidence::Sampled;
    return best;
}

BlockData symmetric_block_split(const GammaFramework& GF) {
    check_group(GF.group);
    const Graph& G = GF.framework.graph;
    const int d = GF.group.d, t = GF.group.t;
    for (VertexId v : G.vertices())
        if (!GF.pairing.in_domain(v))
            throw PreconditionError(
                "symmetric_block_split: pairing not total on V");
    if (!GF.pairing.is_automorphism_of(G))
        throw PreconditionError(
            "symmetric_block_split: pairing is not an automorphism");
    if (!GF.pairing.non_adjacent_on(G))
        throw PreconditionError("symmetric_block_split: pairing has fixed edges");
    if (!symmetric_coords(GF))
        throw PreconditionError(
            "symmetric_block_split: coordinates are not symmetric");

    std::vector<VertexId> vs = vertex_order(G);
    auto idx = vertex_index(vs);
    RationalMatrix R = rigidity_matrix(GF.framework);
    RationalMatrix T = trivial_motions(GF.framework);
    const std::size_t dn = d * vs.size();

    auto make_basis = [&](int sign) {
        RationalMatrix basis;
        for (auto [u, w] : GF.pairing.pairs()) {
            if (!G.has_vertex(u) || !G.has_vertex(w)) continue;
            for (int k = 0; k < d; ++k) {
                RationalRow b(dn);
                b[idx[u] * d + k] = 1;
                b[idx[w] * d + k] = Rational(sign * (k < t ? 1 : -1));
                basis.push_back(std::move(b));
            }
        }
        return basis;
    };

    auto restricted_rank = [&](const RationalMatrix& basis) {
        RationalMatrix prod;  // rows: (R b)^T over basis vectors b
        for (const auto& b : basis) {
            RationalRow rb(R.size());
            for (std::size_t r = 0; r < R.size(); ++r) {
                Rational s = 0;
                for (std::size_t c = 0; c < dn; ++c) s += R[r][c] * b[c];
                rb[r] = s;
            }
            prod.push_back(std::move(rb));
        }
        return rational_rank(prod);
    };

    auto trivial_intersection_dim = [&](const RationalMatrix& basis) {
        RationalMatrix stacked = T;
        for (const auto& b : basis) stacked.push_back(b);
        std::size_t dim_sum = rational_rank(stacked);
        return static_cast<int>(rational_rank(T) + basis.size() - dim_sum);
    };

    RationalMatrix sym = make_basis(1), ant = make_basis(-1);
    BlockData block;
    block.rank_sym = restricted_rank(sym);
    block.rank_ant = restricted_rank(ant);
    block.dim_trivial_sym = trivial_intersection_dim(sym);
    block.dim_trivial_ant = trivial_intersection_dim(ant);
    if (block.rank_sym + block.rank_ant != rational_rank(R))
        throw std::logic_error(
            "symmetric_block_split: block ranks do not sum to rank(R)");
    return block;
}

int affine_span_dim_symmetric(const std::vector<RationalRow>& P,
                              const PointGroup& group) {
    std::vector<RationalRow> all = P;
    for (const auto& p : P) all.push_back(reflect(group, p));
    return affine_span_dim(all);
}

GluingReport check_gluing(const Graph& G1, const Graph& G2,
                          const Involution& sigma, const PointGroup& group) {
    check_group(group);
    GluingReport rep;
    for (VertexId v : G1.vertices()) {
        if (!G2.has_vertex(v)) continue;
        ++rep.shared;
        if (!sigma.in_domain(v)) continue;
        VertexId w = sigma.image(v);
        if (G1.has_vertex(w) && G2.has_vertex(w)) ++rep.m;
    }
    const long d = group.d, t = group.t;
    if (rep.m > 0) {
        long half = rep.m / 2;
        rep.required = d + rep.m - 1 - std::min(half, d - t) - std::min(half - 1, t);
    } else {
        rep.required = d;
    }
    rep.implied = static_cast<long>(rep.shared) >= rep.required;
    return rep;
}

ConeResult cone(const Framework& F, const RationalRow& apex) {
    if (static_cast<int>(apex.size()) != F.d + 1)
        throw std::invalid_argument("cone: apex must have d+1 coordinates");
    ConeResult res;
    res.framework.d = F.d + 1;
    VertexId apex_id = 0;
    for (VertexId v : F.graph.vertices()) apex_id = std::max(apex_id, v + 1);
    res.apex = apex_id;
    res.apex_in_hyperplane = apex[F.d] == 0;

    Graph g = F.graph;
    g.add_vertex(apex_id);
    for (VertexId v : F.graph.vertices()) g.add_edge(apex_id, v);
    res.framework.graph = g;
    for (VertexId v : F.graph.vertices()) {
        RationalRow p = coord(F, v);
        p.push_back(0);
        res.framework.coords[v] = std::move(p);
    }
    res.framework.coords[apex_id] = apex;
    return res;
}

namespace {

Graph apply_split(const Graph& G, VertexId at, VertexId nv,
                  const std::vector<VertexId>& along,
                  const std::vector<VertexId>& transfer) {
    if (!G.has_vertex(at))
        throw PreconditionError("split: vertex not in graph");
    if (G.has_vertex(nv))
        throw PreconditionError("split: new vertex id already used");
    for (VertexId w : along)
        if (!G.has_edge(at, w))
            throw PreconditionError("split: along-vertex not adjacent");
    std::set<Face> es = G.edges();
    for (VertexId w : transfer) {
        if (es.erase(Face{at, w}) == 0)
            throw PreconditionError("split: transfer-vertex not adjacent");
        es.insert(Face{nv, w});
    }
    es.insert(Face{nv, at});
    for (VertexId w : along) es.insert(Face{nv, w});
    std::set<VertexId> vs = G.vertices();
    vs.insert(nv);
    return Graph(std::move(vs), std::move(es));
}

RationalMatrix difference_vectors(const Framework& F, VertexId at,
                                  const std::vector<VertexId>& along) {
    RationalMatrix diffs;
    const RationalRow& pu = coord(F, at);
    for (VertexId w : along) {
        RationalRow r(F.d);
        const RationalRow& pw = coord(F, w);
        for (int k = 0; k < F.d; ++k) r[k] = pw[k] - pu[k];
        diffs.push_back(std::move(r));
    }
    return diffs;
}

/// Direction independent of every listed constraint set (the i-th set must
/// stay independent when the i-th image of y is appended).
RationalRow find_direction(
    int d, const std::vector<RationalMatrix>& constraints,
    const std::vector<std::function<RationalRow(const RationalRow&)>>& images,
    std::uint64_t seed) {
    for (const auto& diffs : constraints)
        if (rational_rank(diffs) != diffs.size())
            throw PreconditionError("split: dependent difference vectors");
    auto admissible = [&](const RationalRow& y) {
        for (std::size_t i = 0; i < constraints.size(); ++i) {
            RationalMatrix m = constraints[i];
            m.push_back(images[i](y));
            if (rational_rank(m) != constraints[i].size() + 1) return false;
        }
        return true;
    };
    for (int k = 0; k < d; ++k) {
        RationalRow y(d);
        y[k] = 1;
        if (admissible(y)) return y;
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 50; ++attempt) {
        RationalRow y = sample_point(d, rng);
        if (admissible(y)) return y;
    }
    throw WitnessError("split: no admissible direction found");
}

bool rows_independent(const Framework& F) {
    RationalMatrix R = rigidity_matrix(F);
    return rational_rank(R) == R.size();
}

}  // namespace

Framework split_and_realize(const Framework& F, const SplitSpec& spec,
                            std::uint64_t seed) {
    const int d = F.d;
    if (static_cast<int>(spec.along.size()) > d - 1)
        throw PreconditionError("split: |C| must be at most d-1");
    if (!rows_independent(F))
        throw PreconditionError("split: input rows are dependent");

    Graph g = apply_split(F.graph, spec.at, spec.new_vertex, spec.along,
                          spec.transfer);
    RationalRow y = find_direction(
        d, {difference_vectors(F, spec.at, spec.along)},
        {[](const RationalRow& v) { return v; }}, seed);

    Rational eps = 1;
    for (int step = 0; step < 64; ++step, eps /= 2) {
        Framework out{g, F.coords, d};
        RationalRow q = coord(F, spec.at);
        for (int k = 0; k < d; ++k) q[k] += eps * y[k];
        out.coords[spec.new_vertex] = std::move(q);
        if (rows_independent(out)) return out;
    }
    throw WitnessError("split: scale search exhausted without a witness");
}

GammaFramework split_and_realize(const GammaFramework& F, const SplitSpec& spec,
                                 std::uint64_t seed) {
    check_group(F.group);
    const int d = F.group.d;
    if (!spec.new_vertex_star)
        throw PreconditionError("symmetric split: new_vertex_star required");
    if (static_cast<int>(spec.along.size()) > d - 1)
        throw PreconditionError("split: |C| must be at most d-1");
    if (!rows_independent(F.framework))
        throw PreconditionError("split: input rows are dependent");
    if (!symmetric_coords(F))
        throw PreconditionError("split: coordinates are not symmetric");

    const Involution& sigma = F.pairing;
    VertexId at_star = sigma.image(spec.at);
    std::vector<VertexId> along_star, transfer_star;
    if (spec.along_star)
        along_star = *spec.along_star;
    else
        for (VertexId w : spec.along) along_star.push_back(sigma.image(w));
    if (spec.transfer_star)
        transfer_star = *spec.transfer_star;
    else
        for (VertexId w : spec.transfer) transfer_star.push_back(sigma.image(w));
    if (static_cast<int>(along_star.size()) > d - 1)
        throw PreconditionError("split: |D| must be at most d-1");

    Graph g = apply_split(F.framework.graph, spec.at, spec.new_vertex,
                          spec.along, spec.transfer);
    g = apply_split(g, at_star, *spec.new_vertex_star, along_star, transfer_star);

    const PointGroup group = F.group;
    RationalRow y = find_direction(
        d,
        {difference_vectors(F.framework, spec.at, spec.along),
         difference_vectors(F.framework, at_star, along_star)},
        {[](const RationalRow& v) { return v; },
         [&group](const RationalRow& v) { return reflect(group, v); }},
        seed);

    Rational eps = 1;
    for (int step = 0; step < 64; ++step, eps /= 2) {
        Framework out{g, F.framework.coords, d};
        RationalRow q = coord(F.framework, spec.at);
        for (int k = 0; k < d; ++k) q[k] += eps * y[k];
        out.coords[*spec.new_vertex_star] = reflect(F.group, q);
        out.coords[spec.new_vertex] = std::move(q);
        if (rows_independent(out)) {
            std::vector<std::pair<VertexId, VertexId>> prs = sigma.pairs();
            prs.emplace_back(spec.new_vertex, *spec.new_vertex_star);
            return GammaFramework{std::move(out), Involution::from_pairs(prs),
                                  F.group};
        }
    }
    throw WitnessError("split: scale search exhausted without a witness");
}

namespace {

/// First (d-1)-subset of the common neighborhood with at most `cap` vertices
/// paired inside the subset.
std::optional<std::vector<VertexId>> find_witness_set(
    const std::vector<VertexId>& pool, int size, const Involution& sigma,
    int cap) {
    std::vector<VertexId> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(chosen.size()) == size) {
            int inside = 0;
            for (VertexId v : chosen)
                if (sigma.in_domain(v) &&
                    std::find(chosen.begin(), chosen.end(), sigma.image(v)) !=
                        chosen.end())
                    ++inside;
            return inside <= cap;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            chosen.push_back(pool[i]);
            if (rec(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (rec(0)) return chosen;
    return std::nullopt;
}

std::vector<VertexId> common_neighbors(const Graph& G, VertexId a, VertexId b) {
    std::vector<VertexId> out;
    for (VertexId w : G.neighbors(a))
        if (G.has_edge(b, w)) out.push_back(w);
    return out;
}

}  // namespace

ContractionReport rigidity_via_contraction(const Graph& G, const Involution& sigma,
                                           VertexId x, VertexId y,
                                           const PointGroup& group, int trials,
                                           std::uint64_t seed) {
    check_group(group);
    ContractionReport rep;
    auto fail = [&](const std::string& why) {
        rep.hypotheses_ok = false;
        rep.failure = why;
        return rep;
    };
    if (!sigma.non_adjacent_on(G)) return fail("pairing joins adjacent vertices");
    if (!sigma.in_domain(x) || !sigma.in_domain(y))
        return fail("x or y is unpaired");
    VertexId xs = sigma.image(x), ys = sigma.image(y);
    if (!G.has_edge(x, y)) return fail("xy is not an edge");
    if (!G.has_edge(xs, ys)) return fail("x*y* is not an edge");
    if (G.has_edge(x, ys) || G.has_edge(xs, y))
        return fail("xy* or x*y is an edge");

    const int d = group.d;
    auto C = find_witness_set(common_neighbors(G, x, y), d - 1, sigma, 2);
    if (!C) return fail("no witness set C in N(x) ∩ N(y)");
    auto D = find_witness_set(common_neighbors(G, xs, ys), d - 1, sigma, 2);
    if (!D) return fail("no witness set D in N(x*) ∩ N(y*)");
    rep.hypotheses_ok = true;
    rep.witness_set = *C;

    Graph Gc = G.contracted(x, y).contracted(xs, ys);
    std::set<VertexId> vc = Gc.vertices();
    Involution sigma_c = sigma.restricted(vc);

    rep.contracted = is_gamma_rigid(Gc, sigma_c, group, trials, seed);
    if (!rep.contracted.rigid) return rep;

    const long target =
        d * static_cast<long>(vc.size()) - binom2(d + 1);
    std::mt19937_64 master(seed ^ 0x9e3779b97f4a7c15ull);
    for (int attempt = 0; attempt < 10 * std::max(trials, 1); ++attempt) {
        GammaFramework GF =
            sample_gamma_generic(Gc, sigma_c, group, subseed(master));
        RationalMatrix R = rigidity_matrix(GF.framework);
        if (static_cast<long>(rational_rank(R)) != target) continue;

        // pick an independent row set J containing the witness edges
        std::vector<Face> edges(Gc.edges().begin(), Gc.edges().end());
        std::map<Face, std::size_t> row_of;
        for (std::size_t r = 0; r < edges.size(); ++r) row_of[edges[r]] = r;
        std::vector<Face> priority;
        for (VertexId w : *C) priority.push_back(Face{x, w});
        for (VertexId z : *D) priority.push_back(Face{xs, z});
        RationalEliminator elim;
        std::set<Face> J;
        bool priority_ok = true;
        for (const Face& e : priority) {
            if (!elim.add(R[row_of.at(e)])) {
                priority_ok = false;
                break;
            }
            J.insert(e);
        }
        if (!priority_ok) continue;
        for (const Face& e : edges) {
            if (static_cast<long>(elim.rank()) == target) break;
            if (J.count(e)) continue;
            if (elim.add(R[row_of.at(e)])) J.insert(e);
        }
        if (static_cast<long>(elim.rank()) != target) continue;

        GammaFramework sub{{Graph(vc, J), GF.framework.coords, d}, sigma_c,
                           group};
        SplitSpec spec;
        spec.at = x;
        spec.new_vertex = y;
        spec.new_vertex_star = ys;
        spec.along = *C;
        spec.along_star = *D;
        spec.transfer_star = std::vector<VertexId>{};
        for (const Face& e : J) {
            if (e.contains(x) && !e.contains(xs)) {
                VertexId w =
                    e.vertices()[0] == x ? e.vertices()[1] : e.vertices()[0];
                if (!G.has_edge(x, w) &&
                    std::find(C->begin(), C->end(), w) == C->end())
                    spec.transfer.push_back(w);
            }
            if (e.contains(xs) && !e.contains(x)) {
                VertexId z =
                    e.vertices()[0] == xs ? e.vertices()[1] : e.vertices()[0];
                if (!G.has_edge(xs, z) &&
                    std::find(D->begin(), D->end(), z) == D->end())
                    spec.transfer_star->push_back(z);
            }
        }
        GammaFramework witness;
        try {
            witness = split_and_realize(sub, spec, subseed(master));
        } catch (const WitnessError&) {
            continue;
        } catch (const PreconditionError&) {
            continue;
        }
        // a split along D replaces the starred transfer edges automatically;
        // extend back to the full graph and confirm the rank exactly
        Framework full{G, witness.framework.coords, d};
        long full_target =
            d * static_cast<long>(G.vertices().size()) - binom2(d + 1);
        RationalMatrix Rf = rigidity_matrix(full);
        if (static_cast<long>(rational_rank(Rf)) != full_target) continue;
        GammaFramework out{std::move(full), sigma, group};
        if (!symmetric_coords(out)) continue;
        rep.witness_built = true;
        rep.witness = std::move(out);
        rep.implied_rigid = true;
        return rep;
    }
    return rep;
}

PlainContractionReport rigidity_via_contraction(const Graph& G, VertexId x,
                                                VertexId y, int d, int trials,
                                                std::uint64_t seed) {
    PlainContractionReport rep;
    auto fail = [&](const std::string& why) {
        rep.hypotheses_ok = false;
        rep.failure = why;
        return rep;
    };
    if (!G.has_edge(x, y)) return fail("xy is not an edge");
    auto C = find_witness_set(common_neighbors(G, x, y), d - 1, Involution{},
                              d - 1);
    if (!C) return fail("no witness set C in N(x) ∩ N(y)");
    rep.hypotheses_ok = true;
    rep.witness_set = *C;

    Graph Gc = G.contracted(x, y);
    rep.contracted = is_gamma_rigid(Gc, Involution{}, PointGroup{0, d}, trials,
                                    seed);
    if (!rep.contracted.rigid) return rep;

    const long target =
        d * static_cast<long>(Gc.vertices().size()) - binom2(d + 1);
    std::mt19937_64 master(seed ^ 0x9e3779b97f4a7c15ull);
    for (int attempt = 0; attempt < 10 * std::max(trials, 1); ++attempt) {
        Framework F = sample_generic(Gc, d, subseed(master));
        RationalMatrix R = rigidity_matrix(F);
        if (static_cast<long>(rational_rank(R)) != target) continue;

        std::vector<Face> edges(Gc.edges().begin(), Gc.edges().end());
        std::map<Face, std::size_t> row_of;
        for (std::size_t r = 0; r < edges.size(); ++r) row_of[edges[r]] = r;
        RationalEliminator elim;
        std::set<Face> J;
        bool priority_ok = true;
        for (VertexId w : *C) {
            Face e{x, w};
            if (!elim.add(R[row_of.at(e)])) {
                priority_ok = false;
                break;
            }
            J.insert(e);
        }
        if (!priority_ok) continue;
        for (const Face& e : edges) {
            if (static_cast<long>(elim.rank()) == target) break;
            if (J.count(e)) continue;
            if (elim.add(R[row_of.at(e)])) J.insert(e);
        }
        if (static_cast<long>(elim.rank()) != target) continue;

        Framework sub{Graph(Gc.vertices(), J), F.coords, d};
        SplitSpec spec;
        spec.at = x;
        spec.new_vertex = y;
        spec.along = *C;
        for (const Face& e : J) {
            if (!e.contains(x)) continue;
            VertexId w = e.vertices()[0] == x ? e.vertices()[1] : e.vertices()[0];
            if (!G.has_edge(x, w) &&
                std::find(C->begin(), C->end(), w) == C->end())
                spec.transfer.push_back(w);
        }
        Framework witness;
        try {
            witness = split_and_realize(sub, spec, subseed(master));
        } catch (const WitnessError&) {
            continue;
        } catch (const PreconditionError&) {
            continue;
        }
        Framework full{G, witness.coords, d};
        long full_target =
            d * static_cast<long>(G.vertices().size()) - binom2(d + 1);
        if (static_cast<long>(rational_rank(rigidity_matrix(full))) !=
            full_target)
            continue;
        rep.witness_built = true;
        rep.witness = std::move(full);
        rep.implied_rigid = true;
        return rep;
    }
    return rep;
}

}  // namespace symrig
