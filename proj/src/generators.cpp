#include "symrig/generators.hpp"

#include <algorithm>
#include <random>

#include "symrig/cycles.hpp"

namespace symrig {

namespace {

long binom(long n, long r) {
    if (r < 0 || r > n) return 0;
    long out = 1;
    for (long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

/// All transversals of the listed pairs, as facets.
void add_transversals(MultiComplex& S,
                      const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    std::size_t total = std::size_t{1} << pairs.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<VertexId> verts;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            verts.push_back(mask & (std::size_t{1} << i) ? pairs[i].second
                                                         : pairs[i].first);
        S.add_facet(Face(verts));
    }
}

}  // namespace

long g2(const MultiComplex& S) {
    if (S.k() < 1) throw std::invalid_argument("g2: requires k >= 1");
    long V = static_cast<long>(S.vertex_set().size());
    long E = static_cast<long>(faces(S, 1).size());
    long k = S.k();
    return E - (k + 1) * V + binom(k + 2, 2);
}

FVector f_vector(const MultiComplex& S) {
    FVector fv;
    for (int j = 0; j <= S.k(); ++j)
        fv.f.push_back(static_cast<long>(faces(S, j).size()));
    return fv;
}

BoundReport check_lower_bound(const SymmetricComplex& S) {
    const int k = S.complex.k();
    BoundReport rep;
    rep.g2 = g2(S.complex);
    rep.bound = binom(k + 1, 2) - (k + 1);
    rep.satisfied = rep.g2 >= rep.bound;
    rep.equality = rep.g2 == rep.bound;

    if (k < 2) {
        rep.hypothesis_note = "requires k >= 2";
        return rep;
    }
    if (is_circuit(S.complex)) {
        rep.hypotheses_ok = true;
        return rep;
    }
    IrreducibleClassification cls = classify(S);
    if (cls.kind == IrreducibleKind::NotZ2Cycle ||
        cls.kind == IrreducibleKind::TrivialIrreducible) {
        rep.hypothesis_note = "not a circuit or nontrivial irreducible cycle";
        return rep;
    }
    if (S.complex.vertex_set().size() > 30) {
        rep.hypothesis_note = "separator search capped at |V| <= 30";
        return rep;
    }
    if (auto sep = invariant_separator(S, 2 * k)) {
        rep.hypothesis_note =
            "invariant separator of size " +
            std::to_string(sep->separator.size()) + " found";
        return rep;
    }
    rep.hypotheses_ok = true;
    return rep;
}

long phi(int j, int n, int k) {
    if (j < 0 || j > k) throw std::invalid_argument("phi: j out of range");
    if (n < 2 * k + 2 || n % 2 != 0)
        throw std::invalid_argument("phi: n must be even and at least 2k+2");
    if (j == k) return (1L << (k + 1)) + static_cast<long>(k) * (n - 2 * k - 2);
    return (1L << (j + 1)) * binom(k + 1, j + 1) +
           static_cast<long>(n - 2 * k - 2) * binom(k + 1, j);
}

SymmetricComplex gen_crosspolytope(int k) {
    if (k < 1) throw std::invalid_argument("gen_crosspolytope: requires k >= 1");
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int i = 0; i <= k; ++i) pairs.emplace_back(2 * i, 2 * i + 1);
    MultiComplex S(k);
    add_transversals(S, pairs);
    return validate(S, Involution::from_pairs(pairs));
}

SymmetricComplex gen_trivial_pair(int k) {
    if (k < 1) throw std::invalid_argument("gen_trivial_pair: requires k >= 1");
    std::vector<VertexId> fv, gv;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int i = 0; i <= k; ++i) {
        fv.push_back(i);
        gv.push_back(i + k + 1);
        pairs.emplace_back(i, i + k + 1);
    }
    MultiComplex S(k);
    S.add_facet(Face(fv), 2);
    S.add_facet(Face(gv), 2);
    return validate(S, Involution::from_pairs(pairs));
}

SymmetricComplex gen_symmetric_stacked(int k, int stacks, std::uint64_t seed) {
    if (k < 2)
        throw std::invalid_argument("gen_symmetric_stacked: requires k >= 2");
    if (stacks < 0)
        throw std::invalid_argument("gen_symmetric_stacked: stacks >= 0");
    SymmetricComplex base = gen_crosspolytope(k);
    MultiComplex S = base.complex;
    std::vector<std::pair<VertexId, VertexId>> pairs = base.involution.pairs();
    Involution sigma = base.involution;
    std::mt19937_64 rng(seed ? seed : 1);
    VertexId next = 2 * (k + 1);

    for (int s = 0; s < stacks; ++s) {
        std::vector<Face> fl;
        for (const auto& [f, m] : S.facets()) {
            (void)m;
            fl.push_back(f);
        }
        std::uniform_int_distribution<std::size_t> pick(0, fl.size() - 1);
        Face F = fl[pick(rng)];
        Face Fs = sigma.image(F);

        VertexId w = next++, ws = next++;
        pairs.emplace_back(w, ws);
        sigma = Involution::from_pairs(pairs);

        S.remove_facet(F);
        S.remove_facet(Fs);
        for (VertexId a : F.vertices()) S.add_facet(F.minus(a).plus(w));
        for (VertexId a : Fs.vertices()) S.add_facet(Fs.minus(a).plus(ws));
    }
    return validate(S, sigma);
}

GammaFramework gen_bricard(std::uint64_t seed) {
    SymmetricComplex oct = gen_crosspolytope(2);
    Graph G = graph(oct.complex);
    return sample_gamma_generic(G, oct.involution, PointGroup{1, 3},
                                seed ? seed : 1);
}

SymmetricComplex gen_hexahedron_pair() {
    // v_i = i, v_i* = i + 4, for i = 1..4
    auto star = [](VertexId v) { return v + 4; };
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId i = 1; i <= 4; ++i) pairs.emplace_back(i, star(i));
    std::vector<Face> T = {Face{1, 2, 3},       Face{1, 2, 4},
                           Face{1, 3, 4},       Face{star(1), 2, 3},
                           Face{star(1), 2, 4}, Face{star(1), 3, 4}};
    MultiComplex S(2);
    Involution sigma = Involution::from_pairs(pairs);
    for (const Face& f : T) {
        S.add_facet(f);
        S.add_facet(sigma.image(f));
    }
    return validate(S, sigma);
}

SymmetricComplex gen_split_pair(int k, int h, std::uint64_t seed) {
    (void)seed;  // the construction is deterministic
    if (k < 2) throw std::invalid_argument("gen_split_pair: requires k >= 2");
    if (h % 2 != 0)
        throw std::invalid_argument(
            "gen_split_pair: h must be even (the overlap is *-invariant)");
    if (h < k + 1 || h > 2 * k)
        throw std::invalid_argument(
            "gen_split_pair: requires k+1 <= h <= 2k");

    // T starts as a crosspolytope sphere on k+1 vertex pairs. The first h/2
    // pairs are genuine *-orbits shared with T*; the rest are private, with
    // fresh starred partners on the T* side.
    const int shared = h / 2;
    std::vector<std::pair<VertexId, VertexId>> slots_t, orbit_pairs;
    VertexId next = 0;
    for (int i = 0; i < shared; ++i) {
        VertexId a = next++, b = next++;
        slots_t.emplace_back(a, b);
        orbit_pairs.emplace_back(a, b);
    }
    for (int i = shared; i <= k; ++i) {
        VertexId a = next++, b = next++, as = next++, bs = next++;
        slots_t.emplace_back(a, b);
        orbit_pairs.emplace_back(a, as);
        orbit_pairs.emplace_back(b, bs);
    }
    MultiComplex T(k);
    add_transversals(T, slots_t);

    if (shared == k) {
        // A subset of T whose boundary is the (k-1)-crosspolytope Q spanned
        // by the shared orbits pulls in its starred image as an invariant
        // subcycle, and the plain crosspolytope T always has one (the star
        // of either private vertex). A bistellar flip across one Q-face
        // removes that face from T altogether, so no subset boundary can
        // equal Q: replace the two facets over F0 with the facets joining
        // the private edge cd to the boundary of F0.
        VertexId c = slots_t[shared].first, d = slots_t[shared].second;
        std::vector<VertexId> fv;
        for (int i = 0; i < shared; ++i) fv.push_back(slots_t[i].first);
        Face f0(fv);
        T.remove_facet(f0.plus(c));
        T.remove_facet(f0.plus(d));
        for (VertexId v : f0.vertices())
            T.add_facet(f0.minus(v).plus(c).plus(d));
    }

    Involution sigma = Involution::from_pairs(orbit_pairs);
    MultiComplex S = T;
    for (const auto& [f, m] : T.facets()) S.add_facet(sigma.image(f), m);
    SymmetricComplex out = validate(S, sigma);
    IrreducibleClassification cls = classify(out);
    if (cls.kind != IrreducibleKind::SplitPair || cls.overlap != h)
        throw std::runtime_error(
            "gen_split_pair: construction did not yield the requested overlap");
    return out;
}

}  // namespace symrig
