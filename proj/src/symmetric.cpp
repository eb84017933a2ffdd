#include "symrig/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace symrig {

Involution Involution::from_pairs(
    const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    Involution inv;
    for (auto [u, v] : pairs) {
        if (u == v) throw ValidationError("involution: fixed vertex " +
                                          std::to_string(u));
        if (inv.map_.count(u) || inv.map_.count(v))
            throw ValidationError("involution: overlapping pairs at " +
                                  std::to_string(inv.map_.count(u) ? u : v));
        inv.map_[u] = v;
        inv.map_[v] = u;
    }
    return inv;
}

VertexId Involution::image(VertexId v) const {
    auto it = map_.find(v);
    if (it == map_.end())
        throw std::out_of_range("involution: vertex " + std::to_string(v) +
                                " not in domain");
    return it->second;
}

Face Involution::image(const Face& f) const {
    std::vector<VertexId> out;
    out.reserve(f.size());
    for (VertexId v : f.vertices()) out.push_back(image(v));
    return Face(out);
}

std::set<VertexId> Involution::domain() const {
    std::set<VertexId> out;
    for (const auto& [u, v] : map_) out.insert(u);
    return out;
}

std::vector<std::pair<VertexId, VertexId>> Involution::pairs() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto& [u, v] : map_)
        if (u < v) out.emplace_back(u, v);
    return out;
}

Involution Involution::restricted(const std::set<VertexId>& W) const {
    std::vector<std::pair<VertexId, VertexId>> kept;
    for (const auto& [u, v] : map_)
        if (u < v && W.count(u) && W.count(v)) kept.emplace_back(u, v);
    return from_pairs(kept);
}

bool Involution::non_adjacent_on(const Graph& g) const {
    for (const auto& [u, v] : map_)
        if (u < v && g.has_edge(u, v)) return false;
    return true;
}

bool Involution::is_automorphism_of(const Graph& g) const {
    for (VertexId v : g.vertices())
        if (!in_domain(v) || !g.has_vertex(image(v))) return false;
    for (const Face& e : g.edges())
        if (!g.has_edge(image(e.vertices()[0]), image(e.vertices()[1])))
            return false;
    return true;
}

Involution induced_pairing(const Involution& sigma, const std::set<VertexId>& W) {
    return sigma.restricted(W);
}

SymmetricComplex validate(const MultiComplex& S, const Involution& sigma) {
    for (VertexId v : S.vertex_set())
        if (!sigma.in_domain(v))
            throw ValidationError("involution not total: vertex " +
                                  std::to_string(v) + " unpaired");
    for (const auto& [f, m] : S.facets()) {
        Face img = sigma.image(f);
        int im = S.multiplicity(img);
        if (im == 0)
            throw ValidationError("facet image missing: " + f.str() + " -> " +
                                  img.str());
        if (im != m)
            throw ValidationError("multiplicity mismatch at facet " + f.str());
    }
    // freeness on every face: a fixed face must contain a pair {v, v*}, so it
    // is enough to rule those out edge by edge.
    for (const auto& [f, m] : S.facets())
        for (VertexId v : f.vertices())
            if (f.contains(sigma.image(v)))
                throw ValidationError("fixed face witness: facet " + f.str() +
                                      " contains the pair {" + std::to_string(v) +
                                      "," + std::to_string(sigma.image(v)) + "}");
    return SymmetricComplex{S, sigma};
}

std::vector<std::size_t> occurrence_star_map(const std::vector<Face>& occurrences,
                                             const Involution& sigma) {
    std::map<Face, std::vector<std::size_t>> by_face;
    for (std::size_t i = 0; i < occurrences.size(); ++i)
        by_face[occurrences[i]].push_back(i);
    std::vector<std::size_t> star(occurrences.size());
    for (const auto& [f, idx] : by_face) {
        Face img = sigma.image(f);
        if (img == f)
            throw ValidationError("fixed facet " + f.str() + " under involution");
        auto it = by_face.find(img);
        if (it == by_face.end() || it->second.size() != idx.size())
            throw ValidationError("involution does not preserve occurrences of " +
                                  f.str());
        for (std::size_t j = 0; j < idx.size(); ++j) star[idx[j]] = it->second[j];
    }
    return star;
}

namespace {

// Minimal *-invariant cycle inside `subset` (indices into rows/star_of).
// The subset itself must be an invariant cycle.
std::vector<std::size_t> minimal_invariant_cycle(
    const std::vector<Gf2Vec>& rows, const std::vector<std::size_t>& star_of,
    std::vector<std::size_t> subset) {
    for (;;) {
        std::sort(subset.begin(), subset.end());
        std::set<std::size_t> in(subset.begin(), subset.end());
        // orbit representatives
        std::vector<std::pair<std::size_t, std::size_t>> orbits;
        for (std::size_t i : subset) {
            std::size_t j = star_of[i];
            if (!in.count(j))
                throw PreconditionError("subset is not *-invariant");
            if (i < j) orbits.emplace_back(i, j);
        }

        Gf2Eliminator elim;
        std::vector<std::vector<std::size_t>> null_vectors;  // orbit positions
        for (std::size_t o = 0; o < orbits.size(); ++o) {
            Gf2Vec row = rows[orbits[o].first];
            row ^= rows[orbits[o].second];
            if (auto combo = elim.add(row)) {
                combo->push_back(o);
                null_vectors.push_back(std::move(*combo));
            }
        }
        if (null_vectors.empty())
            throw PreconditionError("subset is not an invariant cycle");
        if (null_vectors.size() == 1) return subset;  // irreducible

        // pick a null vector whose support is a proper subset of the orbits
        const std::vector<std::size_t>* pick = nullptr;
        for (const auto& nv : null_vectors)
            if (nv.size() < orbits.size()) {
                pick = &nv;
                break;
            }
        if (!pick)
            throw std::logic_error("distinct null vectors cannot all be full");
        std::vector<std::size_t> smaller;
        for (std::size_t o : *pick) {
            smaller.push_back(orbits[o].first);
            smaller.push_back(orbits[o].second);
        }
        subset = std::move(smaller);
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> partition_z2_irreducible_indices(
    const std::vector<Face>& occurrences, const std::vector<std::size_t>& star_of) {
    std::map<Face, std::size_t> cols;
    std::vector<Gf2Vec> rows = boundary_rows(occurrences, cols);
    std::vector<std::size_t> remaining(occurrences.size());
    std::iota(remaining.begin(), remaining.end(), 0);

    std::vector<std::vector<std::size_t>> parts;
    while (!remaining.empty()) {
        auto part = minimal_invariant_cycle(rows, star_of, remaining);
        parts.push_back(part);
        std::vector<std::size_t> next;
        std::set<std::size_t> gone(part.begin(), part.end());
        for (std::size_t i : remaining)
            if (!gone.count(i)) next.push_back(i);
        remaining = std::move(next);
    }
    return parts;
}

IrreducibleClassification classify(const SymmetricComplex& S) {
    const MultiComplex& C = S.complex;
    if (!is_cycle(C))
        throw PreconditionError("classify: input is not a simplicial cycle");
    if (C.empty()) return {IrreducibleKind::NotZ2Cycle, std::nullopt, -1};

    // trivial irreducible: {F,F} ⊔ {F*,F*}
    if (C.support_size() == 2 && C.size() == 4) {
        auto it = C.facets().begin();
        const Face& f = it->first;
        const Face& g = std::next(it)->first;
        if (it->second == 2 && std::next(it)->second == 2 &&
            S.involution.image(f) == g) {
            if (!f.intersect(g).empty())
                throw ValidationError("trivial pair with shared vertices");
            return {IrreducibleKind::TrivialIrreducible, std::nullopt, -1};
        }
    }

    if (is_circuit(C)) return {IrreducibleKind::Circuit, std::nullopt, -1};

    if (!C.is_complex())
        throw MultisetError(
            "classify: multisets beyond the trivial pair need manual review");

    std::vector<Face> occ = C.facet_list();
    std::vector<std::size_t> star = occurrence_star_map(occ, S.involution);
    std::map<Face, std::size_t> cols;
    std::vector<Gf2Vec> rows = boundary_rows(occ, cols);
    std::vector<std::size_t> all(occ.size());
    std::iota(all.begin(), all.end(), 0);
    auto minimal = minimal_invariant_cycle(rows, star, all);
    if (minimal.size() != occ.size())
        return {IrreducibleKind::NotZ2Cycle, std::nullopt, -1};  // reducible

    // irreducible non-circuit: split off a circuit T with S = T ⊔ T*
    auto circuit_idx = partition_circuit_indices(occ, 0).front();
    MultiComplex T(C.k());
    for (std::size_t i : circuit_idx) T.add_facet(occ[i]);
    MultiComplex Tstar(C.k());
    for (const auto& [f, m] : T.facets())
        Tstar.add_facet(S.involution.image(f), m);
    for (const auto& [f, m] : T.facets())
        if (Tstar.multiplicity(f) > 0)
            throw std::logic_error("irreducible non-circuit with T ∩ T* != ∅");
    if (T.size() + Tstar.size() != C.size())
        throw std::logic_error("irreducible non-circuit with T ⊔ T* != S");

    std::vector<VertexId> vt = T.vertex_set(), vs = Tstar.vertex_set();
    std::vector<VertexId> common;
    std::set_intersection(vt.begin(), vt.end(), vs.begin(), vs.end(),
                          std::back_inserter(common));
    return {IrreducibleKind::SplitPair, T, static_cast<int>(common.size())};
}

bool is_z2_irreducible(const SymmetricComplex& S) {
    if (S.complex.empty() || !is_cycle(S.complex)) return false;
    return classify(S).kind != IrreducibleKind::NotZ2Cycle;
}

MinVertexReport min_vertex_count_check(const SymmetricComplex& S) {
    auto cls = classify(S);
    if (cls.kind == IrreducibleKind::NotZ2Cycle)
        throw PreconditionError("min_vertex_count_check: not Z2-irreducible");
    const MultiComplex& C = S.complex;
    int k = C.k();
    std::size_t nv = C.vertex_set().size();

    MinVertexReport rep;
    rep.passed = nv >= static_cast<std::size_t>(2 * k + 2);
    rep.equality = nv == static_cast<std::size_t>(2 * k + 2);
    if (!rep.passed) {
        rep.detail = "counterexample: |V| = " + std::to_string(nv) + " < " +
                     std::to_string(2 * k + 2);
        return rep;
    }
    if (rep.equality) {
        rep.trivial_case = cls.kind == IrreducibleKind::TrivialIrreducible;
        if (!rep.trivial_case) {
            // crosspolytope recognition via the transversal property
            auto prs = S.involution.pairs();
            bool cross = C.is_complex() &&
                         C.support_size() == (std::size_t{1} << (k + 1)) &&
                         prs.size() == static_cast<std::size_t>(k + 1);
            if (cross)
                for (const auto& [f, m] : C.facets())
                    for (auto [u, v] : prs)
                        if (f.contains(u) == f.contains(v)) cross = false;
            rep.crosspolytope = cross;
            if (!cross)
                rep.detail = "equality case is neither trivial nor a crosspolytope";
        }
        rep.passed = rep.trivial_case || rep.crosspolytope;
    }
    return rep;
}

namespace {

void for_each_pair_subset(
    const std::vector<std::pair<VertexId, VertexId>>& prs, std::size_t count,
    const std::function<bool(const std::set<VertexId>&)>& fn) {
    std::vector<std::size_t> idx(count);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                            std::size_t from) {
        if (pos == count) {
            std::set<VertexId> X;
            for (std::size_t i : idx) {
                X.insert(prs[i].first);
                X.insert(prs[i].second);
            }
            return fn(X);
        }
        for (std::size_t i = from; i + (count - pos) <= prs.size(); ++i) {
            idx[pos] = i;
            if (rec(pos + 1, i + 1)) return true;
        }
        return false;
    };
    rec(0, 0);
}

}  // namespace

std::optional<SeparatorResult> invariant_separator(const SymmetricComplex& S,
                                                   int bound) {
    int k = S.complex.k();
    if (bound > 2 * k)
        throw PreconditionError("invariant_separator: bound " +
                                std::to_string(bound) + " exceeds 2k = " +
                                std::to_string(2 * k));
    Graph g = graph(S.complex);
    auto prs = S.involution.pairs();

    std::optional<std::set<VertexId>> found;
    for (std::size_t cnt = 1; 2 * cnt <= static_cast<std::size_t>(bound) && !found;
         ++cnt) {
        for_each_pair_subset(prs, cnt, [&](const std::set<VertexId>& X) {
            if (!g.connected_without(X)) {
                found = X;
                return true;
            }
            return false;
        });
    }
    if (!found) return std::nullopt;

    SeparatorResult res;
    res.separator = *found;
    res.dichotomy = SeparatorDichotomy::Unresolved;

    auto cls = classify(S);
    if (cls.kind == IrreducibleKind::SplitPair) {
        const MultiComplex& T = *cls.split_part;
        MultiComplex Tstar(T.k());
        for (const auto& [f, m] : T.facets())
            Tstar.add_facet(S.involution.image(f), m);
        std::vector<VertexId> vt = T.vertex_set(), vs = Tstar.vertex_set();
        std::set<VertexId> common;
        std::set_intersection(vt.begin(), vt.end(), vs.begin(), vs.end(),
                              std::inserter(common, common.begin()));
        if (common == *found) {
            res.dichotomy = SeparatorDichotomy::SplitPairOverlap;
            return res;
        }
    }
    if (static_cast<int>(found->size()) == 2 * k) {
        // G(S)[X] should look like a crosspolytope graph: u ~ v iff v != u*
        bool cross = true;
        for (VertexId u : *found)
            for (VertexId v : *found) {
                if (u >= v) continue;
                bool want = S.involution.image(u) != v;
                if (g.has_edge(u, v) != want) cross = false;
            }
        if (cross) res.dichotomy = SeparatorDichotomy::CrosspolytopeGraph;
    }
    return res;
}

int c_threshold(int k, int t) {
    if (t < 0 || t > k)
        throw std::invalid_argument("c_threshold: t out of range [0, k]");
    return std::max({2 * (k - t), k + 1, 2 * t});
}

MainTheoremReport main_theorem_conditions(const SymmetricComplex& S, int t) {
    const int k = S.complex.k();
    if (k < 2) throw PreconditionError("main_theorem_conditions: requires k >= 2");
    if (S.complex.vertex_set().size() > 30)
        throw PreconditionError(
            "main_theorem_conditions: exhaustive search capped at |V| <= 30");

    MainTheoremReport rep;
    rep.classification = classify(S);
    if (rep.classification.kind == IrreducibleKind::NotZ2Cycle ||
        rep.classification.kind == IrreducibleKind::TrivialIrreducible)
        throw PreconditionError(
            "main_theorem_conditions: input must be a nontrivial Z2-irreducible "
            "cycle");
    rep.threshold = c_threshold(k, t);

    rep.cond_ii = rep.classification.kind == IrreducibleKind::Circuit ||
                  (rep.classification.kind == IrreducibleKind::SplitPair &&
                   rep.classification.overlap >= rep.threshold);

    Graph g = graph(S.complex);
    auto prs = S.involution.pairs();
    rep.cond_iii = true;
    for (std::size_t cnt = 0;
         2 * cnt < static_cast<std::size_t>(rep.threshold) && rep.cond_iii;
         ++cnt) {
        for_each_pair_subset(prs, cnt, [&](const std::set<VertexId>& X) {
            if (!g.connected_without(X)) {
                rep.cond_iii = false;
                rep.small_separator = X;
                return true;
            }
            return false;
        });
    }
    rep.agree = rep.cond_ii == rep.cond_iii;
    return rep;
}

}  // namespace symrig
