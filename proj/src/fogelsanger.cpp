#include "symrig/fogelsanger.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace symrig {

bool PropertyReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const PropertyCheck* PropertyReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

MultiComplex parity(const MultiComplex& S) {
    MultiComplex out(S.k());
    for (const auto& [f, m] : S.facets())
        if (m % 2) out.add_facet(f);
    return out;
}

MultiComplex parity_sum(const std::vector<MultiComplex>& parts,
                        const std::vector<std::size_t>& which, int k) {
    std::map<Face, int> count;
    for (std::size_t i : which)
        for (const auto& [f, m] : parts[i].facets()) count[f] += m;
    MultiComplex out(k);
    for (const auto& [f, c] : count)
        if (c % 2) out.add_facet(f);
    return out;
}

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

/// Clique faces K with {x,y} ⊆ K and K−x, K−y ∈ ∂Si, enumerated as F + y
/// over boundary faces F containing x but not y.
MultiComplex dagger_faces(const MultiComplex& Si, VertexId x, VertexId y) {
    MultiComplex b = boundary(Si);
    MultiComplex out(Si.k());
    for (const auto& [f, m] : b.facets()) {
        (void)m;
        if (!f.contains(x) || f.contains(y)) continue;
        Face K = f.plus(y);
        if (b.multiplicity(K.minus(x)) > 0) out.add_facet(K);
    }
    return out;
}

Involution restricted_to(const Involution& sigma, const MultiComplex& S) {
    std::vector<VertexId> vs = S.vertex_set();
    return sigma.restricted(std::set<VertexId>(vs.begin(), vs.end()));
}

bool share_facet(const MultiComplex& D, const MultiComplex& part) {
    for (const auto& [f, m] : D.facets())
        if (m > 0 && part.multiplicity(f) > 0) return true;
    return false;
}

void check(PropertyReport& rep, const std::string& name, bool ok,
           const std::string& witness) {
    rep.checks.push_back({name, ok, ok ? std::string{} : witness});
}

}  // namespace

FogDecomposition fog_decompose(const MultiComplex& S, VertexId u, VertexId v,
                               std::uint64_t seed) {
    if (!is_circuit(S))
        throw PreconditionError("fog_decompose: input is not a circuit");
    if (is_trivial_circuit(S))
        throw PreconditionError("fog_decompose: circuit is trivial");
    if (!graph(S).has_edge(u, v))
        throw PreconditionError("fog_decompose: uv is not an edge");

    MultiComplex dom = antistar(S, Face{u, v});
    std::vector<Face> occ = dom.facet_list();
    std::vector<Face> images;
    images.reserve(occ.size());
    for (const Face& f : occ) images.push_back(f.replaced(v, u));

    FogDecomposition D;
    D.base = S;
    D.u = u;
    D.v = v;
    D.seed = seed;
    for (const auto& idx : partition_circuit_indices(images, seed)) {
        MultiComplex Si(S.k()), Ci(S.k());
        for (std::size_t i : idx) {
            Si.add_facet(occ[i]);
            Ci.add_facet(images[i]);
        }
        MultiComplex dag = dagger_faces(Si, u, v);
        MultiComplex plus = Si;
        for (const auto& [f, m] : dag.facets()) plus.add_facet(f, m);
        D.raw_parts.push_back(std::move(Si));
        D.contracted_parts.push_back(std::move(Ci));
        D.dagger_parts.push_back(std::move(dag));
        D.parts.push_back(std::move(plus));
    }
    return D;
}

PropertyReport verify_fog_properties(const FogDecomposition& D) {
    const MultiComplex& S = D.base;
    const VertexId u = D.u, v = D.v;
    const std::size_t m = D.m();
    Graph gS = graph(S);
    PropertyReport rep;

    // (a) each part contracts to a circuit
    for (std::size_t i = 0; i < m; ++i)
        if (!is_circuit(contract(D.parts[i], u, v))) {
            check(rep, "a", false, "part " + std::to_string(i));
            break;
        }
    if (!rep.find("a")) check(rep, "a", true, "");

    // (b) parts are nontrivial circuits; new facets are cliques containing uv
    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < m && ok; ++i) {
            if (!is_circuit(D.parts[i]) || is_trivial_circuit(D.parts[i])) {
                ok = false;
                wit = "part " + std::to_string(i) + " is not a nontrivial circuit";
                break;
            }
            for (const auto& [f, mult] : D.parts[i].facets()) {
                (void)mult;
                if (S.multiplicity(f) > 0) continue;
                if (!f.contains(u) || !f.contains(v) || !gS.is_clique(f)) {
                    ok = false;
                    wit = "new facet " + f.str() + " in part " + std::to_string(i);
                    break;
                }
            }
        }
        check(rep, "b", ok, wit);
    }

    // (c) antistar facets covered exactly once
    {
        MultiComplex ast = antistar(S, Face{u, v});
        bool ok = true;
        std::string wit;
        for (const auto& [f, mult] : ast.facets()) {
            int total = 0;
            for (const auto& p : D.parts) total += p.multiplicity(f);
            if (total != mult) {
                ok = false;
                wit = f.str() + " covered " + std::to_string(total) + " times";
                break;
            }
        }
        check(rep, "c", ok, wit);
    }

    // (d) symmetric difference of parts gives back S
    {
        MultiComplex sum = parity_sum(D.parts, all_indices(m), S.k());
        bool ok = sum == parity(S);
        check(rep, "d", ok, "parity sum differs from input");
    }

    // (e) uv in every part; edges of parts cover edges of S
    {
        bool ok = true;
        std::string wit;
        std::set<Face> edges;
        for (std::size_t i = 0; i < m; ++i) {
            Graph gi = graph(D.parts[i]);
            if (!gi.has_edge(u, v)) {
                ok = false;
                wit = "uv missing from part " + std::to_string(i);
                break;
            }
            for (const Face& e : gi.edges()) edges.insert(e);
        }
        if (ok && edges != gS.edges()) {
            ok = false;
            wit = "edge union differs from E(S)";
        }
        check(rep, "e", ok, wit);
    }

    // (f) every nonempty proper index set symmetric-differences into a clique
    //     facet shared with some part outside the set
    {
        if (m > 12)
            throw PreconditionError("verify_fog_properties: m > 12 in (f)");
        bool ok = true;
        std::string wit;
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << m) && ok;
             ++mask) {
            std::vector<std::size_t> inside;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (std::size_t{1} << i)) inside.push_back(i);
            MultiComplex diff = parity_sum(D.parts, inside, S.k());
            bool found = false;
            for (std::size_t j = 0; j < m && !found; ++j) {
                if (mask & (std::size_t{1} << j)) continue;
                for (const auto& [f, mult] : diff.facets()) {
                    (void)mult;
                    if (S.multiplicity(f) == 0 && gS.is_clique(f) &&
                        D.parts[j].multiplicity(f) > 0) {
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                ok = false;
                wit = "index set mask " + std::to_string(mask);
            }
        }
        check(rep, "f", ok, wit);
    }
    return rep;
}

FogDecomposition z2_fog_decompose(const SymmetricComplex& S, VertexId x,
                                  VertexId y, std::uint64_t seed) {
    const MultiComplex& C = S.complex;
    const Involution& sigma = S.involution;
    if (C.empty() || !is_cycle(C))
        throw PreconditionError("z2_fog_decompose: input is not a cycle");
    if (classify(S).kind == IrreducibleKind::NotZ2Cycle)
        throw PreconditionError("z2_fog_decompose: input is reducible");
    Graph gS = graph(C);
    if (!gS.has_edge(x, y))
        throw PreconditionError("z2_fog_decompose: xy is not an edge");
    VertexId xs = sigma.image(x), ys = sigma.image(y);
    if (gS.has_edge(x, ys))
        throw PreconditionError(
            "z2_fog_decompose: decomposition undefined, xy* is an edge");

    // facets avoiding both contracted edges
    MultiComplex dom(C.k());
    for (const auto& [f, m] : C.facets()) {
        if (f.contains(x) && f.contains(y)) continue;
        if (f.contains(xs) && f.contains(ys)) continue;
        dom.add_facet(f, m);
    }
    std::vector<Face> occ = dom.facet_list();
    std::vector<Face> images;
    images.reserve(occ.size());
    for (const Face& f : occ) images.push_back(f.replaced(y, x).replaced(ys, xs));

    std::vector<std::size_t> order = all_indices(occ.size());
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    std::vector<Face> perm_images;
    perm_images.reserve(order.size());
    for (std::size_t i : order) perm_images.push_back(images[i]);
    std::vector<std::size_t> star = occurrence_star_map(perm_images, sigma);

    FogDecomposition D;
    D.base = C;
    D.u = x;
    D.v = y;
    D.symmetric = true;
    D.involution = sigma;
    D.seed = seed;
    for (const auto& block : partition_z2_irreducible_indices(perm_images, star)) {
        MultiComplex Si(C.k()), Ci(C.k());
        for (std::size_t p : block) {
            Si.add_facet(occ[order[p]]);
            Ci.add_facet(perm_images[p]);
        }
        MultiComplex dag = dagger_faces(Si, x, y);
        MultiComplex plus = Si;
        std::set<Face> added;
        for (const auto& [f, m] : dag.facets()) {
            (void)m;
            added.insert(f);
            added.insert(sigma.image(f));
        }
        for (const Face& f : added) plus.add_facet(f);
        D.raw_parts.push_back(std::move(Si));
        D.contracted_parts.push_back(std::move(Ci));
        D.dagger_parts.push_back(std::move(dag));
        D.parts.push_back(std::move(plus));
    }
    return D;
}

PropertyReport verify_z2_fog_properties(const FogDecomposition& D,
                                        const Involution& sigma) {
    const MultiComplex& S = D.base;
    const VertexId x = D.u, y = D.v;
    const VertexId xs = sigma.image(x), ys = sigma.image(y);
    const std::size_t m = D.m();
    Graph gS = graph(S);
    PropertyReport rep;

    // (a) both contracted edges lie in every part
    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < m; ++i) {
            Graph gi = graph(D.parts[i]);
            if (!gi.has_edge(x, y) || !gi.has_edge(xs, ys)) {
                ok = false;
                wit = "part " + std::to_string(i);
                break;
            }
        }
        check(rep, "a", ok, wit);
    }

    // (b) parts cover all edges and all vertices
    {
        std::set<Face> edges;
        std::set<VertexId> verts;
        for (const auto& p : D.parts) {
            Graph gi = graph(p);
            edges.insert(gi.edges().begin(), gi.edges().end());
            verts.insert(gi.vertices().begin(), gi.vertices().end());
        }
        bool ok = edges == gS.edges() && verts == gS.vertices();
        check(rep, "b", ok, "edge or vertex union differs");
    }

    // (c) each part contracts back to an invariant irreducible cycle
    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < m && ok; ++i) {
            MultiComplex P = contract(contract(D.parts[i], x, y), xs, ys);
            try {
                SymmetricComplex sp = validate(P, restricted_to(sigma, P));
                if (!is_z2_irreducible(sp)) {
                    ok = false;
                    wit = "contraction of part " + std::to_string(i) +
                          " is reducible";
                }
            } catch (const std::invalid_argument& e) {
                ok = false;
                wit = "part " + std::to_string(i) + ": " + e.what();
            }
        }
        check(rep, "c", ok, wit);
    }

    // (d) parts are nontrivial invariant irreducibles; new facets are cliques
    //     containing a contracted edge
    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < m && ok; ++i) {
            try {
                SymmetricComplex sp =
                    validate(D.parts[i], restricted_to(sigma, D.parts[i]));
                auto cls = classify(sp);
                if (cls.kind != IrreducibleKind::Circuit &&
                    cls.kind != IrreducibleKind::SplitPair) {
                    ok = false;
                    wit = "part " + std::to_string(i) +
                          " is not a nontrivial irreducible";
                }
            } catch (const std::invalid_argument& e) {
                ok = false;
                wit = "part " + std::to_string(i) + ": " + e.what();
            }
            if (!ok) break;
            for (const auto& [f, mult] : D.parts[i].facets()) {
                (void)mult;
                if (S.multiplicity(f) > 0) continue;
                bool has_edge = (f.contains(x) && f.contains(y)) ||
                                (f.contains(xs) && f.contains(ys));
                if (!has_edge || !gS.is_clique(f)) {
                    ok = false;
                    wit = "new facet " + f.str() + " in part " + std::to_string(i);
                    break;
                }
            }
        }
        check(rep, "d", ok, wit);
    }

    // (e) facets avoiding both contracted edges covered exactly once
    {
        bool ok = true;
        std::string wit;
        for (const auto& [f, mult] : S.facets()) {
            if (f.contains(x) && f.contains(y)) continue;
            if (f.contains(xs) && f.contains(ys)) continue;
            int total = 0;
            for (const auto& p : D.parts) total += p.multiplicity(f);
            if (total != mult) {
                ok = false;
                wit = f.str() + " covered " + std::to_string(total) + " times";
                break;
            }
        }
        check(rep, "e", ok, wit);
    }

    // (f) symmetric difference of parts gives back S
    {
        MultiComplex sum = parity_sum(D.parts, all_indices(m), S.k());
        check(rep, "f", sum == parity(S), "parity sum differs from input");
    }

    // (g) reorderability: an order where every prefix difference meets the
    //     next part
    {
        if (m > 12)
            throw PreconditionError("verify_z2_fog_properties: m > 12 in (g)");
        bool ok = true;
        std::string note;
        if (m > 1) {
            auto meets_from = [&](const MultiComplex& diff, std::size_t j) {
                return share_facet(diff, D.parts[j]);
            };
            // plain greedy from part 0
            bool greedy_ok = true;
            {
                std::vector<bool> used(m, false);
                used[0] = true;
                std::vector<std::size_t> chosen{0};
                for (std::size_t step = 1; step < m; ++step) {
                    MultiComplex diff = parity_sum(D.parts, chosen, S.k());
                    bool advanced = false;
                    for (std::size_t j = 0; j < m; ++j)
                        if (!used[j] && meets_from(diff, j)) {
                            used[j] = true;
                            chosen.push_back(j);
                            advanced = true;
                            break;
                        }
                    if (!advanced) {
                        greedy_ok = false;
                        break;
                    }
                }
            }
            if (greedy_ok) {
                note = "greedy order sufficed";
            } else {
                // exhaustive backtracking over orders
                std::vector<bool> used(m, false);
                std::vector<std::size_t> chosen;
                std::function<bool()> rec = [&]() {
                    if (chosen.size() == m) return true;
                    MultiComplex diff = parity_sum(D.parts, chosen, S.k());
                    for (std::size_t j = 0; j < m; ++j) {
                        if (used[j]) continue;
                        if (!chosen.empty() && !meets_from(diff, j)) continue;
                        used[j] = true;
                        chosen.push_back(j);
                        if (rec()) return true;
                        chosen.pop_back();
                        used[j] = false;
                    }
                    return false;
                };
                ok = rec();
                note = ok ? "greedy failed, backtracking found an order"
                          : "no valid order exists";
            }
        }
        rep.checks.push_back({"g", ok, note});
    }
    return rep;
}

PropertyReport overlap_growth_check(const FogDecomposition& D,
                                    const Involution& sigma) {
    const int k = D.base.k();
    PropertyReport rep;
    for (std::size_t i = 0; i < D.m(); ++i) {
        std::string name = "overlap[" + std::to_string(i) + "]";
        IrreducibleClassification before;
        try {
            const MultiComplex& Ci = D.contracted_parts[i];
            before = classify(validate(Ci, restricted_to(sigma, Ci)));
        } catch (const std::invalid_argument& e) {
            rep.checks.push_back(
                {name, false, std::string("contracted part: ") + e.what()});
            continue;
        }
        int h_before;
        if (before.kind == IrreducibleKind::TrivialIrreducible)
            h_before = 0;
        else if (before.kind == IrreducibleKind::SplitPair)
            h_before = before.overlap;
        else {
            rep.checks.push_back({name, true, "not applicable"});
            continue;
        }
        if (h_before > 2 * k - 2) {
            rep.checks.push_back({name, true, "not applicable"});
            continue;
        }
        IrreducibleClassification after;
        try {
            const MultiComplex& Pi = D.parts[i];
            after = classify(validate(Pi, restricted_to(sigma, Pi)));
        } catch (const std::invalid_argument& e) {
            rep.checks.push_back({name, false, std::string("part: ") + e.what()});
            continue;
        }
        int h_after = -1;
        bool splits = false;
        if (after.kind == IrreducibleKind::TrivialIrreducible) {
            splits = true;
            h_after = 0;
        } else if (after.kind == IrreducibleKind::SplitPair) {
            splits = true;
            h_after = after.overlap;
        }
        bool ok = splits && h_after <= h_before + 2;
        rep.checks.push_back(
            {name, ok,
             ok ? "h' = " + std::to_string(h_before) + ", h = " +
                      std::to_string(h_after)
                : "part does not split with overlap <= h' + 2"});
    }
    return rep;
}

}  // namespace symrig
