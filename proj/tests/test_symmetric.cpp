#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symrig/generators.hpp"
#include "symrig/symmetric.hpp"

using namespace symrig;

namespace {

/// Exhaustive check that no proper non-empty *-invariant sub-multiset of S
/// is a cycle. Only usable for small occurrence counts.
bool exhaustively_irreducible(const SymmetricComplex& S) {
    std::vector<Face> occ = S.complex.facet_list();
    std::vector<std::size_t> star = occurrence_star_map(occ, S.involution);
    const std::size_t n = occ.size();
    REQUIRE(n <= 16);
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        bool invariant = true;
        for (std::size_t i = 0; i < n && invariant; ++i)
            if ((mask >> i) & 1)
                invariant = (mask >> star[i]) & 1;
        if (!invariant) continue;
        MultiComplex sub(S.complex.k());
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) sub.add_facet(occ[i]);
        if (is_cycle(sub)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("involution basics") {
    Involution s = Involution::from_pairs({{0, 1}, {2, 3}});
    CHECK(s.image(0) == 1);
    CHECK(s.image(3) == 2);
    CHECK(s.image(Face{0, 2}) == Face{1, 3});
    CHECK(s.domain_size() == 4);
    CHECK(s.pairs() == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {2, 3}});
    CHECK_THROWS_AS(s.image(9), std::out_of_range);
    CHECK_THROWS_AS(Involution::from_pairs({{0, 0}}), ValidationError);
    CHECK_THROWS_AS(Involution::from_pairs({{0, 1}, {1, 2}}), ValidationError);

    Involution r = s.restricted({0, 1, 2});
    CHECK(r.domain() == std::set<VertexId>{0, 1});
}

TEST_CASE("involution vs graphs") {
    SymmetricComplex oct = gen_crosspolytope(2);
    Graph g = graph(oct.complex);
    CHECK(oct.involution.is_automorphism_of(g));
    CHECK(oct.involution.non_adjacent_on(g));

    Graph bad = g;
    bad.add_edge(0, 1);  // joins an antipodal pair
    CHECK_FALSE(oct.involution.non_adjacent_on(bad));
}

TEST_CASE("validation catches broken symmetry") {
    SymmetricComplex oct = gen_crosspolytope(2);
    CHECK_NOTHROW(validate(oct.complex, oct.involution));

    MultiComplex broken = oct.complex;
    broken.add_facet(Face{0, 2, 4});
    CHECK_THROWS_AS(validate(broken, oct.involution), ValidationError);

    // involution not total on the vertex set
    Involution partial = Involution::from_pairs({{0, 1}, {2, 3}});
    CHECK_THROWS_AS(validate(oct.complex, partial), ValidationError);

    // fixed facet: the pairing fixes a face setwise
    MultiComplex S(1, {Face{0, 1}, Face{2, 3}});
    Involution swap = Involution::from_pairs({{0, 1}, {2, 3}});
    CHECK_THROWS_AS(validate(S, swap), ValidationError);
}

TEST_CASE("classification of the standard instances") {
    CHECK(classify(gen_crosspolytope(2)).kind == IrreducibleKind::Circuit);
    CHECK(classify(gen_crosspolytope(3)).kind == IrreducibleKind::Circuit);
    CHECK(classify(gen_trivial_pair(2)).kind ==
          IrreducibleKind::TrivialIrreducible);
    CHECK(classify(gen_trivial_pair(3)).kind ==
          IrreducibleKind::TrivialIrreducible);

    IrreducibleClassification hex = classify(gen_hexahedron_pair());
    CHECK(hex.kind == IrreducibleKind::SplitPair);
    CHECK(hex.overlap == 2);
    REQUIRE(hex.split_part.has_value());
    CHECK(is_circuit(*hex.split_part));
    CHECK_FALSE(is_trivial_circuit(*hex.split_part));

    MultiComplex not_cycle(2, {Face{0, 2, 4}, Face{1, 3, 5}});
    Involution anti = Involution::from_pairs({{0, 1}, {2, 3}, {4, 5}});
    CHECK_THROWS_AS(classify(SymmetricComplex{not_cycle, anti}),
                    PreconditionError);
}

TEST_CASE("a reducible invariant cycle is recognised") {
    // two vertex-disjoint crosspolytopes swapped facetwise into one complex
    SymmetricComplex a = gen_crosspolytope(2);
    MultiComplex S = a.complex;
    std::vector<std::pair<VertexId, VertexId>> pairs = a.involution.pairs();
    SymmetricComplex other = gen_crosspolytope(2);
    for (const auto& [f, m] : other.complex.facets()) {
        Face shifted;
        for (VertexId v : f.vertices()) shifted = shifted.plus(v + 10);
        S.add_facet(shifted, m);
    }
    for (auto [u, v] : a.involution.pairs()) pairs.emplace_back(u + 10, v + 10);
    SymmetricComplex big{S, Involution::from_pairs(pairs)};
    CHECK(classify(big).kind == IrreducibleKind::NotZ2Cycle);
    CHECK_FALSE(is_z2_irreducible(big));

    std::vector<Face> occ = S.facet_list();
    auto blocks = partition_z2_irreducible_indices(
        occ, occurrence_star_map(occ, big.involution));
    CHECK(blocks.size() == 2);
    std::vector<int> hit(occ.size(), 0);
    for (const auto& b : blocks)
        for (std::size_t i : b) hit[i]++;
    for (int h : hit) CHECK(h == 1);
}

TEST_CASE("classification agrees with exhaustive minimality") {
    CHECK(exhaustively_irreducible(gen_crosspolytope(2)));
    CHECK(exhaustively_irreducible(gen_trivial_pair(2)));
    CHECK(exhaustively_irreducible(gen_trivial_pair(3)));
    CHECK(exhaustively_irreducible(gen_hexahedron_pair()));
    CHECK(exhaustively_irreducible(gen_split_pair(2, 4)));
}

TEST_CASE("the split part is the only proper circuit") {
    // exhaustive: every circuit properly contained in S is T or its image
    SymmetricComplex S = gen_hexahedron_pair();
    IrreducibleClassification cls = classify(S);
    REQUIRE(cls.kind == IrreducibleKind::SplitPair);
    MultiComplex T = *cls.split_part;
    MultiComplex Ts(S.complex.k());
    for (const auto& [f, m] : T.facets()) Ts.add_facet(S.involution.image(f), m);

    std::vector<Face> occ = S.complex.facet_list();
    const std::size_t n = occ.size();
    REQUIRE(n <= 24);
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        MultiComplex sub(S.complex.k());
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) sub.add_facet(occ[i]);
        if (!is_circuit(sub)) continue;
        CHECK((sub == T || sub == Ts));
    }
}

TEST_CASE("minimum vertex count") {
    MinVertexReport r = min_vertex_count_check(gen_crosspolytope(2));
    CHECK(r.passed);
    CHECK(r.equality);
    CHECK(r.crosspolytope);

    MinVertexReport t = min_vertex_count_check(gen_trivial_pair(2));
    CHECK(t.passed);
    CHECK(t.equality);
    CHECK(t.trivial_case);

    MinVertexReport h = min_vertex_count_check(gen_hexahedron_pair());
    CHECK(h.passed);
    CHECK_FALSE(h.equality);
}

TEST_CASE("invariant separators") {
    // the split pair is cut by the two shared vertices
    auto hex = invariant_separator(gen_hexahedron_pair(), 4);
    REQUIRE(hex.has_value());
    CHECK(hex->separator.size() == 2);
    CHECK(hex->dichotomy == SeparatorDichotomy::SplitPairOverlap);

    // removing two antipodal pairs of the octahedron isolates the third
    auto oct = invariant_separator(gen_crosspolytope(2), 4);
    REQUIRE(oct.has_value());
    CHECK(oct->dichotomy == SeparatorDichotomy::CrosspolytopeGraph);

    CHECK_THROWS_AS(invariant_separator(gen_crosspolytope(2), 5),
                    std::invalid_argument);
}

TEST_CASE("rigidity threshold values") {
    CHECK(c_threshold(2, 0) == 4);
    CHECK(c_threshold(2, 1) == 3);
    CHECK(c_threshold(2, 2) == 4);
    CHECK(c_threshold(3, 0) == 6);
    CHECK(c_threshold(3, 1) == 4);
    CHECK(c_threshold(3, 2) == 4);
    CHECK(c_threshold(3, 3) == 6);
}

TEST_CASE("main theorem verdicts agree") {
    for (int t = 0; t <= 2; ++t) {
        MainTheoremReport r = main_theorem_conditions(gen_crosspolytope(2), t);
        CHECK(r.agree);
        MainTheoremReport s = main_theorem_conditions(gen_hexahedron_pair(), t);
        CHECK(s.agree);
    }
}
