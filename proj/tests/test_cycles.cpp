#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "symrig/cycles.hpp"
#include "symrig/generators.hpp"

using namespace symrig;

namespace {

MultiComplex octahedron() { return gen_crosspolytope(2).complex; }

MultiComplex disjoint_tet_pair() {
    MultiComplex S(2);
    for (const Face& f : boundary(MultiComplex(3, {Face{0, 1, 2, 3}})).facet_list())
        S.add_facet(f);
    for (const Face& f : boundary(MultiComplex(3, {Face{4, 5, 6, 7}})).facet_list())
        S.add_facet(f);
    return S;
}

}  // namespace

TEST_CASE("cycle and circuit predicates") {
    CHECK(is_cycle(octahedron()));
    CHECK(is_circuit(octahedron()));

    MultiComplex triv(2);
    triv.add_facet(Face{0, 1, 2}, 2);
    CHECK(is_cycle(triv));
    CHECK(is_trivial_circuit(triv));
    CHECK(is_circuit(triv));

    MultiComplex S = disjoint_tet_pair();
    CHECK(is_cycle(S));
    CHECK_FALSE(is_circuit(S));

    MultiComplex not_cycle(2, {Face{0, 1, 2}});
    CHECK_FALSE(is_cycle(not_cycle));
    CHECK_FALSE(is_circuit(not_cycle));
    CHECK(is_cycle(MultiComplex(2)));  // empty boundary, but not a circuit
    CHECK_FALSE(is_circuit(MultiComplex(2)));
}

TEST_CASE("circuit minimality matches the rank characterization") {
    // every proper non-empty sub-multiset of a circuit fails to be a cycle
    MultiComplex S = octahedron();
    std::vector<Face> occ = S.facet_list();
    const std::size_t n = occ.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        MultiComplex sub(S.k());
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) sub.add_facet(occ[i]);
        CHECK_FALSE(is_cycle(sub));
    }
}

TEST_CASE("decomposition of a reducible cycle") {
    MultiComplex S = disjoint_tet_pair();
    CircuitDecomposition D = decompose_into_circuits(S);
    CHECK(D.parts.size() == 2);
    MultiComplex sum(S.k());
    for (const auto& part : D.parts) {
        CHECK(is_circuit(part));
        for (const auto& [f, m] : part.facets()) sum.add_facet(f, m);
    }
    CHECK(sum == S);
}

TEST_CASE("decomposition preconditions") {
    CHECK_THROWS_AS(decompose_into_circuits(MultiComplex(2, {Face{0, 1, 2}})),
                    PreconditionError);
    CHECK_THROWS_AS(decompose_into_circuits(MultiComplex(2)), PreconditionError);
}

TEST_CASE("random cycles decompose into circuits that reassemble") {
    std::mt19937_64 rng(29);
    int done = 0;
    while (done < 100) {
        int k = 1 + done % 3;
        MultiComplex S = testutil::random_cycle(k, 8, 4 + done % 4, rng);
        if (S.empty()) continue;
        for (std::uint64_t seed : {std::uint64_t{0}, std::uint64_t{done + 1u}}) {
            CircuitDecomposition D = decompose_into_circuits(S, seed);
            MultiComplex sum(S.k());
            for (const auto& part : D.parts) {
                CHECK(is_circuit(part));
                for (const auto& [f, m] : part.facets()) sum.add_facet(f, m);
            }
            CHECK(sum == S);
        }
        ++done;
    }
}

TEST_CASE("decomposition is deterministic for a fixed seed") {
    MultiComplex S = disjoint_tet_pair();
    for (std::uint64_t seed : {0u, 1u, 7u}) {
        CircuitDecomposition a = decompose_into_circuits(S, seed);
        CircuitDecomposition b = decompose_into_circuits(S, seed);
        REQUIRE(a.parts.size() == b.parts.size());
        for (std::size_t i = 0; i < a.parts.size(); ++i)
            CHECK(a.parts[i] == b.parts[i]);
    }
}

TEST_CASE("boundary rows span the expected rank") {
    MultiComplex S = octahedron();
    std::map<Face, std::size_t> columns;
    std::vector<Gf2Vec> rows = boundary_rows(S.facet_list(), columns);
    CHECK(rows.size() == 8);
    CHECK(columns.size() == 12);
    CHECK(gf2_rank(rows) == 7);  // |S| - 1 for a circuit
}

TEST_CASE("partition covers all occurrences exactly once") {
    MultiComplex S = disjoint_tet_pair();
    std::vector<Face> occ = S.facet_list();
    auto blocks = partition_circuit_indices(occ, 3);
    std::vector<int> hit(occ.size(), 0);
    for (const auto& b : blocks)
        for (std::size_t i : b) hit[i]++;
    for (int h : hit) CHECK(h == 1);
}
