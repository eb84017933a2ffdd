#include "symrig/cycles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace symrig {

bool is_cycle(const MultiComplex& S) { return boundary(S).empty(); }

bool is_trivial_circuit(const MultiComplex& S) {
    return S.support_size() == 1 && S.size() == 2;
}

std::vector<Gf2Vec> boundary_rows(const std::vector<Face>& occurrences,
                                  std::map<Face, std::size_t>& columns) {
    columns.clear();
    for (const Face& f : occurrences)
        for (VertexId v : f.vertices()) {
            Face sub = f.minus(v);
            columns.emplace(sub, columns.size());
        }
    std::vector<Gf2Vec> rows;
    rows.reserve(occurrences.size());
    for (const Face& f : occurrences) {
        Gf2Vec row(columns.size());
        for (VertexId v : f.vertices()) row.flip(columns.at(f.minus(v)));
        rows.push_back(std::move(row));
    }
    return rows;
}

bool is_circuit(const MultiComplex& S) {
    if (S.empty() || !is_cycle(S)) return false;
    std::vector<Face> occ = S.facet_list();
    std::map<Face, std::size_t> cols;
    return gf2_rank(boundary_rows(occ, cols)) == occ.size() - 1;
}

std::vector<std::vector<std::size_t>> partition_circuit_indices(
    const std::vector<Face>& occurrences, std::uint64_t seed) {
    std::vector<std::size_t> remaining(occurrences.size());
    std::iota(remaining.begin(), remaining.end(), 0);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(remaining.begin(), remaining.end(), rng);
    }

    std::map<Face, std::size_t> cols;
    std::vector<Gf2Vec> rows = boundary_rows(occurrences, cols);

    std::vector<std::vector<std::size_t>> parts;
    while (!remaining.empty()) {
        Gf2Eliminator elim;
        std::vector<std::size_t> circuit;  // positions within `remaining`
        for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
            auto combo = elim.add(rows[remaining[pos]]);
            if (combo) {
                circuit = *combo;
                circuit.push_back(pos);
                break;
            }
        }
        if (circuit.empty())
            throw PreconditionError(
                "partition_circuit_indices: input is not a simplicial cycle");

        std::vector<std::size_t> part;
        for (std::size_t pos : circuit) part.push_back(remaining[pos]);
        std::sort(part.begin(), part.end());
        parts.push_back(part);

        // remove extracted positions, preserving order
        std::vector<std::size_t> next;
        std::size_t ci = 0;
        std::sort(circuit.begin(), circuit.end());
        for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
            if (ci < circuit.size() && circuit[ci] == pos)
                ++ci;
            else
                next.push_back(remaining[pos]);
        }
        remaining = std::move(next);
    }
    return parts;
}

CircuitDecomposition decompose_into_circuits(const MultiComplex& S,
                                             std::uint64_t seed) {
    if (S.empty() || !is_cycle(S))
        throw PreconditionError(
            "decompose_into_circuits: input must be a non-empty cycle");
    std::vector<Face> occ = S.facet_list();
    CircuitDecomposition out;
    for (const auto& idx : partition_circuit_indices(occ, seed)) {
        MultiComplex part(S.k());
        for (std::size_t i : idx) part.add_facet(occ[i]);
        out.parts.push_back(std::move(part));
    }
    return out;
}

}  // namespace symrig
