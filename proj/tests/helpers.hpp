#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "symrig/core.hpp"

namespace testutil {

using namespace symrig;

/// Random simplicial (k+1)-complex on a small vertex pool. Its boundary is a
/// k-cycle, which is how the property tests get cycle inputs.
inline MultiComplex random_top_complex(int k, int pool, std::size_t count,
                                       std::mt19937_64& rng) {
    std::vector<VertexId> verts(pool);
    for (int i = 0; i < pool; ++i) verts[i] = i;
    MultiComplex S(k + 1);
    std::uniform_int_distribution<int> pick(0, pool - 1);
    while (S.support_size() < count) {
        std::vector<VertexId> f;
        while (static_cast<int>(f.size()) < k + 2) {
            VertexId v = pick(rng);
            if (std::find(f.begin(), f.end(), v) == f.end()) f.push_back(v);
        }
        Face face(f);
        if (S.multiplicity(face) == 0) S.add_facet(face);
    }
    return S;
}

inline MultiComplex random_cycle(int k, int pool, std::size_t count,
                                 std::mt19937_64& rng) {
    return boundary(random_top_complex(k, pool, count, rng));
}

inline MultiComplex random_complex(int k, int pool, std::size_t count,
                                   std::mt19937_64& rng) {
    MultiComplex top = random_top_complex(k - 1, pool, count, rng);
    return top;  // a (k)-complex: facets are (k+1)-sets
}

}  // namespace testutil

#endif
