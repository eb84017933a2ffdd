#ifndef SYMRIG_GENERATORS_HPP
#define SYMRIG_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "symrig/core.hpp"
#include "symrig/rigidity.hpp"
#include "symrig/symmetric.hpp"

namespace symrig {

struct FVector {
    std::vector<long> f;  // f[j] = number of j-faces, j = 0..k
};

struct BoundReport {
    long g2 = 0;
    long bound = 0;
    bool satisfied = false;
    bool equality = false;
    bool hypotheses_ok = false;
    std::string hypothesis_note;
};

/// |E| - (k+1)|V| + C(k+2,2)
long g2(const MultiComplex& S);

FVector f_vector(const MultiComplex& S);

/// g2 against C(k+1,2) - (k+1). The hypotheses (circuit, or nontrivial
/// irreducible with no invariant separator of size <= 2k, k >= 2) are
/// reported but the bound is evaluated either way.
BoundReport check_lower_bound(const SymmetricComplex& S);

/// j-face count of a symmetrically stacked sphere on n vertices.
long phi(int j, int n, int k);

/// B_k: facets are the transversals of the k+1 antipodal pairs.
SymmetricComplex gen_crosspolytope(int k);

/// {F,F} together with the disjoint starred copy.
SymmetricComplex gen_trivial_pair(int k);

/// B_k with `stacks` symmetric double stackings (each replaces a facet orbit
/// by the stars of a fresh vertex pair).
SymmetricComplex gen_symmetric_stacked(int k, int stacks, std::uint64_t seed = 1);

/// Octahedron graph with the antipodal pairing and the half-turn group,
/// realized symmetrically at random.
GammaFramework gen_bricard(std::uint64_t seed = 1);

/// The smallest interesting split pair: a hexahedron boundary T (bipyramid
/// with apexes v and v*) together with its starred copy, overlap 2.
SymmetricComplex gen_hexahedron_pair();

/// S = T ⊔ T* for a crosspolytope-sphere T sharing exactly h vertices (h/2
/// invariant pairs) with its image. Requires h even, k+1 <= h <= 2k.
SymmetricComplex gen_split_pair(int k, int h, std::uint64_t seed = 1);

}  // namespace symrig

#endif
