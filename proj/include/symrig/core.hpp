#ifndef SYMRIG_CORE_HPP
#define SYMRIG_CORE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace symrig {

using VertexId = int;

/// A face is a sorted set of distinct vertex ids. Kept canonical so that
/// equality, hashing into maps and parity counting are cheap.
class Face {
public:
    Face() = default;
    explicit Face(std::vector<VertexId> vertices);
    Face(std::initializer_list<VertexId> vertices);

    const std::vector<VertexId>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }
    bool contains(VertexId v) const;
    bool contains_all(const Face& other) const;

    Face minus(VertexId v) const;
    Face plus(VertexId v) const;
    /// Replace old_v by new_v (if present), re-canonicalising.
    Face replaced(VertexId old_v, VertexId new_v) const;
    Face intersect(const Face& other) const;
    Face unite(const Face& other) const;

    auto operator<=>(const Face&) const = default;

    std::string str() const;

private:
    std::vector<VertexId> verts_;
};

class Graph;

/// A k-dimensional multiset of (k+1)-vertex facets. Multiplicities are kept
/// explicitly; a complex is the special case where all of them are 1.
class MultiComplex {
public:
    MultiComplex() : k_(-1) {}
    explicit MultiComplex(int k) : k_(k) {}
    MultiComplex(int k, const std::vector<Face>& facets);

    int k() const { return k_; }
    bool empty() const { return facets_.empty(); }
    /// Number of facets counted with multiplicity.
    std::size_t size() const;
    /// Number of distinct facets.
    std::size_t support_size() const { return facets_.size(); }
    bool is_complex() const;  // all multiplicities == 1

    const std::map<Face, int>& facets() const { return facets_; }
    int multiplicity(const Face& f) const;
    void add_facet(const Face& f, int count = 1);
    void remove_facet(const Face& f, int count = 1);

    std::vector<VertexId> vertex_set() const;
    /// Facet occurrences listed with multiplicity, canonical order.
    std::vector<Face> facet_list() const;

    bool operator==(const MultiComplex&) const = default;

private:
    int k_;
    std::map<Face, int> facets_;
};

class Graph {
public:
    Graph() = default;
    Graph(std::set<VertexId> vertices, std::set<Face> edges);

    const std::set<VertexId>& vertices() const { return verts_; }
    const std::set<Face>& edges() const { return edges_; }
    bool has_vertex(VertexId v) const { return verts_.count(v) > 0; }
    bool has_edge(VertexId u, VertexId v) const;
    void add_vertex(VertexId v) { verts_.insert(v); }
    void add_edge(VertexId u, VertexId v);
    void remove_vertex(VertexId v);

    std::set<VertexId> neighbors(VertexId v) const;
    bool is_clique(const Face& f) const;
    /// Connectivity of the graph restricted to vertices \ removed.
    bool connected_without(const std::set<VertexId>& removed) const;
    bool connected() const { return connected_without({}); }

    /// Simple-graph edge contraction G/uv (contract v onto u).
    Graph contracted(VertexId u, VertexId v) const;

    bool operator==(const Graph&) const = default;

private:
    std::set<VertexId> verts_;
    std::set<Face> edges_;
};

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct MultisetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// All j-faces of S, each listed once.
std::set<Face> faces(const MultiComplex& S, int j);

/// The graph G(S): vertices are 0-faces, edges are 1-faces.
Graph graph(const MultiComplex& S);

/// k-subsets of V(S) lying in an odd number of facets, counted with
/// multiplicity. The result is a simplicial (k-1)-complex.
MultiComplex boundary(const MultiComplex& S);

/// Facet-set symmetric difference. Defined for complexes only.
MultiComplex symmetric_difference(const MultiComplex& S, const MultiComplex& T);

/// Facets of S not containing F.
MultiComplex antistar(const MultiComplex& S, const Face& F);

/// Contract v onto u: drop facets containing both, then replace v by u.
/// Colliding facets accumulate multiplicity.
MultiComplex contract(const MultiComplex& S, VertexId u, VertexId v);

/// True iff the facet adjacency graph (facets sharing k vertices) is
/// connected. Empty and singleton complexes count as strongly connected.
bool is_strongly_connected(const MultiComplex& S);

}  // namespace symrig

#endif
