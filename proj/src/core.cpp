#include "symrig/core.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace symrig {

Face::Face(std::vector<VertexId> vertices) : verts_(std::move(vertices)) {
    std::sort(verts_.begin(), verts_.end());
    auto it = std::unique(verts_.begin(), verts_.end());
    if (it != verts_.end())
        throw std::invalid_argument("Face: duplicate vertex");
}

Face::Face(std::initializer_list<VertexId> vertices)
    : Face(std::vector<VertexId>(vertices)) {}

bool Face::contains(VertexId v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Face::contains_all(const Face& other) const {
    return std::includes(verts_.begin(), verts_.end(),
                         other.verts_.begin(), other.verts_.end());
}

Face Face::minus(VertexId v) const {
    Face f;
    f.verts_.reserve(verts_.size());
    for (VertexId w : verts_)
        if (w != v) f.verts_.push_back(w);
    return f;
}

Face Face::plus(VertexId v) const {
    if (contains(v)) return *this;
    Face f = *this;
    f.verts_.insert(std::upper_bound(f.verts_.begin(), f.verts_.end(), v), v);
    return f;
}

Face Face::replaced(VertexId old_v, VertexId new_v) const {
    if (!contains(old_v)) return *this;
    return minus(old_v).plus(new_v);
}

Face Face::intersect(const Face& other) const {
    Face f;
    std::set_intersection(verts_.begin(), verts_.end(),
                          other.verts_.begin(), other.verts_.end(),
                          std::back_inserter(f.verts_));
    return f;
}

Face Face::unite(const Face& other) const {
    Face f;
    std::set_union(verts_.begin(), verts_.end(),
                   other.verts_.begin(), other.verts_.end(),
                   std::back_inserter(f.verts_));
    return f;
}

std::string Face::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) os << ',';
        os << verts_[i];
    }
    os << '}';
    return os.str();
}

MultiComplex::MultiComplex(int k, const std::vector<Face>& facets) : k_(k) {
    for (const Face& f : facets) add_facet(f);
}

std::size_t MultiComplex::size() const {
    std::size_t n = 0;
    for (const auto& [f, m] : facets_) n += static_cast<std::size_t>(m);
    return n;
}

bool MultiComplex::is_complex() const {
    for (const auto& [f, m] : facets_)
        if (m != 1) return false;
    return true;
}

int MultiComplex::multiplicity(const Face& f) const {
    auto it = facets_.find(f);
    return it == facets_.end() ? 0 : it->second;
}

void MultiComplex::add_facet(const Face& f, int count) {
    if (k_ >= 0 && static_cast<int>(f.size()) != k_ + 1)
        throw DimensionError("facet " + f.str() + " has wrong cardinality for a " +
                             std::to_string(k_) + "-complex");
    if (count <= 0) throw std::invalid_argument("multiplicity must be positive");
    facets_[f] += count;
}

void MultiComplex::remove_facet(const Face& f, int count) {
    auto it = facets_.find(f);
    if (it == facets_.end() || it->second < count)
        throw std::invalid_argument("remove_facet: " + f.str() + " not present");
    it->second -= count;
    if (it->second == 0) facets_.erase(it);
}

std::vector<VertexId> MultiComplex::vertex_set() const {
    std::set<VertexId> vs;
    for (const auto& [f, m] : facets_)
        vs.insert(f.vertices().begin(), f.vertices().end());
    return {vs.begin(), vs.end()};
}

std::vector<Face> MultiComplex::facet_list() const {
    std::vector<Face> out;
    for (const auto& [f, m] : facets_)
        for (int i = 0; i < m; ++i) out.push_back(f);
    return out;
}

Graph::Graph(std::set<VertexId> vertices, std::set<Face> edges)
    : verts_(std::move(vertices)), edges_(std::move(edges)) {
    for (const Face& e : edges_) {
        if (e.size() != 2) throw std::invalid_argument("Graph: edge arity");
        for (VertexId v : e.vertices())
            if (!verts_.count(v))
                throw std::invalid_argument("Graph: edge endpoint not a vertex");
    }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u == v) return false;
    return edges_.count(Face{u, v}) > 0;
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("Graph: loop edge");
    verts_.insert(u);
    verts_.insert(v);
    edges_.insert(Face{u, v});
}

void Graph::remove_vertex(VertexId v) {
    verts_.erase(v);
    for (auto it = edges_.begin(); it != edges_.end();)
        it = it->contains(v) ? edges_.erase(it) : std::next(it);
}

std::set<VertexId> Graph::neighbors(VertexId v) const {
    std::set<VertexId> out;
    for (const Face& e : edges_)
        if (e.contains(v)) out.insert(e.vertices()[0] == v ? e.vertices()[1]
                                                          : e.vertices()[0]);
    return out;
}

bool Graph::is_clique(const Face& f) const {
    const auto& vs = f.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!verts_.count(vs[i])) return false;
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!has_edge(vs[i], vs[j])) return false;
    }
    return true;
}

bool Graph::connected_without(const std::set<VertexId>& removed) const {
    std::vector<VertexId> alive;
    for (VertexId v : verts_)
        if (!removed.count(v)) alive.push_back(v);
    if (alive.size() <= 1) return true;

    std::set<VertexId> seen{alive[0]};
    std::queue<VertexId> bfs;
    bfs.push(alive[0]);
    while (!bfs.empty()) {
        VertexId v = bfs.front();
        bfs.pop();
        for (VertexId w : neighbors(v)) {
            if (removed.count(w) || seen.count(w)) continue;
            seen.insert(w);
            bfs.push(w);
        }
    }
    return seen.size() == alive.size();
}

Graph Graph::contracted(VertexId u, VertexId v) const {
    Graph g;
    for (VertexId w : verts_)
        if (w != v) g.add_vertex(w);
    for (const Face& e : edges_) {
        VertexId a = e.vertices()[0], b = e.vertices()[1];
        if (a == v) a = u;
        if (b == v) b = u;
        if (a != b) g.add_edge(a, b);
    }
    return g;
}

namespace {

void enumerate_subsets(const std::vector<VertexId>& vs, int size,
                       std::vector<VertexId>& cur, std::size_t from,
                       const std::function<void(const std::vector<VertexId>&)>& fn) {
    if (static_cast<int>(cur.size()) == size) {
        fn(cur);
        return;
    }
    for (std::size_t i = from; i < vs.size(); ++i) {
        cur.push_back(vs[i]);
        enumerate_subsets(vs, size, cur, i + 1, fn);
        cur.pop_back();
    }
}

}  // namespace

std::set<Face> faces(const MultiComplex& S, int j) {
    if (j < 0 || j > S.k())
        throw DimensionError("faces: j=" + std::to_string(j) + " out of range");
    std::set<Face> out;
    std::vector<VertexId> cur;
    for (const auto& [facet, m] : S.facets())
        enumerate_subsets(facet.vertices(), j + 1, cur, 0,
                          [&](const std::vector<VertexId>& sub) {
                              out.insert(Face(sub));
                          });
    return out;
}

Graph graph(const MultiComplex& S) {
    if (S.k() < 1) throw DimensionError("graph: requires k >= 1");
    std::set<VertexId> vs;
    for (VertexId v : S.vertex_set()) vs.insert(v);
    std::set<Face> es = S.empty() ? std::set<Face>{} : faces(S, 1);
    return Graph(std::move(vs), std::move(es));
}

MultiComplex boundary(const MultiComplex& S) {
    std::map<Face, int> parity;
    for (const auto& [facet, m] : S.facets())
        for (VertexId v : facet.vertices())
            parity[facet.minus(v)] += m;
    MultiComplex out(S.k() - 1);
    for (const auto& [f, c] : parity)
        if (c % 2 == 1) out.add_facet(f);
    return out;
}

MultiComplex symmetric_difference(const MultiComplex& S, const MultiComplex& T) {
    if (!S.empty() && !T.empty() && S.k() != T.k())
        throw DimensionError("symmetric_difference: dimension mismatch");
    if (!S.is_complex() || !T.is_complex())
        throw MultisetError(
            "symmetric_difference is defined for complexes, not multisets");
    MultiComplex out(S.empty() ? T.k() : S.k());
    for (const auto& [f, m] : S.facets())
        if (T.multiplicity(f) == 0) out.add_facet(f);
    for (const auto& [f, m] : T.facets())
        if (S.multiplicity(f) == 0) out.add_facet(f);
    return out;
}

MultiComplex antistar(const MultiComplex& S, const Face& F) {
    MultiComplex out(S.k());
    for (const auto& [facet, m] : S.facets())
        if (!facet.contains_all(F)) out.add_facet(facet, m);
    return out;
}

MultiComplex contract(const MultiComplex& S, VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("contract: u == v");
    MultiComplex out(S.k());
    MultiComplex ast = antistar(S, Face{u, v});
    for (const auto& [facet, m] : ast.facets())
        out.add_facet(facet.replaced(v, u), m);
    return out;
}

bool is_strongly_connected(const MultiComplex& S) {
    std::vector<Face> fs;
    for (const auto& [f, m] : S.facets()) fs.push_back(f);
    if (fs.size() <= 1) return true;

    const int k = S.k();
    std::vector<char> seen(fs.size(), 0);
    std::queue<std::size_t> bfs;
    seen[0] = 1;
    bfs.push(0);
    std::size_t reached = 1;
    while (!bfs.empty()) {
        std::size_t i = bfs.front();
        bfs.pop();
        for (std::size_t j = 0; j < fs.size(); ++j) {
            if (seen[j]) continue;
            if (static_cast<int>(fs[i].intersect(fs[j]).size()) == k) {
                seen[j] = 1;
                ++reached;
                bfs.push(j);
            }
        }
    }
    return reached == fs.size();
}

}  // namespace symrig
