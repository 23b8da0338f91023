#include "hyperhom/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace hyperhom {

Hyperedge make_edge(std::vector<Vertex> vertices) {
  if (vertices.empty()) throw EmptyEdge("hyperedge needs at least one vertex");
  std::sort(vertices.begin(), vertices.end());
  for (size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] == vertices[i - 1])
      throw UserError("duplicate vertex '" + vertices[i] + "' in hyperedge");
  return vertices;
}

bool edge_less(const Hyperedge& a, const Hyperedge& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Hypergraph Hypergraph::from_edges(std::vector<Hyperedge> edges) {
  Hypergraph h;
  for (auto& e : edges) h.edges_.push_back(make_edge(std::move(e)));
  std::sort(h.edges_.begin(), h.edges_.end(), edge_less);
  h.edges_.erase(std::unique(h.edges_.begin(), h.edges_.end()), h.edges_.end());
  std::set<Vertex> verts;
  for (const auto& e : h.edges_) verts.insert(e.begin(), e.end());
  h.universe_.assign(verts.begin(), verts.end());
  return h;
}

int Hypergraph::dimension() const {
  if (edges_.empty()) return -1;
  return static_cast<int>(edges_.back().size()) - 1;
}

std::pair<int, int> Hypergraph::degree_range(int degree) const {
  const size_t card = static_cast<size_t>(degree) + 1;
  auto lo = std::lower_bound(edges_.begin(), edges_.end(), card,
                             [](const Hyperedge& e, size_t k) { return e.size() < k; });
  auto hi = std::upper_bound(edges_.begin(), edges_.end(), card,
                             [](size_t k, const Hyperedge& e) { return k < e.size(); });
  return {static_cast<int>(lo - edges_.begin()), static_cast<int>(hi - edges_.begin())};
}

std::vector<Hyperedge> Hypergraph::edges_of_degree(int degree) const {
  auto [lo, hi] = degree_range(degree);
  return std::vector<Hyperedge>(edges_.begin() + lo, edges_.begin() + hi);
}

int Hypergraph::edge_count(int degree) const {
  auto [lo, hi] = degree_range(degree);
  return hi - lo;
}

bool Hypergraph::contains_edge(const Hyperedge& e) const { return edge_index(e) >= 0; }

int Hypergraph::edge_index(const Hyperedge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e, edge_less);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Hypergraph::vertex_index(const Vertex& v) const {
  auto it = std::lower_bound(universe_.begin(), universe_.end(), v);
  if (it == universe_.end() || *it != v) return -1;
  return static_cast<int>(it - universe_.begin());
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::vector<Hyperedge> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<Vertex> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    std::vector<Vertex> sorted = tokens;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1])
        throw DuplicateVertexInEdge("duplicate vertex '" + sorted[i] + "' in hyperedge", lineno);
    edges.push_back(std::move(sorted));
  }
  return Hypergraph::from_edges(std::move(edges));
}

Hypergraph parse_hypergraph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  for (const auto& e : h.edges()) {
    for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << "\n";
  }
  return out.str();
}

bool is_simplicial(const Hypergraph& h) {
  for (const auto& e : h.edges()) {
    if (e.size() == 1) continue;
    // Downward closure follows by induction from one-vertex deletions.
    for (size_t skip = 0; skip < e.size(); ++skip) {
      Hyperedge face;
      face.reserve(e.size() - 1);
      for (size_t i = 0; i < e.size(); ++i)
        if (i != skip) face.push_back(e[i]);
      if (!h.contains_edge(face)) return false;
    }
  }
  return true;
}

SimplicialComplex SimplicialComplex::from_hypergraph(const Hypergraph& h) {
  if (!is_simplicial(h)) throw NotASimplicialComplex("edge set is not downward closed");
  return SimplicialComplex(h);
}

SimplicialComplex associated_complex(const Hypergraph& h) {
  std::set<Hyperedge> faces;
  for (const auto& e : h.edges()) {
    const size_t n = e.size();
    if (n > 24) throw UserError("hyperedge too large for subset closure");
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
      Hyperedge face;
      for (size_t i = 0; i < n; ++i)
        if (mask & (1ul << i)) face.push_back(e[i]);
      faces.insert(std::move(face));
    }
  }
  return SimplicialComplex::from_hypergraph(
      Hypergraph::from_edges(std::vector<Hyperedge>(faces.begin(), faces.end())));
}

Hypergraph complement_hypergraph(const Hypergraph& h) {
  SimplicialComplex k = associated_complex(h);
  std::vector<Hyperedge> out;
  for (const auto& s : k.hypergraph().edges())
    if (!h.contains_edge(s)) out.push_back(s);
  return Hypergraph::from_edges(std::move(out));
}

Hypergraph hypergraph_union(const Hypergraph& a, const Hypergraph& b) {
  std::vector<Hyperedge> edges = a.edges();
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  return Hypergraph::from_edges(std::move(edges));
}

Hypergraph hypergraph_intersection(const Hypergraph& a, const Hypergraph& b) {
  std::vector<Hyperedge> edges;
  for (const auto& e : a.edges())
    if (b.contains_edge(e)) edges.push_back(e);
  return Hypergraph::from_edges(std::move(edges));
}

bool mv_condition(const Hypergraph& a, const Hypergraph& b) {
  for (const auto& ea : a.edges())
    for (const auto& eb : b.edges()) {
      Hyperedge common;
      std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      if (!a.contains_edge(common) || !b.contains_edge(common)) return false;
    }
  return true;
}

Hyperedge map_edge(const std::map<Vertex, Vertex>& vertex_map, const Hyperedge& e) {
  std::set<Vertex> image;
  for (const auto& v : e) {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end())
      throw InvalidMorphism("vertex map is not total: missing '" + v + "'");
    image.insert(it->second);
  }
  return Hyperedge(image.begin(), image.end());
}

HypergraphMorphism make_morphism(Hypergraph source, Hypergraph target, std::map<Vertex, Vertex> vertex_map) {
  for (const auto& v : source.universe())
    if (!vertex_map.count(v))
      throw InvalidMorphism("vertex map is not total: missing '" + v + "'");
  for (const auto& [from, to] : vertex_map) {
    if (source.vertex_index(from) < 0)
      throw InvalidMorphism("vertex map mentions '" + from + "' outside the source universe");
    if (target.vertex_index(to) < 0)
      throw InvalidMorphism("image vertex '" + to + "' outside the target universe");
  }
  for (const auto& e : source.edges())
    if (!target.contains_edge(map_edge(vertex_map, e)))
      throw InvalidMorphism("image of a hyperedge is not a hyperedge of the target");
  return {std::move(source), std::move(target), std::move(vertex_map)};
}

HypergraphMorphism identity_morphism(const Hypergraph& h) {
  std::map<Vertex, Vertex> id;
  for (const auto& v : h.universe()) id[v] = v;
  return make_morphism(h, h, std::move(id));
}

HypergraphMorphism inclusion_morphism(const Hypergraph& sub, const Hypergraph& super) {
  std::map<Vertex, Vertex> id;
  for (const auto& v : sub.universe()) id[v] = v;
  return make_morphism(sub, super, std::move(id));
}

HypergraphMorphism compose(const HypergraphMorphism& second, const HypergraphMorphism& first) {
  if (!(first.target == second.source))
    throw InvalidMorphism("composition domain mismatch");
  std::map<Vertex, Vertex> composed;
  for (const auto& [v, mid] : first.vertex_map) {
    auto it = second.vertex_map.find(mid);
    if (it == second.vertex_map.end())
      throw InvalidMorphism("composition missing image vertex");
    composed[v] = it->second;
  }
  return make_morphism(first.source, second.target, std::move(composed));
}

HypergraphMorphism apply_functor(const HypergraphMorphism& f) {
  return make_morphism(associated_complex(f.source).hypergraph(),
                       associated_complex(f.target).hypergraph(), f.vertex_map);
}

}  // namespace hyperhom
