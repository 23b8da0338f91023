#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hyperhom/errors.hpp"

namespace hyperhom {

using Vertex = std::string;
// Sorted, duplicate-free, non-empty list of vertex tokens.  An edge with n+1
// vertices has degree n.
using Hyperedge = std::vector<Vertex>;

Hyperedge make_edge(std::vector<Vertex> vertices);

// Canonical edge order: by cardinality, then lexicographically.  With this
// order the edge list is graded: all degree-n edges form a contiguous run.
bool edge_less(const Hyperedge& a, const Hyperedge& b);

class Hypergraph {
 public:
  Hypergraph() = default;
  static Hypergraph from_edges(std::vector<Hyperedge> edges);

  const std::vector<Hyperedge>& edges() const { return edges_; }
  const std::vector<Vertex>& universe() const { return universe_; }
  bool empty() const { return edges_.empty(); }
  int dimension() const;  // -1 for the empty hypergraph

  // Index range [first, last) of degree-n edges within edges().
  std::pair<int, int> degree_range(int degree) const;
  std::vector<Hyperedge> edges_of_degree(int degree) const;
  int edge_count(int degree) const;

  bool contains_edge(const Hyperedge& e) const;
  int edge_index(const Hyperedge& e) const;  // -1 when absent
  int vertex_index(const Vertex& v) const;   // -1 when absent

  bool operator==(const Hypergraph& o) const { return edges_ == o.edges_; }

 private:
  std::vector<Hyperedge> edges_;    // canonical order
  std::vector<Vertex> universe_;    // sorted; the union of all edge vertices
};

// One edge per line, whitespace-separated tokens, '#' starts a comment, blank
// lines ignored, duplicate edges dropped silently.  A repeated token within a
// line is a parse error carrying the line number.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph_text(const std::string& text);
std::string serialize_hypergraph(const Hypergraph& h);

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Validates downward closure.
  static SimplicialComplex from_hypergraph(const Hypergraph& h);

  const Hypergraph& hypergraph() const { return h_; }
  int dimension() const { return h_.dimension(); }
  std::pair<int, int> degree_range(int degree) const { return h_.degree_range(degree); }
  int simplex_count(int degree) const { return h_.edge_count(degree); }
  bool operator==(const SimplicialComplex& o) const = default;

 private:
  explicit SimplicialComplex(Hypergraph h) : h_(std::move(h)) {}
  Hypergraph h_;
};

bool is_simplicial(const Hypergraph& h);

// Smallest simplicial complex containing h: every non-empty subset of every
// hyperedge.
SimplicialComplex associated_complex(const Hypergraph& h);

// Simplices of the associated complex that are not hyperedges of h.
Hypergraph complement_hypergraph(const Hypergraph& h);

Hypergraph hypergraph_union(const Hypergraph& a, const Hypergraph& b);
Hypergraph hypergraph_intersection(const Hypergraph& a, const Hypergraph& b);

// Every pairwise intersection of hyperedges is empty or a common hyperedge.
bool mv_condition(const Hypergraph& a, const Hypergraph& b);

struct HypergraphMorphism {
  Hypergraph source, target;
  std::map<Vertex, Vertex> vertex_map;
};

// Validates: the map is total on the source universe, image tokens lie in the
// target universe, and the image of every hyperedge is a hyperedge.
HypergraphMorphism make_morphism(Hypergraph source, Hypergraph target, std::map<Vertex, Vertex> vertex_map);

HypergraphMorphism identity_morphism(const Hypergraph& h);

// Inclusion of sub into super (sub's edges must all be edges of super).
HypergraphMorphism inclusion_morphism(const Hypergraph& sub, const Hypergraph& super);

HypergraphMorphism compose(const HypergraphMorphism& second, const HypergraphMorphism& first);

// The induced simplicial map between associated complexes.
HypergraphMorphism apply_functor(const HypergraphMorphism& f);

// Image edge of e under the vertex map (sorted set of images).
Hyperedge map_edge(const std::map<Vertex, Vertex>& vertex_map, const Hyperedge& e);

}  // namespace hyperhom
