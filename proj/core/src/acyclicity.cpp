#include "hyperhom/acyclicity.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace hyperhom {

namespace {

struct Candidate {
  bool edge_drop;
  Vertex vertex;                     // vertex removal
  Hyperedge edge;                    // host edge or dropped edge
  std::optional<Hyperedge> witness;  // proper superset for an edge drop
};

bool proper_subset(const Hyperedge& a, const Hyperedge& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Applicable moves in canonical priority order: edge drops first, then lone
// vertex removals; ties broken by edge/vertex order.
std::vector<Candidate> collect_moves(const Hypergraph& cur, bool multi_only) {
  std::vector<Candidate> out;
  for (const Hyperedge& e : cur.edges())
    for (const Hyperedge& big : cur.edges())
      if (proper_subset(e, big)) {
        out.push_back({true, {}, e, big});
        break;
      }
  for (const Vertex& v : cur.universe()) {
    const Hyperedge* host = nullptr;
    int count = 0;
    for (const Hyperedge& e : cur.edges()) {
      if (multi_only && e.size() < 2) continue;
      if (std::binary_search(e.begin(), e.end(), v)) {
        ++count;
        host = &e;
      }
    }
    if (count == 1) out.push_back({false, v, *host, std::nullopt});
  }
  return out;
}

Hypergraph apply_move(const Hypergraph& cur, const Candidate& c) {
  std::vector<Hyperedge> edges;
  for (const Hyperedge& e : cur.edges()) {
    if (e == c.edge) {
      if (c.edge_drop) continue;
      Hyperedge trimmed;
      for (const Vertex& v : e)
        if (v != c.vertex) trimmed.push_back(v);
      if (!trimmed.empty()) edges.push_back(trimmed);
      continue;
    }
    edges.push_back(e);
  }
  return Hypergraph::from_edges(edges);
}

ReductionStep to_step(const Candidate& c, bool multi_only) {
  ReductionStep s;
  s.op = c.edge_drop ? ReductionOp::DropEdge
                     : (multi_only ? ReductionOp::RemoveVertexMulti : ReductionOp::RemoveVertex);
  s.vertex = c.vertex;
  s.edge = c.edge;
  s.witness = c.witness;
  return s;
}

ReductionTrace run_reduction(const Hypergraph& h, bool multi_only) {
  ReductionTrace trace;
  Hypergraph cur = h;
  for (;;) {
    std::vector<Candidate> moves = collect_moves(cur, multi_only);
    if (moves.empty()) break;
    trace.steps.push_back(to_step(moves.front(), multi_only));
    cur = apply_move(cur, moves.front());
  }
  trace.final = cur;
  return trace;
}

bool all_singletons(const Hypergraph& h) {
  for (const Hyperedge& e : h.edges())
    if (e.size() != 1) return false;
  return true;
}

// Connected components of the universe under the closure's pair simplices.
std::vector<std::vector<Vertex>> closure_components(const SimplicialComplex& K) {
  const std::vector<Vertex>& verts = K.hypergraph().universe();
  std::vector<int> parent(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto position = [&](const Vertex& v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  for (const Hyperedge& e : K.hypergraph().edges())
    if (e.size() == 2) {
      int a = find(position(e[0])), b = find(position(e[1]));
      if (a != b) parent[a] = b;
    }
  std::vector<std::vector<Vertex>> comps;
  std::vector<int> root_slot(verts.size(), -1);
  for (size_t i = 0; i < verts.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (root_slot[r] < 0) {
      root_slot[r] = static_cast<int>(comps.size());
      comps.push_back({});
    }
    comps[root_slot[r]].push_back(verts[i]);
  }
  return comps;
}

HomologyGroup group_at(const std::vector<HomologyGroup>& groups, int degree) {
  if (degree < static_cast<int>(groups.size())) return groups[degree];
  return {degree, 0, {}};
}

}  // namespace

std::string reduction_op_name(ReductionOp op) {
  switch (op) {
    case ReductionOp::RemoveVertex: return "remove_vertex";
    case ReductionOp::DropEdge: return "drop_edge";
    case ReductionOp::RemoveVertexMulti: return "remove_vertex_multi";
  }
  return "unknown";
}

AcyclicityResult is_acyclic(const Hypergraph& h) {
  AcyclicityResult r;
  r.trace = run_reduction(h, false);
  r.acyclic = r.trace.final.empty();
  return r;
}

AcyclicityResult reduce_to_discrete(const Hypergraph& h) {
  AcyclicityResult r;
  r.trace = run_reduction(h, true);
  r.acyclic = all_singletons(r.trace.final);
  if (r.acyclic != is_acyclic(h).acyclic)
    throw InternalError("reduction routes disagree on acyclicity");
  return r;
}

bool is_acyclic_shuffled(const Hypergraph& h, unsigned long seed) {
  std::mt19937_64 rng(seed);
  Hypergraph cur = h;
  for (;;) {
    std::vector<Candidate> moves = collect_moves(cur, false);
    if (moves.empty()) break;
    size_t pick = static_cast<size_t>(rng() % moves.size());
    cur = apply_move(cur, moves[pick]);
  }
  return cur.empty();
}

Hypergraph replay_trace(const Hypergraph& input, const ReductionTrace& trace) {
  Hypergraph cur = input;
  for (const ReductionStep& s : trace.steps) {
    if (!cur.contains_edge(s.edge)) throw InternalError("trace step names a missing edge");
    Candidate c;
    c.edge_drop = s.op == ReductionOp::DropEdge;
    c.vertex = s.vertex;
    c.edge = s.edge;
    cur = apply_move(cur, c);
  }
  return cur;
}

AcyclicConsequences acyclic_homology_check(const Hypergraph& h) {
  if (!is_acyclic(h).acyclic)
    throw PreconditionViolated("homological consequences only apply to acyclic hypergraphs");
  AcyclicConsequences out;
  SimplicialComplex K = associated_complex(h);
  out.components = static_cast<int>(closure_components(K).size());
  std::vector<HomologyGroup> closure = simplicial_homology(K, Coefficients::Z());
  out.closure_trivial = true;
  for (int n = 0; n < static_cast<int>(closure.size()); ++n) {
    const HomologyGroup& g = closure[n];
    bool expected = n == 0 ? (g.free_rank == out.components && g.torsion.empty())
                           : (g.free_rank == 0 && g.torsion.empty());
    out.closure_trivial = out.closure_trivial && expected;
  }
  out.top_embedded_zero = true;
  if (h.dimension() >= 1) {
    HomologyGroup top = top_homology(h, Coefficients::Z());
    out.top_embedded_zero = top.free_rank == 0 && top.torsion.empty();
  }
  out.ok = out.closure_trivial && out.top_embedded_zero;
  return out;
}

bool is_disjoint_simplex_union(const Hypergraph& h) {
  SimplicialComplex K = associated_complex(h);
  for (const std::vector<Vertex>& comp : closure_components(K))
    if (!K.hypergraph().contains_edge(comp)) return false;
  if (!is_acyclic(h).acyclic)
    throw InternalError("disjoint unions of full simplices must be acyclic");
  return true;
}

Hypergraph cone_augmentation(const Hypergraph& h) {
  if (h.empty()) throw PreconditionViolated("cone augmentation needs a non-empty hypergraph");
  const std::vector<Vertex>& verts = h.universe();
  auto taken = [&](const Vertex& v) { return std::binary_search(verts.begin(), verts.end(), v); };
  Vertex x = "x", y = "y";
  for (int i = 1; taken(x) || taken(y) || x == y; ++i) {
    if (i > 1000000) throw TokenCollision("could not mint fresh vertex tokens");
    x = "x" + std::to_string(i);
    y = "y" + std::to_string(i);
  }
  Hyperedge apex = verts;
  apex.push_back(x);
  apex.push_back(y);
  std::sort(apex.begin(), apex.end());
  std::vector<Hyperedge> edges = h.edges();
  edges.push_back(apex);
  Hypergraph out = Hypergraph::from_edges(edges);

  const int n = static_cast<int>(verts.size()) + 1;
  SimplicialComplex K = associated_complex(out);
  Int full = (Int(1) << (n + 1)) - 1;
  if (Int(static_cast<long>(K.hypergraph().edges().size())) != full)
    throw InternalError("cone closure is not a full simplex");
  for (const Hyperedge& e : h.edges())
    if (!out.contains_edge(e)) throw InternalError("cone lost an original hyperedge");
  if (out.edges().size() != h.edges().size() + 1)
    throw InternalError("cone must add exactly one hyperedge");
  if (!is_acyclic(out).acyclic) throw InternalError("cone augmentation must be acyclic");

  std::vector<HomologyGroup> before = embedded_homology(h, Coefficients::Z());
  std::vector<HomologyGroup> after = embedded_homology(out, Coefficients::Z());
  for (int i = 0; i <= n - 2; ++i) {
    HomologyGroup a = group_at(before, i), b = group_at(after, i);
    if (a.free_rank != b.free_rank || a.torsion != b.torsion)
      throw InternalError("cone augmentation changed low-degree homology");
  }
  for (int i = n - 1; i <= n; ++i) {
    HomologyGroup g = group_at(after, i);
    if (g.free_rank != 0 || !g.torsion.empty())
      throw InternalError("cone augmentation must kill the top two degrees");
  }
  return out;
}

}  // namespace hyperhom
