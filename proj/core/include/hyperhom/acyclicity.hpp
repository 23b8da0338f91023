#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperhom/embedded.hpp"

namespace hyperhom {

// The two reduction rules, plus the variant of the vertex rule that only
// counts hyperedges with at least two vertices when testing loneliness.
enum class ReductionOp { RemoveVertex, DropEdge, RemoveVertexMulti };

std::string reduction_op_name(ReductionOp op);

struct ReductionStep {
  ReductionOp op;
  Vertex vertex;                      // vertex removals only
  Hyperedge edge;                     // host edge (vertex removal) or dropped edge
  std::optional<Hyperedge> witness;   // superset justifying an edge drop
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Hypergraph final;
};

struct AcyclicityResult {
  bool acyclic = false;
  ReductionTrace trace;
};

// Exhaustive reduction (edge drops before vertex removals, candidates in
// canonical order); acyclic when the hypergraph empties out.
AcyclicityResult is_acyclic(const Hypergraph& h);

// Same engine but vertices are removed only from lone hyperedges with at
// least two vertices, so the endpoint of an acyclic input is a discrete
// point set rather than the empty hypergraph.  Agreement of the two verdicts
// is asserted on every call.
AcyclicityResult reduce_to_discrete(const Hypergraph& h);

// Verdict under a seeded random candidate order instead of the canonical one;
// order-insensitivity is checked empirically, not assumed.
bool is_acyclic_shuffled(const Hypergraph& h, unsigned long seed);

// Mechanically applies the steps to the input; throws if a step does not
// apply.  The result must reproduce trace.final.
Hypergraph replay_trace(const Hypergraph& input, const ReductionTrace& trace);

// Homological consequences of acyclicity: the closure has the homology of a
// discrete point set, and the top embedded homology vanishes in dimension >= 1.
struct AcyclicConsequences {
  int components = 0;
  bool closure_trivial = false;
  bool top_embedded_zero = false;
  bool ok = false;
};

AcyclicConsequences acyclic_homology_check(const Hypergraph& h);

// True when the closure is a disjoint union of full simplex closures with
// pairwise disjoint vertex sets; implies acyclicity (asserted), converse false.
bool is_disjoint_simplex_union(const Hypergraph& h);

// h together with one extra hyperedge spanning the whole universe plus two
// fresh vertices.  The result's closure is a full simplex, the result is
// acyclic, and homology below the top two degrees is untouched; all of this
// is verified on every call.
Hypergraph cone_augmentation(const Hypergraph& h);

}  // namespace hyperhom
