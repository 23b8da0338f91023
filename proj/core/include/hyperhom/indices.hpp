#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperhom/acyclicity.hpp"

namespace hyperhom {

// Piecewise-constant function on [0,1]: piece j lives on
// [breakpoints[j], breakpoints[j+1]), the last piece is closed on the right.
// Stored canonically: no two adjacent pieces share a value.
struct StepFunction1D {
  std::vector<Rat> breakpoints;
  std::vector<Rat> values;
  bool operator==(const StepFunction1D& o) const = default;
};

StepFunction1D make_step_function(std::vector<Rat> breakpoints, std::vector<Rat> values);

// Value at a point of [0,1].
Rat step_value(const StepFunction1D& f, const Rat& t);

// Piecewise-constant function on the unit square with an axis-aligned grid;
// values[i][j] belongs to x-cell i and y-cell j.  Canonical as above.
struct StepFunction2D {
  std::vector<Rat> xbreaks;
  std::vector<Rat> ybreaks;
  std::vector<std::vector<Rat>> values;
  bool operator==(const StepFunction2D& o) const = default;
};

StepFunction2D make_step_surface(std::vector<Rat> xbreaks, std::vector<Rat> ybreaks,
                                 std::vector<std::vector<Rat>> values);

Rat surface_value(const StepFunction2D& g, const Rat& t, const Rat& s);

// Relative L2 distance |f-g| / (|f|+|g|) in [0,1]; 0 when both norms vanish.
// Exact whenever the three squared norms are perfect squares, otherwise a
// deterministic dyadic approximation well below any meaningful scale.
Rat fit(const StepFunction1D& a, const StepFunction1D& b);
Rat fit(const StepFunction2D& a, const StepFunction2D& b);

// One pass of degree-k pruning: repeatedly, in canonical vertex order, a
// vertex lying in exactly k hyperedges is struck from all of them.  A vertex
// whose only hyperedge is its own singleton is never struck: removing it
// would erase a discrete point outright, collapsing the index this feeds.
Hypergraph rk_reduce(const Hypergraph& h, int k);

Hypergraph augment_with_singletons(const Hypergraph& h);

struct IndexTerm {
  int index;  // series position: k for connectivity, homology degree otherwise
  Rat term;
};

struct IndexReport {
  std::string kind;
  Rat value;
  std::vector<IndexTerm> breakdown;
  std::optional<Rat> tail;  // connectivity: closed-form geometric remainder
  std::optional<unsigned long> seed;
  std::optional<int> samples;
  bool sampled = false;  // true when Monte-Carlo sampling was used anywhere
};

IndexReport connectivity_index(const Hypergraph& h);

// dim H_degree of the superlevel hypergraph at each threshold, as a step
// function of the threshold.
StepFunction1D barcode_function(const Hypergraph& h, const std::map<Vertex, Rat>& phi, int degree);

// Same, with extra grid points forced into the evaluation; the canonical
// result must not depend on them.
StepFunction1D barcode_function_refined(const Hypergraph& h, const std::map<Vertex, Rat>& phi,
                                        int degree, const std::vector<Rat>& extra);

StepFunction2D barcode_surface(const Hypergraph& h, const std::map<Vertex, Rat>& phi,
                               const std::map<Vertex, Rat>& psi, int degree);

StepFunction2D barcode_surface_refined(const Hypergraph& h, const std::map<Vertex, Rat>& phi,
                                       const std::map<Vertex, Rat>& psi, int degree,
                                       const std::vector<Rat>& extra_x,
                                       const std::vector<Rat>& extra_y);

// Mean barcode over uniformly random reassignments of phi's value multiset to
// the vertices; exact enumeration when the number of distinct reassignments
// is at most exhaustive_bound, seeded sampling otherwise.
StepFunction1D expected_barcode(const Hypergraph& h, const std::map<Vertex, Rat>& phi, int degree,
                                int samples, unsigned long seed, long exhaustive_bound = 5040,
                                bool* used_sampling = nullptr);

StepFunction2D expected_surface(const Hypergraph& h, const std::map<Vertex, Rat>& phi,
                                const std::map<Vertex, Rat>& psi, int degree, int samples,
                                unsigned long seed, long exhaustive_bound = 5040,
                                bool* used_sampling = nullptr);

IndexReport differentiation_index(const Hypergraph& h, const std::map<Vertex, Rat>& phi,
                                  int samples = 200, unsigned long seed = 0,
                                  long exhaustive_bound = 5040);

IndexReport correlation_index(const Hypergraph& h, const std::map<Vertex, Rat>& phi,
                              const std::map<Vertex, Rat>& psi, int samples = 200,
                              unsigned long seed = 0, long exhaustive_bound = 5040);

// `.vals` file: lines `token value`, '#' comments, values in [0,1] enforced at
// the point of use.
std::map<Vertex, Rat> parse_values(std::istream& in);

}  // namespace hyperhom
