#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperhom/mayer_vietoris.hpp"

namespace hyperhom {

// A nested sequence of hypergraphs tagged with rational parameters.  Parameters
// run strictly upward except for superlevel filtrations, whose natural reading
// order has thresholds going down while the hypergraphs still grow.
struct FiltrationStep {
  Rat parameter;
  Hypergraph hypergraph;
};

struct Filtration {
  std::vector<FiltrationStep> steps;
  bool parameters_descending = false;

  int size() const { return static_cast<int>(steps.size()); }
};

Filtration make_filtration(std::vector<FiltrationStep> steps, bool parameters_descending = false);

// Exact pairwise distances on a labelled point set.  Point clouds keep squared
// distances so everything stays rational; distance matrices are taken as-is.
class VertexMetric {
 public:
  static VertexMetric from_points(const std::vector<Vertex>& tokens,
                                  const std::vector<std::vector<Rat>>& coords);
  static VertexMetric from_distances(const std::vector<Vertex>& tokens, const Matrix& distances);

  const std::vector<Vertex>& tokens() const { return tokens_; }
  bool has_vertex(const Vertex& v) const;
  int index_of(const Vertex& v) const;

  // strict comparison d(i,j) < radius
  bool closer_than(int i, int j, const Rat& radius) const;

  // One radius per distinct pairwise distance, each nudged just past the
  // critical value (by epsilon when given, else by a default well under the
  // smallest gap).  Exact and deterministic.
  std::vector<Rat> critical_radii(const std::optional<Rat>& epsilon = std::nullopt) const;

  // A radius strictly beyond every pairwise distance.
  Rat beyond_max_radius() const;

 private:
  VertexMetric() = default;
  std::vector<Vertex> tokens_;
  Matrix dist_;      // pairwise distances, or their squares in point mode
  bool squared_ = false;
};

// Sub-hypergraph spanned by edges whose vertices lie pairwise closer than r.
Hypergraph distance_subhypergraph(const Hypergraph& h, const VertexMetric& metric, const Rat& radius);

Filtration metric_filtration(const Hypergraph& h, const VertexMetric& metric,
                             const std::vector<Rat>& radii);

// Steps at every distinct vertex value (and 0), thresholds descending; step t
// keeps the edges whose vertices all carry value >= t.  Values must sit in
// [0,1] and cover the universe; entries for absent vertices are ignored.
Filtration superlevel_filtration(const Hypergraph& h, const std::map<Vertex, Rat>& values);

// betti[d][i][j] (i <= j): rank of the map H_d(step i) -> H_d(step j) induced
// by inclusion.  Entries with j < i are zero.
struct PersistentBetti {
  Coefficients coeff;
  std::vector<Rat> parameters;
  bool parameters_descending = false;
  std::vector<std::vector<std::vector<int>>> betti;

  int max_degree() const { return static_cast<int>(betti.size()) - 1; }
};

PersistentBetti persistent_betti(const Filtration& f, const Coefficients& field);

struct PersistenceInterval {
  int degree;
  Rat birth;
  std::optional<Rat> death;  // empty = never dies
  int multiplicity;
};

struct PersistenceDiagram {
  Coefficients coeff;
  std::vector<Rat> parameters;
  std::vector<PersistenceInterval> intervals;
};

PersistenceDiagram persistence_diagram(const PersistentBetti& pb);

// Interleaved exactness + naturality check: one exact-sequence row per radius,
// with inclusion-induced vertical maps between consecutive rows required to
// commute with every horizontal map, the connecting ones included.
struct PersistentMvReport {
  std::vector<Rat> radii;
  std::vector<ExactnessReport> rows;
  std::vector<bool> squares_commute;  // one flag per consecutive radius pair
  bool all_exact = false;
  bool all_commute = false;
};

PersistentMvReport verify_persistent_mv(const Hypergraph& a, const Hypergraph& b,
                                        const VertexMetric& metric, const std::vector<Rat>& radii,
                                        const Coefficients& field);

// Point-cloud file: one line per vertex, `token x1 x2 ... xd`, coordinates
// rational or decimal, all lines the same width.  '#' comments allowed.
VertexMetric parse_point_cloud(std::istream& in);

// Distance matrix CSV with a header row and first column of vertex tokens.
VertexMetric parse_distance_csv(std::istream& in);

}  // namespace hyperhom
