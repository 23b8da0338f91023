#include "hyperhom/persistence.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace hyperhom {

namespace {

void check_filtration(const Filtration& f) {
  for (int i = 0; i + 1 < f.size(); ++i) {
    const Rat& p = f.steps[i].parameter;
    const Rat& q = f.steps[i + 1].parameter;
    bool ordered = f.parameters_descending ? p > q : p < q;
    if (!ordered)
      throw UserError(f.parameters_descending
                          ? "filtration parameters must be strictly decreasing"
                          : "filtration parameters must be strictly increasing");
    for (const Hyperedge& e : f.steps[i].hypergraph.edges())
      if (!f.steps[i + 1].hypergraph.contains_edge(e))
        throw UserError("filtration steps must be nested");
  }
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, ',')) cells.push_back(trim(cur));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

}  // namespace

Filtration make_filtration(std::vector<FiltrationStep> steps, bool parameters_descending) {
  Filtration f;
  f.steps = std::move(steps);
  f.parameters_descending = parameters_descending;
  check_filtration(f);
  return f;
}

VertexMetric VertexMetric::from_points(const std::vector<Vertex>& tokens,
                                       const std::vector<std::vector<Rat>>& coords) {
  if (tokens.size() != coords.size())
    throw DomainMismatch("point cloud has mismatched token and coordinate counts");
  for (size_t i = 0; i < tokens.size(); ++i)
    for (size_t j = i + 1; j < tokens.size(); ++j)
      if (tokens[i] == tokens[j]) throw UserError("duplicate vertex token: " + tokens[i]);
  for (size_t i = 1; i < coords.size(); ++i)
    if (coords[i].size() != coords[0].size())
      throw DomainMismatch("all points must share one coordinate dimension");
  VertexMetric m;
  m.tokens_ = tokens;
  m.squared_ = true;
  int n = static_cast<int>(tokens.size());
  m.dist_ = Matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat q = 0;
      for (size_t k = 0; k < coords[i].size(); ++k) {
        Rat d = coords[i][k] - coords[j][k];
        q += d * d;
      }
      if (q == 0)
        throw InvalidMetric("coincident points: " + tokens[i] + " and " + tokens[j]);
      m.dist_.at(i, j) = q;
      m.dist_.at(j, i) = q;
    }
  return m;
}

VertexMetric VertexMetric::from_distances(const std::vector<Vertex>& tokens,
                                          const Matrix& distances) {
  int n = static_cast<int>(tokens.size());
  if (distances.rows() != n || distances.cols() != n)
    throw DomainMismatch("distance matrix shape does not match the token count");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (tokens[i] == tokens[j]) throw UserError("duplicate vertex token: " + tokens[i]);
  for (int i = 0; i < n; ++i)
    if (distances.at(i, i) != 0) throw InvalidMetric("distance matrix diagonal must be zero");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (distances.at(i, j) != distances.at(j, i))
        throw AsymmetricDistance("distance matrix must be symmetric");
      if (distances.at(i, j) <= 0)
        throw InvalidMetric("off-diagonal distances must be positive");
    }
  VertexMetric m;
  m.tokens_ = tokens;
  m.squared_ = false;
  m.dist_ = distances;
  return m;
}

bool VertexMetric::has_vertex(const Vertex& v) const { return index_of(v) >= 0; }

int VertexMetric::index_of(const Vertex& v) const {
  for (size_t i = 0; i < tokens_.size(); ++i)
    if (tokens_[i] == v) return static_cast<int>(i);
  return -1;
}

bool VertexMetric::closer_than(int i, int j, const Rat& radius) const {
  if (squared_) return radius > 0 && dist_.at(i, j) < radius * radius;
  return dist_.at(i, j) < radius;
}

std::vector<Rat> VertexMetric::critical_radii(const std::optional<Rat>& epsilon) const {
  if (epsilon && *epsilon <= 0) throw ValueOutOfRange("radius bump must be positive");
  std::vector<Rat> vals;
  for (int i = 0; i < dist_.rows(); ++i)
    for (int j = i + 1; j < dist_.cols(); ++j) vals.push_back(dist_.at(i, j));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  if (vals.empty()) return {Rat(1)};
  std::vector<Rat> out;
  if (squared_) {
    // values are squared distances: pick dyadic radii with r^2 landing just
    // past each critical square but short of the next
    for (size_t i = 0; i < vals.size(); ++i) {
      for (unsigned k = 16;; k += 16) {
        Rat r = rational_sqrt_above(vals[i], k);
        bool below_next = i + 1 >= vals.size() || r * r < vals[i + 1];
        bool below_bump = !epsilon || r * r <= vals[i] + *epsilon * *epsilon;
        if (below_next && below_bump) {
          out.push_back(r);
          break;
        }
        if (k > 16384) throw InternalError("radius refinement failed to converge");
      }
    }
  } else {
    Rat gap = vals[0];
    for (size_t i = 0; i + 1 < vals.size(); ++i) {
      Rat step = vals[i + 1] - vals[i];
      gap = std::min(gap, step);
    }
    Rat bump = epsilon ? *epsilon : gap / 1000;
    for (const Rat& v : vals) out.push_back(v + bump);
  }
  return out;
}

Rat VertexMetric::beyond_max_radius() const {
  Rat best = 0;
  for (int i = 0; i < dist_.rows(); ++i)
    for (int j = i + 1; j < dist_.cols(); ++j) best = std::max(best, dist_.at(i, j));
  if (best == 0) return Rat(1);
  if (squared_) return rational_sqrt_above(best, 8) + 1;
  return best + 1;
}

Hypergraph distance_subhypergraph(const Hypergraph& h, const VertexMetric& metric,
                                  const Rat& radius) {
  std::vector<Hyperedge> kept;
  for (const Hyperedge& e : h.edges()) {
    std::vector<int> idx;
    for (const Vertex& v : e) {
      int i = metric.index_of(v);
      if (i < 0) throw DomainMismatch("metric has no entry for vertex " + v);
      idx.push_back(i);
    }
    bool ok = true;
    for (size_t i = 0; ok && i < idx.size(); ++i)
      for (size_t j = i + 1; ok && j < idx.size(); ++j)
        ok = metric.closer_than(idx[i], idx[j], radius);
    if (ok) kept.push_back(e);
  }
  return Hypergraph::from_edges(kept);
}

Filtration metric_filtration(const Hypergraph& h, const VertexMetric& metric,
                             const std::vector<Rat>& radii) {
  for (size_t i = 0; i + 1 < radii.size(); ++i)
    if (!(radii[i] < radii[i + 1]))
      throw NonIncreasingRadii("radii must be strictly increasing");
  std::vector<FiltrationStep> steps;
  for (const Rat& r : radii) steps.push_back({r, distance_subhypergraph(h, metric, r)});
  return make_filtration(std::move(steps), false);
}

Filtration superlevel_filtration(const Hypergraph& h, const std::map<Vertex, Rat>& values) {
  for (const auto& [v, x] : values)
    if (x < 0 || x > 1) throw ValueOutOfRange("vertex values must lie in [0,1]");
  std::vector<Rat> thresholds{Rat(0)};
  for (const Vertex& v : h.universe()) {
    auto it = values.find(v);
    if (it == values.end()) throw DomainMismatch("no value for vertex " + v);
    thresholds.push_back(it->second);
  }
  std::sort(thresholds.begin(), thresholds.end(), std::greater<Rat>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  std::vector<FiltrationStep> steps;
  for (const Rat& t : thresholds) {
    std::vector<Hyperedge> kept;
    for (const Hyperedge& e : h.edges()) {
      bool ok = true;
      for (const Vertex& v : e) ok = ok && values.at(v) >= t;
      if (ok) kept.push_back(e);
    }
    steps.push_back({t, Hypergraph::from_edges(kept)});
  }
  return make_filtration(std::move(steps), true);
}

PersistentBetti persistent_betti(const Filtration& f, const Coefficients& field) {
  if (!field.is_field()) throw UserError("persistence requires field coefficients");
  check_filtration(f);
  PersistentBetti pb;
  pb.coeff = field;
  pb.parameters_descending = f.parameters_descending;
  for (const auto& s : f.steps) pb.parameters.push_back(s.parameter);
  const int m = f.size();
  if (m == 0) return pb;
  SimplicialComplex K = associated_complex(f.steps.back().hypergraph);
  const int top = std::max(0, K.dimension());
  pb.betti.assign(top + 1, std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));
  if (K.dimension() < 0) return pb;
  std::vector<Matrix> boundary = ambient_boundaries(K, field);
  std::vector<SubspaceFamily> fams;
  std::vector<ChainComplexField> cxs;
  std::vector<FieldHomology> homs;
  for (const auto& s : f.steps) {
    fams.push_back(infimum_family(s.hypergraph, K, field));
    cxs.push_back(abstract_complex(fams.back(), boundary));
    homs.push_back(field_homology(cxs.back()));
  }
  for (int d = 0; d <= top; ++d)
    for (int i = 0; i < m; ++i) {
      pb.betti[d][i][i] = homs[i].betti[d];
      Matrix reps_ambient = fams[i].bases[d] * homs[i].reps[d];
      for (int j = i + 1; j < m; ++j) {
        if (reps_ambient.cols() == 0) continue;
        auto coords = field_solve(fams[j].bases[d], reps_ambient.reduced(field), field);
        if (!coords)
          throw InternalError("restricted chain groups are not nested along the filtration");
        Matrix cls = homology_class(cxs[j], homs[j], d, *coords);
        pb.betti[d][i][j] = matrix_rank(cls, field);
      }
    }
  return pb;
}

PersistenceDiagram persistence_diagram(const PersistentBetti& pb) {
  PersistenceDiagram out;
  out.coeff = pb.coeff;
  out.parameters = pb.parameters;
  const int m = static_cast<int>(pb.parameters.size());
  for (int d = 0; d < static_cast<int>(pb.betti.size()); ++d) {
    const auto& b = pb.betti[d];
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        int mult = b[i][j - 1] - b[i][j];
        if (i >= 1) mult -= b[i - 1][j - 1] - b[i - 1][j];
        if (mult < 0) throw NegativeMultiplicity("rank matrix admits no interval decomposition");
        if (mult > 0)
          out.intervals.push_back({d, pb.parameters[i], pb.parameters[j], mult});
      }
      int forever = b[i][m - 1] - (i >= 1 ? b[i - 1][m - 1] : 0);
      if (forever < 0) throw NegativeMultiplicity("rank matrix admits no interval decomposition");
      if (forever > 0) out.intervals.push_back({d, pb.parameters[i], std::nullopt, forever});
    }
  }
  return out;
}

namespace {

// Vertical homology maps between the same column of consecutive rows.
std::vector<Matrix> column_verticals(const MvColumn& from, const MvColumn& to) {
  return induced_on_homology(from.complex, from.homology, to.complex, to.homology,
                             inclusion_chain_maps(from.family, to.family));
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix top = Matrix::hconcat(a, Matrix(a.rows(), b.cols()));
  Matrix bottom = Matrix::hconcat(Matrix(b.rows(), a.cols()), b);
  return Matrix::vconcat(top, bottom);
}

bool same_map(const Matrix& a, const Matrix& b, const Coefficients& field) {
  return (a + (-b)).reduced(field).is_zero();
}

}  // namespace

PersistentMvReport verify_persistent_mv(const Hypergraph& a, const Hypergraph& b,
                                        const VertexMetric& metric, const std::vector<Rat>& radii,
                                        const Coefficients& field) {
  if (!field.is_field()) throw UserError("exact sequence verification requires field coefficients");
  if (!mv_condition(a, b))
    throw HypothesisViolated("pairwise edge intersections must be empty or shared edges");
  for (size_t i = 0; i + 1 < radii.size(); ++i)
    if (!(radii[i] < radii[i + 1]))
      throw NonIncreasingRadii("radii must be strictly increasing");
  PersistentMvReport report;
  report.radii = radii;
  SimplicialComplex K = associated_complex(hypergraph_union(a, b));
  std::vector<MvData> rows;
  for (const Rat& r : radii) {
    Hypergraph ar = distance_subhypergraph(a, metric, r);
    Hypergraph br = distance_subhypergraph(b, metric, r);
    rows.push_back(build_mv_data(ar, br, field, &K));
    report.rows.push_back(exactness_from_data(rows.back(), field));
  }
  report.all_exact = true;
  for (const auto& row : report.rows) report.all_exact = report.all_exact && row.exact;
  const int top = K.dimension() + 1;
  for (size_t k = 0; k + 1 < rows.size(); ++k) {
    const MvData& lo = rows[k];
    const MvData& hi = rows[k + 1];
    std::vector<Matrix> vi = column_verticals(lo.inter, hi.inter);
    std::vector<Matrix> vl = column_verticals(lo.left, hi.left);
    std::vector<Matrix> vr = column_verticals(lo.right, hi.right);
    std::vector<Matrix> vu = column_verticals(lo.uni, hi.uni);
    bool ok = true;
    for (int n = 0; n <= top && ok; ++n) {
      Matrix vsum = block_diag(vl[n], vr[n]);
      ok = ok && same_map(hi.alpha[n] * vi[n], vsum * lo.alpha[n], field);
      ok = ok && same_map(hi.beta[n] * vsum, vu[n] * lo.beta[n], field);
      if (n >= 1) ok = ok && same_map(hi.connecting[n] * vu[n], vi[n - 1] * lo.connecting[n], field);
    }
    report.squares_commute.push_back(ok);
  }
  report.all_commute = true;
  for (bool ok : report.squares_commute) report.all_commute = report.all_commute && ok;
  return report;
}

VertexMetric parse_point_cloud(std::istream& in) {
  std::vector<Vertex> tokens;
  std::vector<std::vector<Rat>> coords;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    std::string tok;
    if (!(fields >> tok)) continue;
    std::vector<Rat> row;
    std::string cell;
    while (fields >> cell) {
      try {
        row.push_back(parse_exact_number(cell));
      } catch (const UserError& e) {
        throw ParseError(e.what(), lineno);
      }
    }
    if (row.empty()) throw ParseError("point needs at least one coordinate", lineno);
    if (!coords.empty() && row.size() != coords[0].size())
      throw ParseError("inconsistent point dimension", lineno);
    tokens.push_back(tok);
    coords.push_back(std::move(row));
  }
  return VertexMetric::from_points(tokens, coords);
}

VertexMetric parse_distance_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<int> linenos;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    rows.push_back(split_csv(line));
    linenos.push_back(lineno);
  }
  if (rows.empty()) throw ParseError("empty distance matrix", lineno == 0 ? 1 : lineno);
  std::vector<Vertex> tokens(rows[0].begin() + 1, rows[0].end());
  for (size_t i = 0; i < tokens.size(); ++i)
    if (tokens[i].empty()) throw ParseError("empty header token", linenos[0]);
  if (rows.size() != tokens.size() + 1)
    throw ParseError("distance matrix must have one row per header token", linenos.back());
  Matrix d(static_cast<int>(tokens.size()), static_cast<int>(tokens.size()));
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != tokens.size() + 1)
      throw ParseError("wrong number of columns", linenos[i]);
    if (rows[i][0] != tokens[i - 1])
      throw ParseError("row label does not match header order", linenos[i]);
    for (size_t j = 1; j < rows[i].size(); ++j) {
      try {
        d.at(static_cast<int>(i - 1), static_cast<int>(j - 1)) = parse_exact_number(rows[i][j]);
      } catch (const UserError& e) {
        throw ParseError(e.what(), linenos[i]);
      }
    }
  }
  return VertexMetric::from_distances(tokens, d);
}

}  // namespace hyperhom
