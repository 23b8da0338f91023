#include "hyperhom/indices.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <random>
#include <sstream>

namespace hyperhom {

namespace {

void check_axis(const std::vector<Rat>& breaks) {
  if (breaks.size() < 2) throw UserError("a step function needs at least one piece");
  if (breaks.front() != 0 || breaks.back() != 1)
    throw UserError("step function breakpoints must run from 0 to 1");
  for (size_t i = 0; i + 1 < breaks.size(); ++i)
    if (!(breaks[i] < breaks[i + 1]))
      throw UserError("step function breakpoints must be strictly increasing");
}

int piece_index(const std::vector<Rat>& breaks, size_t pieces, const Rat& t) {
  if (t < 0 || t > 1) throw ValueOutOfRange("step functions live on [0,1]");
  auto it = std::upper_bound(breaks.begin(), breaks.end(), t);
  int idx = static_cast<int>(it - breaks.begin()) - 1;
  if (idx >= static_cast<int>(pieces)) idx = static_cast<int>(pieces) - 1;
  return std::max(idx, 0);
}

std::vector<Rat> merged_breaks(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rat sqrt_under(const Rat& x) {
  Rat r;
  if (rational_sqrt_exact(x, r)) return r;
  return rational_sqrt_floor(x, 64);
}

Rat sqrt_over(const Rat& x) {
  Rat r;
  if (rational_sqrt_exact(x, r)) return r;
  return rational_sqrt_above(x, 64);
}

// |a-b| / (|a|+|b|) from the three squared norms; the under/over rounding of
// inexact square roots keeps the quotient inside [0,1].
Rat norm_ratio(const Rat& diff2, const Rat& left2, const Rat& right2) {
  if (left2 == 0 && right2 == 0) return 0;
  Rat den = sqrt_over(left2) + sqrt_over(right2);
  return sqrt_under(diff2) / den;
}

void validate_values(const Hypergraph& h, const std::map<Vertex, Rat>& vals) {
  for (const auto& [v, x] : vals)
    if (x < 0 || x > 1) throw ValueOutOfRange("vertex values must lie in [0,1]");
  for (const Vertex& v : h.universe())
    if (!vals.count(v)) throw DomainMismatch("no value for vertex " + v);
}

// Memoized ranks of dim H_degree(sub; Q) keyed by the surviving edge set.
struct RankCache {
  const Hypergraph& h;
  int degree;
  std::map<std::vector<int>, Rat> memo;

  Rat rank_of(const std::vector<int>& surviving) {
    auto it = memo.find(surviving);
    if (it != memo.end()) return it->second;
    std::vector<Hyperedge> edges;
    for (int i : surviving) edges.push_back(h.edges()[i]);
    Hypergraph sub = Hypergraph::from_edges(edges);
    Rat rank = 0;
    if (!sub.empty() && degree <= sub.dimension()) {
      std::vector<HomologyGroup> groups = embedded_homology(sub, Coefficients::Q());
      rank = groups[degree].free_rank;
    }
    memo.emplace(surviving, rank);
    return rank;
  }
};

// Edges whose vertices all clear the thresholds under one or two value maps.
std::vector<int> surviving_edges(const Hypergraph& h, const std::map<Vertex, Rat>& phi,
                                 const Rat& t, const std::map<Vertex, Rat>* psi, const Rat& s) {
  std::vector<int> out;
  for (size_t i = 0; i < h.edges().size(); ++i) {
    bool ok = true;
    for (const Vertex& v : h.edges()[i]) {
      ok = ok && phi.at(v) >= t;
      if (psi) ok = ok && psi->at(v) >= s;
    }
    if (ok) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<Rat> barcode_breaks(const Hypergraph& h, const std::map<Vertex, Rat>& vals,
                                const std::vector<Rat>& extra) {
  std::vector<Rat> breaks{Rat(0), Rat(1)};
  for (const Vertex& v : h.universe()) breaks.push_back(vals.at(v));
  for (const Rat& x : extra) {
    if (x < 0 || x > 1) throw ValueOutOfRange("grid points must lie in [0,1]");
    breaks.push_back(x);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  return breaks;
}

// Piece values on a fixed grid: the value on [b_j, b_{j+1}) is the rank at
// threshold b_{j+1}, which is where the >= predicate makes it constant.
std::vector<Rat> barcode_values_on(const std::vector<Rat>& breaks, const Hypergraph& h,
                                   const std::map<Vertex, Rat>& phi, RankCache& cache) {
  std::vector<Rat> vals;
  for (size_t j = 0; j + 1 < breaks.size(); ++j)
    vals.push_back(cache.rank_of(surviving_edges(h, phi, breaks[j + 1], nullptr, 0)));
  return vals;
}

std::vector<std::vector<Rat>> surface_values_on(const std::vector<Rat>& xb,
                                                const std::vector<Rat>& yb, const Hypergraph& h,
                                                const std::map<Vertex, Rat>& phi,
                                                const std::map<Vertex, Rat>& psi,
                                                RankCache& cache) {
  std::vector<std::vector<Rat>> vals(xb.size() - 1, std::vector<Rat>(yb.size() - 1));
  for (size_t i = 0; i + 1 < xb.size(); ++i)
    for (size_t j = 0; j + 1 < yb.size(); ++j)
      vals[i][j] = cache.rank_of(surviving_edges(h, phi, xb[i + 1], &psi, yb[j + 1]));
  return vals;
}

uint64_t bounded_draw(std::mt19937_64& g, uint64_t n) {
  if (n <= 1) return 0;
  uint64_t threshold = (0 - n) % n;
  for (;;) {
    uint64_t x = g();
    if (x >= threshold) return x % n;
  }
}

std::mt19937_64 derived_rng(unsigned long seed, int degree, int sample, int tag) {
  std::seed_seq seq{static_cast<unsigned int>(seed), static_cast<unsigned int>(seed >> 32),
                    static_cast<unsigned int>(degree), static_cast<unsigned int>(sample),
                    static_cast<unsigned int>(tag)};
  return std::mt19937_64(seq);
}

void shuffle_values(std::vector<Rat>& v, std::mt19937_64& g) {
  for (size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[static_cast<size_t>(bounded_draw(g, i))]);
}

Int multiset_permutations(std::vector<Rat> vals) {
  std::sort(vals.begin(), vals.end());
  Int count;
  mpz_fac_ui(count.get_mpz_t(), static_cast<unsigned long>(vals.size()));
  size_t run = 1;
  for (size_t i = 1; i <= vals.size(); ++i) {
    if (i < vals.size() && vals[i] == vals[i - 1]) {
      ++run;
      continue;
    }
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(run));
    count /= f;
    run = 1;
  }
  return count;
}

std::map<Vertex, Rat> assign_values(const std::vector<Vertex>& verts, const std::vector<Rat>& vals) {
  std::map<Vertex, Rat> out;
  for (size_t i = 0; i < verts.size(); ++i) out[verts[i]] = vals[i];
  return out;
}

std::vector<Rat> universe_values(const Hypergraph& h, const std::map<Vertex, Rat>& vals) {
  std::vector<Rat> out;
  for (const Vertex& v : h.universe()) out.push_back(vals.at(v));
  return out;
}

Rat half_power(int k) {
  Rat p(1);
  for (int i = 0; i < k; ++i) p /= 2;
  return p;
}

}  // namespace

StepFunction1D make_step_function(std::vector<Rat> breakpoints, std::vector<Rat> values) {
  check_axis(breakpoints);
  if (values.size() + 1 != breakpoints.size())
    throw UserError("step function needs one value per piece");
  for (const Rat& v : values)
    if (v < 0) throw UserError("step function values must be non-negative");
  StepFunction1D f;
  f.breakpoints.push_back(breakpoints.front());
  for (size_t j = 0; j < values.size(); ++j) {
    if (!f.values.empty() && f.values.back() == values[j]) {
      f.breakpoints.back() = breakpoints[j + 1];
    } else {
      f.values.push_back(values[j]);
      f.breakpoints.push_back(breakpoints[j + 1]);
    }
  }
  return f;
}

Rat step_value(const StepFunction1D& f, const Rat& t) {
  return f.values[piece_index(f.breakpoints, f.values.size(), t)];
}

StepFunction2D make_step_surface(std::vector<Rat> xbreaks, std::vector<Rat> ybreaks,
                                 std::vector<std::vector<Rat>> values) {
  check_axis(xbreaks);
  check_axis(ybreaks);
  if (values.size() + 1 != xbreaks.size())
    throw UserError("step surface needs one value row per x piece");
  for (const auto& row : values) {
    if (row.size() + 1 != ybreaks.size())
      throw UserError("step surface needs one value per cell");
    for (const Rat& v : row)
      if (v < 0) throw UserError("step function values must be non-negative");
  }
  StepFunction2D g;
  g.xbreaks.push_back(xbreaks.front());
  for (size_t i = 0; i < values.size(); ++i) {
    if (!g.values.empty() && g.values.back() == values[i]) {
      g.xbreaks.back() = xbreaks[i + 1];
    } else {
      g.values.push_back(values[i]);
      g.xbreaks.push_back(xbreaks[i + 1]);
    }
  }
  std::vector<size_t> kept;
  g.ybreaks.push_back(ybreaks.front());
  for (size_t j = 0; j + 1 < ybreaks.size(); ++j) {
    bool same = !kept.empty();
    if (same)
      for (const auto& row : g.values) same = same && row[j] == row[kept.back()];
    if (same) {
      g.ybreaks.back() = ybreaks[j + 1];
    } else {
      kept.push_back(j);
      g.ybreaks.push_back(ybreaks[j + 1]);
    }
  }
  for (auto& row : g.values) {
    std::vector<Rat> packed;
    for (size_t j : kept) packed.push_back(row[j]);
    row = std::move(packed);
  }
  return g;
}

Rat surface_value(const StepFunction2D& g, const Rat& t, const Rat& s) {
  int i = piece_index(g.xbreaks, g.values.size(), t);
  int j = piece_index(g.ybreaks, g.values[i].size(), s);
  return g.values[i][j];
}

Rat fit(const StepFunction1D& a, const StepFunction1D& b) {
  std::vector<Rat> grid = merged_breaks(a.breakpoints, b.breakpoints);
  Rat diff2 = 0, left2 = 0, right2 = 0;
  for (size_t j = 0; j + 1 < grid.size(); ++j) {
    Rat w = grid[j + 1] - grid[j];
    Rat va = step_value(a, grid[j]);
    Rat vb = step_value(b, grid[j]);
    Rat d = va - vb;
    diff2 += d * d * w;
    left2 += va * va * w;
    right2 += vb * vb * w;
  }
  return norm_ratio(diff2, left2, right2);
}

Rat fit(const StepFunction2D& a, const StepFunction2D& b) {
  std::vector<Rat> gx = merged_breaks(a.xbreaks, b.xbreaks);
  std::vector<Rat> gy = merged_breaks(a.ybreaks, b.ybreaks);
  Rat diff2 = 0, left2 = 0, right2 = 0;
  for (size_t i = 0; i + 1 < gx.size(); ++i)
    for (size_t j = 0; j + 1 < gy.size(); ++j) {
      Rat w = (gx[i + 1] - gx[i]) * (gy[j + 1] - gy[j]);
      Rat va = surface_value(a, gx[i], gy[j]);
      Rat vb = surface_value(b, gx[i], gy[j]);
      Rat d = va - vb;
      diff2 += d * d * w;
      left2 += va * va * w;
      right2 += vb * vb * w;
    }
  return norm_ratio(diff2, left2, right2);
}

Hypergraph rk_reduce(const Hypergraph& h, int k) {
  if (k < 1) throw UserError("reduction degree must be at least 1");
  Hypergraph cur = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Vertex& v : cur.universe()) {
      std::vector<const Hyperedge*> containing;
      for (const Hyperedge& e : cur.edges())
        if (std::binary_search(e.begin(), e.end(), v)) containing.push_back(&e);
      if (static_cast<int>(containing.size()) != k) continue;
      if (containing.size() == 1 && containing[0]->size() == 1) continue;
      std::vector<Hyperedge> edges;
      for (const Hyperedge& e : cur.edges()) {
        if (!std::binary_search(e.begin(), e.end(), v)) {
          edges.push_back(e);
          continue;
        }
        Hyperedge trimmed;
        for (const Vertex& w : e)
          if (w != v) trimmed.push_back(w);
        if (!trimmed.empty()) edges.push_back(trimmed);
      }
      cur = Hypergraph::from_edges(edges);
      changed = true;
      break;
    }
  }
  return cur;
}

Hypergraph augment_with_singletons(const Hypergraph& h) {
  std::vector<Hyperedge> edges = h.edges();
  for (const Vertex& v : h.universe()) edges.push_back({v});
  return Hypergraph::from_edges(edges);
}

IndexReport connectivity_index(const Hypergraph& h) {
  if (h.empty()) throw EmptyHypergraphError("connectivity index needs a non-empty hypergraph");
  IndexReport report;
  report.kind = "connectivity";
  report.value = 0;
  Hypergraph cur = augment_with_singletons(h);
  for (int k = 0;; ++k) {
    if (k > 0) cur = rk_reduce(cur, k);
    Rat c = 0;
    if (!cur.empty())
      c = Rat(zeroth_homology_components(cur)) / static_cast<long>(cur.universe().size());
    Rat term = c * half_power(k + 1);
    report.breakdown.push_back({k, term});
    report.value += term;
    if (k + 1 > static_cast<int>(cur.edges().size())) {
      report.tail = term;  // remaining geometric series sums to one more copy
      report.value += term;
      break;
    }
  }
  if (report.value <= 0 || report.value > 1)
    throw InternalError("connectivity index escaped (0,1]");
  return report;
}

StepFunction1D barcode_function_refined(const Hypergraph& h, const std::map<Vertex, Rat>& phi,
                                        int degree, const std::vector<Rat>& extra) {
  if (degree < 0) throw DegreeOutOfRange("barcode degree must be non-negative");
  validate_values(h, phi);
  RankCache cache{h, degree, {}};
  std::vector<Rat> breaks = barcode_breaks(h, phi, extra);
  return make_step_function(breaks, barcode_values_on(breaks, h, phi, cache));
}

StepFunction1D barcode_function(const Hypergraph& h, const std::map<Vertex, Rat>& phi,
                                int degree) {
  return barcode_function_refined(h, phi, degree, {});
}

StepFunction2D barcode_surface_refined(const Hypergraph& h, const std::map<Vertex, Rat>& phi,
                                       const std::map<Vertex, Rat>& psi, int degree,
                                       const std::vector<Rat>& extra_x,
                                       const std::vector<Rat>& extra_y) {
  if (degree < 0) throw DegreeOutOfRange("barcode degree must be non-negative");
  validate_values(h, phi);
  validate_values(h, psi);
  RankCache cache{h, degree, {}};
  std::vector<Rat> xb = barcode_breaks(h, phi, extra_x);
  std::vector<Rat> yb = barcode_breaks(h, psi, extra_y);
  return make_step_surface(xb, yb, surface_values_on(xb, yb, h, phi, psi, cache));
}

StepFunction2D barcode_surface(const Hypergraph& h, const std::map<Vertex, Rat>& phi,
                               const std::map<Vertex, Rat>& psi, int degree) {
  return barcode_surface_refined(h, phi, psi, degree, {}, {});
}

StepFunction1D expected_barcode(const Hypergraph& h, const std::map<Vertex, Rat>& phi, int degree,
                                int samples, unsigned long seed, long exhaustive_bound,
                                bool* used_sampling) {
  if (degree < 0) throw DegreeOutOfRange("barcode degree must be non-negative");
  validate_values(h, phi);
  if (used_sampling) *used_sampling = false;
  RankCache cache{h, degree, {}};
  std::vector<Rat> breaks = barcode_breaks(h, phi, {});
  std::vector<Rat> vals = universe_values(h, phi);
  std::vector<Rat> sum(breaks.size() - 1, Rat(0));
  long count = 0;
  if (multiset_permutations(vals) <= exhaustive_bound) {
    std::sort(vals.begin(), vals.end());
    do {
      std::map<Vertex, Rat> gamma = assign_values(h.universe(), vals);
      std::vector<Rat> row = barcode_values_on(breaks, h, gamma, cache);
      for (size_t j = 0; j < sum.size(); ++j) sum[j] += row[j];
      ++count;
    } while (std::next_permutation(vals.begin(), vals.end()));
  } else {
    if (samples < 1) throw UserError("sample count must be at least 1");
    if (used_sampling) *used_sampling = true;
    for (int s = 0; s < samples; ++s) {
      std::vector<Rat> shuffled = vals;
      std::mt19937_64 rng = derived_rng(seed, degree, s, 0);
      shuffle_values(shuffled, rng);
      std::map<Vertex, Rat> gamma = assign_values(h.universe(), shuffled);
      std::vector<Rat> row = barcode_values_on(breaks, h, gamma, cache);
      for (size_t j = 0; j < sum.size(); ++j) sum[j] += row[j];
      ++count;
    }
  }
  for (Rat& v : sum) v /= count;
  return make_step_function(breaks, sum);
}

StepFunction2D expected_surface(const Hypergraph& h, const std::map<Vertex, Rat>& phi,
                                const std::map<Vertex, Rat>& psi, int degree, int samples,
                                unsigned long seed, long exhaustive_bound, bool* used_sampling) {
  if (degree < 0) throw DegreeOutOfRange("barcode degree must be non-negative");
  validate_values(h, phi);
  validate_values(h, psi);
  if (used_sampling) *used_sampling = false;
  RankCache cache{h, degree, {}};
  std::vector<Rat> xb = barcode_breaks(h, phi, {});
  std::vector<Rat> yb = barcode_breaks(h, psi, {});
  std::vector<Rat> pv = universe_values(h, phi);
  std::vector<Rat> qv = universe_values(h, psi);
  std::vector<std::vector<Rat>> sum(xb.size() - 1, std::vector<Rat>(yb.size() - 1, Rat(0)));
  auto accumulate = [&](const std::map<Vertex, Rat>& g1, const std::map<Vertex, Rat>& g2) {
    std::vector<std::vector<Rat>> grid = surface_values_on(xb, yb, h, g1, g2, cache);
    for (size_t i = 0; i < sum.size(); ++i)
      for (size_t j = 0; j < sum[i].size(); ++j) sum[i][j] += grid[i][j];
  };
  long count = 0;
  Int pairs = multiset_permutations(pv) * multiset_permutations(qv);
  if (pairs <= exhaustive_bound) {
    std::sort(pv.begin(), pv.end());
    do {
      std::map<Vertex, Rat> g1 = assign_values(h.universe(), pv);
      std::vector<Rat> qs = qv;
      std::sort(qs.begin(), qs.end());
      do {
        accumulate(g1, assign_values(h.universe(), qs));
        ++count;
      } while (std::next_permutation(qs.begin(), qs.end()));
    } while (std::next_permutation(pv.begin(), pv.end()));
  } else {
    if (samples < 1) throw UserError("sample count must be at least 1");
    if (used_sampling) *used_sampling = true;
    for (int s = 0; s < samples; ++s) {
      std::vector<Rat> s1 = pv, s2 = qv;
      std::mt19937_64 r1 = derived_rng(seed, degree, s, 1);
      std::mt19937_64 r2 = derived_rng(seed, degree, s, 2);
      shuffle_values(s1, r1);
      shuffle_values(s2, r2);
      accumulate(assign_values(h.universe(), s1), assign_values(h.universe(), s2));
      ++count;
    }
  }
  for (auto& row : sum)
    for (Rat& v : row) v /= count;
  return make_step_surface(xb, yb, sum);
}

IndexReport differentiation_index(const Hypergraph& h, const std::map<Vertex, Rat>& phi,
                                  int samples, unsigned long seed, long exhaustive_bound) {
  validate_values(h, phi);
  IndexReport report;
  report.kind = "differentiation";
  report.value = 0;
  report.seed = seed;
  report.samples = samples;
  for (int i = 0; i <= h.dimension(); ++i) {
    StepFunction1D f = barcode_function(h, phi, i);
    bool used = false;
    StepFunction1D e = expected_barcode(h, phi, i, samples, seed, exhaustive_bound, &used);
    report.sampled = report.sampled || used;
    Rat term = fit(f, e) * half_power(i + 1);
    report.breakdown.push_back({i, term});
    report.value += term;
  }
  if (report.value < 0 || report.value >= 1)
    throw InternalError("differentiation index escaped [0,1)");
  return report;
}

IndexReport correlation_index(const Hypergraph& h, const std::map<Vertex, Rat>& phi,
                              const std::map<Vertex, Rat>& psi, int samples, unsigned long seed,
                              long exhaustive_bound) {
  validate_values(h, phi);
  validate_values(h, psi);
  IndexReport report;
  report.kind = "correlation";
  report.value = 0;
  report.seed = seed;
  report.samples = samples;
  for (int i = 0; i <= h.dimension(); ++i) {
    StepFunction2D g = barcode_surface(h, phi, psi, i);
    bool used = false;
    StepFunction2D e = expected_surface(h, phi, psi, i, samples, seed, exhaustive_bound, &used);
    report.sampled = report.sampled || used;
    Rat term = fit(g, e) * half_power(i + 1);
    report.breakdown.push_back({i, term});
    report.value += term;
  }
  if (report.value < 0 || report.value >= 1)
    throw InternalError("correlation index escaped [0,1)");
  return report;
}

std::map<Vertex, Rat> parse_values(std::istream& in) {
  std::map<Vertex, Rat> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    std::string tok, cell, rest;
    if (!(fields >> tok)) continue;
    if (!(fields >> cell)) throw ParseError("expected `token value`", lineno);
    if (fields >> rest) throw ParseError("unexpected trailing field", lineno);
    if (out.count(tok)) throw ParseError("duplicate value for vertex " + tok, lineno);
    try {
      out[tok] = parse_exact_number(cell);
    } catch (const UserError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return out;
}

}  // namespace hyperhom
