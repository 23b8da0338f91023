#include "hyperhom/boundary.hpp"

#include <algorithm>

#include "hyperhom/errors.hpp"

namespace hyperhom {

namespace {

// Index of a simplex within its degree slice, or -1.
int degree_index(const SimplicialComplex& K, const Hyperedge& s) {
  int global = K.hypergraph().edge_index(s);
  if (global < 0) return -1;
  auto [lo, hi] = K.degree_range(static_cast<int>(s.size()) - 1);
  (void)hi;
  return global - lo;
}

}  // namespace

Matrix boundary_matrix(const SimplicialComplex& K, int degree, const Coefficients& coeff) {
  if (degree < 0) throw DegreeOutOfRange("boundary degree must be non-negative");
  const int cols = K.simplex_count(degree);
  const int rows = degree == 0 ? 0 : K.simplex_count(degree - 1);
  Matrix d(rows, cols);
  if (degree == 0) return d;
  auto [lo, hi] = K.degree_range(degree);
  for (int j = lo; j < hi; ++j) {
    const Hyperedge& s = K.hypergraph().edges()[j];
    int sign = 1;
    for (size_t skip = 0; skip < s.size(); ++skip) {
      Hyperedge face;
      face.reserve(s.size() - 1);
      for (size_t i = 0; i < s.size(); ++i)
        if (i != skip) face.push_back(s[i]);
      int r = degree_index(K, face);
      if (r < 0) throw InternalError("face missing from simplicial complex");
      d.at(r, j - lo) = coeff.normalize(Rat(sign));
      sign = -sign;
    }
  }
  return d;
}

Matrix simplex_chain(const SimplicialComplex& K, const Hyperedge& simplex) {
  int degree = static_cast<int>(simplex.size()) - 1;
  Matrix v(K.simplex_count(degree), 1);
  int idx = degree_index(K, simplex);
  if (idx < 0) throw AmbientMismatch("simplex not in complex");
  v.at(idx, 0) = 1;
  return v;
}

Matrix chain_map_matrix(const SimplicialComplex& source, const SimplicialComplex& target,
                        const std::map<Vertex, Vertex>& vertex_map, int degree,
                        const Coefficients& coeff) {
  const int cols = source.simplex_count(degree);
  const int rows = target.simplex_count(degree);
  Matrix f(rows, cols);
  auto [lo, hi] = source.degree_range(degree);
  for (int j = lo; j < hi; ++j) {
    const Hyperedge& s = source.hypergraph().edges()[j];
    std::vector<Vertex> image;
    image.reserve(s.size());
    for (const auto& v : s) {
      auto it = vertex_map.find(v);
      if (it == vertex_map.end()) throw InvalidMorphism("vertex map not total");
      image.push_back(it->second);
    }
    // orientation sign = parity of the permutation sorting the image tuple
    bool degenerate = false;
    int sign = 1;
    for (size_t a = 0; a < image.size() && !degenerate; ++a)
      for (size_t b = a + 1; b < image.size(); ++b) {
        if (image[a] == image[b]) { degenerate = true; break; }
        if (image[a] > image[b]) sign = -sign;
      }
    if (degenerate) continue;
    Hyperedge sorted = image;
    std::sort(sorted.begin(), sorted.end());
    int r = degree_index(target, sorted);
    if (r < 0) throw AmbientMismatch("image simplex not in target complex");
    f.at(r, j - lo) = coeff.normalize(Rat(sign));
  }
  return f;
}

}  // namespace hyperhom
