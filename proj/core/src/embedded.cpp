#include "hyperhom/embedded.hpp"

#include <algorithm>

namespace hyperhom {

namespace {

// Positions of h's degree-n edges within the degree-n slice of K.
std::vector<int> edge_positions(const Hypergraph& h, const SimplicialComplex& K, int degree) {
  std::vector<int> pos;
  auto [klo, khi] = K.degree_range(degree);
  (void)khi;
  auto [lo, hi] = h.degree_range(degree);
  for (int i = lo; i < hi; ++i) {
    int idx = K.hypergraph().edge_index(h.edges()[i]);
    if (idx < 0) throw AmbientMismatch("hyperedge missing from the ambient complex");
    pos.push_back(idx - klo);
  }
  return pos;
}

SimplicialComplex resolve_ambient(const Hypergraph& h, const SimplicialComplex* ambient) {
  if (!ambient) return associated_complex(h);
  for (const auto& e : h.edges())
    if (!ambient->hypergraph().contains_edge(e))
      throw AmbientMismatch("ambient complex does not contain the hypergraph");
  return *ambient;
}

// Kernel of M over the given ring; saturated lattice over Z.
Matrix ring_kernel(const Matrix& M, const Coefficients& coeff) {
  return coeff.is_field() ? field_kernel(M, coeff) : integer_kernel(M);
}

// Columns embedding the degree-n coordinate positions into ambient degree-n
// coordinates.
Matrix position_embedding(int ambient_count, const std::vector<int>& positions) {
  Matrix m(ambient_count, static_cast<int>(positions.size()));
  for (size_t j = 0; j < positions.size(); ++j) m.at(positions[j], static_cast<int>(j)) = 1;
  return m;
}

}  // namespace

std::vector<Matrix> ambient_boundaries(const SimplicialComplex& K, const Coefficients& coeff) {
  std::vector<Matrix> d(K.dimension() + 1);
  for (int n = 0; n <= K.dimension(); ++n) d[n] = boundary_matrix(K, n, coeff);
  return d;
}

EmbeddedChainComplex infimum_chain(const Hypergraph& h, const Coefficients& coeff,
                                   const SimplicialComplex* ambient_in) {
  SimplicialComplex K = resolve_ambient(h, ambient_in);
  EmbeddedChainComplex out{coeff, K, {}};
  const int dim = h.dimension();
  for (int n = 0; n <= dim; ++n) {
    const int amb = K.simplex_count(n);
    auto pos = edge_positions(h, K, n);
    Matrix incl = position_embedding(amb, pos);
    if (n == 0) {
      out.groups.push_back(make_subspace(incl, coeff, amb));
      continue;
    }
    // keep the chains whose boundary has no support outside the degree-(n-1)
    // edge span
    Matrix bnd = boundary_matrix(K, n, coeff) * incl;
    auto lower = edge_positions(h, K, n - 1);
    std::vector<bool> in_lower(K.simplex_count(n - 1), false);
    for (int p : lower) in_lower[p] = true;
    std::vector<int> outside;
    for (int r = 0; r < K.simplex_count(n - 1); ++r)
      if (!in_lower[r]) outside.push_back(r);
    Matrix restricted = bnd.rows_selected(outside);
    Matrix coords = ring_kernel(restricted, coeff);
    out.groups.push_back(make_subspace(incl * coords, coeff, amb));
  }
  return out;
}

EmbeddedChainComplex supremum_chain(const Hypergraph& h, const Coefficients& coeff,
                                    const SimplicialComplex* ambient_in) {
  SimplicialComplex K = resolve_ambient(h, ambient_in);
  EmbeddedChainComplex out{coeff, K, {}};
  const int dim = h.dimension();
  for (int n = 0; n <= dim; ++n) {
    const int amb = K.simplex_count(n);
    Matrix incl = position_embedding(amb, edge_positions(h, K, n));
    Matrix gens = incl;
    if (n + 1 <= dim) {
      Matrix upper = position_embedding(K.simplex_count(n + 1), edge_positions(h, K, n + 1));
      gens = Matrix::hconcat(gens, boundary_matrix(K, n + 1, coeff) * upper);
    }
    out.groups.push_back(make_subspace(gens, coeff, amb));
  }
  return out;
}

std::vector<HomologyGroup> embedded_homology(const Hypergraph& h, const Coefficients& coeff) {
  std::vector<HomologyGroup> out;
  if (h.empty()) return out;
  SimplicialComplex K = associated_complex(h);
  const int dim = h.dimension();
  for (int n = 0; n <= dim; ++n) {
    const int amb = K.simplex_count(n);
    auto pos = edge_positions(h, K, n);
    Matrix incl = position_embedding(amb, pos);
    // cycles inside the degree-n edge span
    ChainSubspace cycles = [&] {
      if (n == 0) return make_subspace(incl, coeff, amb);
      Matrix restricted = boundary_matrix(K, n, coeff) * incl;
      Matrix coords = ring_kernel(restricted, coeff);
      return make_subspace(incl * coords, coeff, amb);
    }();
    // boundaries of the degree-(n+1) edge span, clipped to the degree-n span
    ChainSubspace bounds = [&] {
      if (n + 1 > dim) return zero_subspace(coeff, amb);
      Matrix upper = position_embedding(K.simplex_count(n + 1), edge_positions(h, K, n + 1));
      ChainSubspace image =
          make_subspace(boundary_matrix(K, n + 1, coeff) * upper, coeff, amb);
      ChainSubspace span = make_subspace(incl, coeff, amb);
      return subspace_intersection(image, span);
    }();
    QuotientStructure q = quotient_structure(bounds, cycles);
    out.push_back({n, q.free_rank, q.torsion});
  }
  return out;
}

std::vector<HomologyGroup> sup_homology(const Hypergraph& h, const Coefficients& coeff) {
  std::vector<HomologyGroup> out;
  if (h.empty()) return out;
  EmbeddedChainComplex sup = supremum_chain(h, coeff, nullptr);
  const SimplicialComplex& K = sup.ambient;
  const int dim = h.dimension();
  for (int n = 0; n <= dim; ++n) {
    const int amb = K.simplex_count(n);
    const Matrix& basis = sup.groups[n].basis;
    ChainSubspace cycles = [&] {
      if (n == 0) return sup.groups[0];
      Matrix coords = ring_kernel(boundary_matrix(K, n, coeff) * basis, coeff);
      return make_subspace(basis * coords, coeff, amb);
    }();
    ChainSubspace bounds =
        n + 1 <= dim
            ? make_subspace(boundary_matrix(K, n + 1, coeff) * sup.groups[n + 1].basis, coeff, amb)
            : zero_subspace(coeff, amb);
    QuotientStructure q = quotient_structure(bounds, cycles);
    out.push_back({n, q.free_rank, q.torsion});
  }
  return out;
}

std::vector<HomologyGroup> simplicial_homology(const SimplicialComplex& K, const Coefficients& coeff) {
  std::vector<HomologyGroup> out;
  const int dim = K.dimension();
  if (dim < 0) return out;
  std::vector<Matrix> d = ambient_boundaries(K, coeff);
  for (int n = 0; n <= dim; ++n) {
    int rank_n = matrix_rank(d[n], coeff);
    int rank_up = n + 1 <= dim ? matrix_rank(d[n + 1], coeff) : 0;
    HomologyGroup g;
    g.degree = n;
    g.free_rank = K.simplex_count(n) - rank_n - rank_up;
    if (!coeff.is_field() && n + 1 <= dim) {
      for (const Int& v : smith_normal_form(d[n + 1]).divisors)
        if (v > 1) g.torsion.push_back(v);
    }
    out.push_back(std::move(g));
  }
  return out;
}

int zeroth_homology_components(const Hypergraph& h) {
  for (const auto& v : h.universe())
    if (!h.contains_edge({v}))
      throw PreconditionViolated("vertex '" + v + "' is not a hyperedge");
  int rank = 0;
  if (!h.empty()) {
    auto groups = embedded_homology(h, Coefficients::Z());
    rank = groups[0].free_rank;
    if (!groups[0].torsion.empty())
      throw InternalError("torsion in degree-0 homology");
  }
  // union-find over vertices joined by 1-hyperedges
  const int n = static_cast<int>(h.universe().size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto [lo, hi] = h.degree_range(1);
  for (int i = lo; i < hi; ++i) {
    const auto& e = h.edges()[i];
    int a = find(h.vertex_index(e[0])), b = find(h.vertex_index(e[1]));
    if (a != b) parent[a] = b;
  }
  int components = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++components;
  if (components != rank)
    throw InternalError("degree-0 homology rank disagrees with component count");
  return components;
}

HomologyGroup top_homology(const Hypergraph& h, const Coefficients& coeff) {
  if (h.empty()) throw EmptyHypergraphError("top homology of the empty hypergraph");
  auto groups = embedded_homology(h, coeff);
  return groups.back();
}

bool ambient_independence_check(const Hypergraph& h, const SimplicialComplex& larger,
                                const Coefficients& coeff) {
  SimplicialComplex K = associated_complex(h);
  EmbeddedChainComplex inf_small = infimum_chain(h, coeff, nullptr);
  EmbeddedChainComplex sup_small = supremum_chain(h, coeff, nullptr);
  EmbeddedChainComplex inf_large = infimum_chain(h, coeff, &larger);
  EmbeddedChainComplex sup_large = supremum_chain(h, coeff, &larger);
  for (int n = 0; n <= h.dimension(); ++n) {
    // positions of K's degree-n simplices inside the larger complex
    auto [klo, khi] = K.degree_range(n);
    auto [llo, lhi] = larger.degree_range(n);
    (void)lhi;
    std::vector<int> rows;
    std::vector<bool> inside(larger.simplex_count(n), false);
    for (int i = klo; i < khi; ++i) {
      int idx = larger.hypergraph().edge_index(K.hypergraph().edges()[i]);
      if (idx < 0) throw AmbientMismatch("ambient complex does not contain the closure");
      rows.push_back(idx - llo);
      inside[idx - llo] = true;
    }
    const ChainSubspace* pairs[2][2] = {{&inf_large.groups[n], &inf_small.groups[n]},
                                        {&sup_large.groups[n], &sup_small.groups[n]}};
    for (const auto& pr : pairs) {
      const Matrix& big = pr[0]->basis;
      for (int r = 0; r < big.rows(); ++r)
        if (!inside[r])
          for (int c = 0; c < big.cols(); ++c)
            if (big.at(r, c) != 0) return false;
      ChainSubspace restricted =
          make_subspace(big.rows_selected(rows), coeff, static_cast<int>(rows.size()));
      if (!(restricted.basis == pr[1]->basis)) return false;
    }
  }
  return true;
}

HomologyMap induced_map(const HypergraphMorphism& f, int degree, const Coefficients& field) {
  if (!field.is_field()) throw UserError("induced maps require field coefficients");
  if (degree < 0) throw DegreeOutOfRange("induced map degree must be non-negative");
  SimplicialComplex Ks = associated_complex(f.source);
  SimplicialComplex Kt = associated_complex(f.target);
  const int Ns = std::max(Ks.dimension(), 0);
  const int Nt = std::max(Kt.dimension(), 0);
  const int N = std::max({Ns, Nt, degree});

  auto family = [&](const Hypergraph& h, const SimplicialComplex& K) {
    SubspaceFamily F = infimum_family(h, K, field);
    while (static_cast<int>(F.bases.size()) <= N) F.bases.push_back(Matrix(0, 0));
    return F;
  };
  SubspaceFamily Fs = family(f.source, Ks);
  SubspaceFamily Ft = family(f.target, Kt);

  auto pad_boundaries = [&](const SimplicialComplex& K) {
    std::vector<Matrix> d(N + 1);
    for (int n = 0; n <= N; ++n) {
      if (n <= K.dimension()) {
        d[n] = boundary_matrix(K, n, field);
      } else {
        int rows = (n >= 1 && n - 1 <= K.dimension()) ? K.simplex_count(n - 1) : 0;
        d[n] = Matrix(n == 0 ? 0 : rows, 0);
      }
    }
    return d;
  };
  std::vector<Matrix> ds = pad_boundaries(Ks);
  std::vector<Matrix> dt = pad_boundaries(Kt);

  ChainComplexField Cs = abstract_complex(Fs, ds);
  ChainComplexField Ct = abstract_complex(Ft, dt);
  FieldHomology Hs = field_homology(Cs);
  FieldHomology Ht = field_homology(Ct);

  // ambient chain map restricted to the infimum complexes
  std::vector<Matrix> maps(N + 1);
  for (int n = 0; n <= N; ++n) {
    int scount = n <= Ks.dimension() ? Ks.simplex_count(n) : 0;
    int tcount = n <= Kt.dimension() ? Kt.simplex_count(n) : 0;
    Matrix F = (scount && tcount) ? chain_map_matrix(Ks, Kt, f.vertex_map, n, field)
                                  : Matrix(tcount, scount);
    Matrix image = F * Fs.bases[n];
    auto coords = field_solve(Ft.bases[n], image.reduced(field), field);
    if (!coords) throw InternalError("induced chain map leaves the infimum complex");
    maps[n] = *coords;
  }
  std::vector<Matrix> on_h = induced_on_homology(Cs, Hs, Ct, Ht, maps);

  HomologyMap out;
  out.degree = degree;
  out.source = {degree, degree < static_cast<int>(Hs.betti.size()) ? Hs.betti[degree] : 0, {}};
  out.target = {degree, degree < static_cast<int>(Ht.betti.size()) ? Ht.betti[degree] : 0, {}};
  out.matrix = on_h[degree];
  return out;
}

SubspaceFamily infimum_family(const Hypergraph& h, const SimplicialComplex& ambient,
                              const Coefficients& coeff) {
  EmbeddedChainComplex inf = infimum_chain(h, coeff, &ambient);
  SubspaceFamily F;
  F.coeff = coeff;
  const int N = ambient.dimension();
  for (int n = 0; n <= std::max(N, -1); ++n) {
    if (n < static_cast<int>(inf.groups.size()))
      F.bases.push_back(inf.groups[n].basis);
    else
      F.bases.push_back(Matrix(ambient.simplex_count(n), 0));
  }
  return F;
}

}  // namespace hyperhom
