#include "hyperhom/mayer_vietoris.hpp"

namespace hyperhom {

namespace {

std::vector<Matrix> padded_boundaries(const SimplicialComplex& K, const Coefficients& coeff, int top) {
  std::vector<Matrix> d(top + 1);
  for (int n = 0; n <= top; ++n) {
    if (n <= K.dimension()) {
      d[n] = boundary_matrix(K, n, coeff);
    } else {
      int rows = (n >= 1 && n - 1 <= K.dimension()) ? K.simplex_count(n - 1) : 0;
      d[n] = Matrix(n == 0 ? 0 : rows, 0);
    }
  }
  return d;
}

SubspaceFamily padded_infimum(const Hypergraph& h, const SimplicialComplex& K,
                              const Coefficients& coeff, int top) {
  SubspaceFamily F = infimum_family(h, K, coeff);
  while (static_cast<int>(F.bases.size()) <= top) {
    int n = static_cast<int>(F.bases.size());
    int amb = n <= K.dimension() ? K.simplex_count(n) : 0;
    F.bases.push_back(Matrix(amb, 0));
  }
  return F;
}

MvColumn make_column(SubspaceFamily family, const std::vector<Matrix>& boundary) {
  MvColumn col;
  col.family = std::move(family);
  col.complex = abstract_complex(col.family, boundary);
  col.homology = field_homology(col.complex);
  return col;
}

// Homology class of ambient cycle columns inside a column's complex.
Matrix class_of_ambient(const MvColumn& col, int degree, const Matrix& ambient_vectors) {
  auto coords = field_solve(col.family.bases[degree],
                            ambient_vectors.reduced(col.complex.coeff), col.complex.coeff);
  if (!coords) throw InternalError("cycle escapes the expected subcomplex");
  return homology_class(col.complex, col.homology, degree, *coords);
}

ExactnessSpot make_spot(int degree, const std::string& position, const Matrix& incoming,
                        const Matrix& outgoing, const Coefficients& coeff) {
  ExactnessSpot s;
  s.degree = degree;
  s.position = position;
  int group_dim = outgoing.cols();
  s.kernel_rank = group_dim - matrix_rank(outgoing, coeff);
  s.image_rank = matrix_rank(incoming, coeff);
  bool composite_zero = incoming.cols() == 0 || outgoing.rows() == 0 ||
                        (outgoing * incoming).reduced(coeff).is_zero();
  s.exact = composite_zero && s.kernel_rank == s.image_rank;
  return s;
}

// Split ambient vectors z in A + B as z = a + b and return the a-part.
Matrix split_left(const Matrix& A, const Matrix& B, const Matrix& z, const Coefficients& coeff) {
  Matrix frame = Matrix::hconcat(A, B);
  auto y = field_solve(frame, z.reduced(coeff), coeff);
  if (!y) throw InternalError("vector not inside the chain-level sum");
  std::vector<int> head(A.cols());
  for (size_t i = 0; i < head.size(); ++i) head[i] = static_cast<int>(i);
  return A * y->rows_selected(head);
}

}  // namespace

bool short_exact_check(const Hypergraph& a, const Hypergraph& b, const Coefficients& coeff) {
  if (!mv_condition(a, b))
    throw HypothesisViolated("pairwise edge intersections must be empty or shared edges");
  Hypergraph u = hypergraph_union(a, b);
  Hypergraph inter = hypergraph_intersection(a, b);
  if (u.empty()) return true;
  SimplicialComplex K = associated_complex(u);
  EmbeddedChainComplex ia = infimum_chain(a, coeff, &K);
  EmbeddedChainComplex ib = infimum_chain(b, coeff, &K);
  EmbeddedChainComplex ii = infimum_chain(inter, coeff, &K);
  EmbeddedChainComplex iu = infimum_chain(u, coeff, &K);
  auto group = [&](const EmbeddedChainComplex& c, int n) {
    if (n < static_cast<int>(c.groups.size())) return c.groups[n];
    return zero_subspace(coeff, K.simplex_count(n));
  };
  for (int n = 0; n <= u.dimension(); ++n) {
    ChainSubspace ga = group(ia, n), gb = group(ib, n), gi = group(ii, n), gu = group(iu, n);
    ChainSubspace sum = subspace_sum(ga, gb);
    ChainSubspace meet = subspace_intersection(ga, gb);
    // first map injective and equal to the middle kernel: the meet must agree
    // with the infimum of the intersection, and ranks must be additive
    if (!(meet == gi)) return false;
    if (gi.rank() + sum.rank() != ga.rank() + gb.rank()) return false;
    // surjectivity: the chainwise sum must exhaust the union's infimum
    if (!(sum == gu)) return false;
  }
  return true;
}

MvData build_mv_data(const Hypergraph& a, const Hypergraph& b, const Coefficients& field,
                     const SimplicialComplex* ambient) {
  if (!field.is_field()) throw UserError("exact sequence verification requires field coefficients");
  if (!mv_condition(a, b))
    throw HypothesisViolated("pairwise edge intersections must be empty or shared edges");
  Hypergraph u = hypergraph_union(a, b);
  Hypergraph inter = hypergraph_intersection(a, b);
  MvData d;
  d.ambient = ambient ? *ambient : associated_complex(u);
  const int top = d.ambient.dimension() + 1;
  d.boundary = padded_boundaries(d.ambient, field, top);
  d.inter = make_column(padded_infimum(inter, d.ambient, field, top), d.boundary);
  d.left = make_column(padded_infimum(a, d.ambient, field, top), d.boundary);
  d.right = make_column(padded_infimum(b, d.ambient, field, top), d.boundary);
  d.uni = make_column(padded_infimum(u, d.ambient, field, top), d.boundary);

  d.alpha.resize(top + 1);
  d.beta.resize(top + 1);
  d.connecting.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    Matrix inter_reps = d.inter.family.bases[n] * d.inter.homology.reps[n];
    d.alpha[n] = Matrix::vconcat(class_of_ambient(d.left, n, inter_reps),
                                 class_of_ambient(d.right, n, -inter_reps));
    Matrix left_reps = d.left.family.bases[n] * d.left.homology.reps[n];
    Matrix right_reps = d.right.family.bases[n] * d.right.homology.reps[n];
    d.beta[n] = Matrix::hconcat(class_of_ambient(d.uni, n, left_reps),
                                class_of_ambient(d.uni, n, right_reps));
    if (n == 0) {
      d.connecting[0] = Matrix(0, d.uni.betti(0));
      continue;
    }
    Matrix uni_reps = d.uni.family.bases[n] * d.uni.homology.reps[n];
    Matrix a_part = split_left(d.left.family.bases[n], d.right.family.bases[n], uni_reps, field);
    d.connecting[n] = class_of_ambient(d.inter, n - 1, d.boundary[n] * a_part);
  }
  return d;
}

HomologyMap connecting_homomorphism(const Hypergraph& a, const Hypergraph& b, int degree,
                                    const Coefficients& field) {
  if (degree < 1) throw DegreeOutOfRange("connecting map needs degree >= 1");
  MvData d = build_mv_data(a, b, field);
  HomologyMap out;
  out.degree = degree;
  int top = d.max_degree();
  out.source = {degree, degree <= top ? d.uni.betti(degree) : 0, {}};
  out.target = {degree - 1, (degree >= 1 && degree <= top) ? d.inter.betti(degree - 1) : 0, {}};
  out.matrix = degree <= top ? d.connecting[degree]
                             : Matrix(out.target.free_rank, out.source.free_rank);
  return out;
}

ExactnessReport exactness_from_data(const MvData& d, const Coefficients& field) {
  ExactnessReport report;
  report.hypothesis_holds = true;
  const int top = d.max_degree();
  for (int n = 0; n <= top; ++n) {
    Matrix incoming_inter =
        n + 1 <= top ? d.connecting[n + 1] : Matrix(d.inter.betti(n), 0);
    report.spots.push_back(make_spot(n, "intersection", incoming_inter, d.alpha[n], field));
    report.spots.push_back(make_spot(n, "direct_sum", d.alpha[n], d.beta[n], field));
    report.spots.push_back(make_spot(n, "union", d.beta[n], d.connecting[n], field));
  }
  report.exact = true;
  for (const auto& s : report.spots) report.exact = report.exact && s.exact;
  return report;
}

ExactnessReport verify_long_exact(const Hypergraph& a, const Hypergraph& b,
                                  const Coefficients& field) {
  return exactness_from_data(build_mv_data(a, b, field), field);
}

GeneralSequencesReport general_sequences(const Hypergraph& a, const Hypergraph& b,
                                         const Coefficients& field) {
  if (!field.is_field()) throw UserError("exact sequence verification requires field coefficients");
  Hypergraph u = hypergraph_union(a, b);
  Hypergraph inter = hypergraph_intersection(a, b);
  SimplicialComplex K = associated_complex(u);
  const int top = K.dimension() + 1;
  std::vector<Matrix> boundary = padded_boundaries(K, field, top);

  MvColumn ci = make_column(padded_infimum(inter, K, field, top), boundary);
  MvColumn cl = make_column(padded_infimum(a, K, field, top), boundary);
  MvColumn cr = make_column(padded_infimum(b, K, field, top), boundary);
  MvColumn cu = make_column(padded_infimum(u, K, field, top), boundary);

  SubspaceFamily sumF;
  sumF.coeff = field;
  for (int n = 0; n <= top; ++n)
    sumF.bases.push_back(
        field_column_basis(Matrix::hconcat(cl.family.bases[n], cr.family.bases[n]), field));
  MvColumn cs = make_column(sumF, boundary);

  QuotientComplex q = make_quotient(cs.family, cu.family, boundary);
  FieldHomology hq = field_homology(q.complex);
  auto q_betti = [&](int n) { return n <= top ? hq.betti[n] : 0; };

  // sequence 1: ... -> H_n(inter) -> H_n(a)+H_n(b) -> H_n(sum) -> ...
  std::vector<Matrix> alpha(top + 1), beta1(top + 1), conn1(top + 1);
  // sequence 2: ... -> H_n(sum) -> H_n(union) -> H_n(quotient) -> ...
  std::vector<Matrix> incl(top + 1), proj(top + 1), conn2(top + 1);
  for (int n = 0; n <= top; ++n) {
    Matrix inter_reps = ci.family.bases[n] * ci.homology.reps[n];
    alpha[n] = Matrix::vconcat(class_of_ambient(cl, n, inter_reps),
                               class_of_ambient(cr, n, -inter_reps));
    Matrix left_reps = cl.family.bases[n] * cl.homology.reps[n];
    Matrix right_reps = cr.family.bases[n] * cr.homology.reps[n];
    beta1[n] = Matrix::hconcat(class_of_ambient(cs, n, left_reps),
                               class_of_ambient(cs, n, right_reps));
    Matrix sum_reps = cs.family.bases[n] * cs.homology.reps[n];
    if (n == 0) {
      conn1[0] = Matrix(0, cs.betti(0));
    } else {
      Matrix a_part = split_left(cl.family.bases[n], cr.family.bases[n], sum_reps, field);
      conn1[n] = class_of_ambient(ci, n - 1, boundary[n] * a_part);
    }
    incl[n] = class_of_ambient(cu, n, sum_reps);
    Matrix uni_reps = cu.family.bases[n] * cu.homology.reps[n];
    proj[n] = homology_class(q.complex, hq, n, quotient_project(q, n, uni_reps));
    if (n == 0) {
      conn2[0] = Matrix(0, q_betti(0));
    } else {
      Matrix lifts = q.extensions[n] * hq.reps[n];
      conn2[n] = class_of_ambient(cs, n - 1, boundary[n] * lifts);
    }
  }

  GeneralSequencesReport report;
  for (int n = 0; n <= top; ++n) {
    Matrix in_i = n + 1 <= top ? conn1[n + 1] : Matrix(ci.betti(n), 0);
    report.sum_sequence.spots.push_back(make_spot(n, "intersection", in_i, alpha[n], field));
    report.sum_sequence.spots.push_back(make_spot(n, "direct_sum", alpha[n], beta1[n], field));
    report.sum_sequence.spots.push_back(make_spot(n, "sum", beta1[n], conn1[n], field));
    Matrix in_s = n + 1 <= top ? conn2[n + 1] : Matrix(cs.betti(n), 0);
    report.quotient_sequence.spots.push_back(make_spot(n, "sum", in_s, incl[n], field));
    report.quotient_sequence.spots.push_back(make_spot(n, "union", incl[n], proj[n], field));
    report.quotient_sequence.spots.push_back(make_spot(n, "quotient", proj[n], conn2[n], field));
  }
  for (ExactnessReport* r : {&report.sum_sequence, &report.quotient_sequence}) {
    r->hypothesis_holds = true;
    r->exact = true;
    for (const auto& s : r->spots) r->exact = r->exact && s.exact;
  }
  return report;
}

}  // namespace hyperhom
