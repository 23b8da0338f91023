#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hyperhom/embedded.hpp"
#include "hyperhom/hypergraph.hpp"
#include "hyperhom/mayer_vietoris.hpp"
#include "support/generators.hpp"

using namespace hyperhom;

namespace {

Hypergraph hg(std::vector<std::vector<Vertex>> edges) {
  std::vector<Hyperedge> es;
  for (auto& e : edges) es.push_back(make_edge(std::move(e)));
  return Hypergraph::from_edges(std::move(es));
}

bool is_zero(const Matrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0) return false;
  return true;
}

// copy of h with every vertex token prefixed, for building disjoint pairs
Hypergraph relabeled(const Hypergraph& h, const std::string& prefix) {
  std::vector<Hyperedge> edges;
  for (const auto& e : h.edges()) {
    Hyperedge out;
    for (const auto& v : e) out.push_back(prefix + v);
    edges.push_back(out);
  }
  return Hypergraph::from_edges(edges);
}

int euler(const Hypergraph& h) {
  int chi = 0;
  int sign = 1;
  for (const auto& g : embedded_homology(h, Coefficients::Q())) {
    chi += sign * g.free_rank;
    sign = -sign;
  }
  return chi;
}

void check_spot_consistency(const ExactnessReport& report) {
  for (const auto& s : report.spots) CHECK(s.exact == (s.kernel_rank == s.image_rank));
}

// the four hypergraphs of the tetrahedron-with-flaps family: the full complex
// on v0..v3 plus one 4-vertex flap omitting v_j
Hypergraph flap_hypergraph(int j) {
  std::vector<Vertex> vs = {"v0", "v1", "v2", "v3"};
  Hypergraph simplex = associated_complex(hg({{vs[0], vs[1], vs[2], vs[3]}})).hypergraph();
  Hyperedge special;
  for (int i = 0; i < 4; ++i)
    if (i != j) special.push_back(vs[i]);
  special.push_back("w" + std::to_string(j));
  return hypergraph_union(simplex, Hypergraph::from_edges({make_edge(special)}));
}

}  // namespace

TEST_CASE("short exact sequence of infimum complexes") {
  Hypergraph h = hg({{"a"}, {"a", "b"}});
  Hypergraph g = hg({{"a"}, {"a", "c"}});
  CHECK(short_exact_check(h, g, Coefficients::Q()));
  CHECK(short_exact_check(h, g, Coefficients::Z()));
  CHECK(short_exact_check(h, g, Coefficients::Zp(3)));

  // disjoint inputs: the intersection complex is zero
  CHECK(short_exact_check(hg({{"a", "b"}}), hg({{"c", "d"}}), Coefficients::Q()));
  CHECK(short_exact_check(hg({{"a", "b"}}), hg({{"c", "d"}}), Coefficients::Z()));

  CHECK_THROWS_AS(short_exact_check(hg({{"a", "b"}}), hg({{"b", "c"}}), Coefficients::Q()),
                  HypothesisViolated);

  testgen::Rng rng(6301);
  for (int trial = 0; trial < 60; ++trial) {
    auto [a, b] = testgen::random_mv_pair(rng);
    CHECK(short_exact_check(a, b, Coefficients::Q()));
    CHECK(short_exact_check(a, b, Coefficients::Z()));
  }
}

TEST_CASE("connecting homomorphism pinned cases") {
  // two arcs covering the hollow triangle
  Hypergraph h = hg({{"v0"}, {"v1"}, {"v2"}, {"v0", "v1"}, {"v1", "v2"}});
  Hypergraph g = hg({{"v0"}, {"v1"}, {"v2"}, {"v0", "v2"}});
  HomologyMap conn = connecting_homomorphism(h, g, 1, Coefficients::Q());
  CHECK(conn.source.free_rank == 1);  // H_1 of the whole circle
  CHECK(conn.target.free_rank == 3);  // H_0 of three isolated points
  CHECK(matrix_rank(conn.matrix, Coefficients::Q()) == 1);

  // disjoint pair: all connecting maps vanish
  Hypergraph da = hg({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  Hypergraph db = hg({{"x", "y"}});
  for (int n = 1; n <= 2; ++n)
    CHECK(is_zero(connecting_homomorphism(da, db, n, Coefficients::Q()).matrix));

  CHECK_THROWS_AS(connecting_homomorphism(h, g, 0, Coefficients::Q()), DegreeOutOfRange);
  CHECK_THROWS_AS(connecting_homomorphism(hg({{"a", "b"}}), hg({{"b", "c"}}), 1, Coefficients::Q()),
                  HypothesisViolated);
}

TEST_CASE("connecting map does not depend on the splitting") {
  std::vector<std::pair<Hypergraph, Hypergraph>> pairs;

  // splits of an n-cycle into two arcs: one degree-1 class in the union each
  for (int n = 3; n <= 7; ++n)
    for (int cut = 1; cut + 1 < n; ++cut) {
      auto name = [](int i) { return "c" + std::to_string(i); };
      std::vector<Hyperedge> first, second;
      for (int i = 0; i < n; ++i) {
        first.push_back({name(i)});
        second.push_back({name(i)});
        Hyperedge e = make_edge({name(i), name((i + 1) % n)});
        (i < cut ? first : second).push_back(e);
      }
      pairs.emplace_back(Hypergraph::from_edges(first), Hypergraph::from_edges(second));
    }

  // octahedron sphere cut along the equator: a degree-2 class
  std::vector<Hyperedge> top, bottom;
  for (int i = 0; i < 4; ++i) {
    std::string a = "e" + std::to_string(i), b = "e" + std::to_string((i + 1) % 4);
    top.push_back(make_edge({"np", a, b}));
    bottom.push_back(make_edge({"sp", a, b}));
  }
  pairs.emplace_back(associated_complex(Hypergraph::from_edges(top)).hypergraph(),
                     associated_complex(Hypergraph::from_edges(bottom)).hypergraph());

  testgen::Rng rng(6302);
  for (int trial = 0; trial < 40; ++trial) pairs.push_back(testgen::random_mv_pair(rng));

  int checked = 0;
  for (size_t trial = 0; trial < pairs.size(); ++trial) {
    const auto& [a, b] = pairs[trial];
    REQUIRE(mv_condition(a, b));
    const Coefficients& field = trial % 3 ? Coefficients::Q() : Coefficients::Zp(5);
    MvData d = build_mv_data(a, b, field);
    for (int n = 1; n <= d.max_degree(); ++n) {
      const Matrix& reps = d.uni.homology.reps[n];
      if (reps.cols() == 0) continue;
      const Matrix& A = d.left.family.bases[n];
      const Matrix& B = d.right.family.bases[n];
      for (int k = 0; k < reps.cols(); ++k) {
        Matrix z = d.uni.family.bases[n] * reps.columns({k});
        // split z = a-part + b-part solving with the b-block first, the
        // reverse of the canonical order
        auto x = field_solve(Matrix::hconcat(B, A), z, field);
        REQUIRE(x.has_value());
        std::vector<int> a_rows;
        for (int r = B.cols(); r < x->rows(); ++r) a_rows.push_back(r);
        Matrix za = A * x->rows_selected(a_rows);
        Matrix w = d.boundary[n] * za;
        auto wi = field_solve(d.inter.family.bases[n - 1], w, field);
        REQUIRE(wi.has_value());
        Matrix cls = homology_class(d.inter.complex, d.inter.homology, n - 1, *wi);
        CHECK(cls == d.connecting[n].columns({k}));
        ++checked;
      }
    }
  }
  // the cycle splits and the sphere alone contribute 16 guaranteed classes
  CHECK(checked >= 16);
}

TEST_CASE("long exact sequence on the tetrahedron-with-flaps family") {
  Hypergraph h1 = flap_hypergraph(1);
  Hypergraph h2 = flap_hypergraph(2);
  Hypergraph h3 = flap_hypergraph(3);
  CHECK(mv_condition(h1, h2));
  CHECK(mv_condition(h1, h3));
  CHECK(mv_condition(h2, h3));

  ExactnessReport r12 = verify_long_exact(h1, h2, Coefficients::Q());
  CHECK(r12.exact);
  check_spot_consistency(r12);

  Hypergraph u12 = hypergraph_union(h1, h2);
  CHECK(mv_condition(u12, h3));
  ExactnessReport r123 = verify_long_exact(u12, h3, Coefficients::Q());
  CHECK(r123.exact);

  // assembled union has trivial 2-dimensional homology over the integers
  Hypergraph u123 = hypergraph_union(u12, h3);
  std::vector<HomologyGroup> hz = embedded_homology(u123, Coefficients::Z());
  REQUIRE(hz.size() >= 3);
  CHECK(hz[2] == HomologyGroup{2, 0, {}});
  for (const Hypergraph& part : {h1, h2, h3}) {
    std::vector<HomologyGroup> p = embedded_homology(part, Coefficients::Z());
    REQUIRE(p.size() >= 3);
    CHECK(p[2] == HomologyGroup{2, 0, {}});
  }
}

TEST_CASE("disjoint unions add degreewise") {
  testgen::Rng rng(6303);
  for (int trial = 0; trial < 20; ++trial) {
    Hypergraph a = relabeled(testgen::random_hypergraph(rng, 5, 6), "L");
    Hypergraph b = relabeled(testgen::random_hypergraph(rng, 5, 6), "R");
    REQUIRE(mv_condition(a, b));
    ExactnessReport report = verify_long_exact(a, b, Coefficients::Q());
    CHECK(report.exact);

    std::vector<HomologyGroup> ha = embedded_homology(a, Coefficients::Z());
    std::vector<HomologyGroup> hb = embedded_homology(b, Coefficients::Z());
    std::vector<HomologyGroup> hu =
        embedded_homology(hypergraph_union(a, b), Coefficients::Z());
    REQUIRE(hu.size() == std::max(ha.size(), hb.size()));
    for (size_t d = 0; d < hu.size(); ++d) {
      int expect = (d < ha.size() ? ha[d].free_rank : 0) + (d < hb.size() ? hb[d].free_rank : 0);
      CHECK(hu[d].free_rank == expect);
      std::vector<Int> torsion;
      if (d < ha.size()) torsion.insert(torsion.end(), ha[d].torsion.begin(), ha[d].torsion.end());
      if (d < hb.size()) torsion.insert(torsion.end(), hb[d].torsion.begin(), hb[d].torsion.end());
      std::sort(torsion.begin(), torsion.end());
      std::vector<Int> got = hu[d].torsion;
      std::sort(got.begin(), got.end());
      CHECK(got == torsion);
    }
  }
}

TEST_CASE("long exact sequence on random pairs") {
  testgen::Rng rng(6304);
  for (int trial = 0; trial < 30; ++trial) {
    auto [a, b] = testgen::random_mv_pair(rng);
    const Coefficients& field = trial % 3 ? Coefficients::Q() : Coefficients::Zp(2);
    ExactnessReport report = verify_long_exact(a, b, field);
    CHECK(report.hypothesis_holds);
    CHECK(report.exact);
    check_spot_consistency(report);
  }
  CHECK_THROWS_AS(verify_long_exact(hg({{"a", "b"}}), hg({{"b", "c"}}), Coefficients::Q()),
                  HypothesisViolated);
  CHECK_THROWS_AS(build_mv_data(hg({{"a"}}), hg({{"a"}}), Coefficients::Z()), UserError);
}

TEST_CASE("euler characteristics add along the sequence") {
  testgen::Rng rng(6305);
  for (int trial = 0; trial < 40; ++trial) {
    auto [a, b] = testgen::random_mv_pair(rng);
    CHECK(euler(hypergraph_intersection(a, b)) + euler(hypergraph_union(a, b)) ==
          euler(a) + euler(b));
  }
}

TEST_CASE("consecutive maps of the sequence compose to zero") {
  testgen::Rng rng(6306);
  for (int trial = 0; trial < 25; ++trial) {
    auto [a, b] = testgen::random_mv_pair(rng);
    MvData d = build_mv_data(a, b, Coefficients::Q());
    for (int n = 0; n <= d.max_degree(); ++n) {
      CHECK(is_zero(d.beta[n] * d.alpha[n]));
      if (n >= 1) {
        CHECK(is_zero(d.connecting[n] * d.beta[n]));
        CHECK(is_zero(d.alpha[n - 1] * d.connecting[n]));
      }
    }
  }
}

TEST_CASE("sequences that need no overlap hypothesis") {
  // hypothesis satisfied: the quotient complex vanishes
  GeneralSequencesReport ok =
      general_sequences(hg({{"a"}, {"a", "b"}}), hg({{"a"}, {"a", "c"}}), Coefficients::Q());
  CHECK(ok.sum_sequence.exact);
  CHECK(ok.quotient_sequence.exact);

  // hypothesis violated: both sequences still exact
  GeneralSequencesReport bad =
      general_sequences(hg({{"a", "b"}}), hg({{"b", "c"}}), Coefficients::Q());
  CHECK(bad.sum_sequence.exact);
  CHECK(bad.quotient_sequence.exact);

  GeneralSequencesReport disj =
      general_sequences(hg({{"a", "b"}}), hg({{"c", "d"}}), Coefficients::Q());
  CHECK(disj.sum_sequence.exact);
  CHECK(disj.quotient_sequence.exact);

  testgen::Rng rng(6307);
  for (int trial = 0; trial < 25; ++trial) {
    Hypergraph a = testgen::random_hypergraph(rng, 5, 6);
    Hypergraph b = testgen::random_hypergraph(rng, 5, 6);
    const Coefficients& field = trial % 3 ? Coefficients::Q() : Coefficients::Zp(3);
    GeneralSequencesReport r = general_sequences(a, b, field);
    CHECK(r.sum_sequence.exact);
    CHECK(r.quotient_sequence.exact);
    check_spot_consistency(r.sum_sequence);
    check_spot_consistency(r.quotient_sequence);
  }
}
