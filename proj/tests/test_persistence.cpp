#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <vector>

#include "hyperhom/embedded.hpp"
#include "hyperhom/persistence.hpp"
#include "support/generators.hpp"

using namespace hyperhom;

namespace {

Hypergraph hg(std::vector<std::vector<Vertex>> edges) {
  std::vector<Hyperedge> es;
  for (auto& e : edges) es.push_back(make_edge(std::move(e)));
  return Hypergraph::from_edges(std::move(es));
}

VertexMetric unit_metric(const std::vector<Vertex>& tokens) {
  Matrix d(static_cast<int>(tokens.size()), static_cast<int>(tokens.size()));
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j)
      if (i != j) d.at(i, j) = 1;
  return VertexMetric::from_distances(tokens, d);
}

// reconstruct the rank matrix from the diagram's intervals
std::vector<std::vector<std::vector<int>>> ranks_from_diagram(const PersistenceDiagram& dg,
                                                              int max_degree) {
  const int steps = static_cast<int>(dg.parameters.size());
  std::vector<std::vector<std::vector<int>>> out(
      max_degree + 1, std::vector<std::vector<int>>(steps, std::vector<int>(steps, 0)));
  auto index_of = [&](const Rat& p) {
    for (int i = 0; i < steps; ++i)
      if (dg.parameters[i] == p) return i;
    REQUIRE(false);
    return -1;
  };
  for (const auto& iv : dg.intervals) {
    int born = index_of(iv.birth);
    int gone = iv.death ? index_of(*iv.death) : steps;
    for (int i = born; i < gone; ++i)
      for (int j = i; j < gone; ++j) out[iv.degree][i][j] += iv.multiplicity;
  }
  return out;
}

}  // namespace

TEST_CASE("filtration construction checks nesting and parameter order") {
  Hypergraph small = hg({{"a"}});
  Hypergraph big = hg({{"a"}, {"a", "b"}});
  CHECK(make_filtration({{Rat(1), small}, {Rat(2), big}}).size() == 2);
  CHECK_THROWS_AS(make_filtration({{Rat(2), small}, {Rat(1), big}}), UserError);
  CHECK_THROWS_AS(make_filtration({{Rat(1), small}, {Rat(1), big}}), UserError);
  CHECK_THROWS_AS(make_filtration({{Rat(1), big}, {Rat(2), small}}), UserError);

  // descending parameters are the superlevel reading order
  Filtration down = make_filtration({{Rat(1), small}, {Rat(0), big}}, true);
  CHECK(down.parameters_descending);
  CHECK_THROWS_AS(make_filtration({{Rat(0), small}, {Rat(1), big}}, true), UserError);
}

TEST_CASE("vertex metric from points keeps distances exact") {
  VertexMetric m = VertexMetric::from_points(
      {"p", "q", "r"}, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  CHECK(m.tokens() == std::vector<Vertex>{"p", "q", "r"});
  CHECK(m.has_vertex("q"));
  CHECK(!m.has_vertex("s"));
  CHECK(m.index_of("r") == 2);

  // d(p,q) = 1: strict comparison at the critical value
  CHECK(!m.closer_than(0, 1, Rat(1)));
  CHECK(m.closer_than(0, 1, Rat(1) + Rat(1, 1000000)));
  // d(q,r) = sqrt(2): 3/2 is past it, 7/5 is not
  CHECK(m.closer_than(1, 2, Rat(3, 2)));
  CHECK(!m.closer_than(1, 2, Rat(7, 5)));

  Rat big = m.beyond_max_radius();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m.closer_than(i, j, big));

  CHECK_THROWS_AS(VertexMetric::from_points({"p", "q"}, {{Rat(0)}, {Rat(0)}}), InvalidMetric);
  CHECK_THROWS_AS(VertexMetric::from_points({"p", "p"}, {{Rat(0)}, {Rat(1)}}), UserError);
  CHECK_THROWS_AS(VertexMetric::from_points({"p", "q"}, {{Rat(0)}, {Rat(1), Rat(2)}}),
                  DomainMismatch);
  CHECK_THROWS_AS(VertexMetric::from_points({"p"}, {}), DomainMismatch);
}

TEST_CASE("vertex metric from a distance matrix") {
  Matrix d(2, 2);
  d.at(0, 1) = Rat(3);
  d.at(1, 0) = Rat(3);
  VertexMetric m = VertexMetric::from_distances({"x", "y"}, d);
  CHECK(!m.closer_than(0, 1, Rat(3)));
  CHECK(m.closer_than(0, 1, Rat(4)));

  Matrix asym = d;
  asym.at(1, 0) = Rat(2);
  CHECK_THROWS_AS(VertexMetric::from_distances({"x", "y"}, asym), AsymmetricDistance);
  Matrix diag = d;
  diag.at(0, 0) = Rat(1);
  CHECK_THROWS_AS(VertexMetric::from_distances({"x", "y"}, diag), InvalidMetric);
  Matrix neg = d;
  neg.at(0, 1) = neg.at(1, 0) = Rat(-1);
  CHECK_THROWS_AS(VertexMetric::from_distances({"x", "y"}, neg), InvalidMetric);
  CHECK_THROWS_AS(VertexMetric::from_distances({"x"}, d), DomainMismatch);
}

TEST_CASE("critical radii sit just past each distinct distance") {
  Matrix d(3, 3);
  auto set = [&](int i, int j, long v) { d.at(i, j) = d.at(j, i) = Rat(v); };
  set(0, 1, 1);
  set(0, 2, 4);
  set(1, 2, 4);
  VertexMetric m = VertexMetric::from_distances({"a", "b", "c"}, d);

  std::vector<Rat> radii = m.critical_radii();
  REQUIRE(radii.size() == 2);
  CHECK(radii[0] > 1);
  CHECK(radii[0] < 4);
  CHECK(radii[1] > 4);
  // with an explicit bump the radii are exactly value + epsilon
  std::vector<Rat> bumped = m.critical_radii(Rat(1, 4));
  CHECK(bumped == std::vector<Rat>{Rat(5, 4), Rat(17, 4)});
  CHECK_THROWS_AS(m.critical_radii(Rat(0)), ValueOutOfRange);
  CHECK_THROWS_AS(m.critical_radii(Rat(-1)), ValueOutOfRange);

  // point mode: radii are dyadic rationals squeezed past each distance
  VertexMetric pts = VertexMetric::from_points(
      {"p", "q", "r"}, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
  std::vector<Rat> pr = pts.critical_radii();
  REQUIRE(pr.size() == 2);  // distances 1 and sqrt(2)
  CHECK(pr[0] > 1);
  CHECK(pr[0] * pr[0] < 2);
  CHECK(pr[1] * pr[1] > 2);
  // each radius captures exactly the pairs up to its critical distance
  CHECK(pts.closer_than(0, 1, pr[0]));
  CHECK(!pts.closer_than(1, 2, pr[0]));
  CHECK(pts.closer_than(1, 2, pr[1]));
}

TEST_CASE("distance subhypergraph and metric filtration") {
  Hypergraph tri = hg({{"v0", "v1"}, {"v1", "v2"}, {"v0", "v2"}});
  VertexMetric m = unit_metric({"v0", "v1", "v2"});

  CHECK(distance_subhypergraph(tri, m, Rat(1, 2)).empty());
  CHECK(distance_subhypergraph(tri, m, Rat(3, 2)) == tri);

  Filtration f = metric_filtration(tri, m, {Rat(1, 2), Rat(3, 2)});
  REQUIRE(f.size() == 2);
  CHECK(f.steps[0].hypergraph.empty());
  CHECK(f.steps[1].hypergraph == tri);

  // singleton edges pass vacuously below the smallest distance
  Hypergraph with_points = hg({{"v0"}, {"v1"}, {"v0", "v1"}});
  VertexMetric m2 = unit_metric({"v0", "v1"});
  Hypergraph low = distance_subhypergraph(with_points, m2, Rat(1, 2));
  CHECK(low == hg({{"v0"}, {"v1"}}));

  // beyond the diameter the whole hypergraph is back
  CHECK(distance_subhypergraph(tri, m, m.beyond_max_radius()) == tri);

  CHECK_THROWS_AS(metric_filtration(tri, m, {Rat(3, 2), Rat(1, 2)}), NonIncreasingRadii);
  CHECK_THROWS_AS(metric_filtration(tri, m, {Rat(1), Rat(1)}), NonIncreasingRadii);
  VertexMetric partial = unit_metric({"v0", "v1"});
  CHECK_THROWS_AS(distance_subhypergraph(tri, partial, Rat(1)), DomainMismatch);
}

TEST_CASE("superlevel filtrations") {
  Hypergraph h = hg({{"a"}, {"b"}, {"a", "b"}});

  Filtration f = superlevel_filtration(h, {{"a", Rat(1)}, {"b", Rat(0)}});
  REQUIRE(f.size() == 2);
  CHECK(f.parameters_descending);
  CHECK(f.steps[0].parameter == 1);
  CHECK(f.steps[0].hypergraph == hg({{"a"}}));
  CHECK(f.steps[1].parameter == 0);
  CHECK(f.steps[1].hypergraph == h);

  // constant values: every step is the whole hypergraph
  Filtration c = superlevel_filtration(h, {{"a", Rat(1)}, {"b", Rat(1)}});
  for (const auto& step : c.steps) CHECK(step.hypergraph == h);

  // threshold zero is always present and always full
  Filtration half = superlevel_filtration(h, {{"a", Rat(1, 2)}, {"b", Rat(1, 2)}});
  CHECK(half.steps.back().parameter == 0);
  CHECK(half.steps.back().hypergraph == h);

  // entries for unknown vertices are ignored; missing ones are an error
  Filtration extra =
      superlevel_filtration(h, {{"a", Rat(1)}, {"b", Rat(0)}, {"zz", Rat(1, 2)}});
  CHECK(extra.size() == 2);
  CHECK_THROWS_AS(superlevel_filtration(h, {{"a", Rat(1)}}), DomainMismatch);
  CHECK_THROWS_AS(superlevel_filtration(h, {{"a", Rat(2)}, {"b", Rat(0)}}), ValueOutOfRange);
  CHECK_THROWS_AS(superlevel_filtration(h, {{"a", Rat(-1, 2)}, {"b", Rat(0)}}),
                  ValueOutOfRange);
}

TEST_CASE("persistent betti numbers of the circle filtration") {
  Hypergraph circle = hg({{"v0"}, {"v1"}, {"v2"}, {"v0", "v1"}, {"v1", "v2"}, {"v0", "v2"}});
  VertexMetric m = unit_metric({"v0", "v1", "v2"});
  Filtration f = metric_filtration(circle, m, {Rat(1, 2), Rat(3, 2)});
  PersistentBetti pb = persistent_betti(f, Coefficients::Q());

  REQUIRE(pb.max_degree() >= 1);
  // degree 0: three points merge into one component
  CHECK(pb.betti[0][0][0] == 3);
  CHECK(pb.betti[0][1][1] == 1);
  CHECK(pb.betti[0][0][1] == 1);
  // degree 1: the cycle appears at the second radius
  CHECK(pb.betti[1][0][0] == 0);
  CHECK(pb.betti[1][0][1] == 0);
  CHECK(pb.betti[1][1][1] == 1);

  PersistenceDiagram dg = persistence_diagram(pb);
  int zero_forever = 0, zero_dying = 0, one_forever = 0;
  for (const auto& iv : dg.intervals) {
    if (iv.degree == 0 && !iv.death) zero_forever += iv.multiplicity;
    if (iv.degree == 0 && iv.death) {
      CHECK(iv.birth == Rat(1, 2));
      CHECK(*iv.death == Rat(3, 2));
      zero_dying += iv.multiplicity;
    }
    if (iv.degree == 1) {
      CHECK(!iv.death.has_value());
      CHECK(iv.birth == Rat(3, 2));
      one_forever += iv.multiplicity;
    }
  }
  CHECK(zero_forever == 1);
  CHECK(zero_dying == 2);
  CHECK(one_forever == 1);

  CHECK_THROWS_AS(persistent_betti(f, Coefficients::Z()), UserError);
}

TEST_CASE("constant filtrations never kill a class") {
  Hypergraph h = hg({{"a"}, {"b"}, {"a", "b"}});
  Filtration f = make_filtration({{Rat(1), h}, {Rat(2), h}, {Rat(3), h}});
  PersistentBetti pb = persistent_betti(f, Coefficients::Q());
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) CHECK(pb.betti[0][i][j] == 1);
  PersistenceDiagram dg = persistence_diagram(pb);
  REQUIRE(dg.intervals.size() == 1);
  CHECK(dg.intervals[0].degree == 0);
  CHECK(dg.intervals[0].birth == 1);
  CHECK(!dg.intervals[0].death.has_value());
  CHECK(dg.intervals[0].multiplicity == 1);

  // empty filtration: no intervals
  CHECK(persistence_diagram(persistent_betti(Filtration{}, Coefficients::Q())).intervals.empty());
}

TEST_CASE("rank matrices are monotone and functorial") {
  testgen::Rng rng(7401);
  for (int trial = 0; trial < 20; ++trial) {
    Filtration f = testgen::random_filtration(rng, 1 + testgen::pick(rng, 1, 3));
    const Coefficients& field = trial % 3 ? Coefficients::Q() : Coefficients::Zp(2);
    PersistentBetti pb = persistent_betti(f, field);
    const int steps = f.size();

    for (int d = 0; d <= pb.max_degree(); ++d)
      for (int i = 0; i < steps; ++i)
        for (int j = i; j < steps; ++j) {
          CHECK(pb.betti[d][i][j] <= pb.betti[d][i][i]);
          CHECK(pb.betti[d][i][j] <= pb.betti[d][j][j]);
          if (j + 1 < steps) CHECK(pb.betti[d][i][j + 1] <= pb.betti[d][i][j]);
          if (i > 0) CHECK(pb.betti[d][i - 1][j] <= pb.betti[d][i][j]);
        }

    // independent check through single induced maps between the steps
    for (int d = 0; d <= pb.max_degree(); ++d)
      for (int i = 0; i < steps; ++i)
        for (int j = i; j < steps; ++j) {
          HypergraphMorphism inc =
              inclusion_morphism(f.steps[i].hypergraph, f.steps[j].hypergraph);
          Matrix m = induced_map(inc, d, field).matrix;
          CHECK(matrix_rank(m, field) == pb.betti[d][i][j]);
          if (j > i) {
            Matrix first =
                induced_map(inclusion_morphism(f.steps[i].hypergraph, f.steps[i + 1].hypergraph),
                            d, field)
                    .matrix;
            Matrix rest =
                induced_map(inclusion_morphism(f.steps[i + 1].hypergraph, f.steps[j].hypergraph),
                            d, field)
                    .matrix;
            CHECK(m == rest * first);
          }
        }
  }
}

TEST_CASE("diagram and rank matrix determine each other") {
  testgen::Rng rng(7402);
  for (int trial = 0; trial < 20; ++trial) {
    Filtration f = testgen::random_filtration(rng, 1 + testgen::pick(rng, 1, 4));
    PersistentBetti pb = persistent_betti(f, Coefficients::Q());
    PersistenceDiagram dg = persistence_diagram(pb);
    for (const auto& iv : dg.intervals) {
      CHECK(iv.multiplicity > 0);
      if (iv.death) CHECK(iv.birth < *iv.death);
    }
    auto back = ranks_from_diagram(dg, pb.max_degree());
    for (int d = 0; d <= pb.max_degree(); ++d)
      for (int i = 0; i < f.size(); ++i)
        for (int j = i; j < f.size(); ++j) CHECK(back[d][i][j] == pb.betti[d][i][j]);
  }
}

TEST_CASE("filtrations stabilize beyond the diameter") {
  testgen::Rng rng(7403);
  for (int trial = 0; trial < 15; ++trial) {
    Hypergraph h = testgen::random_hypergraph(rng, 5, 6);
    VertexMetric m = testgen::random_metric(rng, h.universe());
    Rat beyond = m.beyond_max_radius();
    std::vector<Rat> radii = {beyond, beyond + 1, beyond + 2};
    Filtration f = metric_filtration(h, m, radii);
    for (const auto& step : f.steps) CHECK(step.hypergraph == h);

    PersistentBetti pb = persistent_betti(f, Coefficients::Q());
    std::vector<HomologyGroup> limit = embedded_homology(h, Coefficients::Q());
    for (int d = 0; d <= pb.max_degree(); ++d) {
      int expect = d < static_cast<int>(limit.size()) ? limit[d].free_rank : 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) CHECK(pb.betti[d][i][j] == expect);
    }
  }
}

TEST_CASE("non-realizable rank matrices are rejected") {
  PersistentBetti bad;
  bad.coeff = Coefficients::Q();
  bad.parameters = {Rat(1), Rat(2)};
  // rank jumps upward along the filtration: impossible for inclusions
  bad.betti = {{{0, 1}, {0, 0}}};
  CHECK_THROWS_AS(persistence_diagram(bad), NegativeMultiplicity);
}

TEST_CASE("persistent exact sequences with vertical maps") {
  Hypergraph a = hg({{"a"}, {"a", "b"}});
  Hypergraph b = hg({{"a"}, {"a", "c"}});
  VertexMetric m = unit_metric({"a", "b", "c"});
  PersistentMvReport report =
      verify_persistent_mv(a, b, m, {Rat(1, 2), Rat(3, 2)}, Coefficients::Q());
  CHECK(report.all_exact);
  CHECK(report.all_commute);
  REQUIRE(report.rows.size() == 2);
  for (const auto& row : report.rows) CHECK(row.exact);
  REQUIRE(report.squares_commute.size() == 1);
  CHECK(report.squares_commute[0]);

  // disjoint pair, any radii
  Hypergraph da = hg({{"p", "q"}});
  Hypergraph db = hg({{"x", "y"}});
  VertexMetric dm = unit_metric({"p", "q", "x", "y"});
  PersistentMvReport disj =
      verify_persistent_mv(da, db, dm, {Rat(1, 2), Rat(3, 2)}, Coefficients::Q());
  CHECK(disj.all_exact);
  CHECK(disj.all_commute);

  CHECK_THROWS_AS(verify_persistent_mv(hg({{"a", "b"}}), hg({{"b", "c"}}), unit_metric({"a", "b", "c"}),
                                       {Rat(1)}, Coefficients::Q()),
                  HypothesisViolated);
  CHECK_THROWS_AS(verify_persistent_mv(a, b, m, {Rat(3, 2), Rat(1, 2)}, Coefficients::Q()),
                  NonIncreasingRadii);

  // richer random pairs under random metrics
  testgen::Rng rng(7404);
  for (int trial = 0; trial < 6; ++trial) {
    auto [x, y] = testgen::random_mv_pair(rng);
    Hypergraph uni = hypergraph_union(x, y);
    VertexMetric rm = testgen::random_metric(rng, uni.universe());
    std::vector<Rat> radii = rm.critical_radii();
    if (radii.size() > 3) radii.resize(3);
    if (radii.empty()) radii.push_back(Rat(1));
    PersistentMvReport r = verify_persistent_mv(x, y, rm, radii, Coefficients::Q());
    CHECK(r.all_exact);
    CHECK(r.all_commute);
  }
}

TEST_CASE("point cloud parsing") {
  std::istringstream in(
      "# three corners\n"
      "p 0 0\n"
      "q 1 0\n"
      "r 0 1/2\n");
  VertexMetric m = parse_point_cloud(in);
  CHECK(m.tokens() == std::vector<Vertex>{"p", "q", "r"});
  CHECK(!m.closer_than(0, 1, Rat(1)));
  CHECK(m.closer_than(0, 2, Rat(3, 4)));

  // decimals are parsed exactly
  std::istringstream dec("x 0.25\ny 1.25\n");
  VertexMetric md = parse_point_cloud(dec);
  CHECK(!md.closer_than(0, 1, Rat(1)));
  CHECK(md.closer_than(0, 1, Rat(11, 10)));

  std::istringstream ragged("p 0 0\nq 1\n");
  CHECK_THROWS_AS(parse_point_cloud(ragged), ParseError);
  std::istringstream dup("p 0\np 1\n");
  CHECK_THROWS_AS(parse_point_cloud(dup), UserError);
  std::istringstream blank("p 0\n\nq 1\n");
  CHECK(parse_point_cloud(blank).tokens().size() == 2);
  std::istringstream coincident("p 0 0\nq 0 0\n");
  CHECK_THROWS_AS(parse_point_cloud(coincident), InvalidMetric);
  std::istringstream badnum("p zero\n");
  CHECK_THROWS_AS(parse_point_cloud(badnum), ParseError);
}

TEST_CASE("distance matrix parsing") {
  std::istringstream in(
      ",a,b,c\n"
      "a,0,1,2\n"
      "b,1,0,3\n"
      "c,2,3,0\n");
  VertexMetric m = parse_distance_csv(in);
  CHECK(m.tokens() == std::vector<Vertex>{"a", "b", "c"});
  CHECK(m.closer_than(0, 2, Rat(5, 2)));
  CHECK(!m.closer_than(1, 2, Rat(3)));

  std::istringstream asym(",a,b\na,0,1\nb,2,0\n");
  CHECK_THROWS_AS(parse_distance_csv(asym), AsymmetricDistance);
  std::istringstream diag(",a,b\na,1,1\nb,1,0\n");
  CHECK_THROWS_AS(parse_distance_csv(diag), InvalidMetric);
  std::istringstream shape(",a,b\na,0,1\n");
  CHECK_THROWS_AS(parse_distance_csv(shape), ParseError);
  std::istringstream label(",a,b\nb,0,1\na,1,0\n");
  CHECK_THROWS_AS(parse_distance_csv(label), ParseError);
  std::istringstream width(",a,b\na,0\nb,1,0\n");
  CHECK_THROWS_AS(parse_distance_csv(width), ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(parse_distance_csv(empty), ParseError);
}
