// Command-line frontend.  Every subcommand reads its inputs, runs one library
// call, and prints a single deterministic document to stdout.  Exit codes:
// 0 success, 1 internal invariant failure, 2 user error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hyperhom/acyclicity.hpp"
#include "hyperhom/embedded.hpp"
#include "hyperhom/indices.hpp"
#include "hyperhom/mayer_vietoris.hpp"
#include "hyperhom/persistence.hpp"
#include "hyperhom/report_json.hpp"

using namespace hyperhom;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw UserError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Hypergraph load_hypergraph(const std::string& path) {
  return parse_hypergraph_text(slurp(path));
}

std::map<Vertex, Rat> load_values(const std::string& path) {
  std::istringstream in(slurp(path));
  return parse_values(in);
}

Coefficients pick_coefficients(const std::string& name, unsigned long p) {
  if (name == "z") return Coefficients::Z();
  if (name == "q") return Coefficients::Q();
  if (name == "zp") {
    if (p == 0) throw UserError("--coeff zp requires --p <prime>");
    return Coefficients::Zp(p);
  }
  throw UserError("unknown coefficient ring: " + name);
}

std::vector<Rat> parse_radii_list(const std::string& text) {
  std::vector<Rat> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw UserError("empty entry in --radii");
    out.push_back(parse_exact_number(item));
  }
  if (out.empty()) throw UserError("--radii needs at least one value");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact embedded homology of hypergraphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  std::string output;     // the document, printed once at the end
  int exit_code = 0;      // raised to 1 when a verification check fails

  auto* closure_cmd = app.add_subcommand("closure", "Downward closure as a hypergraph file");
  std::string closure_in;
  closure_cmd->add_option("input", closure_in, "Hypergraph file ('-' for stdin)")->required();
  closure_cmd->callback([&] {
    output = render_closure(associated_complex(load_hypergraph(closure_in)),
                            parse_format(format_name));
  });

  auto* homology_cmd = app.add_subcommand("homology", "Embedded homology groups");
  std::string homology_in, homology_coeff = "z";
  unsigned long homology_p = 0;
  homology_cmd->add_option("input", homology_in, "Hypergraph file")->required();
  homology_cmd->add_option("--coeff", homology_coeff, "Coefficients: z, q or zp")
      ->check(CLI::IsMember({"z", "q", "zp"}));
  homology_cmd->add_option("--p", homology_p, "Prime for --coeff zp");
  homology_cmd->callback([&] {
    Coefficients coeff = pick_coefficients(homology_coeff, homology_p);
    output = render_homology(embedded_homology(load_hypergraph(homology_in), coeff), coeff,
                             parse_format(format_name));
  });

  auto* sup_cmd = app.add_subcommand("suphomology", "Homology of the supremum complex");
  std::string sup_in, sup_coeff = "z";
  unsigned long sup_p = 0;
  sup_cmd->add_option("input", sup_in, "Hypergraph file")->required();
  sup_cmd->add_option("--coeff", sup_coeff, "Coefficients: z, q or zp")
      ->check(CLI::IsMember({"z", "q", "zp"}));
  sup_cmd->add_option("--p", sup_p, "Prime for --coeff zp");
  sup_cmd->callback([&] {
    Coefficients coeff = pick_coefficients(sup_coeff, sup_p);
    output = render_homology(sup_homology(load_hypergraph(sup_in), coeff), coeff,
                             parse_format(format_name));
  });

  auto* acyclic_cmd = app.add_subcommand("acyclic", "Acyclicity verdict by reduction");
  std::string acyclic_in;
  bool acyclic_trace = false;
  acyclic_cmd->add_option("input", acyclic_in, "Hypergraph file")->required();
  acyclic_cmd->add_flag("--trace", acyclic_trace, "Include the reduction steps");
  acyclic_cmd->callback([&] {
    output = render_acyclicity(is_acyclic(load_hypergraph(acyclic_in)), acyclic_trace,
                               parse_format(format_name));
  });

  auto* mv_cmd = app.add_subcommand("mv", "Exact-sequence verification for a pair");
  std::string mv_a, mv_b, mv_coeff = "q";
  unsigned long mv_p = 0;
  mv_cmd->add_option("left", mv_a, "First hypergraph file")->required();
  mv_cmd->add_option("right", mv_b, "Second hypergraph file")->required();
  mv_cmd->add_option("--coeff", mv_coeff, "Field coefficients: q or zp")
      ->check(CLI::IsMember({"q", "zp"}));
  mv_cmd->add_option("--p", mv_p, "Prime for --coeff zp");
  mv_cmd->callback([&] {
    Coefficients field = pick_coefficients(mv_coeff, mv_p);
    ExactnessReport report = verify_long_exact(load_hypergraph(mv_a), load_hypergraph(mv_b), field);
    output = render_exactness(report, parse_format(format_name));
    if (!report.exact) exit_code = 1;
  });

  auto* persist_cmd = app.add_subcommand("persist", "Persistent homology of a metric filtration");
  std::string persist_in, persist_points, persist_distmat, persist_radii, persist_coeff = "q";
  std::string persist_epsilon;
  unsigned long persist_p = 0;
  bool persist_auto = false;
  persist_cmd->add_option("input", persist_in, "Hypergraph file")->required();
  persist_cmd->add_option("--points", persist_points, "Point-cloud file");
  persist_cmd->add_option("--distmat", persist_distmat, "Distance-matrix CSV");
  persist_cmd->add_option("--radii", persist_radii, "Comma-separated increasing radii");
  persist_cmd->add_flag("--auto-radii", persist_auto, "Derive radii from the critical distances");
  persist_cmd->add_option("--epsilon", persist_epsilon, "Offset past each critical distance");
  persist_cmd->add_option("--coeff", persist_coeff, "Field coefficients: q or zp")
      ->check(CLI::IsMember({"q", "zp"}));
  persist_cmd->add_option("--p", persist_p, "Prime for --coeff zp");
  persist_cmd->callback([&] {
    if (persist_points.empty() == persist_distmat.empty())
      throw UserError("persist needs exactly one of --points or --distmat");
    if (persist_radii.empty() == !persist_auto)
      throw UserError("persist needs exactly one of --radii or --auto-radii");
    if (!persist_epsilon.empty() && !persist_auto)
      throw UserError("--epsilon only applies with --auto-radii");
    Coefficients field = pick_coefficients(persist_coeff, persist_p);
    Hypergraph h = load_hypergraph(persist_in);
    VertexMetric metric = [&] {
      std::istringstream in(slurp(persist_points.empty() ? persist_distmat : persist_points));
      return persist_points.empty() ? parse_distance_csv(in) : parse_point_cloud(in);
    }();
    std::vector<Rat> radii;
    if (persist_auto) {
      std::optional<Rat> eps;
      if (!persist_epsilon.empty()) eps = parse_exact_number(persist_epsilon);
      radii = metric.critical_radii(eps);
    } else {
      radii = parse_radii_list(persist_radii);
    }
    PersistentBetti pb = persistent_betti(metric_filtration(h, metric, radii), field);
    output = render_persistence(pb, persistence_diagram(pb), parse_format(format_name));
  });

  auto* conn_cmd = app.add_subcommand("conn", "Connectivity index");
  std::string conn_in;
  conn_cmd->add_option("input", conn_in, "Hypergraph file")->required();
  conn_cmd->callback([&] {
    output = render_index(connectivity_index(load_hypergraph(conn_in)), parse_format(format_name));
  });

  auto* diff_cmd = app.add_subcommand("diff", "Differentiation index for a vertex weighting");
  std::string diff_in, diff_vals;
  int diff_samples = 200;
  unsigned long diff_seed = 0;
  diff_cmd->add_option("input", diff_in, "Hypergraph file")->required();
  diff_cmd->add_option("--vals", diff_vals, "Vertex values file")->required();
  diff_cmd->add_option("--samples", diff_samples, "Monte-Carlo draws when enumeration is too big");
  diff_cmd->add_option("--seed", diff_seed, "Sampling seed");
  diff_cmd->callback([&] {
    output = render_index(differentiation_index(load_hypergraph(diff_in), load_values(diff_vals),
                                                diff_samples, diff_seed),
                          parse_format(format_name));
  });

  auto* corr_cmd = app.add_subcommand("corr", "Correlation index for two vertex weightings");
  std::string corr_in, corr_vals, corr_vals2;
  int corr_samples = 200;
  unsigned long corr_seed = 0;
  corr_cmd->add_option("input", corr_in, "Hypergraph file")->required();
  corr_cmd->add_option("--vals", corr_vals, "First values file")->required();
  corr_cmd->add_option("--vals2", corr_vals2, "Second values file")->required();
  corr_cmd->add_option("--samples", corr_samples, "Monte-Carlo draws when enumeration is too big");
  corr_cmd->add_option("--seed", corr_seed, "Sampling seed");
  corr_cmd->callback([&] {
    output = render_index(correlation_index(load_hypergraph(corr_in), load_values(corr_vals),
                                            load_values(corr_vals2), corr_samples, corr_seed),
                          parse_format(format_name));
  });

  auto* info_cmd = app.add_subcommand("info", "Size, dimension and edge counts");
  std::string info_in;
  info_cmd->add_option("input", info_in, "Hypergraph file")->required();
  info_cmd->callback([&] {
    output = render_info(load_hypergraph(info_in), parse_format(format_name));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const UserError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << output;
  return exit_code;
}
