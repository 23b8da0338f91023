#include "hyperhom/report_json.hpp"

#include <json.hpp>
#include <sstream>

namespace hyperhom {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rat_json(const Rat& x) {
  return ordered_json{{"exact", rat_to_string(x)}, {"decimal", rat_to_decimal(x)}};
}

ordered_json edge_json(const Hyperedge& e) {
  ordered_json a = ordered_json::array();
  for (const Vertex& v : e) a.push_back(v);
  return a;
}

std::string edge_text(const Hyperedge& e) {
  std::string out = "{";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += e[i];
  }
  return out + "}";
}

std::string join_edge_csv(const Hyperedge& e) {
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) out += " ";
    out += e[i];
  }
  return out;
}

// "Z^2 + Z/2 + Z/6", "Q^1", "(Z/5)^2", or "0"
std::string group_text(const HomologyGroup& g, const Coefficients& coeff) {
  std::vector<std::string> parts;
  if (g.free_rank > 0)
    parts.push_back(coeff.name() + (coeff.ring == Ring::PrimeField ? "^" : "^") +
                    std::to_string(g.free_rank));
  for (const Int& d : g.torsion) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " + ";
    out += parts[i];
  }
  return out;
}

ordered_json group_json(const HomologyGroup& g) {
  ordered_json t = ordered_json::array();
  for (const Int& d : g.torsion) t.push_back(d.get_str());
  return ordered_json{{"degree", g.degree}, {"rank", g.free_rank}, {"torsion", t}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string interval_death(const PersistenceInterval& iv) {
  return iv.death ? rat_to_string(*iv.death) : "inf";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw UserError("unknown output format: " + name);
}

std::string render_homology(const std::vector<HomologyGroup>& groups, const Coefficients& coeff,
                            OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["coefficients"] = coeff.name();
    j["groups"] = ordered_json::array();
    for (const HomologyGroup& g : groups) j["groups"].push_back(group_json(g));
    return dump(j);
  }
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "degree,rank,torsion\n";
    for (const HomologyGroup& g : groups) {
      out << g.degree << "," << g.free_rank << ",";
      for (size_t i = 0; i < g.torsion.size(); ++i) {
        if (i) out << ";";
        out << g.torsion[i].get_str();
      }
      out << "\n";
    }
    return out.str();
  }
  out << "coefficients: " << coeff.name() << "\n";
  for (const HomologyGroup& g : groups)
    out << "H_" << g.degree << " = " << group_text(g, coeff) << "\n";
  return out.str();
}

std::string render_closure(const SimplicialComplex& K, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["edges"] = ordered_json::array();
    for (const Hyperedge& e : K.hypergraph().edges()) j["edges"].push_back(edge_json(e));
    return dump(j);
  }
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "edge\n";
    for (const Hyperedge& e : K.hypergraph().edges()) out << join_edge_csv(e) << "\n";
    return out.str();
  }
  return serialize_hypergraph(K.hypergraph());
}

std::string render_acyclicity(const AcyclicityResult& result, bool with_trace,
                              OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["acyclic"] = result.acyclic;
    j["final"] = ordered_json::array();
    for (const Hyperedge& e : result.trace.final.edges()) j["final"].push_back(edge_json(e));
    if (with_trace) {
      j["steps"] = ordered_json::array();
      for (const ReductionStep& s : result.trace.steps) {
        ordered_json step;
        step["op"] = reduction_op_name(s.op);
        if (s.op != ReductionOp::DropEdge) step["vertex"] = s.vertex;
        step["edge"] = edge_json(s.edge);
        if (s.witness) step["witness"] = edge_json(*s.witness);
        j["steps"].push_back(step);
      }
    }
    return dump(j);
  }
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "verdict," << (result.acyclic ? "acyclic" : "not acyclic") << "\n";
    if (with_trace)
      for (const ReductionStep& s : result.trace.steps)
        out << reduction_op_name(s.op) << "," << s.vertex << "," << join_edge_csv(s.edge) << "\n";
    return out.str();
  }
  out << (result.acyclic ? "acyclic" : "not acyclic") << "\n";
  if (with_trace) {
    for (const ReductionStep& s : result.trace.steps) {
      if (s.op == ReductionOp::DropEdge) {
        out << "drop edge " << edge_text(s.edge);
        if (s.witness) out << " (inside " << edge_text(*s.witness) << ")";
      } else {
        out << "remove vertex " << s.vertex << " from " << edge_text(s.edge);
      }
      out << "\n";
    }
    out << "final:";
    for (const Hyperedge& e : result.trace.final.edges()) out << " " << edge_text(e);
    out << "\n";
  }
  return out.str();
}

std::string render_exactness(const ExactnessReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["hypothesis"] = report.hypothesis_holds;
    j["exact"] = report.exact;
    j["spots"] = ordered_json::array();
    for (const ExactnessSpot& s : report.spots)
      j["spots"].push_back(ordered_json{{"degree", s.degree},
                                        {"position", s.position},
                                        {"kernel_rank", s.kernel_rank},
                                        {"image_rank", s.image_rank},
                                        {"exact", s.exact}});
    return dump(j);
  }
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "degree,position,kernel_rank,image_rank,exact\n";
    for (const ExactnessSpot& s : report.spots)
      out << s.degree << "," << s.position << "," << s.kernel_rank << "," << s.image_rank << ","
          << (s.exact ? "true" : "false") << "\n";
    return out.str();
  }
  for (const ExactnessSpot& s : report.spots)
    out << "degree " << s.degree << " at " << s.position << ": "
        << (s.exact ? "exact" : "NOT exact") << " (kernel " << s.kernel_rank << ", image "
        << s.image_rank << ")\n";
  out << "sequence " << (report.exact ? "exact" : "NOT exact") << "\n";
  return out.str();
}

std::string render_persistence(const PersistentBetti& betti, const PersistenceDiagram& diagram,
                               OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["coefficients"] = betti.coeff.name();
    j["parameters"] = ordered_json::array();
    for (const Rat& p : betti.parameters) j["parameters"].push_back(rat_json(p));
    j["betti"] = ordered_json::array();
    for (size_t d = 0; d < betti.betti.size(); ++d)
      j["betti"].push_back(ordered_json{{"degree", static_cast<int>(d)},
                                        {"matrix", betti.betti[d]}});
    j["intervals"] = ordered_json::array();
    for (const PersistenceInterval& iv : diagram.intervals) {
      ordered_json row;
      row["degree"] = iv.degree;
      row["birth"] = rat_json(iv.birth);
      row["death"] = iv.death ? ordered_json(rat_json(*iv.death)) : ordered_json("inf");
      row["multiplicity"] = iv.multiplicity;
      j["intervals"].push_back(row);
    }
    return dump(j);
  }
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "degree,birth,death\n";
    for (const PersistenceInterval& iv : diagram.intervals)
      for (int c = 0; c < iv.multiplicity; ++c)
        out << iv.degree << "," << rat_to_string(iv.birth) << "," << interval_death(iv) << "\n";
    return out.str();
  }
  out << "parameters:";
  for (const Rat& p : betti.parameters) out << " " << rat_to_string(p);
  out << "\n";
  for (const PersistenceInterval& iv : diagram.intervals)
    out << "degree " << iv.degree << ": [" << rat_to_string(iv.birth) << ", "
        << interval_death(iv) << ") x" << iv.multiplicity << "\n";
  if (diagram.intervals.empty()) out << "no intervals\n";
  return out.str();
}

std::string render_index(const IndexReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["kind"] = report.kind;
    j["value"] = rat_json(report.value);
    j["terms"] = ordered_json::array();
    for (const IndexTerm& t : report.breakdown) {
      ordered_json row;
      row["index"] = t.index;
      row["term"] = rat_json(t.term);
      j["terms"].push_back(row);
    }
    if (report.tail) j["tail"] = rat_json(*report.tail);
    if (report.seed) j["seed"] = *report.seed;
    if (report.samples) j["samples"] = *report.samples;
    j["sampled"] = report.sampled;
    return dump(j);
  }
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "index,term\n";
    for (const IndexTerm& t : report.breakdown)
      out << t.index << "," << rat_to_string(t.term) << "\n";
    if (report.tail) out << "tail," << rat_to_string(*report.tail) << "\n";
    out << "value," << rat_to_string(report.value) << "\n";
    return out.str();
  }
  out << report.kind << " = " << rat_to_string(report.value) << " ("
      << rat_to_decimal(report.value) << ")\n";
  for (const IndexTerm& t : report.breakdown)
    out << "  term " << t.index << ": " << rat_to_string(t.term) << "\n";
  if (report.tail) out << "  tail: " << rat_to_string(*report.tail) << "\n";
  if (report.sampled && report.seed && report.samples)
    out << "  sampled: " << *report.samples << " draws, seed " << *report.seed << "\n";
  return out.str();
}

std::string render_info(const Hypergraph& h, OutputFormat format) {
  int dim = h.dimension();
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["vertices"] = static_cast<int>(h.universe().size());
    j["edges"] = static_cast<int>(h.edges().size());
    j["dimension"] = dim;
    j["edges_by_degree"] = ordered_json::array();
    for (int d = 0; d <= dim; ++d)
      j["edges_by_degree"].push_back(ordered_json{{"degree", d}, {"count", h.edge_count(d)}});
    return dump(j);
  }
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "degree,count\n";
    for (int d = 0; d <= dim; ++d) out << d << "," << h.edge_count(d) << "\n";
    return out.str();
  }
  out << "vertices: " << h.universe().size() << "\n";
  out << "edges: " << h.edges().size() << "\n";
  out << "dimension: " << dim << "\n";
  for (int d = 0; d <= dim; ++d) out << "  degree " << d << ": " << h.edge_count(d) << "\n";
  return out.str();
}

}  // namespace hyperhom
