#pragma once

#include <string>

#include "hyperhom/indices.hpp"
#include "hyperhom/persistence.hpp"

namespace hyperhom {

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(const std::string& name);

// All renderers produce complete documents with a trailing newline and no
// timestamps or other run-dependent content, so identical inputs give
// byte-identical output.
std::string render_homology(const std::vector<HomologyGroup>& groups, const Coefficients& coeff,
                            OutputFormat format);
std::string render_closure(const SimplicialComplex& K, OutputFormat format);
std::string render_acyclicity(const AcyclicityResult& result, bool with_trace,
                              OutputFormat format);
std::string render_exactness(const ExactnessReport& report, OutputFormat format);
std::string render_persistence(const PersistentBetti& betti, const PersistenceDiagram& diagram,
                               OutputFormat format);
std::string render_index(const IndexReport& report, OutputFormat format);
std::string render_info(const Hypergraph& h, OutputFormat format);

}  // namespace hyperhom
