#pragma once

#include <vector>

#include "hyperhom/boundary.hpp"
#include "hyperhom/field_homology.hpp"
#include "hyperhom/subspace.hpp"

namespace hyperhom {

// Isomorphism class of one homology group: free part plus torsion orders in
// ascending divisibility order (entries > 1; always empty over a field).
struct HomologyGroup {
  int degree = 0;
  int free_rank = 0;
  std::vector<Int> torsion;
  bool operator==(const HomologyGroup& o) const = default;
};

// A chain complex of subgroups of the ambient simplicial chain groups, one
// per degree 0..dim of the originating hypergraph.
struct EmbeddedChainComplex {
  Coefficients coeff;
  SimplicialComplex ambient;
  std::vector<ChainSubspace> groups;
};

// Largest subchain complex of the ambient complex lying degreewise inside the
// span of h's hyperedges: degree-n part is the span of h's degree-n edges
// intersected with the boundary preimage of the degree-(n-1) span.
EmbeddedChainComplex infimum_chain(const Hypergraph& h, const Coefficients& coeff,
                                   const SimplicialComplex* ambient = nullptr);

// Smallest subchain complex containing the spans: degree-n part is the span
// of h's degree-n edges plus the boundaries of the degree-(n+1) span.
EmbeddedChainComplex supremum_chain(const Hypergraph& h, const Coefficients& coeff,
                                    const SimplicialComplex* ambient = nullptr);

// Homology of h computed through cycle/boundary subgroups of the edge spans;
// one group per degree 0..dim h (empty list for the empty hypergraph).
std::vector<HomologyGroup> embedded_homology(const Hypergraph& h, const Coefficients& coeff);

// Homology of the supremum complex; agrees with embedded_homology.
std::vector<HomologyGroup> sup_homology(const Hypergraph& h, const Coefficients& coeff);

// Classical homology of a simplicial complex from boundary ranks and
// elementary divisors.
std::vector<HomologyGroup> simplicial_homology(const SimplicialComplex& K, const Coefficients& coeff);

// Free rank of degree-0 homology for a hypergraph all of whose vertices are
// themselves hyperedges; cross-checked against the component count of the
// vertex/pair skeleton.
int zeroth_homology_components(const Hypergraph& h);

// Top-degree homology group (free); equals the top homology of the
// associated complex.
HomologyGroup top_homology(const Hypergraph& h, const Coefficients& coeff);

// Recomputes the infimum and supremum complexes inside a larger ambient
// complex and compares with the intrinsic computation.
bool ambient_independence_check(const Hypergraph& h, const SimplicialComplex& larger,
                                const Coefficients& coeff);

struct HomologyMap {
  int degree = 0;
  HomologyGroup source, target;
  Matrix matrix;  // target betti x source betti, field entries
};

// Map induced on degree-n homology by a hypergraph morphism over a field.
HomologyMap induced_map(const HypergraphMorphism& f, int degree, const Coefficients& field);

// Internal building block shared with the exact-sequence and persistence
// modules: the infimum complex as per-degree bases padded to the ambient's
// degree range.
SubspaceFamily infimum_family(const Hypergraph& h, const SimplicialComplex& ambient,
                              const Coefficients& coeff);
std::vector<Matrix> ambient_boundaries(const SimplicialComplex& K, const Coefficients& coeff);

}  // namespace hyperhom
