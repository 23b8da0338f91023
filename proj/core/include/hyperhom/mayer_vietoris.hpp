#pragma once

#include <string>
#include <vector>

#include "hyperhom/embedded.hpp"

namespace hyperhom {

struct ExactnessSpot {
  int degree = 0;
  std::string position;  // which group of the sequence the spot sits at
  int kernel_rank = 0;
  int image_rank = 0;
  bool exact = false;
};

struct ExactnessReport {
  bool hypothesis_holds = true;
  bool exact = false;  // overall verdict: every spot exact
  std::vector<ExactnessSpot> spots;
};

// Degreewise verification that
//   0 -> Inf(a^b) -> Inf(a) + Inf(b) (direct sum) -> Inf(a u b) -> 0
// is short exact: x -> (x, -x) injective, kernel of the middle map equal to
// the first image, and the final map surjective.  Works over Z (lattice
// comparisons) and over fields.  Requires the pairwise-intersection
// hypothesis.
bool short_exact_check(const Hypergraph& a, const Hypergraph& b, const Coefficients& coeff);

// One column of the diagram: the infimum complex of a hypergraph inside the
// shared ambient, abstracted, with homology bases.
struct MvColumn {
  SubspaceFamily family;
  ChainComplexField complex;
  FieldHomology homology;
  int betti(int degree) const {
    return degree < static_cast<int>(homology.betti.size()) ? homology.betti[degree] : 0;
  }
};

// Homology-level data of the sequence for a pair satisfying the hypothesis;
// all four complexes live in the associated complex of the union, padded one
// degree past its dimension.
struct MvData {
  SimplicialComplex ambient;
  std::vector<Matrix> boundary;
  MvColumn inter, left, right, uni;
  std::vector<Matrix> alpha;       // H_n(inter) -> H_n(left) + H_n(right)
  std::vector<Matrix> beta;        // H_n(left) + H_n(right) -> H_n(union)
  std::vector<Matrix> connecting;  // H_n(union) -> H_{n-1}(inter)
  int max_degree() const { return static_cast<int>(alpha.size()) - 1; }
};

// ambient (when given) must contain the closure of the union; used to place
// several pairs into one shared coordinate system.
MvData build_mv_data(const Hypergraph& a, const Hypergraph& b, const Coefficients& field,
                     const SimplicialComplex* ambient = nullptr);

// Spot-by-spot exactness of the sequence carried by the diagram data.
ExactnessReport exactness_from_data(const MvData& d, const Coefficients& field);

// The degree-n connecting map of the sequence: split a union cycle into an
// a-chain plus a b-chain and take the boundary of the a-part.
HomologyMap connecting_homomorphism(const Hypergraph& a, const Hypergraph& b, int degree,
                                    const Coefficients& field);

// Exactness of ... -> H_n(inter) -> H_n(a)+H_n(b) -> H_n(a u b) -> H_{n-1}(inter) -> ...
// at every spot, degrees 0..dim+1.  Requires the hypothesis.
ExactnessReport verify_long_exact(const Hypergraph& a, const Hypergraph& b,
                                  const Coefficients& field);

// Without any hypothesis: the long exact sequences of
//   0 -> Inf(a^b) -> Inf(a)+Inf(b) -> S -> 0          (S the chainwise sum)
//   0 -> S -> Inf(a u b) -> Inf(a u b)/S -> 0
struct GeneralSequencesReport {
  ExactnessReport sum_sequence;
  ExactnessReport quotient_sequence;
};
GeneralSequencesReport general_sequences(const Hypergraph& a, const Hypergraph& b,
                                         const Coefficients& field);

}  // namespace hyperhom
