#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isohorn/flags.hpp"
#include "isohorn/indices.hpp"
#include "isohorn/linalg.hpp"

namespace isohorn {

// Schubert-variety intersections in Plücker coordinates over F_p.  A closed
// cell condition is a set of vanishing Plücker coordinates in the basis
// adapted to the flag; the Grassmannian itself contributes the quadratic
// exchange relations.  Emptiness of a projective system is certified by
// saturating a full degree of monomials (linear algebra only).

struct GrassCoords {
  int m, N;
  std::vector<std::vector<int>> subsets;      // lex-ordered m-subsets of [N]
  int index_of(const std::vector<int>& s) const;
  explicit GrassCoords(int m, int N);
};

struct QuadTerm {
  int a, b;  // Plücker slots
  int sign;
};
std::vector<std::vector<QuadTerm>> plucker_relations(const GrassCoords& gc);

// Compound matrix: rows/columns indexed by m-subsets, entry = minor.
Mat<Fp> compound_matrix(const Mat<Fp>& M, const GrassCoords& gc);

// Plücker vector of an N x m matrix of full column rank.
std::vector<Fp> plucker_vector(const Mat<Fp>& X, const GrassCoords& gc);

struct PropernessOptions {
  int trials = 20;
  std::uint64_t seed = 1;
  int macaulay_degree_cap = 8;
  int macaulay_column_cap = 3000;
  bool exact_dims = false;  // also locate the exact dimension per trial
  int max_cell_dim = 12;    // refuse problems with m(N-m) beyond this
};

struct TrialOutcome {
  long observed_dim = -1;     // -1 = empty; for certified-only runs an upper bound
  bool exceeded = false;      // dimension above the proper bound
  bool inconclusive = false;  // no certificate within the degree cap
};

struct PropernessReport {
  bool passed = false;
  long expected_dim = 0;  // dim Gr - sum codim (may be negative)
  int trials = 0;
  int violations = 0;
  int inconclusive = 0;
  int redraws = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<TrialOutcome> outcomes;
};

// Draws independent isotropic flags per trial and checks that the closed
// Schubert intersection for the index tuple stays within the proper
// dimension bound.  FormTag::SymmetricEven is the negative control.
PropernessReport mc_properness(const std::vector<AIndex>& tuple, FormTag form,
                               const PropernessOptions& opt);

}  // namespace isohorn
