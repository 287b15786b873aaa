#pragma once

#include <functional>
#include <string>
#include <vector>

#include "segal/fingroups.hpp"
#include "segal/simplicial.hpp"
#include "segal/snf.hpp"

namespace segal {

// Sparse integer matrix by rows: (column, value) pairs sorted by column.
struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, long long>>> row;
};

// Normalized reduced chains: basis of degree q = nondegenerate non-basepoint q-simplices.
struct ChainComplex {
  std::vector<std::vector<Id>> basis;
  std::vector<SparseMatrix> boundary;  // [q]: C_q -> C_{q-1}, rows indexed by C_q; [0] empty
};

ChainComplex normalized_chains(const GSimplicialSet& x, int top);
bool boundary_squares_to_zero(const ChainComplex& c);

// Rank and invariant factors (> 1) of an integer matrix.
struct MatrixInvariants {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
};
MatrixInvariants matrix_invariants(const SparseMatrix& m);

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // ascending, each dividing the next
  bool operator==(const HomologyGroup&) const = default;
  std::string str() const;  // "Z^2 + Z/2", or "0"
};

struct HomologyResult {
  std::vector<HomologyGroup> degree;
  bool operator==(const HomologyResult&) const = default;
  std::string str() const;  // one "H_q = ..." line per degree
};

// H̃_q for q ≤ top; needs x stored to degree top + 1.
HomologyResult reduced_homology(const GSimplicialSet& x, int top);
HomologyResult fixed_homology(const GSimplicialSet& x, const std::vector<int>& subgroup, int top);

// Bar construction model of K(A,1): q-simplices A^q in mixed radix (first entry most
// significant); the identity tuple is the basepoint.
GSimplicialSet nerve_of_group(const FinGroup& a, int dim);

struct StabilityReport {
  std::vector<int> truncations;
  std::vector<HomologyResult> results;
  // agree[k][q]: degree q matches between truncations[k] and truncations[k+1]
  std::vector<std::vector<bool>> agree;
  bool all_agree() const;
  std::string str() const;
};
// Recomputes at each truncation; agreement is evidence only.
StabilityReport stability_run(const std::function<HomologyResult(int truncation)>& run,
                              const std::vector<int>& truncations);

}  // namespace segal
