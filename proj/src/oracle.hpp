#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "weights.hpp"

namespace clsvar {

using Rat = mpq_class;
using Int = mpz_class;

// thrown when a computation would exceed the configured dimension bound
struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr long kDefaultDimBound = 200000;

// Formal character: full weight multiset of a finite-dimensional module,
// keys are raw doubled epsilon tuples (Weyl-invariant, finite support).
struct FormalCharacter {
  AlgebraType algebra;
  std::map<Tuple, long> terms;

  long total_mass() const;
};

struct BranchingResult {
  AlgebraType parent;
  AlgebraType child;
  std::map<Weight, long> terms;
};

// positive roots in doubled coordinates
std::vector<Tuple> positive_roots_doubled(const AlgebraType& a);

// is t a dominant raw tuple (no SL shift normalization required)
bool raw_dominant(const AlgebraType& a, const Tuple& t);

// dominant representative of a raw tuple under W, without SL shift
Tuple raw_dominant_rep(const AlgebraType& a, Tuple t);

// Weyl dimension formula
Int dim(const Weight& w);

// Freudenthal: multiplicities of the dominant weights of L(w)
std::map<Tuple, long> dominant_character(const Weight& w, long dim_bound = kDefaultDimBound);

// full character (all Weyl images expanded); total mass equals dim
FormalCharacter weight_multiplicities(const Weight& w, long dim_bound = kDefaultDimBound);

// character of the module with highest weight given by a raw dominant tuple
// (SL: not shift-normalized); keys keep the same coordinate-sum as the input
std::map<Tuple, long> full_character_raw(const AlgebraType& a, const Tuple& hw,
                                         long dim_bound = kDefaultDimBound);

// tensor product decomposition, Racah-Speiser / Klimyk
std::map<Weight, long> tensor_decompose(const Weight& w1, const Weight& w2,
                                        long dim_bound = kDefaultDimBound);

// independent oracle: multiply formal characters and peel highest weights
std::map<Weight, long> tensor_via_characters(const Weight& w1, const Weight& w2,
                                             long dim_bound = kDefaultDimBound);

// restriction to the same series, rank one lower (corner embedding:
// V_{n+1} restricts to V_n plus trivial)
BranchingResult branch(const Weight& w, long dim_bound = kDefaultDimBound);

// support of the iterated restriction down to rank m
std::set<Weight> branch_to(const Weight& w, int m, long dim_bound = kDefaultDimBound);

// Dynkin index of a decomposition (sum of per-constituent trace-form mass,
// normalized so the natural module has index 1)
Rat rep_dynkin_index(const AlgebraType& a,
                     const std::vector<std::pair<Weight, long>>& decomposition);

struct EmbeddingStep {
  AlgebraType subalgebra;  // the smaller algebra of the step
  std::vector<std::pair<Weight, long>> natural_decomposition;
};

// product of per-step indices; steps must stay within one classical series
Rat embedding_dynkin_index(const std::vector<EmbeddingStep>& chain);

}  // namespace clsvar
