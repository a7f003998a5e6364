#pragma once

#include <limits>
#include <map>
#include <set>
#include <vector>

#include "oracle.hpp"
#include "weights.hpp"

namespace clsvar {

// Normal-form monomial of an irreducible coherent local system:
//   (L_v^inf L_{v+1}^{x_{v+1}} ... ) E^m (R_w^inf R_{w+1}^{z_{w+1}} ...) [Spin]
// The R-data exists only for SL, the spin flag only for SO.  The top element
// ("all modules") is a standalone flag.
struct IrreducibleCLS {
  Series family = Series::SL;
  int v = 0;
  int w = 0;
  std::map<int, int> x;  // L exponents, keys > v
  std::map<int, int> z;  // R exponents, keys > w (SL only)
  int m = 0;
  bool spin = false;  // SO only
  bool top = false;   // E^inf

  bool is_trivial() const;
  bool finite_type() const { return !top && v == 0 && w == 0; }
  std::string to_string() const;

  auto key() const { return std::tie(family, top, v, w, m, spin, x, z); }
  bool operator==(const IrreducibleCLS& o) const { return key() == o.key(); }
  bool operator<(const IrreducibleCLS& o) const { return key() < o.key(); }
};

// validated construction from raw exponent data
IrreducibleCLS validate_normal_form(Series family, int v, int w, std::map<int, int> x,
                                    std::map<int, int> z, int m, bool spin, bool top = false);

IrreducibleCLS trivial_cls(Series family);
IrreducibleCLS basic_E(Series family);
IrreducibleCLS basic_L(Series family, int p);
IrreducibleCLS basic_Linf(Series family, int v);
IrreducibleCLS basic_R(int q);          // SL
IrreducibleCLS basic_Rinf(int w);       // SL
IrreducibleCLS basic_spin();            // SO
IrreducibleCLS top_cls(Series family);  // E^inf

inline constexpr long kInfinity = std::numeric_limits<long>::max();

// The non-increasing sequences l_i = m + sum_{j>=i} x_j with the infinite
// prefix l_1 = ... = l_v = +inf; same shape for the r side.
struct LRSequence {
  int inf_prefix = 0;
  std::vector<long> tail;  // values at i = inf_prefix+1, ...
  long limit = 0;

  long at(int i) const {  // 1-based
    if (i <= inf_prefix) return kInfinity;
    size_t k = (size_t)(i - inf_prefix - 1);
    return k < tail.size() ? tail[k] : limit;
  }
  int horizon() const { return inf_prefix + (int)tail.size() + 1; }
};

struct LRSequences {
  LRSequence l;
  LRSequence r;  // zero sequence outside SL
};

LRSequences lr_sequences(const IrreducibleCLS& q);

// inclusion criterion: does q contain qp?
bool contains(const IrreducibleCLS& q, const IrreducibleCLS& qp);

// finite antichain of maximal components
struct CLS {
  Series family;
  std::vector<IrreducibleCLS> components;  // sorted, antichain

  std::string to_string() const;
};

CLS reduce_components(Series family, std::vector<IrreducibleCLS> parts);
bool cls_contains(const CLS& a, const CLS& b);

// Level-n set of a c.l.s.  Finite type stores the explicit set; infinite
// type stores the free prefix lengths and the tail set of the finite part
// (the closure description of Lemma 7.6a); the top element matches all.
struct LevelSetDescriptor {
  AlgebraType algebra;  // at level n
  bool all_modules = false;
  int v = 0, w = 0;            // free prefix / suffix lengths
  bool spin_tail = false;      // SO: tail set lives in the half-odd class
  std::set<Tuple> tail_set;    // doubled tuples at rank n - v - w
  std::set<Weight> explicit_set() const;  // finite type only (v = w = 0)

  bool prefix_form() const { return v > 0 || w > 0; }
  bool member(const Weight& wgt) const;
};

LevelSetDescriptor level_set(const IrreducibleCLS& q, int n);

// all members with size_doubled <= window_doubled (window < 0: finite type
// only, no truncation)
std::set<Weight> enumerate_level_set(const IrreducibleCLS& q, int n, long window_doubled = -1);
std::set<Weight> enumerate_level_set(const CLS& q, int n, long window_doubled = -1);

// all dominant weights at the given algebra within the size window;
// for SO enumerates the requested parity class (0 integer, 1 half-odd)
std::set<Weight> enumerate_dominant_weights(const AlgebraType& a, long window_doubled,
                                            int parity = 0);

// free-monoid product of finite-type monomials (exponentwise sum)
IrreducibleCLS product(const IrreducibleCLS& q1, const IrreducibleCLS& q2);

// setwise Cartan products of the level sets
std::set<Weight> product_levelwise(const IrreducibleCLS& q1, const IrreducibleCLS& q2, int n,
                                   long window_doubled = -1);

// union over pairs of tensor product supports
std::set<Weight> tensor_levelwise(const IrreducibleCLS& q1, const IrreducibleCLS& q2, int n,
                                  long window_doubled = -1,
                                  long dim_bound = kDefaultDimBound);

struct CoherenceReport {
  bool ok = false;
  int n = 0, m = 0;
  std::vector<Weight> missing;  // expected at level m but not reached
  std::vector<Weight> extra;    // reached at level m but not expected
};

// verifies <Q_n>_m = Q_m (windowed for infinite type)
CoherenceReport coherence_check(const IrreducibleCLS& q, int n, int m,
                                long window_doubled = 12,
                                long dim_bound = kDefaultDimBound);

struct EnumerationBounds {
  int v_max = 0;
  int w_max = 0;  // SL only
  int m_max = 0;
  int idx_max = 0;  // largest L/R index
  int exp_max = 0;  // largest exponent
  bool allow_spin = false;
};

std::vector<IrreducibleCLS> enumerate_irreducibles(Series family, const EnumerationBounds& b);

}  // namespace clsvar
