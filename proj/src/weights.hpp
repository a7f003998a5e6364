#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace clsvar {

// Classical series of the finitary limit algebras.  SL at rank n means
// sl_{n+1}, SO means so_{2n} (type D), SP means sp_{2n} (type C).
enum class Series { SL, SO, SP };

std::string series_name(Series s);
Series series_from_name(const std::string& name);

struct AlgebraType {
  Series series;
  int rank;

  AlgebraType(Series s, int n);

  // number of epsilon coordinates: n+1 for SL, n for SO/SP
  int coord_count() const { return series == Series::SL ? rank + 1 : rank; }

  bool operator==(const AlgebraType& o) const = default;
  auto operator<=>(const AlgebraType& o) const = default;
};

// A tuple in epsilon coordinates, stored doubled so half-integers stay exact.
using Tuple = std::vector<int>;

// Half-sum of positive roots, doubled coordinates, in the natural order
// (n,...,0 for SL; n,...,1 for SP; n-1,...,0 for SO).
Tuple rho_doubled(const AlgebraType& a);

// Canonical dominant representative of t under the Weyl group, doubled
// coordinates.  For SL applies the shift normalization (min coordinate 0).
Tuple dominant_tuple(const AlgebraType& a, Tuple t);

// Dominant integral (or half-integral, SO) highest weight in canonical form.
class Weight {
 public:
  Weight(AlgebraType a, Tuple doubled_coords);

  // from non-doubled integer coordinates
  static Weight from_ints(AlgebraType a, const std::vector<int>& coords);

  const AlgebraType& algebra() const { return algebra_; }
  const Tuple& doubled() const { return coords_; }
  bool is_trivial() const;
  bool half_odd() const;  // SO spin-type weight

  // total weight size, doubled (SL: min over shifts of sum |c - s|;
  // SO: sum |c| minus the spin core n/2 for half-odd weights; SP: sum c)
  long size_doubled() const;

  std::string to_string() const;  // [a,b,c] with halves as p/2
  static Weight parse(AlgebraType a, const std::string& text);

  bool operator==(const Weight& o) const = default;
  auto operator<=>(const Weight& o) const = default;

 private:
  AlgebraType algebra_;
  Tuple coords_;
};

Weight make_dominant(const AlgebraType& a, const Tuple& doubled);
Weight trivial_weight(const AlgebraType& a);
Weight natural_weight(const AlgebraType& a);

// Full Weyl orbit of a dominant weight, as doubled tuples.
std::set<Tuple> weyl_orbit(const Weight& w);

// All Weyl group elements as (permutation, sign flips) pairs acting on
// coordinate tuples; used by saturation tests.  Sizes: (n+1)! for SL,
// 2^n n! for SP, 2^{n-1} n! for SO.
std::vector<Tuple> weyl_images(const AlgebraType& a, const Tuple& t);

struct CentralCharacter {
  AlgebraType algebra;
  Tuple rep_doubled;  // dominant representative of lambda+rho (SL: min 0)

  bool operator==(const CentralCharacter& o) const = default;
  auto operator<=>(const CentralCharacter& o) const = default;
  std::string to_string() const;
};

CentralCharacter central_character(const Weight& w);

std::string tuple_to_string(const Tuple& doubled);

}  // namespace clsvar
