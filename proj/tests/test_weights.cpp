#include "doctest.h"
#include "weights.hpp"

using namespace clsvar;

namespace {
Tuple dbl(std::vector<int> v) {
  for (int& c : v) c *= 2;
  return v;
}
}  // namespace

TEST_CASE("rho in epsilon coordinates") {
  CHECK(rho_doubled(AlgebraType(Series::SL, 2)) == dbl({2, 1, 0}));
  CHECK(rho_doubled(AlgebraType(Series::SP, 2)) == dbl({2, 1}));
  CHECK(rho_doubled(AlgebraType(Series::SO, 3)) == dbl({2, 1, 0}));
}

TEST_CASE("make_dominant canonicalization") {
  AlgebraType sp2(Series::SP, 2);
  CHECK(make_dominant(sp2, dbl({-1, 2})).doubled() == dbl({2, 1}));
  AlgebraType sl2(Series::SL, 2);
  CHECK(make_dominant(sl2, dbl({3, 5, 4})).doubled() == dbl({2, 1, 0}));
  AlgebraType so2(Series::SO, 2);
  CHECK(make_dominant(so2, dbl({-1, -2})).doubled() == dbl({2, 1}));
  // odd number of sign flips leaves a negative last coordinate
  AlgebraType so3(Series::SO, 3);
  CHECK(make_dominant(so3, dbl({1, -2, 3})).doubled() == dbl({3, 2, -1}));
}

TEST_CASE("make_dominant rejects bad input") {
  AlgebraType sp2(Series::SP, 2);
  CHECK_THROWS(make_dominant(sp2, Tuple{2}));       // length mismatch
  CHECK_THROWS(make_dominant(sp2, Tuple{1, 0}));    // half-integer outside SO
  AlgebraType so2(Series::SO, 2);
  CHECK_THROWS(make_dominant(so2, Tuple{1, 2}));    // mixed parity
}

TEST_CASE("make_dominant is idempotent and Weyl invariant") {
  AlgebraType so3(Series::SO, 3);
  Weight w = Weight::from_ints(so3, {2, 1, 1});
  for (const Tuple& t : weyl_orbit(w)) {
    CHECK(make_dominant(so3, t) == w);
  }
  AlgebraType sp2(Series::SP, 2);
  Weight v = Weight::from_ints(sp2, {3, 1});
  for (const Tuple& t : weyl_orbit(v)) CHECK(make_dominant(sp2, t) == v);
}

TEST_CASE("weyl_orbit sizes and contents") {
  AlgebraType sp2(Series::SP, 2);
  auto orb = weyl_orbit(Weight::from_ints(sp2, {1, 0}));
  CHECK(orb == std::set<Tuple>{dbl({1, 0}), dbl({-1, 0}), dbl({0, 1}), dbl({0, -1})});

  AlgebraType sl1(Series::SL, 1);
  auto orb2 = weyl_orbit(Weight::from_ints(sl1, {1, 0}));
  CHECK(orb2 == std::set<Tuple>{dbl({1, 0}), dbl({0, 1})});

  // even sign flips only: orbit of (1,1) in D_2 has two elements
  AlgebraType so2(Series::SO, 2);
  auto orb3 = weyl_orbit(Weight::from_ints(so2, {1, 1}));
  CHECK(orb3 == std::set<Tuple>{dbl({1, 1}), dbl({-1, -1})});

  // orbit size divides the Weyl group order
  AlgebraType so3(Series::SO, 3);
  auto orb4 = weyl_orbit(Weight::from_ints(so3, {2, 1, 0}));
  CHECK(192 % orb4.size() == 0);
  CHECK(orb4.count(dbl({2, 1, 0})) == 1);
}

TEST_CASE("central characters") {
  AlgebraType sl2(Series::SL, 2);
  CHECK(central_character(trivial_weight(sl2)).rep_doubled == dbl({2, 1, 0}));
  AlgebraType sp2(Series::SP, 2);
  CHECK(central_character(Weight::from_ints(sp2, {1, 0})).rep_doubled == dbl({3, 1}));
  AlgebraType so3(Series::SO, 3);
  Weight spin = make_dominant(so3, Tuple{1, 1, 1});  // (1/2,1/2,1/2)
  CHECK(central_character(spin).rep_doubled == Tuple{5, 3, 1});

  // equality iff lambda+rho in one orbit
  Weight a = Weight::from_ints(sp2, {2, 0});
  Weight b = Weight::from_ints(sp2, {2, 1});
  CHECK(central_character(a) == central_character(a));
  CHECK(central_character(a) != central_character(b));
}

TEST_CASE("weight text round trip") {
  AlgebraType so3(Series::SO, 3);
  Weight spin = make_dominant(so3, Tuple{1, 1, -1});
  CHECK(spin.to_string() == "[1/2,1/2,-1/2]");
  CHECK(Weight::parse(so3, spin.to_string()) == spin);
  AlgebraType sl2(Series::SL, 2);
  Weight w = Weight::from_ints(sl2, {4, 2, 0});
  CHECK(Weight::parse(sl2, w.to_string()) == w);
}

TEST_CASE("weight sizes for truncation windows") {
  AlgebraType sl2(Series::SL, 2);
  // (c,c,0) has shift-invariant size c
  CHECK(Weight::from_ints(sl2, {3, 3, 0}).size_doubled() == 6);
  CHECK(Weight::from_ints(sl2, {3, 0, 0}).size_doubled() == 6);
  AlgebraType so3(Series::SO, 3);
  Weight spin = make_dominant(so3, Tuple{1, 1, 1});
  CHECK(spin.size_doubled() == 0);  // spin core does not count
  CHECK(Weight::from_ints(so3, {1, 1, -1}).size_doubled() == 6);
}
