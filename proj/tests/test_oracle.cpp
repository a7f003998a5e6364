#include "doctest.h"
#include "oracle.hpp"

using namespace clsvar;

namespace {
Tuple dbl(std::vector<int> v) {
  for (int& c : v) c *= 2;
  return v;
}
Weight W(Series s, int rank, std::vector<int> coords) {
  return Weight::from_ints(AlgebraType(s, rank), coords);
}
}  // namespace

TEST_CASE("dimensions") {
  CHECK(dim(W(Series::SL, 1, {1, 0})) == 2);
  CHECK(dim(W(Series::SL, 2, {2, 1, 0})) == 8);
  CHECK(dim(W(Series::SP, 2, {1, 1})) == 5);
  CHECK(dim(W(Series::SP, 2, {1, 0})) == 4);
  CHECK(dim(W(Series::SO, 3, {1, 0, 0})) == 6);
  // half-spin modules of so_6
  AlgebraType so3(Series::SO, 3);
  CHECK(dim(make_dominant(so3, Tuple{1, 1, 1})) == 4);
  CHECK(dim(make_dominant(so3, Tuple{1, 1, -1})) == 4);
  CHECK(dim(W(Series::SP, 3, {2, 1, 0})) == 64);
}

TEST_CASE("weight multiplicities via Freudenthal") {
  auto ch = weight_multiplicities(W(Series::SL, 1, {2, 0}));
  CHECK(ch.terms == std::map<Tuple, long>{{dbl({2, 0}), 1}, {dbl({1, 1}), 1}, {dbl({0, 2}), 1}});

  // adjoint of sl_3: zero-difference class has multiplicity 2, mass 8
  auto adj = weight_multiplicities(W(Series::SL, 2, {2, 1, 0}));
  CHECK(adj.total_mass() == 8);
  CHECK(adj.terms.at(dbl({1, 1, 1})) == 2);

  auto nat = weight_multiplicities(W(Series::SP, 2, {1, 0}));
  CHECK(nat.terms.size() == 4);
  for (auto& [t, m] : nat.terms) CHECK(m == 1);

  // mass always equals dim
  auto big = weight_multiplicities(W(Series::SO, 3, {2, 1, 1}));
  CHECK(Int(big.total_mass()) == dim(W(Series::SO, 3, {2, 1, 1})));
}

TEST_CASE("weight multiplicities respect the bound") {
  CHECK_THROWS_AS(weight_multiplicities(W(Series::SP, 4, {6, 6, 6, 6}), 1000), BoundExceeded);
}

TEST_CASE("tensor products by Klimyk") {
  auto t1 = tensor_decompose(W(Series::SL, 1, {1, 0}), W(Series::SL, 1, {1, 0}));
  CHECK(t1 == std::map<Weight, long>{{W(Series::SL, 1, {2, 0}), 1}, {W(Series::SL, 1, {0, 0}), 1}});

  auto t2 = tensor_decompose(W(Series::SP, 2, {1, 0}), W(Series::SP, 2, {1, 0}));
  CHECK(t2 == std::map<Weight, long>{{W(Series::SP, 2, {2, 0}), 1},
                                     {W(Series::SP, 2, {1, 1}), 1},
                                     {W(Series::SP, 2, {0, 0}), 1}});

  // anything tensor trivial is itself
  Weight w = W(Series::SO, 3, {2, 1, 0});
  auto t3 = tensor_decompose(w, trivial_weight(w.algebra()));
  CHECK(t3 == std::map<Weight, long>{{w, 1}});
}

TEST_CASE("Klimyk agrees with the character-product oracle") {
  std::vector<std::pair<Weight, Weight>> pairs = {
      {W(Series::SL, 2, {1, 0, 0}), W(Series::SL, 2, {1, 1, 0})},
      {W(Series::SL, 2, {2, 1, 0}), W(Series::SL, 2, {1, 0, 0})},
      {W(Series::SP, 2, {1, 1}), W(Series::SP, 2, {1, 0})},
      {W(Series::SP, 2, {2, 0}), W(Series::SP, 2, {1, 1})},
      {W(Series::SO, 3, {1, 0, 0}), W(Series::SO, 3, {1, 1, 0})},
  };
  AlgebraType so3(Series::SO, 3);
  pairs.emplace_back(make_dominant(so3, Tuple{1, 1, 1}), make_dominant(so3, Tuple{1, 1, -1}));
  for (auto& [a, b] : pairs) {
    auto x = tensor_decompose(a, b);
    auto y = tensor_via_characters(a, b);
    CHECK(x == y);
    auto z = tensor_decompose(b, a);
    CHECK(x == z);
    long mass = 0;
    for (auto& [w, m] : x) mass += m * dim(w).get_si();
    CHECK(Int(mass) == dim(a) * dim(b));
  }
}

TEST_CASE("branching within a series") {
  // adjoint of sl_3 restricted to sl_2: 8 = 3 + 2 + 2 + 1
  auto br = branch(W(Series::SL, 2, {2, 1, 0}));
  CHECK(br.terms == std::map<Weight, long>{{W(Series::SL, 1, {2, 0}), 1},
                                           {W(Series::SL, 1, {1, 0}), 2},
                                           {W(Series::SL, 1, {0, 0}), 1}});

  // 5-dim module of sp_4 to sp_2: two naturals plus a trivial
  auto br2 = branch(W(Series::SP, 2, {1, 1}));
  CHECK(br2.terms == std::map<Weight, long>{{W(Series::SP, 1, {1}), 2},
                                            {W(Series::SP, 1, {0}), 1}});

  auto br3 = branch(trivial_weight(AlgebraType(Series::SP, 3)));
  CHECK(br3.terms == std::map<Weight, long>{{trivial_weight(AlgebraType(Series::SP, 2)), 1}});

  // mass checks on a batch
  for (Weight w : {W(Series::SO, 3, {2, 1, 0}), W(Series::SO, 3, {1, 1, 1}),
                   W(Series::SP, 3, {1, 1, 0})}) {
    auto b = branch(w);
    long mass = 0;
    for (auto& [cw, m] : b.terms) mass += m * dim(cw).get_si();
    CHECK(Int(mass) == dim(w));
  }
}

TEST_CASE("iterated branching support") {
  auto s = branch_to(W(Series::SL, 3, {1, 1, 0, 0}), 1);
  CHECK(s == std::set<Weight>{W(Series::SL, 1, {1, 0}), W(Series::SL, 1, {0, 0})});

  auto t = branch_to(trivial_weight(AlgebraType(Series::SP, 4)), 2);
  CHECK(t == std::set<Weight>{trivial_weight(AlgebraType(Series::SP, 2))});

  AlgebraType so3(Series::SO, 3);
  auto u = branch_to(make_dominant(so3, Tuple{1, 1, 1}), 2);
  AlgebraType so2(Series::SO, 2);
  CHECK(u == std::set<Weight>{make_dominant(so2, Tuple{1, 1}), make_dominant(so2, Tuple{1, -1})});

  // support of iterated restriction does not depend on grouping
  Weight w = W(Series::SP, 3, {2, 1, 0});
  auto direct = branch_to(w, 1);
  std::set<Weight> two_step;
  for (const Weight& mid : branch_to(w, 2))
    for (const Weight& c : branch_to(mid, 1)) two_step.insert(c);
  CHECK(direct == two_step);
}

TEST_CASE("Dynkin index of decompositions") {
  AlgebraType sp2(Series::SP, 2);
  Weight nat = natural_weight(sp2);
  Weight triv = trivial_weight(sp2);
  CHECK(rep_dynkin_index(sp2, {{nat, 1}}) == 1);
  CHECK(rep_dynkin_index(sp2, {{nat, 1}, {triv, 1}}) == 1);
  CHECK(rep_dynkin_index(sp2, {{nat, 2}}) == 2);

  // additive on direct sums
  AlgebraType sl2(Series::SL, 2);
  Weight adj = W(Series::SL, 2, {2, 1, 0});
  Rat i_adj = rep_dynkin_index(sl2, {{adj, 1}});
  Rat i_nat = rep_dynkin_index(sl2, {{natural_weight(sl2), 1}});
  CHECK(rep_dynkin_index(sl2, {{adj, 1}, {natural_weight(sl2), 1}}) == i_adj + i_nat);
  CHECK(i_adj == 6);  // adjoint of sl_3 has index 2h = 6

  // the dual natural also has index 1 (shift-invariant form)
  Weight dual_nat = W(Series::SL, 2, {1, 1, 0});
  CHECK(rep_dynkin_index(sl2, {{dual_nat, 1}}) == 1);
}

TEST_CASE("embedding chains multiply") {
  AlgebraType sp2(Series::SP, 2);
  AlgebraType sp3(Series::SP, 3);
  Weight nat2 = natural_weight(sp2);
  Weight triv2 = trivial_weight(sp2);
  Weight nat3 = natural_weight(sp3);
  Weight triv3 = trivial_weight(sp3);

  // chain of natural-plus-trivial steps has index 1
  std::vector<EmbeddingStep> chain1 = {{sp3, {{nat3, 1}, {triv3, 2}}},
                                       {sp2, {{nat2, 1}, {triv2, 2}}}};
  CHECK(embedding_dynkin_index(chain1) == 1);

  // one doubling step then a natural-plus-trivial step
  std::vector<EmbeddingStep> chain2 = {{sp3, {{nat3, 2}}}, {sp2, {{nat2, 1}, {triv2, 2}}}};
  CHECK(embedding_dynkin_index(chain2) == 2);

  CHECK(embedding_dynkin_index({}) == 1);

  std::vector<EmbeddingStep> bad = {{sp2, {{nat2, 1}}},
                                    {AlgebraType(Series::SL, 2), {{natural_weight(AlgebraType(Series::SL, 2)), 1}}}};
  CHECK_THROWS(embedding_dynkin_index(bad));

  // multiplicativity against the direct two-step composition: branch each
  // constituent of the doubled natural one rank down and compare indices
  std::map<Weight, long> composed;
  for (auto& [w, m] : std::map<Weight, long>{{nat3, 2}}) {
    auto br = branch(w);
    for (auto& [cw, cm] : br.terms) composed[cw] += m * cm;
  }
  std::vector<std::pair<Weight, long>> dec(composed.begin(), composed.end());
  CHECK(rep_dynkin_index(sp2, dec) == 2);
}
