#include "oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace clsvar {

long FormalCharacter::total_mass() const {
  long s = 0;
  for (auto& [t, m] : terms) s += m;
  return s;
}

std::vector<Tuple> positive_roots_doubled(const AlgebraType& a) {
  std::vector<Tuple> roots;
  int n = a.coord_count();
  auto root = [&](int i, int j, int ci, int cj) {
    Tuple r(n, 0);
    r[i] = ci;
    r[j] = cj;
    return r;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      roots.push_back(root(i, j, 2, -2));
      if (a.series != Series::SL) roots.push_back(root(i, j, 2, 2));
    }
  if (a.series == Series::SP)
    for (int i = 0; i < n; ++i) {
      Tuple r(n, 0);
      r[i] = 4;
      roots.push_back(r);
    }
  return roots;
}

bool raw_dominant(const AlgebraType& a, const Tuple& t) {
  int n = (int)t.size();
  switch (a.series) {
    case Series::SL:
      for (int i = 0; i + 1 < n; ++i)
        if (t[i] < t[i + 1]) return false;
      return true;
    case Series::SP:
      for (int i = 0; i + 1 < n; ++i)
        if (t[i] < t[i + 1]) return false;
      return t[n - 1] >= 0;
    case Series::SO:
      for (int i = 0; i + 2 < n; ++i)
        if (t[i] < t[i + 1]) return false;
      return t[n - 2] >= std::abs(t[n - 1]);
  }
  return false;
}

Tuple raw_dominant_rep(const AlgebraType& a, Tuple t) {
  switch (a.series) {
    case Series::SL:
      std::sort(t.begin(), t.end(), std::greater<>());
      return t;
    case Series::SP:
      for (int& c : t) c = std::abs(c);
      std::sort(t.begin(), t.end(), std::greater<>());
      return t;
    case Series::SO: {
      int neg = 0;
      for (int& c : t)
        if (c < 0) {
          ++neg;
          c = -c;
        }
      std::sort(t.begin(), t.end(), std::greater<>());
      if (neg % 2 != 0) t.back() = -t.back();
      return t;
    }
  }
  return t;
}

static long ip(const Tuple& x, const Tuple& y) {
  long s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += (long)x[i] * y[i];
  return s;
}

static Tuple add(Tuple x, const Tuple& y) {
  for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

Int dim(const Weight& w) {
  const AlgebraType& a = w.algebra();
  Tuple lr = add(w.doubled(), rho_doubled(a));
  Tuple r = rho_doubled(a);
  Int num = 1, den = 1;
  for (const Tuple& al : positive_roots_doubled(a)) {
    num *= ip(lr, al);
    den *= ip(r, al);
  }
  Int q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  assert(rem == 0);
  return q;
}

// membership of d = lambda - mu in the nonnegative root lattice cone
static bool in_positive_root_cone(const AlgebraType& a, const Tuple& d) {
  int n = (int)d.size();
  long s = 0;
  switch (a.series) {
    case Series::SL:
      for (int i = 0; i < n; ++i) {
        s += d[i];
        if (i + 1 < n && s < 0) return false;
      }
      return s == 0;
    case Series::SP:
      for (int i = 0; i < n; ++i) {
        s += d[i];
        if (i + 1 < n && s < 0) return false;
      }
      // total is twice the last coroot coefficient (doubled coords: 4*c_n)
      return s >= 0 && s % 4 == 0;
    case Series::SO: {
      std::vector<long> partial(n);
      for (int i = 0; i < n; ++i) {
        s += d[i];
        partial[i] = s;
        if (i + 2 < n && s < 0) return false;
      }
      if (partial[n - 1] < 0 || partial[n - 1] % 4 != 0) return false;
      return partial[n - 2] >= partial[n - 1] / 2;
    }
  }
  return false;
}

// all raw dominant tuples mu with lambda - mu in the positive root cone
static std::vector<Tuple> dominant_weights_below(const AlgebraType& a, const Tuple& lambda) {
  std::vector<Tuple> out;
  const int n = (int)lambda.size();
  std::vector<long> lam_partial(n);
  {
    long s = 0;
    for (int i = 0; i < n; ++i) {
      s += lambda[i];
      lam_partial[i] = s;
    }
  }
  Tuple cur(n);
  auto rec = [&](auto&& self, int idx, long mu_sum) -> void {
    if (idx == n) {
      if (!raw_dominant(a, cur)) return;
      Tuple d(n);
      for (int i = 0; i < n; ++i) d[i] = lambda[i] - cur[i];
      if (in_positive_root_cone(a, d)) out.push_back(cur);
      return;
    }
    int upper = (idx == 0) ? lambda[0] : cur[idx - 1];
    int lo = 0;
    if (a.series == Series::SO && idx == n - 1) lo = -std::abs(upper);
    for (int c = upper; c >= lo; c -= 2) {
      // partial sums of lambda - mu must stay nonnegative where they are
      // root-cone coefficients (all idx < n-1; also the SO tail is checked
      // at the leaf)
      if (idx < n - 1 && lam_partial[idx] - (mu_sum + c) < 0) continue;
      cur[idx] = c;
      self(self, idx + 1, mu_sum + c);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::map<Tuple, long> dominant_character(const Weight& w, long dim_bound) {
  const AlgebraType& a = w.algebra();
  Int d = dim(w);
  if (d > dim_bound)
    throw BoundExceeded("dimension " + d.get_str() + " exceeds bound " +
                        std::to_string(dim_bound));
  Tuple lambda = w.doubled();
  Tuple rho = rho_doubled(a);
  std::vector<Tuple> doms = dominant_weights_below(a, lambda);

  // order by decreasing height functional so the recursion only looks upward
  Tuple strict = rho;
  for (int& c : strict) c = 2 * c + 1;
  std::sort(doms.begin(), doms.end(), [&](const Tuple& x, const Tuple& y) {
    long hx = ip(x, strict), hy = ip(y, strict);
    if (hx != hy) return hx > hy;
    return x > y;
  });

  std::vector<Tuple> roots = positive_roots_doubled(a);
  std::map<Tuple, long> mult;
  Tuple lr = add(lambda, rho);
  long norm_top = ip(lr, lr);

  std::map<Tuple, long> by_rep;  // dominant rep -> multiplicity
  for (const Tuple& mu : doms) {
    if (mu == lambda) {
      mult[mu] = 1;
      by_rep[mu] = 1;
      continue;
    }
    long num = 0;
    for (const Tuple& al : roots) {
      Tuple nu = add(mu, al);
      while (true) {
        Tuple rep = raw_dominant_rep(a, nu);
        auto it = by_rep.find(rep);
        if (it == by_rep.end()) break;
        num += it->second * ip(nu, al);
        nu = add(nu, al);
      }
    }
    Tuple mr = add(mu, rho);
    long den = norm_top - ip(mr, mr);
    assert(den > 0);
    long m = 2 * num / den;
    assert(2 * num % den == 0);
    if (m > 0) {
      mult[mu] = m;
      by_rep[mu] = m;
    }
  }
  return mult;
}

FormalCharacter weight_multiplicities(const Weight& w, long dim_bound) {
  std::map<Tuple, long> dom = dominant_character(w, dim_bound);
  FormalCharacter ch{w.algebra(), {}};
  for (auto& [mu, m] : dom)
    for (const Tuple& t : weyl_images(w.algebra(), mu)) ch.terms[t] = m;
  assert(Int(ch.total_mass()) == dim(w));
  return ch;
}

std::map<Tuple, long> full_character_raw(const AlgebraType& a, const Tuple& hw,
                                         long dim_bound) {
  if (!raw_dominant(a, hw)) throw std::invalid_argument("highest weight is not dominant");
  int shift = 0;
  Tuple canon = hw;
  if (a.series == Series::SL) {
    shift = *std::min_element(hw.begin(), hw.end());
    for (int& c : canon) c -= shift;
  }
  FormalCharacter ch = weight_multiplicities(Weight(a, canon), dim_bound);
  if (shift == 0) return ch.terms;
  std::map<Tuple, long> out;
  for (auto& [t, m] : ch.terms) {
    Tuple u = t;
    for (int& c : u) c += shift;
    out[u] = m;
  }
  return out;
}

// canonicalize t to the strictly dominant chamber, returning the sign of the
// Weyl element, or 0 if t has a nontrivial stabilizer
static int strict_sign(const AlgebraType& a, Tuple& t) {
  int n = (int)t.size();
  int sign = 1;
  if (a.series != Series::SL) {
    int flips = 0;
    for (int& c : t) {
      if (a.series == Series::SP && c == 0) return 0;
      if (c < 0) {
        c = -c;
        ++flips;
      }
    }
    if (a.series == Series::SP && flips % 2 != 0) sign = -sign;
    if (a.series == Series::SO && flips % 2 != 0) {
      // compose with one extra flip on the smallest entry to stay in W(D_n)
      auto mn = std::min_element(t.begin(), t.end());
      *mn = -*mn;  // may be zero; handled below by abs comparison
    }
  }
  // repeated values (by absolute value for SO after sign fixing) kill the term
  std::vector<std::pair<int, int>> keyed(n);
  for (int i = 0; i < n; ++i)
    keyed[i] = {a.series == Series::SO ? std::abs(t[i]) : t[i], i};
  std::sort(keyed.begin(), keyed.end(),
            [](auto& x, auto& y) { return x.first > y.first; });
  for (int i = 0; i + 1 < n; ++i)
    if (keyed[i].first == keyed[i + 1].first) return 0;
  // permutation parity via inversion count of the index sequence
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (keyed[i].second > keyed[j].second) ++inv;
  if (inv % 2 != 0) sign = -sign;
  Tuple sorted(n);
  for (int i = 0; i < n; ++i) sorted[i] = t[keyed[i].second];
  // SO: negative entry (if any) must sit last; abs values are distinct
  t = sorted;
  if (a.series == Series::SO) {
    for (int i = 0; i + 1 < n; ++i)
      if (t[i] < 0) return 0;  // cannot happen with distinct abs values
  }
  return sign;
}

std::map<Weight, long> tensor_decompose(const Weight& w1, const Weight& w2,
                                        long dim_bound) {
  if (w1.algebra() != w2.algebra())
    throw std::invalid_argument("tensor factors must share an algebra");
  const AlgebraType& a = w1.algebra();
  Int d = dim(w1) * dim(w2);
  if (d > dim_bound)
    throw BoundExceeded("tensor dimension " + d.get_str() + " exceeds bound");
  // iterate over the character of the smaller factor
  const Weight& big = dim(w1) >= dim(w2) ? w1 : w2;
  const Weight& small = dim(w1) >= dim(w2) ? w2 : w1;
  FormalCharacter ch = weight_multiplicities(small, dim_bound);
  Tuple base = add(big.doubled(), rho_doubled(a));
  Tuple rho = rho_doubled(a);
  std::map<Weight, long> acc;
  for (auto& [nu, m] : ch.terms) {
    Tuple t = add(nu, base);
    int s = strict_sign(a, t);
    if (s == 0) continue;
    for (size_t i = 0; i < t.size(); ++i) t[i] -= rho[i];
    Weight res = make_dominant(a, t);
    acc[res] += s * m;
    if (acc[res] == 0) acc.erase(res);
  }
  for (auto& [wt, m] : acc)
    if (m <= 0) throw std::logic_error("negative multiplicity in Klimyk accumulation");
  return acc;
}

std::map<Weight, long> tensor_via_characters(const Weight& w1, const Weight& w2,
                                             long dim_bound) {
  if (w1.algebra() != w2.algebra())
    throw std::invalid_argument("tensor factors must share an algebra");
  const AlgebraType& a = w1.algebra();
  Int d = dim(w1) * dim(w2);
  if (d > dim_bound)
    throw BoundExceeded("tensor dimension " + d.get_str() + " exceeds bound");
  FormalCharacter c1 = weight_multiplicities(w1, dim_bound);
  FormalCharacter c2 = weight_multiplicities(w2, dim_bound);
  std::map<Tuple, long> prod;
  for (auto& [t1, m1] : c1.terms)
    for (auto& [t2, m2] : c2.terms) prod[add(t1, t2)] += m1 * m2;

  std::map<Weight, long> result;
  while (!prod.empty()) {
    // lexicographically largest dominant tuple with positive multiplicity
    auto best = prod.end();
    for (auto it = prod.begin(); it != prod.end(); ++it) {
      if (it->second == 0) continue;
      if (it->second < 0) throw std::logic_error("negative multiplicity while peeling");
      if (!raw_dominant(a, it->first)) continue;
      if (best == prod.end() || it->first > best->first) best = it;
    }
    if (best == prod.end()) {
      for (auto& [t, m] : prod)
        if (m != 0) throw std::logic_error("non-dominant residue while peeling");
      break;
    }
    Tuple hw = best->first;
    long mult = best->second;
    std::map<Tuple, long> ch = full_character_raw(a, hw, dim_bound);
    for (auto& [t, m] : ch) {
      prod[t] -= mult * m;
      if (prod[t] == 0) prod.erase(t);
    }
    int shift = 0;
    Tuple canon = hw;
    if (a.series == Series::SL) {
      shift = *std::min_element(hw.begin(), hw.end());
      for (int& c : canon) c -= shift;
    }
    result[Weight(a, canon)] += mult;
  }
  return result;
}

static Tuple min_normalize(Tuple t) {
  int m = *std::min_element(t.begin(), t.end());
  for (int& c : t) c -= m;
  return t;
}

BranchingResult branch(const Weight& w, long dim_bound) {
  const AlgebraType& a = w.algebra();
  int child_min = (a.series == Series::SO) ? 3 : 2;
  if (a.rank < child_min)
    throw std::invalid_argument("rank too small to branch within the series");
  AlgebraType child(a.series, a.rank - 1);

  FormalCharacter ch = weight_multiplicities(w, dim_bound);
  std::map<Tuple, long> restricted;
  for (auto& [t, m] : ch.terms) {
    Tuple u(t.begin(), t.end() - 1);
    if (a.series == Series::SL) u = min_normalize(u);
    restricted[u] += m;
  }

  BranchingResult out{a, child, {}};
  while (!restricted.empty()) {
    auto best = restricted.end();
    for (auto it = restricted.begin(); it != restricted.end(); ++it) {
      if (it->second == 0) continue;
      if (it->second < 0) throw std::logic_error("negative multiplicity while branching");
      if (!raw_dominant(child, it->first)) continue;
      if (a.series == Series::SL && it->first.back() != 0) continue;  // min-0 reps only
      if (best == restricted.end() || it->first > best->first) best = it;
    }
    if (best == restricted.end()) {
      for (auto& [t, m] : restricted)
        if (m != 0) throw std::logic_error("non-dominant residue while branching");
      break;
    }
    Tuple hw = best->first;
    long mult = best->second;
    std::map<Tuple, long> hw_char = full_character_raw(child, hw, dim_bound);
    for (auto& [t, m] : hw_char) {
      Tuple key = a.series == Series::SL ? min_normalize(t) : t;
      restricted[key] -= mult * m;
      if (restricted[key] == 0) restricted.erase(key);
    }
    out.terms[Weight(child, hw)] += mult;
  }
  long mass = 0;
  for (auto& [cw, m] : out.terms) mass += m * dim(cw).get_si();
  assert(Int(mass) == dim(w));
  return out;
}

std::set<Weight> branch_to(const Weight& w, int m, long dim_bound) {
  if (m >= w.algebra().rank) throw std::invalid_argument("target rank must be smaller");
  std::set<Weight> frontier{w};
  for (int r = w.algebra().rank; r > m; --r) {
    std::set<Weight> next;
    for (const Weight& f : frontier) {
      BranchingResult br = branch(f, dim_bound);
      for (auto& [cw, mult] : br.terms) next.insert(cw);
    }
    frontier = std::move(next);
  }
  return frontier;
}

// trace-form mass of a module: sum over the character of the invariant
// quadratic form of the weight.  For SL the form lives on the quotient by
// the shift line, so the coordinate sum is projected out.
static Rat qsum(const Weight& w) {
  FormalCharacter ch = weight_multiplicities(w);
  const AlgebraType& a = w.algebra();
  Rat total = 0;
  long n = a.coord_count();
  for (auto& [t, m] : ch.terms) {
    long sq = 0, sum = 0;
    for (int c : t) {
      sq += (long)c * c;
      sum += c;
    }
    Rat q(sq);
    if (a.series == Series::SL) q -= Rat(sum * sum, n);
    total += Rat(m) * q;
  }
  return total;  // doubled scale (4x), cancels in ratios
}

Rat rep_dynkin_index(const AlgebraType& a,
                     const std::vector<std::pair<Weight, long>>& decomposition) {
  Rat mass = 0;
  for (auto& [w, mult] : decomposition) {
    if (w.algebra() != a)
      throw std::invalid_argument("decomposition constituents must live in the given algebra");
    mass += Rat(mult) * qsum(w);
  }
  Rat norm = qsum(natural_weight(a));
  Rat r = mass / norm;
  r.canonicalize();
  return r;
}

Rat embedding_dynkin_index(const std::vector<EmbeddingStep>& chain) {
  Rat idx = 1;
  std::optional<Series> series;
  for (const EmbeddingStep& step : chain) {
    if (series && *series != step.subalgebra.series)
      throw std::invalid_argument("embedding chains must stay within one classical series");
    series = step.subalgebra.series;
    idx *= rep_dynkin_index(step.subalgebra, step.natural_decomposition);
  }
  idx.canonicalize();
  return idx;
}

}  // namespace clsvar
