#include "cls.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace clsvar {

bool IrreducibleCLS::is_trivial() const {
  return !top && v == 0 && w == 0 && m == 0 && !spin && x.empty() && z.empty();
}

std::string IrreducibleCLS::to_string() const {
  if (top) return "Einf";
  std::ostringstream os;
  bool first = true;
  auto piece = [&](const std::string& s, int e) {
    if (e == 0) return;
    if (!first) os << '*';
    first = false;
    os << s;
    if (e > 1) os << '^' << e;
  };
  if (v > 0) piece("Linf(" + std::to_string(v) + ")", 1);
  for (auto& [i, e] : x) piece("L(" + std::to_string(i) + ")", e);
  piece("E", m);
  for (auto& [j, e] : z) piece("R(" + std::to_string(j) + ")", e);
  if (w > 0) piece("Rinf(" + std::to_string(w) + ")", 1);
  if (spin) piece("Spin", 1);
  if (first) os << '1';
  return os.str();
}

IrreducibleCLS validate_normal_form(Series family, int v, int w, std::map<int, int> x,
                                    std::map<int, int> z, int m, bool spin, bool top) {
  IrreducibleCLS q;
  q.family = family;
  if (top) {
    if (v || w || m || spin || !x.empty() || !z.empty())
      throw std::invalid_argument("the top c.l.s. carries no other data");
    q.top = true;
    return q;
  }
  if (v < 0 || w < 0 || m < 0) throw std::invalid_argument("negative exponent data");
  if (family != Series::SL && (w != 0 || !z.empty()))
    throw std::invalid_argument("R-symbols exist only for sl");
  if (family != Series::SO && spin)
    throw std::invalid_argument("the spin c.l.s. exists only for so");
  for (auto it = x.begin(); it != x.end();) {
    if (it->second < 0) throw std::invalid_argument("negative exponent data");
    if (it->second == 0) {
      it = x.erase(it);
      continue;
    }
    if (it->first <= v)
      throw std::invalid_argument("L-index " + std::to_string(it->first) +
                                  " must exceed the L-infinity depth " + std::to_string(v));
    ++it;
  }
  for (auto it = z.begin(); it != z.end();) {
    if (it->second < 0) throw std::invalid_argument("negative exponent data");
    if (it->second == 0) {
      it = z.erase(it);
      continue;
    }
    if (it->first <= w)
      throw std::invalid_argument("R-index " + std::to_string(it->first) +
                                  " must exceed the R-infinity depth " + std::to_string(w));
    ++it;
  }
  q.v = v;
  q.w = w;
  q.x = std::move(x);
  q.z = std::move(z);
  q.m = m;
  q.spin = spin;
  return q;
}

IrreducibleCLS trivial_cls(Series f) { return validate_normal_form(f, 0, 0, {}, {}, 0, false); }
IrreducibleCLS basic_E(Series f) { return validate_normal_form(f, 0, 0, {}, {}, 1, false); }
IrreducibleCLS basic_L(Series f, int p) {
  if (p < 1) throw std::invalid_argument("L index must be positive");
  return validate_normal_form(f, 0, 0, {{p, 1}}, {}, 0, false);
}
IrreducibleCLS basic_Linf(Series f, int v) {
  if (v < 1) throw std::invalid_argument("L-infinity depth must be positive");
  return validate_normal_form(f, v, 0, {}, {}, 0, false);
}
IrreducibleCLS basic_R(int q) {
  if (q < 1) throw std::invalid_argument("R index must be positive");
  return validate_normal_form(Series::SL, 0, 0, {}, {{q, 1}}, 0, false);
}
IrreducibleCLS basic_Rinf(int w) {
  if (w < 1) throw std::invalid_argument("R-infinity depth must be positive");
  return validate_normal_form(Series::SL, 0, w, {}, {}, 0, false);
}
IrreducibleCLS basic_spin() { return validate_normal_form(Series::SO, 0, 0, {}, {}, 0, true); }
IrreducibleCLS top_cls(Series f) { return validate_normal_form(f, 0, 0, {}, {}, 0, false, true); }

static LRSequence make_sequence(int inf_prefix, const std::map<int, int>& exps, int m) {
  LRSequence s;
  s.inf_prefix = inf_prefix;
  s.limit = m;
  int top_index = exps.empty() ? inf_prefix : exps.rbegin()->first;
  if (top_index > inf_prefix) {
    s.tail.resize(top_index - inf_prefix);
    long acc = m;
    for (int i = top_index; i > inf_prefix; --i) {
      auto it = exps.find(i);
      if (it != exps.end()) acc += it->second;
      s.tail[i - inf_prefix - 1] = acc;
    }
  }
  return s;
}

LRSequences lr_sequences(const IrreducibleCLS& q) {
  if (q.top) throw std::invalid_argument("the top c.l.s. has no l/r sequences");
  LRSequences out;
  out.l = make_sequence(q.v, q.x, q.m);
  if (q.family == Series::SL) out.r = make_sequence(q.w, q.z, q.m);
  return out;
}

static bool seq_geq(const LRSequence& a, const LRSequence& b, long shift, int horizon) {
  for (int i = 1; i <= horizon; ++i) {
    long bi = b.at(i);
    long ai = a.at(i);
    if (bi == kInfinity) {
      if (ai != kInfinity) return false;
      continue;
    }
    if (ai == kInfinity) continue;
    if (ai < bi + shift) return false;
  }
  return true;
}

bool contains(const IrreducibleCLS& q, const IrreducibleCLS& qp) {
  if (q.family != qp.family) throw std::invalid_argument("family mismatch");
  if (q.top) return true;
  if (qp.top) return false;
  if (q.family == Series::SO && q.spin != qp.spin) return false;
  LRSequences a = lr_sequences(q);
  LRSequences b = lr_sequences(qp);
  int horizon = std::max({a.l.horizon(), b.l.horizon(), a.r.horizon(), b.r.horizon()});
  if (q.family != Series::SL) return seq_geq(a.l, b.l, 0, horizon);
  long diff = q.m - qp.m;
  if (diff < 0) return false;
  for (long sa = 0; sa <= diff; ++sa) {
    long sb = diff - sa;
    if (seq_geq(a.l, b.l, sa, horizon) && seq_geq(a.r, b.r, sb, horizon)) return true;
  }
  return false;
}

std::string CLS::to_string() const {
  if (components.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) os << " + ";
    os << components[i].to_string();
  }
  return os.str();
}

CLS reduce_components(Series family, std::vector<IrreducibleCLS> parts) {
  std::set<IrreducibleCLS> uniq;
  for (auto& p : parts) {
    if (p.family != family) throw std::invalid_argument("family mismatch");
    uniq.insert(p);
  }
  CLS out{family, {}};
  for (const auto& p : uniq) {
    bool dominated = false;
    for (const auto& other : uniq)
      if (!(other == p) && contains(other, p)) {
        dominated = true;
        break;
      }
    if (!dominated) out.components.push_back(p);
  }
  return out;
}

bool cls_contains(const CLS& a, const CLS& b) {
  if (a.family != b.family) throw std::invalid_argument("family mismatch");
  for (const auto& comp : b.components) {
    bool covered = false;
    for (const auto& big : a.components)
      if (contains(big, comp)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

// ---- level sets ----

namespace {

Tuple ones_tuple(int len, int count, int last_sign = 1) {
  Tuple t(len, 0);
  for (int i = 0; i < count; ++i) t[i] = 2;
  if (last_sign < 0 && count == len) t[len - 1] = -2;
  return t;
}

std::set<Tuple> cartan_mul(const std::set<Tuple>& a, const std::set<Tuple>& b) {
  std::set<Tuple> out;
  for (const Tuple& s : a)
    for (const Tuple& t : b) {
      Tuple u = s;
      for (size_t i = 0; i < u.size(); ++i) u[i] += t[i];
      out.insert(u);
    }
  return out;
}

// constituents of the exterior powers Lambda^j V for j <= p (p < 0: all j)
std::set<Tuple> l_tuple_set(Series family, int n, int p) {
  std::set<Tuple> out;
  switch (family) {
    case Series::SL: {
      int len = n + 1;
      int jmax = (p < 0) ? len : std::min(p, len);
      for (int j = 0; j <= jmax; ++j) {
        Tuple t = ones_tuple(len, j);
        if (j == len) t = Tuple(len, 0);  // Lambda^{n+1} is trivial
        out.insert(t);
      }
      break;
    }
    case Series::SP: {
      int kmax = (p < 0) ? n : std::min(p, n);
      for (int k = 0; k <= kmax; ++k) out.insert(ones_tuple(n, k));
      break;
    }
    case Series::SO: {
      int kmax = (p < 0) ? n : std::min(p, n - 1);
      for (int k = 0; k <= kmax; ++k) out.insert(ones_tuple(n, k));
      if (p < 0 || p >= n) {
        out.insert(ones_tuple(n, n));
        out.insert(ones_tuple(n, n, -1));
      }
      break;
    }
  }
  return out;
}

// SL only: constituents of the dual exterior powers Lambda^j V* for j <= q
std::set<Tuple> r_tuple_set(int n, int q) {
  std::set<Tuple> out;
  int len = n + 1;
  int jmax = std::min(q, len);
  for (int j = 0; j <= jmax; ++j) {
    Tuple t = ones_tuple(len, len - j);
    if (j == 0 || j == len) t = Tuple(len, 0);
    out.insert(t);
  }
  return out;
}

std::set<Tuple> spin_tuple_set(int n) {
  Tuple plus(n, 1), minus(n, 1);
  minus[n - 1] = -1;
  return {plus, minus};
}

int max_key(const std::map<int, int>& m) { return m.empty() ? 0 : m.rbegin()->first; }

// explicit level set of a finite-type monomial at rank k, as doubled tuples
std::set<Tuple> monomial_tuple_set(const IrreducibleCLS& q, int k) {
  std::set<Tuple> acc{Tuple(q.family == Series::SL ? k + 1 : k, 0)};
  for (auto& [i, e] : q.x) {
    std::set<Tuple> s = l_tuple_set(q.family, k, i);
    for (int t = 0; t < e; ++t) acc = cartan_mul(acc, s);
  }
  if (q.m > 0) {
    std::set<Tuple> s = l_tuple_set(q.family, k, -1);  // E = the full exterior algebra
    for (int t = 0; t < q.m; ++t) acc = cartan_mul(acc, s);
  }
  for (auto& [j, e] : q.z) {
    std::set<Tuple> s = r_tuple_set(k, j);
    for (int t = 0; t < e; ++t) acc = cartan_mul(acc, s);
  }
  if (q.spin) acc = cartan_mul(acc, spin_tuple_set(k));
  return acc;
}

IrreducibleCLS finite_part(const IrreducibleCLS& q) {
  std::map<int, int> x2, z2;
  for (auto& [i, e] : q.x) x2[i - q.v] = e;
  for (auto& [j, e] : q.z) z2[j - q.w] = e;
  return validate_normal_form(q.family, 0, 0, std::move(x2), std::move(z2), q.m, q.spin);
}

}  // namespace

LevelSetDescriptor level_set(const IrreducibleCLS& q, int n) {
  AlgebraType a(q.family, n);
  LevelSetDescriptor d{a};
  if (q.top) {
    d.all_modules = true;
    return d;
  }
  if (n < max_key(q.x) || n < max_key(q.z))
    throw std::invalid_argument("level is below the largest monomial index");
  d.v = q.v;
  d.w = q.w;
  d.spin_tail = q.spin;
  int tail_rank = n - q.v - q.w;
  int min_tail = (q.family == Series::SO) ? 2 : 1;
  if (q.v + q.w > 0 && tail_rank < min_tail)
    throw std::invalid_argument("level too small for the infinite part");
  d.tail_set = monomial_tuple_set(finite_part(q), tail_rank);
  return d;
}

std::set<Weight> LevelSetDescriptor::explicit_set() const {
  if (all_modules || prefix_form())
    throw std::invalid_argument("level set is infinite; enumerate with a window");
  std::set<Weight> out;
  for (const Tuple& t : tail_set) out.insert(Weight(algebra, t));
  return out;
}

bool LevelSetDescriptor::member(const Weight& wgt) const {
  if (wgt.algebra() != algebra) throw std::invalid_argument("weight is at the wrong level");
  if (all_modules) return true;
  const Tuple& t = wgt.doubled();
  if (algebra.series == Series::SO && wgt.half_odd() != spin_tail) return false;
  if (!prefix_form()) return tail_set.count(t) > 0;
  Tuple middle(t.begin() + v, t.end() - w);
  if (algebra.series == Series::SL) {
    int mn = *std::min_element(middle.begin(), middle.end());
    for (int& c : middle) c -= mn;
  }
  return tail_set.count(middle) > 0;
}

std::set<Weight> enumerate_dominant_weights(const AlgebraType& a, long window_doubled,
                                            int parity) {
  if (parity != 0 && a.series != Series::SO)
    throw std::invalid_argument("half-odd weights exist only for so");
  std::set<Weight> out;
  int len = a.coord_count();
  long hi = 0;
  switch (a.series) {
    case Series::SL: hi = 2 * window_doubled; break;
    case Series::SP: hi = window_doubled; break;
    case Series::SO: hi = window_doubled + (parity ? a.rank : 0); break;
  }
  if (parity)
    hi |= 1;  // odd doubled values
  else
    hi -= hi % 2;
  Tuple cur(len);
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == len) {
      if (a.series == Series::SL && cur[len - 1] != 0) return;  // canonical min-0 form
      Weight w(a, cur);
      if (w.size_doubled() <= window_doubled) out.insert(w);
      return;
    }
    long upper = (idx == 0) ? hi : cur[idx - 1];
    long lo = parity ? 1 : 0;
    if (a.series == Series::SO && idx == len - 1) lo = -std::abs(upper);
    for (long c = upper; c >= lo; c -= 2) {
      cur[idx] = (int)c;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::set<Weight> enumerate_level_set(const IrreducibleCLS& q, int n, long window_doubled) {
  LevelSetDescriptor d = level_set(q, n);
  if (!d.all_modules && !d.prefix_form()) {
    std::set<Weight> out;
    for (const Tuple& t : d.tail_set) {
      Weight w(d.algebra, t);
      if (window_doubled < 0 || w.size_doubled() <= window_doubled) out.insert(w);
    }
    return out;
  }
  if (window_doubled < 0)
    throw std::invalid_argument("infinite-type level sets require a truncation window");
  std::set<Weight> out;
  std::vector<int> parities;
  if (d.algebra.series == Series::SO)
    parities = d.all_modules ? std::vector<int>{0, 1} : std::vector<int>{d.spin_tail ? 1 : 0};
  else
    parities = {0};
  for (int p : parities)
    for (const Weight& w : enumerate_dominant_weights(d.algebra, window_doubled, p))
      if (d.member(w)) out.insert(w);
  return out;
}

std::set<Weight> enumerate_level_set(const CLS& q, int n, long window_doubled) {
  std::set<Weight> out;
  for (const auto& comp : q.components) {
    auto s = enumerate_level_set(comp, n, window_doubled);
    out.insert(s.begin(), s.end());
  }
  return out;
}

IrreducibleCLS product(const IrreducibleCLS& q1, const IrreducibleCLS& q2) {
  if (q1.family != q2.family) throw std::invalid_argument("family mismatch");
  if (!q1.finite_type() || !q2.finite_type())
    throw std::invalid_argument(
        "products are defined for finite type only; use the levelwise product");
  if (q1.spin && q2.spin) throw std::invalid_argument("Spin*Spin has no normal form");
  std::map<int, int> x = q1.x, z = q1.z;
  for (auto& [i, e] : q2.x) x[i] += e;
  for (auto& [j, e] : q2.z) z[j] += e;
  return validate_normal_form(q1.family, 0, 0, std::move(x), std::move(z), q1.m + q2.m,
                              q1.spin || q2.spin);
}

std::set<Weight> product_levelwise(const IrreducibleCLS& q1, const IrreducibleCLS& q2, int n,
                                   long window_doubled) {
  if (q1.family != q2.family) throw std::invalid_argument("family mismatch");
  auto s1 = enumerate_level_set(q1, n, window_doubled);
  auto s2 = enumerate_level_set(q2, n, window_doubled);
  std::set<Weight> out;
  for (const Weight& a : s1)
    for (const Weight& b : s2) {
      Tuple u = a.doubled();
      const Tuple& t = b.doubled();
      for (size_t i = 0; i < u.size(); ++i) u[i] += t[i];
      out.insert(Weight(a.algebra(), u));
    }
  return out;
}

std::set<Weight> tensor_levelwise(const IrreducibleCLS& q1, const IrreducibleCLS& q2, int n,
                                  long window_doubled, long dim_bound) {
  if (q1.family != q2.family) throw std::invalid_argument("family mismatch");
  auto s1 = enumerate_level_set(q1, n, window_doubled);
  auto s2 = enumerate_level_set(q2, n, window_doubled);
  std::set<Weight> out;
  for (const Weight& a : s1)
    for (const Weight& b : s2)
      for (auto& [w, m] : tensor_decompose(a, b, dim_bound)) out.insert(w);
  return out;
}

namespace {
std::set<Weight> branch_support_cached(const Weight& w, long dim_bound) {
  static std::map<std::pair<Weight, long>, std::set<Weight>> cache;
  static std::mutex mu;
  std::pair<Weight, long> key{w, dim_bound};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  BranchingResult br = branch(w, dim_bound);
  std::set<Weight> sup;
  for (auto& [cw, m] : br.terms) sup.insert(cw);
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = sup;
  return sup;
}
}  // namespace

CoherenceReport coherence_check(const IrreducibleCLS& q, int n, int m, long window_doubled,
                                long dim_bound) {
  if (m >= n || m < 1) throw std::invalid_argument("need 1 <= m < n");
  bool finite = q.finite_type() && !q.top;
  long wide = finite ? -1 : window_doubled + 2 * (n - m);
  std::set<Weight> image = enumerate_level_set(q, n, wide);
  for (int r = n; r > m; --r) {
    std::set<Weight> next;
    for (const Weight& w : image) {
      auto sup = branch_support_cached(w, dim_bound);
      next.insert(sup.begin(), sup.end());
    }
    image = std::move(next);
  }
  std::set<Weight> expected = enumerate_level_set(q, m, finite ? -1 : window_doubled);
  CoherenceReport rep;
  rep.n = n;
  rep.m = m;
  for (const Weight& w : expected)
    if (!image.count(w)) rep.missing.push_back(w);
  for (const Weight& w : image) {
    if (!finite && w.size_doubled() > window_doubled) continue;
    if (!expected.count(w)) rep.extra.push_back(w);
  }
  rep.ok = rep.missing.empty() && rep.extra.empty();
  return rep;
}

std::vector<IrreducibleCLS> enumerate_irreducibles(Series family, const EnumerationBounds& b) {
  std::vector<IrreducibleCLS> out;
  bool sl = family == Series::SL;
  bool so = family == Series::SO;

  // all exponent maps supported on (lo, idx_max] with entries <= exp_max
  auto exponent_maps = [&](int lo) {
    std::vector<std::map<int, int>> maps{{}};
    for (int idx = lo + 1; idx <= b.idx_max; ++idx) {
      std::vector<std::map<int, int>> next;
      for (const auto& base : maps)
        for (int e = 0; e <= b.exp_max; ++e) {
          auto mm = base;
          if (e > 0) mm[idx] = e;
          next.push_back(std::move(mm));
        }
      maps = std::move(next);
    }
    return maps;
  };

  for (int v = 0; v <= b.v_max; ++v)
    for (const auto& x : exponent_maps(v))
      for (int w = 0; w <= (sl ? b.w_max : 0); ++w)
        for (const auto& z : sl ? exponent_maps(w) : std::vector<std::map<int, int>>{{}})
          for (int m = 0; m <= b.m_max; ++m)
            for (int spin = 0; spin <= (so && b.allow_spin ? 1 : 0); ++spin)
              out.push_back(validate_normal_form(family, v, w, x, z, m, spin != 0));
  return out;
}

}  // namespace clsvar
