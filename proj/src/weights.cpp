#include "weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace clsvar {

std::string series_name(Series s) {
  switch (s) {
    case Series::SL: return "sl";
    case Series::SO: return "so";
    case Series::SP: return "sp";
  }
  return "?";
}

Series series_from_name(const std::string& name) {
  if (name == "sl") return Series::SL;
  if (name == "so") return Series::SO;
  if (name == "sp") return Series::SP;
  throw std::invalid_argument("unknown family: " + name);
}

AlgebraType::AlgebraType(Series s, int n) : series(s), rank(n) {
  int min_rank = (s == Series::SO) ? 2 : 1;
  if (n < min_rank)
    throw std::invalid_argument(series_name(s) + " rank must be >= " +
                                std::to_string(min_rank));
}

Tuple rho_doubled(const AlgebraType& a) {
  Tuple r(a.coord_count());
  switch (a.series) {
    case Series::SL:  // (n, n-1, ..., 0)
      for (int i = 0; i <= a.rank; ++i) r[i] = 2 * (a.rank - i);
      break;
    case Series::SP:  // (n, ..., 1)
      for (int i = 0; i < a.rank; ++i) r[i] = 2 * (a.rank - i);
      break;
    case Series::SO:  // (n-1, ..., 0)
      for (int i = 0; i < a.rank; ++i) r[i] = 2 * (a.rank - 1 - i);
      break;
  }
  return r;
}

Tuple dominant_tuple(const AlgebraType& a, Tuple t) {
  if ((int)t.size() != a.coord_count())
    throw std::invalid_argument("tuple length does not match algebra");
  switch (a.series) {
    case Series::SL: {
      for (int c : t)
        if (c % 2 != 0) throw std::invalid_argument("SL weights must be integral");
      std::sort(t.begin(), t.end(), std::greater<>());
      int m = t.back();
      for (int& c : t) c -= m;
      return t;
    }
    case Series::SP: {
      for (int& c : t) {
        if (c % 2 != 0) throw std::invalid_argument("SP weights must be integral");
        c = std::abs(c);
      }
      std::sort(t.begin(), t.end(), std::greater<>());
      return t;
    }
    case Series::SO: {
      int parity = ((t[0] % 2) + 2) % 2;
      int negatives = 0;
      for (int& c : t) {
        if ((((c % 2) + 2) % 2) != parity)
          throw std::invalid_argument("SO weight coordinates must share parity");
        if (c < 0) {
          ++negatives;
          c = -c;
        }
      }
      std::sort(t.begin(), t.end(), std::greater<>());
      if (negatives % 2 != 0) t.back() = -t.back();
      return t;
    }
  }
  return t;
}

Weight::Weight(AlgebraType a, Tuple doubled_coords)
    : algebra_(a), coords_(std::move(doubled_coords)) {
  if ((int)coords_.size() != algebra_.coord_count())
    throw std::invalid_argument("weight length does not match algebra");
  Tuple canon = dominant_tuple(algebra_, coords_);
  if (canon != coords_) throw std::invalid_argument("weight is not in canonical dominant form");
}

Weight make_dominant(const AlgebraType& a, const Tuple& doubled) {
  return Weight(a, dominant_tuple(a, doubled));
}

Weight Weight::from_ints(AlgebraType a, const std::vector<int>& coords) {
  Tuple t(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) t[i] = 2 * coords[i];
  return make_dominant(a, t);
}

Weight trivial_weight(const AlgebraType& a) {
  return Weight(a, Tuple(a.coord_count(), 0));
}

Weight natural_weight(const AlgebraType& a) {
  Tuple t(a.coord_count(), 0);
  t[0] = 2;
  return Weight(a, t);
}

bool Weight::is_trivial() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

bool Weight::half_odd() const {
  return algebra_.series == Series::SO && coords_[0] % 2 != 0;
}

long Weight::size_doubled() const {
  switch (algebra_.series) {
    case Series::SP: {
      long s = 0;
      for (int c : coords_) s += c;
      return s;
    }
    case Series::SO: {
      long s = 0;
      for (int c : coords_) s += std::abs(c);
      if (half_odd()) s -= algebra_.rank;  // doubled spin core: n * (1/2) * 2
      return s;
    }
    case Series::SL: {
      // min over shifts; median of the coordinates attains it
      Tuple sorted = coords_;
      std::sort(sorted.begin(), sorted.end());
      int med = sorted[sorted.size() / 2];
      long s = 0;
      for (int c : coords_) s += std::abs(c - med);
      return s;
    }
  }
  return 0;
}

static void orbit_permutations(const Tuple& t, std::set<Tuple>& out) {
  Tuple s = t;
  std::sort(s.begin(), s.end());
  do {
    out.insert(s);
  } while (std::next_permutation(s.begin(), s.end()));
}

std::set<Tuple> weyl_orbit(const Weight& w) {
  std::set<Tuple> out;
  const Tuple& t = w.doubled();
  switch (w.algebra().series) {
    case Series::SL:
      orbit_permutations(t, out);
      break;
    case Series::SP: {
      int n = (int)t.size();
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Tuple u = t;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) u[i] = -u[i];
        orbit_permutations(u, out);
      }
      break;
    }
    case Series::SO: {
      int n = (int)t.size();
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        Tuple u = t;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) u[i] = -u[i];
        orbit_permutations(u, out);
      }
      break;
    }
  }
  return out;
}

std::vector<Tuple> weyl_images(const AlgebraType& a, const Tuple& t) {
  std::set<Tuple> out;
  int n = (int)t.size();
  switch (a.series) {
    case Series::SL:
      orbit_permutations(t, out);
      break;
    case Series::SP:
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Tuple u = t;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) u[i] = -u[i];
        orbit_permutations(u, out);
      }
      break;
    case Series::SO:
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        Tuple u = t;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) u[i] = -u[i];
        orbit_permutations(u, out);
      }
      break;
  }
  return {out.begin(), out.end()};
}

CentralCharacter central_character(const Weight& w) {
  Tuple t = w.doubled();
  Tuple r = rho_doubled(w.algebra());
  for (size_t i = 0; i < t.size(); ++i) t[i] += r[i];
  return CentralCharacter{w.algebra(), dominant_tuple(w.algebra(), t)};
}

std::string CentralCharacter::to_string() const { return tuple_to_string(rep_doubled); }

std::string tuple_to_string(const Tuple& doubled) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < doubled.size(); ++i) {
    if (i) os << ',';
    if (doubled[i] % 2 == 0)
      os << doubled[i] / 2;
    else
      os << doubled[i] << "/2";
  }
  os << ']';
  return os.str();
}

std::string Weight::to_string() const { return tuple_to_string(coords_); }

Weight Weight::parse(AlgebraType a, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace((unsigned char)c)) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("weight syntax: [a1,a2,...]");
  s = s.substr(1, s.size() - 2);
  Tuple t;
  if (!s.empty()) {
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
      size_t slash = item.find('/');
      if (slash == std::string::npos) {
        t.push_back(2 * std::stoi(item));
      } else {
        int num = std::stoi(item.substr(0, slash));
        int den = std::stoi(item.substr(slash + 1));
        if (den != 2) throw std::invalid_argument("only halves p/2 are supported");
        t.push_back(num);
      }
    }
  }
  return make_dominant(a, t);
}

}  // namespace clsvar
