#include "conway3/mzv.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>

namespace conway3 {

int weight(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

bool is_admissible(const Composition& c) {
  if (c.empty()) return true;
  if (c.front() < 2) return false;
  return std::all_of(c.begin(), c.end(), [](int l) { return l >= 1; });
}

std::string to_string(const Composition& c) {
  if (c.empty()) return "1";
  std::string s = "zeta(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + ")";
}

int depth(std::string_view w) { return static_cast<int>(std::count(w.begin(), w.end(), 'b')); }

ABWord word_of(const Composition& c) {
  ABWord w;
  for (int l : c) {
    w.append(static_cast<std::size_t>(l - 1), 'a');
    w += 'b';
  }
  return w;
}

Composition composition_of(std::string_view w) {
  Composition c;
  int run = 0;
  for (char ch : w) {
    if (ch == 'a') {
      ++run;
    } else if (ch == 'b') {
      c.push_back(run + 1);
      run = 0;
    } else {
      throw std::invalid_argument("not an a/b word");
    }
  }
  if (run != 0) throw std::invalid_argument("composition_of: word must end in b");
  return c;
}

bool is_convergent(std::string_view w) {
  return w.empty() || (w.front() == 'a' && w.back() == 'b');
}

namespace {

// Li_{s1..sk}(1/2) = sum over n1 > ... > nk >= 1 of 2^-n1 / prod n_i^{s_i}.
long double polylog_half(const Composition& s) {
  if (s.empty()) return 1.0L;
  constexpr int kTerms = 128;  // 2^-128 times a polylogarithmic factor
  const std::size_t k = s.size();
  // inner[n] = nested sum over the innermost indices with n_{i} <= n.
  std::vector<long double> inner(kTerms + 1, 1.0L);
  for (std::size_t i = k; i-- > 1;) {
    std::vector<long double> next(kTerms + 1, 0.0L);
    for (int n = 1; n <= kTerms; ++n)
      next[n] = next[n - 1] + inner[n - 1] / std::pow(static_cast<long double>(n), s[i]);
    inner = std::move(next);
  }
  long double sum = 0.0L;
  long double half_power = 1.0L;
  for (int n = 1; n <= kTerms; ++n) {
    half_power *= 0.5L;
    sum += half_power * inner[n - 1] / std::pow(static_cast<long double>(n), s[0]);
  }
  return sum;
}

// Reverses a word and swaps a <-> b: the pullback of the interval (1/2, 1)
// onto (0, 1/2) under t -> 1 - t.
ABWord dual(std::string_view w) {
  ABWord d(w.rbegin(), w.rend());
  for (char& ch : d) ch = ch == 'a' ? 'b' : 'a';
  return d;
}

long double zeta_uncached(const Composition& c) {
  const ABWord w = word_of(c);
  long double sum = 0.0L;
  for (std::size_t j = 0; j <= w.size(); ++j) {
    const ABWord left = dual(std::string_view(w).substr(0, j));
    const std::string_view right = std::string_view(w).substr(j);
    sum += polylog_half(composition_of(left)) * polylog_half(composition_of(right));
  }
  return sum;
}

}  // namespace

long double zeta_precise(const Composition& c) {
  if (!is_admissible(c)) throw InadmissibleComposition("divergent MZV " + to_string(c));
  if (weight(c) > kMaxZetaWeight)
    throw std::invalid_argument("MZV weight above " + std::to_string(kMaxZetaWeight));
  static std::mutex mutex;
  static std::map<Composition, long double> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(c); it != cache.end()) return it->second;
  }
  const long double value = zeta_uncached(c);
  std::lock_guard lock(mutex);
  cache.emplace(c, value);
  return value;
}

double zeta(const Composition& c, double eps) {
  if (!(eps >= kZetaPrecisionFloor))
    throw PrecisionUnattainable("requested MZV precision below 1e-15");
  return static_cast<double>(zeta_precise(c));
}

std::vector<Composition> compositions(int m, int k, int min_part) {
  std::vector<Composition> out;
  if (k == 0) {
    if (m == 0) out.push_back({});
    return out;
  }
  for (int first = min_part; first <= m - min_part * (k - 1); ++first)
    for (auto& rest : compositions(m - first, k - 1, min_part)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

double zeta_depth_sum(int m, int k) {
  long double sum = 0.0L;
  for (const auto& c : compositions(m, k, 2)) sum += zeta_precise(c);
  return static_cast<double>(sum);
}

std::string to_string(const MzvCombination& m) {
  if (m.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, k] : m) {
    BigInt mag = abs(k);
    if (first)
      out << (k < 0 ? "-" : "");
    else
      out << (k < 0 ? " - " : " + ");
    first = false;
    if (c.empty()) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << to_string(c);
  }
  return out.str();
}

long double evaluate(const MzvCombination& m) {
  long double sum = 0.0L;
  for (const auto& [c, k] : m) sum += k.convert_to<long double>() * zeta_precise(c);
  return sum;
}

namespace {

void add_to(RationalMzvCombination& acc, const RationalMzvCombination& x, const Rational& k) {
  for (const auto& [c, v] : x) {
    Rational& slot = acc[c];
    slot += v * k;
    if (slot == 0) acc.erase(c);
  }
}

const RationalMzvCombination& regularize_rational(const ABWord& w) {
  thread_local std::map<ABWord, RationalMzvCombination> memo;
  if (auto it = memo.find(w); it != memo.end()) return it->second;

  RationalMzvCombination result;
  if (is_convergent(w)) {
    result[composition_of(w)] = 1;
  } else {
    // For w = v a (resp. b v): letter shuffled with v is t copies of w plus
    // words with fewer trailing a's (leading b's), and its value is 0.
    const bool trailing = w.back() == 'a';
    const char letter = trailing ? 'a' : 'b';
    const ABWord v = trailing ? w.substr(0, w.size() - 1) : w.substr(1);
    int copies = 0;
    RationalMzvCombination others;
    for (std::size_t pos = 0; pos <= v.size(); ++pos) {
      ABWord u = v;
      u.insert(u.begin() + static_cast<std::ptrdiff_t>(pos), letter);
      if (u == w)
        ++copies;
      else
        add_to(others, regularize_rational(u), 1);
    }
    add_to(result, others, Rational(-1, copies));
  }
  return memo.emplace(w, std::move(result)).first->second;
}

}  // namespace

MzvCombination shuffle_regularize(std::string_view w) {
  MzvCombination out;
  for (const auto& [c, v] : regularize_rational(ABWord(w))) {
    if (denominator(v) != 1)
      throw std::logic_error("regularized value of " + std::string(w) + " is not integral");
    out[c] = numerator(v);
  }
  return out;
}

std::map<ABWord, BigInt> shuffle(std::string_view u, std::string_view v) {
  std::map<ABWord, BigInt> out;
  if (u.empty()) {
    out[ABWord(v)] = 1;
    return out;
  }
  if (v.empty()) {
    out[ABWord(u)] = 1;
    return out;
  }
  for (const auto& [w, k] : shuffle(u.substr(1), v)) out[u.front() + w] += k;
  for (const auto& [w, k] : shuffle(u, v.substr(1))) out[v.front() + w] += k;
  return out;
}

std::map<Composition, BigInt> stuffle(const Composition& u, const Composition& v) {
  std::map<Composition, BigInt> out;
  if (u.empty()) {
    out[v] = 1;
    return out;
  }
  if (v.empty()) {
    out[u] = 1;
    return out;
  }
  const Composition u_rest(u.begin() + 1, u.end());
  const Composition v_rest(v.begin() + 1, v.end());
  auto prepend = [&](int head, const std::map<Composition, BigInt>& tail) {
    for (const auto& [c, k] : tail) {
      Composition x{head};
      x.insert(x.end(), c.begin(), c.end());
      out[x] += k;
    }
  };
  prepend(u.front(), stuffle(u_rest, v));
  prepend(v.front(), stuffle(u, v_rest));
  prepend(u.front() + v.front(), stuffle(u_rest, v_rest));
  return out;
}

namespace {

std::vector<ABWord> convergent_words(int w) {
  std::vector<ABWord> out;
  if (w < 2) return out;
  for (std::uint32_t mask = 0; mask < (1u << (w - 2)); ++mask) {
    ABWord word = "a";
    for (int i = 0; i < w - 2; ++i) word += (mask >> i) & 1u ? 'b' : 'a';
    word += 'b';
    out.push_back(word);
  }
  return out;
}

std::vector<RationalMzvCombination> double_shuffle_relations(int w) {
  std::vector<RationalMzvCombination> rels;
  for (int w1 = 2; 2 * w1 <= w; ++w1) {
    for (const auto& u : convergent_words(w1))
      for (const auto& v : convergent_words(w - w1)) {
        RationalMzvCombination rel;
        for (const auto& [word, k] : shuffle(u, v)) rel[composition_of(word)] += Rational(k);
        for (const auto& [c, k] : stuffle(composition_of(u), composition_of(v)))
          rel[c] -= Rational(k);
        rels.push_back(std::move(rel));
      }
  }
  // reg(b * v) = reg(b sh v) = 0 for convergent v.
  for (const auto& v : convergent_words(w - 1)) {
    RationalMzvCombination rel;
    for (const auto& [c, k] : stuffle({1}, composition_of(v)))
      add_to(rel, regularize_rational(word_of(c)), Rational(k));
    rels.push_back(std::move(rel));
  }
  for (auto& rel : rels) std::erase_if(rel, [](const auto& kv) { return kv.second == 0; });
  return rels;
}

// Row-reduces `target` against an echelon basis keyed by pivot composition.
void reduce_against(RationalMzvCombination& target,
                    const std::map<Composition, RationalMzvCombination>& basis) {
  bool changed = true;
  while (changed && !target.empty()) {
    changed = false;
    for (auto it = target.rbegin(); it != target.rend(); ++it) {
      auto b = basis.find(it->first);
      if (b == basis.end()) continue;
      const Rational factor = it->second;  // pivot entries are normalized to 1
      add_to(target, b->second, -factor);
      changed = true;
      break;
    }
  }
}

bool vanishes_in_weight(const RationalMzvCombination& m, int w) {
  if (m.empty()) return true;
  if (w < 2) return false;
  std::map<Composition, RationalMzvCombination> basis;
  for (auto rel : double_shuffle_relations(w)) {
    reduce_against(rel, basis);
    if (rel.empty()) continue;
    const Composition pivot = rel.rbegin()->first;
    const Rational lead = rel.rbegin()->second;
    for (auto& [c, v] : rel) v /= lead;
    // Keep the basis fully reduced on pivots.
    for (auto& [p, row] : basis) {
      auto hit = row.find(pivot);
      if (hit != row.end()) add_to(row, rel, -hit->second);
    }
    basis.emplace(pivot, std::move(rel));
  }
  RationalMzvCombination target = m;
  reduce_against(target, basis);
  return target.empty();
}

}  // namespace

bool vanishes_mod_double_shuffle(const RationalMzvCombination& m) {
  std::map<int, RationalMzvCombination> by_weight;
  for (const auto& [c, v] : m)
    if (v != 0) by_weight[weight(c)][c] = v;
  for (const auto& [w, part] : by_weight)
    if (!vanishes_in_weight(part, w)) return false;
  return true;
}

}  // namespace conway3
