#include "conway3/chi_symbol.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace conway3 {

namespace {

// Grow-only cache for a recursively defined polynomial family.
class PolyCache {
 public:
  template <class Step>
  EvenPoly get(int k, std::vector<EvenPoly> seeds, Step step) {
    if (k < 0) throw std::invalid_argument("polynomial index must be nonnegative");
    std::lock_guard lock(mutex_);
    if (values_.empty()) values_ = std::move(seeds);
    while (static_cast<int>(values_.size()) <= k) values_.push_back(step(values_));
    return values_[k];
  }

 private:
  std::mutex mutex_;
  std::vector<EvenPoly> values_;
};

}  // namespace

EvenPoly p(int k) {
  static PolyCache cache;
  return cache.get(k, {EvenPoly{1}, EvenPoly{0, 1}}, [](const std::vector<EvenPoly>& v) {
    const std::size_t n = v.size();
    return (v[n - 2] + v[n - 1]).shifted(1);
  });
}

EvenPoly p_closed(int k) {
  if (k < 0) throw std::invalid_argument("p_closed: negative index");
  std::vector<BigInt> c(static_cast<std::size_t>(k) + 1);
  for (int j = (k + 1) / 2; j <= k; ++j) c[j] = binomial(j, 2 * j - k);
  return EvenPoly(std::move(c));
}

EvenPoly q(int s) {
  static PolyCache cache;
  return cache.get(s, {EvenPoly{1}, EvenPoly{1, 1}}, [](const std::vector<EvenPoly>& v) {
    const std::size_t n = v.size();
    return EvenPoly{2, 1} * v[n - 1] - v[n - 2];
  });
}

EvenPoly q_closed(int s) {
  if (s < 0) throw std::invalid_argument("q_closed: negative index");
  std::vector<BigInt> c(static_cast<std::size_t>(s) + 1);
  for (int j = 0; j <= s; ++j) c[j] = binomial(s + j, s - j);
  return EvenPoly(std::move(c));
}

namespace {

EvenPoly chi_plain(const std::vector<int>& parts) {
  const std::size_t k = parts.size();
  EvenPoly value = p(parts.back());
  for (std::size_t i = 0; i + 1 < k; ++i) value = value * p(1) * p(parts[i] - 1);
  if (k % 2 == 0) value = -value;
  return value;
}

}  // namespace

EvenPoly chi_code(const DiagramCode& code, const ChiRules& rules) {
  switch (code.kind) {
    case DiagramCode::Kind::unit: return EvenPoly{1};
    case DiagramCode::Kind::zero_class: return {};
    case DiagramCode::Kind::plain: return chi_plain(code.parts);
    case DiagramCode::Kind::primed: {
      auto extended = code.parts;
      extended.push_back(1);
      EvenPoly value = chi_plain(extended).divided_by_t2();
      return rules.flip_primed_sign ? -value : value;
    }
  }
  throw std::logic_error("unreachable");
}

EvenPoly chi(const IntDiagramPoly& x, const ChiRules& rules) {
  EvenPoly sum;
  for (const auto& [w, c] : x.terms())
    sum += chi_code(classify(DescendingDiagram::from_word(w)), rules) * c;
  return sum;
}

EvenPoly chi(const Word& w, const ChiRules& rules) { return chi(reduce(w), rules); }

EvenPoly chi(const IntSeries& s, const ChiRules& rules) { return chi(reduce(s), rules); }

EvenPoly chi_of_braid(const BraidWord& w, int degree_bound, const ChiRules& rules) {
  const IntSeries mu = magnus3(comb(w), degree_bound);
  return chi(mu, rules).truncated(degree_bound / 2);
}

EvenPoly chi_of_braid_fast(const BraidWord& w, int degree_bound, const ChiRules& rules) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  // The x12 block only contributes words ending in A, where chi vanishes.
  const CombedForm cf = comb(w);
  const int max_j = degree_bound / 2;

  // Automaton over B/C words read left to right. `weight` carries the sign and
  // the p_1 p_{c-1} factors of every C-run already closed by a B.
  enum Phase : int { start, in_c, after_b };
  using State = std::tuple<int, int, int>;  // phase, current C-run, word degree
  std::map<State, EvenPoly> states;
  states[{start, 0, 0}] = EvenPoly{1};

  for (const auto& syl : cf.tail.syllables()) {
    const bool is_c = syl.gen == Generator::x13;
    std::map<State, EvenPoly> next;
    for (const auto& [state, weight] : states) {
      const auto [phase, run, degree] = state;
      for (int m = 0; degree + m <= degree_bound; ++m) {
        const BigInt coeff = binomial(syl.exponent, m);
        if (coeff == 0) break;  // positive exponent: all higher binomials vanish too
        if (m == 0) {
          next[state] += weight;
          continue;
        }
        if (is_c) {
          const int new_run = phase == in_c ? run + m : m;
          next[{in_c, new_run, degree + m}] += weight * coeff;
        } else if (m == 1 && phase == in_c) {
          EvenPoly closed = weight * p(1) * p(run - 1) * coeff;
          next[{after_b, 0, degree + 1}] -= closed.truncated(max_j);
        }
        // Otherwise the word starts with B or contains BB: chi vanishes.
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    states = std::move(next);
  }

  EvenPoly total;
  for (const auto& [state, weight] : states) {
    const auto [phase, run, degree] = state;
    if (phase == in_c)
      total += weight * p(run);
    else if (phase == after_b)
      total += rules.flip_primed_sign ? -weight : weight;
    else
      total += weight;
  }
  return total.truncated(max_j);
}

PartitionMultiset::PartitionMultiset(std::vector<int> p) : parts(std::move(p)) {
  std::sort(parts.begin(), parts.end());
}

PartitionMultiset partition_transform(const DiagramCode& code) {
  if (code.kind != DiagramCode::Kind::plain)
    throw std::invalid_argument("partition_transform expects an unprimed code");
  const std::size_t k = code.parts.size();
  std::vector<int> parts(k - 1, 1);
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (code.parts[i] - 1 > 0) parts.push_back(code.parts[i] - 1);
  parts.push_back(code.parts.back());
  return PartitionMultiset(std::move(parts));
}

EvenPoly p_product(const PartitionMultiset& m) {
  EvenPoly value{1};
  for (int part : m.parts) value = value * p(part);
  return value;
}

bool binomial_identity_check(int n, int j) {
  if (j < 0 || j > n - 1) throw std::invalid_argument("need 0 <= j <= n-1");
  BigInt lhs = 0;
  for (int s = j; s <= n - 1; ++s) {
    BigInt term = binomial(n - 1, s) * binomial(s + j, 2 * j);
    lhs += (s % 2 == 0) ? term : BigInt(-term);
  }
  BigInt rhs = binomial(j, 2 * j - n + 1);
  if ((n - 1) % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

bool telescoping_check(int n) {
  if (n < 1) throw std::invalid_argument("telescoping_check: n must be positive");
  EvenPoly sum;
  EvenPoly partial;  // q_0 + ... + q_{l-1}
  for (int l = 1; l <= n; ++l) {
    partial += q(l - 1);
    EvenPoly term = partial * binomial(n, l);
    if ((n - l) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum == p(n - 1);
}

}  // namespace conway3
