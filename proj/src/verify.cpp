#include "conway3/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <unordered_map>

#include "conway3/associator.hpp"
#include "conway3/nc_series.hpp"
#include "conway3/two_bridge.hpp"

namespace conway3 {

void VerifyReport::merge(const VerifyReport& other) {
  checked += other.checked;
  mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
}

std::string summary(const VerifyReport& r) {
  std::ostringstream out;
  out << r.name << ": " << r.checked << " checked, " << r.mismatches.size() << " mismatches";
  for (std::size_t i = 0; i < r.mismatches.size() && i < 10; ++i) {
    const auto& m = r.mismatches[i];
    out << "\n  " << m.input << ": expected " << m.expected << ", got " << m.actual;
  }
  if (r.mismatches.size() > 10) out << "\n  ...";
  return out.str();
}

std::vector<BraidWord> all_words(int max_len) {
  static const Generator gens[] = {Generator::x12, Generator::x13, Generator::x23};
  std::vector<BraidWord> out{BraidWord{}};
  std::vector<std::vector<Syllable>> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Syllable>> next;
    next.reserve(layer.size() * 6);
    for (const auto& letters : layer)
      for (Generator g : gens)
        for (long e : {1L, -1L}) {
          auto w = letters;
          w.push_back({g, e});
          out.emplace_back(w);
          next.push_back(std::move(w));
        }
    layer = std::move(next);
  }
  return out;
}

std::vector<BraidWord> random_words(int samples, int max_len, int max_exp, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, max_len);
  std::uniform_int_distribution<int> gen(0, 2);
  std::uniform_int_distribution<int> magnitude(1, max_exp);
  std::bernoulli_distribution negative(0.5);
  std::vector<BraidWord> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    std::vector<Syllable> w;
    const int len = length(rng);
    for (int i = 0; i < len; ++i) {
      const long e = magnitude(rng);
      w.push_back({static_cast<Generator>(gen(rng)), negative(rng) ? -e : e});
    }
    out.emplace_back(w);
  }
  return out;
}

VerifyReport oracle_equivalence(const std::vector<BraidWord>& words, const ChiRules& rules) {
  VerifyReport r{"oracle equivalence", 0, {}};
  // Many words comb to the same tail; both sides only see the tail.
  std::unordered_map<std::string, bool> seen;
  for (const auto& w : words) {
    ++r.checked;
    const std::string key = to_string(comb(w).tail);
    if (auto it = seen.find(key); it != seen.end()) {
      if (!it->second) r.mismatches.push_back({to_string(w), "(same tail as an earlier mismatch)", ""});
      continue;
    }
    const EvenPoly oracle = conway_of_braid(w);
    const int degree_bound = 2 * (oracle.half_degree() + 2);
    const EvenPoly symbol = chi_of_braid_fast(w, degree_bound, rules);
    const bool ok = symbol == oracle;
    seen.emplace(key, ok);
    if (!ok) r.mismatches.push_back({to_string(w), to_string(oracle), to_string(symbol)});
  }
  return r;
}

VerifyReport subword_identity(int max_len, const ChiRules& rules) {
  VerifyReport r{"subword identity", 0, {}};
  std::map<Word, EvenPoly> closure_cache;
  auto closure = [&](const Word& w) -> const EvenPoly& {
    auto it = closure_cache.find(w);
    if (it == closure_cache.end())
      it = closure_cache.emplace(w, conway_of_braid(braid_of(w))).first;
    return it->second;
  };
  for (int len = 0; len <= max_len; ++len)
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
      Word w;
      for (int i = len - 1; i >= 0; --i) w.push_back((mask >> i) & 1u ? Chord::B : Chord::C);
      EvenPoly rhs;
      for (const auto& [sub, sign] : nu3(w, max_len)) rhs += closure(sub) * sign;
      const EvenPoly lhs = chi(w, rules);
      ++r.checked;
      if (!(lhs == rhs)) r.mismatches.push_back({w.to_string(), to_string(rhs), to_string(lhs)});
    }
  return r;
}

namespace {

using Poly = std::map<ABWord, Rational>;

Poly letter(char c) { return {{ABWord(1, c), Rational(1)}}; }

Poly times(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y) out[u + v] += a * b;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Poly bracket(const Poly& x, const Poly& y) {
  Poly out = times(x, y);
  for (const auto& [w, c] : times(y, x)) out[w] -= c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

void add_term(MzvPolynomial& phi, const Poly& lie, const RationalMzvCombination& coeff) {
  for (const auto& [w, c] : lie)
    for (const auto& [z, k] : coeff) phi[w][z] += c * k;
}

RationalMzvCombination zeta_of(Composition c, Rational k = 1) { return {{std::move(c), k}}; }

long double evaluate(const RationalMzvCombination& m) {
  long double sum = 0.0L;
  for (const auto& [c, k] : m) {
    const long double v = c.empty() ? 1.0L : zeta_precise(c);
    sum += k.convert_to<long double>() * v;
  }
  return sum;
}

}  // namespace

MzvPolynomial reference_associator_degree4() {
  const Poly a = letter('a');
  const Poly b = letter('b');
  const Poly ab = bracket(a, b);
  const Poly aab = bracket(a, ab);

  MzvPolynomial phi;
  phi[""] = zeta_of({});
  add_term(phi, ab, zeta_of({2}, -1));
  add_term(phi, aab, zeta_of({3}, -1));
  add_term(phi, bracket(b, ab), zeta_of({3}, -1));
  add_term(phi, bracket(a, aab), zeta_of({4}, -1));
  add_term(phi, bracket(b, aab), zeta_of({3, 1}, -1));
  add_term(phi, bracket(b, bracket(b, ab)), zeta_of({2, 1, 1}, -1));
  RationalMzvCombination half_zeta2_squared;
  for (const auto& [c, k] : stuffle({2}, {2})) half_zeta2_squared[c] = Rational(k) / 2;
  add_term(phi, times(ab, ab), half_zeta2_squared);

  for (auto& [w, coeff] : phi) std::erase_if(coeff, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(phi, [](const auto& kv) { return kv.second.empty(); });
  return phi;
}

VerifyReport associator_fidelity(double eps) {
  VerifyReport r{"associator through degree 4", 0, {}};
  const MzvPolynomial reference = reference_associator_degree4();
  const AssociatorSeries phi = associator(4);
  for (int d = 0; d <= 4; ++d)
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
      ABWord w;
      for (int i = d - 1; i >= 0; --i) w += (mask >> i) & 1u ? 'b' : 'a';
      RationalMzvCombination ours;
      if (auto it = phi.symbolic.find(w); it != phi.symbolic.end())
        for (const auto& [c, k] : it->second) ours[c] = Rational(k);
      RationalMzvCombination expected;
      if (auto it = reference.find(w); it != reference.end()) expected = it->second;

      RationalMzvCombination diff = ours;
      for (const auto& [c, k] : expected) diff[c] -= k;
      // The constant term is the empty composition, outside any weight >= 2.
      const bool constant_ok = diff.count({}) == 0 || diff.at({}) == 0;
      diff.erase(Composition{});
      const bool exact = constant_ok && vanishes_mod_double_shuffle(diff);
      const long double gap = evaluate(ours) - evaluate(expected);
      const bool numeric = std::fabs(static_cast<double>(gap)) <= eps;
      ++r.checked;
      if (!exact || !numeric) {
        std::ostringstream expected_text, actual_text;
        expected_text.precision(12);
        actual_text.precision(12);
        expected_text << static_cast<double>(evaluate(expected));
        actual_text << static_cast<double>(evaluate(ours)) << (exact ? "" : " (not equal as MZVs)");
        r.mismatches.push_back({w.empty() ? "1" : w, expected_text.str(), actual_text.str()});
      }
    }
  return r;
}

}  // namespace conway3
