#include "conway3/two_bridge.hpp"

#include <sstream>

namespace conway3 {

namespace {

BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q = n / d;  // truncates toward zero
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

BigInt floor_mod(const BigInt& n, const BigInt& d) { return n - d * floor_div(n, d); }

}  // namespace

Fraction Fraction::make(BigInt num, BigInt den) {
  if (num == 0 && den == 0) throw std::invalid_argument("0/0 is not a fraction");
  if (den == 0) return {1, 0};
  BigInt g = gcd(abs(num), abs(den));
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

std::string to_string(const Fraction& f) {
  if (f.is_infinite()) return "1/0";
  return f.p.str() + "/" + f.q.str();
}

std::string to_string(const ContinuedFraction& cf) {
  std::string s = "(";
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    if (i) s += ", ";
    s += cf.terms[i].str();
  }
  return s + ")";
}

std::string to_string(const AlternatingWord& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.exponents.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(w.exponents[i]);
  }
  return s + ")";
}

LaurentPoly::LaurentPoly(std::map<int, BigInt> terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

BigInt LaurentPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::value_at_one() const {
  BigInt v = 0;
  for (const auto& [e, c] : terms_) v += c;
  return v;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : terms_)
    if (coeff(-e) != c) return false;
  return true;
}

LaurentPoly LaurentPoly::symmetrized() const {
  if (terms_.empty()) return {};
  const int lo = terms_.begin()->first;
  const int hi = terms_.rbegin()->first;
  if ((hi - lo) % 2 != 0)
    throw std::domain_error("Laurent polynomial of odd span cannot be centered");
  const int shift = -(lo + hi) / 2;
  const bool negate = value_at_one() < 0;
  std::map<int, BigInt> out;
  for (const auto& [e, c] : terms_) out[e + shift] = negate ? BigInt(-c) : c;
  return LaurentPoly(std::move(out));
}

std::string to_string(const LaurentPoly& d) {
  if (d.terms().empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = d.terms().rbegin(); it != d.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << 't';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

AlternatingWord closure_word(const CombedForm& cf) {
  AlternatingWord w;
  const auto& syl = cf.tail.syllables();
  std::size_t i = 0;
  if (!syl.empty() && syl.front().gen == Generator::x23) i = 1;
  for (; i < syl.size(); ++i) w.exponents.push_back(syl[i].exponent);
  return w;
}

ContinuedFraction word_to_cf(const AlternatingWord& w) {
  ContinuedFraction cf;
  if (w.exponents.empty()) {
    cf.terms.push_back(1);
    return cf;
  }
  for (std::size_t i = 0; i < w.exponents.size(); ++i) {
    const long e = w.exponents[i];
    cf.terms.push_back(i % 2 == 0 ? BigInt(2 * e) : BigInt(-2 * e));
  }
  cf.terms.back() += 1;
  return cf;
}

Fraction cf_to_fraction(const ContinuedFraction& cf) {
  if (cf.terms.empty()) return {1, 0};
  // Homogeneous evaluation: c + 1/(num/den) = (c*num + den)/num also covers
  // the steps through 0 and infinity.
  BigInt num = cf.terms.back();
  BigInt den = 1;
  for (auto it = cf.terms.rbegin() + 1; it != cf.terms.rend(); ++it) {
    BigInt next_num = *it * num + den;
    den = num;
    num = next_num;
  }
  Fraction f = Fraction::make(num, den);
  if (f.p == 0) throw NotAKnot("continued fraction " + to_string(cf) + " evaluates to 0");
  return f;
}

namespace {

void require_knot(const Fraction& f) {
  if (f.is_infinite()) return;
  if (f.p == 0) throw NotAKnot("fraction 0/1 is not a knot");
  if (f.p % 2 == 0) throw NotAKnot("fraction " + to_string(f) + " has even numerator: a link");
}

bool is_unknot(const Fraction& f) { return f.is_infinite() || abs(f.p) == 1; }

}  // namespace

LaurentPoly alexander_staircase(const Fraction& f) {
  require_knot(f);
  if (is_unknot(f)) return LaurentPoly(std::map<int, BigInt>{{0, BigInt(1)}});
  if (abs(f.p) > kStaircaseLimit)
    throw std::length_error("staircase formula limited to |p| <= " + kStaircaseLimit.str());
  const long long p = abs(f.p).convert_to<long long>();
  long long q = floor_mod(f.q, BigInt(p)).convert_to<long long>();
  if (q % 2 == 0) q += p;
  std::map<int, BigInt> terms;
  int exponent = 0;
  terms[0] += 1;
  for (long long i = 1; i < p; ++i) {
    exponent += ((i * q) / p) % 2 == 0 ? 1 : -1;
    terms[exponent] += (i % 2 == 0) ? 1 : -1;
  }
  return LaurentPoly(std::move(terms)).symmetrized();
}

ContinuedFraction even_continued_fraction(const Fraction& f) {
  require_knot(f);
  ContinuedFraction cf;
  if (is_unknot(f)) return cf;
  BigInt num = abs(f.p);
  BigInt den = floor_mod(f.q, num);
  if (den % 2 != 0) den -= num;
  while (den != 0) {
    // The even a with |num/den - a| < 1.
    BigInt a = 2 * floor_div(num + den, 2 * den);
    cf.terms.push_back(a);
    BigInt rem = num - a * den;
    num = den;
    den = rem;
  }
  return cf;
}

EvenPoly conway_continuant(const Fraction& f) {
  const ContinuedFraction cf = even_continued_fraction(f);
  // Polynomials in z, index = power of z.
  using ZPoly = std::vector<BigInt>;
  auto times_z = [](const ZPoly& a, const BigInt& k) {
    ZPoly out(a.size() + 1);
    for (std::size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i] * k;
    return out;
  };
  auto add = [](ZPoly a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
  };
  ZPoly prev{1};   // K_{k-2}
  ZPoly cur{1};    // K_{k-1}
  bool first = true;
  for (std::size_t k = 0; k < cf.terms.size(); ++k) {
    BigInt c = cf.terms[k] / 2;
    if (k % 2 == 1) c = -c;
    ZPoly next = first ? times_z(cur, c) : add(times_z(cur, c), prev);
    first = false;
    prev = std::move(cur);
    cur = std::move(next);
  }
  std::vector<BigInt> even;
  for (std::size_t i = 0; i < cur.size(); ++i) {
    if (i % 2 == 1) {
      if (cur[i] != 0) throw std::logic_error("continuant has an odd power of z");
      continue;
    }
    even.push_back(cur[i]);
  }
  EvenPoly result(std::move(even));
  if (result.coeff(0) == -1) result = -result;
  if (result.coeff(0) != 1) throw std::logic_error("continuant constant term is not +-1");
  return result;
}

EvenPoly conway_from_alexander(const LaurentPoly& d) {
  if (!d.is_symmetric()) throw std::domain_error("Alexander polynomial is not symmetric");
  const BigInt at_one = d.value_at_one();
  if (abs(at_one) != 1) throw std::domain_error("Alexander polynomial has |Delta(1)| != 1");
  std::map<int, BigInt> rest = d.terms();
  if (at_one < 0)
    for (auto& [e, c] : rest) c = -c;
  const int top = rest.empty() ? 0 : rest.rbegin()->first;
  std::vector<BigInt> conway(static_cast<std::size_t>(top) + 1);
  for (int j = top; j >= 1; --j) {
    const BigInt c = rest.count(j) ? rest[j] : BigInt(0);
    if (c == 0) continue;
    conway[j] = c;
    // (t - 2 + 1/t)^j = sum_k C(2j, k) (-1)^k t^{j-k}
    for (int k = 0; k <= 2 * j; ++k) {
      BigInt term = binomial(2 * j, k) * c;
      rest[j - k] -= (k % 2 == 0) ? term : BigInt(-term);
    }
  }
  std::erase_if(rest, [](const auto& kv) { return kv.second == 0; });
  if (rest.size() > 1 || (rest.size() == 1 && rest.begin()->first != 0))
    throw std::domain_error("no exact Conway representation");
  conway[0] = rest.empty() ? BigInt(0) : rest.begin()->second;
  return EvenPoly(std::move(conway));
}

LaurentPoly alexander_from_conway(const EvenPoly& c) {
  std::map<int, BigInt> terms;
  for (int j = 0; j <= c.half_degree(); ++j) {
    const BigInt cj = c.coeff(j);
    if (cj == 0) continue;
    for (int k = 0; k <= 2 * j; ++k) {
      BigInt term = binomial(2 * j, k) * cj;
      terms[j - k] += (k % 2 == 0) ? term : BigInt(-term);
    }
  }
  return LaurentPoly(std::move(terms));
}

LaurentPoly alexander_2bridge(const Fraction& f) {
  require_knot(f);
  if (is_unknot(f)) return LaurentPoly(std::map<int, BigInt>{{0, BigInt(1)}});
  if (abs(f.p) <= kStaircaseLimit) return alexander_staircase(f);
  return alexander_from_conway(conway_continuant(f));
}

EvenPoly conway_of_fraction(const Fraction& f) {
  require_knot(f);
  if (is_unknot(f)) return EvenPoly{1};
  return conway_from_alexander(alexander_2bridge(f));
}

ClosureTrace trace_closure(const BraidWord& w) {
  ClosureTrace t;
  t.combed = comb(w);
  t.word = closure_word(t.combed);
  t.cf = word_to_cf(t.word);
  t.fraction = cf_to_fraction(t.cf);
  t.alexander = alexander_2bridge(t.fraction);
  t.conway = conway_from_alexander(t.alexander);
  return t;
}

EvenPoly conway_of_braid(const BraidWord& w) {
  const AlternatingWord word = closure_word(comb(w));
  if (word.exponents.empty()) return EvenPoly{1};
  return conway_of_fraction(cf_to_fraction(word_to_cf(word)));
}

nlohmann::json to_json(const ClosureTrace& t) {
  nlohmann::json cf = nlohmann::json::array();
  for (const auto& c : t.cf.terms) cf.push_back(c.str());
  return {{"combed", t.combed},
          {"alternating_word", t.word.exponents},
          {"continued_fraction", cf},
          {"fraction", {{"p", t.fraction.p.str()}, {"q", t.fraction.q.str()}}},
          {"alexander", to_string(t.alexander)},
          {"conway", to_json(t.conway)}};
}

}  // namespace conway3
