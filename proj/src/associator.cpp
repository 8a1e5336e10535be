#include "conway3/associator.hpp"

#include <cmath>
#include <numbers>

#include "conway3/chi_symbol.hpp"
#include "conway3/chord3.hpp"

namespace conway3 {

MzvCombination associator_coefficient(std::string_view w) {
  MzvCombination c = shuffle_regularize(w);
  if (depth(w) % 2 == 1)
    for (auto& [comp, k] : c) k = -k;
  return c;
}

namespace {

void check_degree(int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  if (degree > kMaxAssociatorDegree)
    throw DegreeCapExceeded("associator degree capped at " + std::to_string(kMaxAssociatorDegree));
}

std::vector<ABWord> words_of_length(int d) {
  std::vector<ABWord> out;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    ABWord w(static_cast<std::size_t>(d), 'a');
    for (int i = 0; i < d; ++i)
      if ((mask >> (d - 1 - i)) & 1u) w[i] = 'b';
    out.push_back(std::move(w));
  }
  return out;
}

Word chord_word(const ABWord& w) {
  Word out;
  for (char ch : w) out.push_back(ch == 'a' ? Chord::A : Chord::B);
  return out;
}

}  // namespace

AssociatorSeries associator(int degree) {
  check_degree(degree);
  AssociatorSeries s;
  s.degree = degree;
  for (int d = 0; d <= degree; ++d)
    for (const auto& w : words_of_length(d)) {
      MzvCombination c = associator_coefficient(w);
      if (c.empty()) continue;
      s.coeffs[w] = evaluate(c);
      s.symbolic[w] = std::move(c);
    }
  return s;
}

ConjecturePolynomial chi_on_associator(int degree, TwoPiScaling scaling) {
  check_degree(degree);
  if (degree % 2 != 0) throw std::invalid_argument("chi_on_associator needs an even degree");
  const AssociatorSeries phi = associator(degree);
  const int top = degree / 2;
  std::vector<long double> re(top + 1, 0.0L), im(top + 1, 0.0L);
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;

  for (const auto& [w, c] : phi.coeffs) {
    const int d = static_cast<int>(w.size());
    const EvenPoly x = chi(reduce_a_free(chord_word(w)));
    for (int j = 1; j <= std::min(top, x.half_degree()); ++j) {
      const BigInt& k = x.coeff(j);
      if (k == 0) continue;
      // The power of i decides which part the term lands in.
      const int e = scaling == TwoPiScaling::literal ? 2 * j - d : 0;
      const long double term = c * k.convert_to<long double>() * std::pow(two_pi, e);
      switch (((e % 4) + 4) % 4) {
        case 0: re[j] += term; break;
        case 1: im[j] += term; break;
        case 2: re[j] -= term; break;
        case 3: im[j] -= term; break;
      }
    }
  }

  ConjecturePolynomial out;
  for (int j = 1; j <= top; ++j) {
    out.coeffs.push_back(static_cast<double>(re[j]));
    out.imag.push_back(static_cast<double>(im[j]));
    if (std::fabs(static_cast<double>(im[j])) >= kImaginaryTolerance)
      throw ImaginaryResidue("T^" + std::to_string(2 * j) + " coefficient has imaginary part " +
                             std::to_string(static_cast<double>(im[j])));
  }
  return out;
}

double conjecture_rhs(int n) {
  if (n < 1) throw std::invalid_argument("conjecture_rhs: n must be positive");
  long double sum = 0.0L;
  for (int k = 1; k <= n; ++k) {
    const long double s = zeta_depth_sum(n + k, k);
    sum += k % 2 == 0 ? s : -s;
  }
  return static_cast<double>(sum);
}

nlohmann::json to_json(const AssociatorSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : s.coeffs)
    terms.push_back({{"word", w.empty() ? "1" : w},
                     {"coeff", static_cast<double>(c)},
                     {"mzv", to_string(s.symbolic.at(w))}});
  return {{"degree", s.degree}, {"terms", terms}};
}

nlohmann::json to_json(const ConjecturePolynomial& c) {
  return {{"var", "T"}, {"even", true}, {"coeffs", c.coeffs}, {"imag", c.imag}};
}

}  // namespace conway3
