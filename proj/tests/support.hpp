// Small builders shared by the unit tests.
#ifndef CONWAY3_TESTS_SUPPORT_HPP
#define CONWAY3_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <string>
#include <utility>

#include "conway3/braid_word.hpp"
#include "conway3/chord3.hpp"
#include "conway3/nc_series.hpp"

namespace conway3::testing {

// {{"", 1}, {"BC", -1}} -> 1 - BC
inline IntSeries series(std::initializer_list<std::pair<const char*, long>> terms, int N) {
  IntSeries s(N);
  for (const auto& [w, c] : terms) s.add_term(Word::from_string(w), BigInt(c));
  return s;
}

inline IntDiagramPoly diagrams(std::initializer_list<std::pair<const char*, long>> terms) {
  IntDiagramPoly p;
  for (const auto& [w, c] : terms) p.add_term(Word::from_string(w), BigInt(c));
  return p;
}

inline BraidWord random_braid(std::mt19937_64& rng, int max_len, int max_exp = 3) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, 2), mag(1, max_exp);
  std::vector<Syllable> s;
  for (int i = len(rng); i > 0; --i) {
    long e = mag(rng);
    if (rng() & 1) e = -e;
    s.push_back({static_cast<Generator>(gen(rng)), e});
  }
  return BraidWord(s);
}

inline Word random_word(std::mt19937_64& rng, int max_len, const std::string& alphabet = "ABC") {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string w;
  for (int i = len(rng); i > 0; --i) w += alphabet[pick(rng)];
  return Word::from_string(w);
}

}  // namespace conway3::testing

#endif
