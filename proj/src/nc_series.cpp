#include "conway3/nc_series.hpp"

#include <cstdlib>
#include <sstream>

namespace conway3 {

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  // Generalized binomial n(n-1)...(n-k+1)/k!, exact at each step.
  BigInt r = 1;
  for (long i = 0; i < k; ++i) {
    r *= BigInt(n - i);
    r /= BigInt(i + 1);
  }
  return r;
}

char to_char(Chord c) { return "ABC"[static_cast<int>(c)]; }

Chord chord_of(Generator g) {
  switch (g) {
    case Generator::x12: return Chord::A;
    case Generator::x23: return Chord::B;
    case Generator::x13: return Chord::C;
  }
  throw std::logic_error("unreachable");
}

Word Word::from_string(std::string_view letters) {
  Word w;
  for (char ch : letters) {
    switch (ch) {
      case 'A': w.push_back(Chord::A); break;
      case 'B': w.push_back(Chord::B); break;
      case 'C': w.push_back(Chord::C); break;
      default: throw std::invalid_argument(std::string("not a chord letter: ") + ch);
    }
  }
  return w;
}

Word Word::repeat(Chord c, int n) {
  Word w;
  for (int i = 0; i < n; ++i) w.push_back(c);
  return w;
}

void Word::push_back(Chord c) {
  if (length_ >= kMaxLength) throw std::length_error("word longer than 32 letters");
  code_ = (code_ << 2) | static_cast<std::uint64_t>(c);
  ++length_;
}

Word Word::operator+(const Word& other) const {
  if (length_ + other.length_ > kMaxLength)
    throw std::length_error("word longer than 32 letters");
  Word w;
  w.length_ = length_ + other.length_;
  w.code_ = other.length_ == 32 ? other.code_ : (code_ << (2 * other.length_)) | other.code_;
  return w;
}

Word Word::prefix(int n) const {
  Word w;
  w.length_ = n;
  const int drop = length_ - n;
  w.code_ = drop >= 32 ? 0 : code_ >> (2 * drop);
  return w;
}

Word Word::suffix_from(int i) const {
  Word w;
  w.length_ = length_ - i;
  w.code_ = w.length_ == 32 ? code_ : code_ & ((std::uint64_t{1} << (2 * w.length_)) - 1);
  return w;
}

int Word::count(Chord c) const {
  int n = 0;
  for (int i = 0; i < length_; ++i)
    if ((*this)[i] == c) ++n;
  return n;
}

std::string Word::to_string() const {
  if (length_ == 0) return "1";
  std::string s;
  for (int i = 0; i < length_; ++i) s += to_char((*this)[i]);
  return s;
}

IntSeries geom_power(Chord letter, long a, int degree_bound) {
  if (a == 0) throw std::invalid_argument("geom_power: exponent must be nonzero");
  IntSeries s(degree_bound);
  for (int m = 0; m <= degree_bound; ++m) s.add_term(Word::repeat(letter, m), binomial(a, m));
  return s;
}

IntSeries magnus3(const CombedForm& cf, int degree_bound) {
  IntSeries s = IntSeries::one(degree_bound);
  for (const auto& syl : cf.tail.syllables())
    s = s * geom_power(chord_of(syl.gen), syl.exponent, degree_bound);
  if (cf.e12 != 0) s = s * geom_power(Chord::A, cf.e12, degree_bound);
  return s;
}

namespace {

void check_cap(const Word& w, int cap) {
  if (w.size() > cap)
    throw SubwordCapExceeded("word of length " + std::to_string(w.size()) +
                             " exceeds the subword cap " + std::to_string(cap));
}

// Calls f(subword, dropped_count) for each of the 2^|w| position subsets.
template <class F>
void for_each_subword(const Word& w, F&& f) {
  const int n = w.size();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    Word sub;
    int dropped = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i))
        sub.push_back(w[i]);
      else
        ++dropped;
    }
    f(sub, dropped);
  }
}

}  // namespace

SubwordSum nu3(const Word& w, int cap) {
  check_cap(w, cap);
  SubwordSum out;
  for_each_subword(w, [&](const Word& sub, int dropped) {
    out[sub] += (dropped % 2 == 0) ? 1 : -1;
  });
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

SubwordSum nu3(const IntSeries& s, int cap) {
  SubwordSum out;
  for (const auto& [w, c] : s.terms())
    for (const auto& [sub, k] : nu3(w, cap)) out[sub] += c * k;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

IntSeries mu3_positive(const Word& w, int degree_bound, int cap) {
  check_cap(w, cap);
  IntSeries s(degree_bound);
  for_each_subword(w, [&](const Word& sub, int) { s.add_term(sub, BigInt(1)); });
  return s;
}

Word positive_word(const BraidWord& w) {
  Word out;
  for (const auto& syl : w.syllables()) {
    if (syl.exponent < 0) throw std::invalid_argument("positive_word: negative exponent");
    for (long k = 0; k < syl.exponent; ++k) out.push_back(chord_of(syl.gen));
  }
  return out;
}

BraidWord braid_of(const Word& w) {
  BraidWord b;
  for (int i = 0; i < w.size(); ++i) {
    switch (w[i]) {
      case Chord::A: b.append(Generator::x12, 1); break;
      case Chord::B: b.append(Generator::x23, 1); break;
      case Chord::C: b.append(Generator::x13, 1); break;
    }
  }
  return b;
}

std::string to_string(const IntSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : s.terms()) {
    BigInt mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (w.empty())
      out << mag;
    else if (mag == 1)
      out << w.to_string();
    else
      out << mag << '*' << w.to_string();
  }
  return out.str();
}

nlohmann::json to_json(const IntSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : s.terms())
    terms.push_back({{"word", w.empty() ? "" : w.to_string()}, {"coeff", c.str()}});
  return {{"N", s.degree_bound()}, {"terms", terms}};
}

IntSeries int_series_from_json(const nlohmann::json& j) {
  IntSeries s(j.at("N").get<int>());
  for (const auto& t : j.at("terms"))
    s.add_term(Word::from_string(t.at("word").get<std::string>()),
               BigInt(t.at("coeff").get<std::string>()));
  return s;
}

}  // namespace conway3
