// Truncated noncommutative power series in A = t12, B = t23, C = t13.
#ifndef CONWAY3_NC_SERIES_HPP
#define CONWAY3_NC_SERIES_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "conway3/big_int.hpp"
#include "conway3/braid_word.hpp"

namespace conway3 {

enum class Chord : std::uint8_t { A = 0, B = 1, C = 2 };

char to_char(Chord c);
/// The chord t_ij attached to the generator x_ij.
Chord chord_of(Generator g);

/// A word over {A, B, C}, two bits per letter. Ordered by (length, letters).
class Word {
 public:
  static constexpr int kMaxLength = 32;

  Word() = default;
  static Word from_string(std::string_view letters);  // e.g. "CBA"
  static Word repeat(Chord c, int n);

  int size() const { return length_; }
  bool empty() const { return length_ == 0; }
  Chord operator[](int i) const {
    return static_cast<Chord>((code_ >> (2 * (length_ - 1 - i))) & 3u);
  }

  void push_back(Chord c);
  Word operator+(const Word& other) const;
  Word prefix(int n) const;
  Word suffix_from(int i) const;
  int count(Chord c) const;

  std::string to_string() const;  // "CBA"; the empty word prints as "1"
  std::uint64_t code() const { return code_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b) {
    return a.length_ != b.length_ ? a.length_ < b.length_ : a.code_ < b.code_;
  }

 private:
  std::uint64_t code_ = 0;
  int length_ = 0;
};

class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Series truncated above degree N. Zero coefficients are never stored.
/// R is BigInt for the exact paths and std::complex<double> for numerics.
template <class R>
class Series {
 public:
  using Terms = std::map<Word, R>;

  explicit Series(int degree_bound) : degree_bound_(degree_bound) {
    if (degree_bound < 0 || degree_bound > Word::kMaxLength)
      throw std::invalid_argument("series degree bound out of range");
  }

  static Series one(int degree_bound) {
    Series s(degree_bound);
    s.add_term(Word{}, R(1));
    return s;
  }

  static Series monomial(const Word& w, const R& c, int degree_bound) {
    Series s(degree_bound);
    s.add_term(w, c);
    return s;
  }

  int degree_bound() const { return degree_bound_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  R coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? R(0) : it->second;
  }

  /// Adds c*w; words longer than the bound are dropped.
  void add_term(const Word& w, const R& c) {
    if (w.size() > degree_bound_ || c == R(0)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == R(0)) terms_.erase(it);
    }
  }

  Series& operator+=(const Series& o) {
    check_bound(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  Series& operator-=(const Series& o) {
    check_bound(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  Series& operator*=(const R& k) {
    if (k == R(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= k;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const R& k) { return a *= k; }

  friend Series operator*(const Series& a, const Series& b) {
    a.check_bound(b);
    Series out(a.degree_bound_);
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_)
        if (u.size() + v.size() <= a.degree_bound_) out.add_term(u + v, cu * cv);
    return out;
  }

  Series truncated(int degree_bound) const {
    Series out(degree_bound);
    for (const auto& [w, c] : terms_) out.add_term(w, c);
    return out;
  }

  /// Coefficient-wise conversion, e.g. exact integers to complex doubles.
  template <class S, class F>
  Series<S> map_coefficients(F&& f) const {
    Series<S> out(degree_bound_);
    for (const auto& [w, c] : terms_) out.add_term(w, f(c));
    return out;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.degree_bound_ == b.degree_bound_ && a.terms_ == b.terms_;
  }

 private:
  void check_bound(const Series& o) const {
    if (o.degree_bound_ != degree_bound_)
      throw DegreeMismatch("series truncation degrees differ: " +
                           std::to_string(degree_bound_) + " vs " +
                           std::to_string(o.degree_bound_));
  }

  int degree_bound_;
  Terms terms_;
};

using IntSeries = Series<BigInt>;
using ComplexSeries = Series<std::complex<double>>;

/// (1 + letter)^a truncated at degree N; a != 0.
IntSeries geom_power(Chord letter, long a, int degree_bound);

/// Magnus expansion of a combed braid: prod over tail syllables of
/// (1 + t)^a, followed by (1 + A)^e12.
IntSeries magnus3(const CombedForm& cf, int degree_bound);

/// Formal integer combination of positive words.
using SubwordSum = std::map<Word, BigInt>;

class SubwordCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

constexpr int kDefaultSubwordCap = 16;

/// Signed sum over all position-subsequences w' of w of (-1)^{|w|-|w'|} w'.
SubwordSum nu3(const Word& w, int cap = kDefaultSubwordCap);
/// Sum over all position-subsequences of w, truncated at degree N.
IntSeries mu3_positive(const Word& w, int degree_bound, int cap = kDefaultSubwordCap);

/// Applies nu3 linearly to every term of the series.
SubwordSum nu3(const IntSeries& s, int cap = kDefaultSubwordCap);

/// The chord word x_ij -> t_ij of a braid word with positive exponents only.
Word positive_word(const BraidWord& w);
/// The braid word t_ij -> x_ij of a word over {A, B, C}.
BraidWord braid_of(const Word& w);

std::string to_string(const IntSeries& s);
nlohmann::json to_json(const IntSeries& s);
IntSeries int_series_from_json(const nlohmann::json& j);

}  // namespace conway3

#endif  // CONWAY3_NC_SERIES_HPP
