// Horizontal chord diagrams on three strands modulo [A,B] = [B,C] = [C,A],
// written in the descending basis {B,C}* A*.
#ifndef CONWAY3_CHORD3_HPP
#define CONWAY3_CHORD3_HPP

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "conway3/big_int.hpp"
#include "conway3/nc_series.hpp"

namespace conway3 {

/// u * A^a with u a word over {B, C}.
struct DescendingDiagram {
  Word u;
  int a = 0;

  int degree() const { return u.size() + a; }
  Word word() const { return u + Word::repeat(Chord::A, a); }
  /// Splits a descending word; throws if w is not descending.
  static DescendingDiagram from_word(const Word& w);

  friend bool operator==(const DescendingDiagram&, const DescendingDiagram&) = default;
};

bool is_descending(const Word& w);

/// "C^3 B C^3", "B C A^2"; the empty diagram prints as "1".
std::string to_string(const DescendingDiagram& d);

/// Linear combination of descending diagrams, keyed by the descending word.
template <class R>
class DiagramPoly {
 public:
  using Terms = std::map<Word, R>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  R coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? R(0) : it->second;
  }

  void add_term(const Word& descending_word, const R& c) {
    if (c == R(0)) return;
    auto [it, inserted] = terms_.try_emplace(descending_word, c);
    if (!inserted) {
      it->second += c;
      if (it->second == R(0)) terms_.erase(it);
    }
  }

  void add_scaled(const DiagramPoly<BigInt>& other, const R& k) {
    for (const auto& [w, c] : other.terms()) add_term(w, coefficient_cast<R>(c) * k);
  }

  friend bool operator==(const DiagramPoly&, const DiagramPoly&) = default;

 private:
  Terms terms_;
};

using IntDiagramPoly = DiagramPoly<BigInt>;

std::string to_string(const IntDiagramPoly& p);

/// Which A-redex gets rewritten first. The result does not depend on it.
enum class Schedule { leftmost, rightmost };

/// Rewrites AB -> BA + BC - CB and AC -> CA - BC + CB until every A sits at
/// the end. Memoizes per word; one instance per thread, or use reduce().
class Reducer {
 public:
  explicit Reducer(Schedule schedule = Schedule::leftmost) : schedule_(schedule) {}

  const IntDiagramPoly& reduce(const Word& w);

  template <class R>
  DiagramPoly<R> reduce(const Series<R>& s) {
    DiagramPoly<R> out;
    for (const auto& [w, c] : s.terms()) out.add_scaled(reduce(w), c);
    return out;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct WordHash {
    std::size_t operator()(const Word& w) const {
      return std::hash<std::uint64_t>{}(w.code() * 37 + static_cast<std::uint64_t>(w.size()));
    }
  };

  Schedule schedule_;
  std::unordered_map<Word, IntDiagramPoly, WordHash> memo_;
};

/// Reduces with the leftmost schedule through a thread-local memo table.
IntDiagramPoly reduce(const Word& w);

/// The terms of reduce(w) without any A. Every other term ends in A, where
/// the Conway symbol vanishes, so this is all chi needs.
IntDiagramPoly reduce_a_free(const Word& w);

template <class R>
DiagramPoly<R> reduce(const Series<R>& s) {
  DiagramPoly<R> out;
  for (const auto& [w, c] : s.terms()) out.add_scaled(reduce(w), c);
  return out;
}

/// Classification of a descending diagram for the Conway symbol:
/// unit (the empty diagram), zero_class (ends in A, starts with B or
/// contains BB), or a code [c1..ck] / [c1..ck]' for
/// C^c1 B ... B C^ck and C^c1 B ... C^ck B.
struct DiagramCode {
  enum class Kind { unit, zero_class, plain, primed };

  Kind kind = Kind::unit;
  std::vector<int> parts;

  static DiagramCode unit() { return {}; }
  static DiagramCode zero() { return {Kind::zero_class, {}}; }
  static DiagramCode plain(std::vector<int> c) { return {Kind::plain, std::move(c)}; }
  static DiagramCode primed(std::vector<int> c) { return {Kind::primed, std::move(c)}; }

  /// Rebuilds the B/C word the code stands for.
  Word word() const;

  friend bool operator==(const DiagramCode&, const DiagramCode&) = default;
};

DiagramCode classify(const DescendingDiagram& d);
/// "[3,3]", "[1,2]'", "1" for the unit, "0" for the zero class.
std::string to_string(const DiagramCode& code);

}  // namespace conway3

#endif  // CONWAY3_CHORD3_HPP
