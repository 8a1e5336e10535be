#include "conway3/chord3.hpp"

#include <sstream>

namespace conway3 {

bool is_descending(const Word& w) {
  bool seen_a = false;
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] == Chord::A)
      seen_a = true;
    else if (seen_a)
      return false;
  }
  return true;
}

DescendingDiagram DescendingDiagram::from_word(const Word& w) {
  if (!is_descending(w))
    throw std::invalid_argument("not a descending diagram: " + w.to_string());
  const int a = w.count(Chord::A);
  return {w.prefix(w.size() - a), a};
}

namespace {

void append_power(std::ostringstream& out, char letter, int n, bool& first) {
  if (n == 0) return;
  if (!first) out << ' ';
  first = false;
  out << letter;
  if (n > 1) out << '^' << n;
}

}  // namespace

std::string to_string(const DescendingDiagram& d) {
  if (d.degree() == 0) return "1";
  std::ostringstream out;
  bool first = true;
  const Word& u = d.u;
  for (int i = 0; i < u.size();) {
    int j = i;
    while (j < u.size() && u[j] == u[i]) ++j;
    append_power(out, to_char(u[i]), j - i, first);
    i = j;
  }
  append_power(out, 'A', d.a, first);
  return out.str();
}

std::string to_string(const IntDiagramPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    BigInt mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || w.empty()) out << mag;
    if (!w.empty()) out << (mag != 1 ? "*" : "") << w.to_string();
  }
  return out.str();
}

const IntDiagramPoly& Reducer::reduce(const Word& w) {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;

  // Letters before the first A are never rewritten; memoize on the rest.
  if (schedule_ == Schedule::leftmost && !w.empty() && w[0] != Chord::A) {
    int first_a = 0;
    while (first_a < w.size() && w[first_a] != Chord::A) ++first_a;
    if (first_a < w.size()) {
      const Word head = w.prefix(first_a);
      IntDiagramPoly result;
      for (const auto& [x, c] : reduce(w.suffix_from(first_a)).terms()) result.add_term(head + x, c);
      return memo_.emplace(w, std::move(result)).first->second;
    }
  }

  int redex = -1;
  for (int i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == Chord::A && w[i + 1] != Chord::A) {
      redex = i;
      if (schedule_ == Schedule::leftmost) break;
    }
  }

  IntDiagramPoly result;
  if (redex < 0) {
    result.add_term(w, 1);
  } else {
    const Word head = w.prefix(redex);
    const Word tail = w.suffix_from(redex + 2);
    const Chord x = w[redex + 1];
    Word swapped = head;
    swapped.push_back(x);
    swapped.push_back(Chord::A);
    Word bc = head;
    bc.push_back(Chord::B);
    bc.push_back(Chord::C);
    Word cb = head;
    cb.push_back(Chord::C);
    cb.push_back(Chord::B);
    // AB = BA + (BC - CB),  AC = CA - (BC - CB)
    const int sign = x == Chord::B ? 1 : -1;
    result.add_scaled(reduce(swapped + tail), BigInt(1));
    result.add_scaled(reduce(bc + tail), BigInt(sign));
    result.add_scaled(reduce(cb + tail), BigInt(-sign));
  }
  return memo_.emplace(w, std::move(result)).first->second;
}

IntDiagramPoly reduce(const Word& w) {
  thread_local Reducer reducer;
  return reducer.reduce(w);
}

namespace {

// A-free part of reduce(A u) for u over {B, C}: sliding the A through u
// leaves u_{<i} (BC - CB) u_{>i} at each letter, with sign + for B, - for C.
void add_a_pass(IntDiagramPoly& out, const Word& u, const BigInt& c) {
  for (int i = 0; i < u.size(); ++i) {
    const BigInt k = u[i] == Chord::B ? c : BigInt(-c);
    const Word head = u.prefix(i);
    const Word rest = u.suffix_from(i + 1);
    out.add_term(head + Word::from_string("BC") + rest, k);
    out.add_term(head + Word::from_string("CB") + rest, -k);
  }
}

}  // namespace

IntDiagramPoly reduce_a_free(const Word& w) {
  IntDiagramPoly acc;
  acc.add_term(Word{}, 1);
  for (int i = w.size() - 1; i >= 0; --i) {
    IntDiagramPoly next;
    if (w[i] == Chord::A) {
      for (const auto& [u, c] : acc.terms()) add_a_pass(next, u, c);
    } else {
      const Word letter = Word::repeat(w[i], 1);
      for (const auto& [u, c] : acc.terms()) next.add_term(letter + u, c);
    }
    acc = std::move(next);
  }
  return acc;
}

Word DiagramCode::word() const {
  Word w;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int k = 0; k < parts[i]; ++k) w.push_back(Chord::C);
    if (i + 1 < parts.size() || kind == Kind::primed) w.push_back(Chord::B);
  }
  return w;
}

DiagramCode classify(const DescendingDiagram& d) {
  if (d.a > 0) return DiagramCode::zero();
  const Word& u = d.u;
  if (u.empty()) return DiagramCode::unit();
  if (u[0] == Chord::B) return DiagramCode::zero();
  std::vector<int> parts;
  int run = 0;
  for (int i = 0; i < u.size(); ++i) {
    if (u[i] == Chord::C) {
      ++run;
    } else {
      if (run == 0) return DiagramCode::zero();  // BB
      parts.push_back(run);
      run = 0;
    }
  }
  if (run == 0) return DiagramCode::primed(std::move(parts));
  parts.push_back(run);
  return DiagramCode::plain(std::move(parts));
}

std::string to_string(const DiagramCode& code) {
  switch (code.kind) {
    case DiagramCode::Kind::unit: return "1";
    case DiagramCode::Kind::zero_class: return "0";
    default: break;
  }
  std::string s = "[";
  for (std::size_t i = 0; i < code.parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(code.parts[i]);
  }
  s += ']';
  if (code.kind == DiagramCode::Kind::primed) s += '\'';
  return s;
}

}  // namespace conway3
