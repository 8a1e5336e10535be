#include <doctest.h>

#include <random>
#include <set>

#include "conway3/chord3.hpp"
#include "support.hpp"

using namespace conway3;
using conway3::testing::diagrams;
using conway3::testing::random_word;

namespace {

Word W(const char* s) { return Word::from_string(s); }

std::vector<Word> all_words(int len, const std::string& alphabet) {
  std::vector<Word> out{Word{}};
  for (int i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (char c : alphabet) next.push_back(w + W(std::string(1, c).c_str()));
    out = std::move(next);
  }
  return out;
}

IntDiagramPoly product(const IntDiagramPoly& x, const IntDiagramPoly& y) {
  IntDiagramPoly out;
  for (const auto& [u, a] : x.terms())
    for (const auto& [v, b] : y.terms()) out.add_scaled(reduce(u + v), a * b);
  return out;
}

}  // namespace

TEST_SUITE("chord3") {

TEST_CASE("reduce examples") {
  CHECK(reduce(W("BA")) == diagrams({{"BA", 1}}));
  CHECK(reduce(W("AB")) == diagrams({{"BA", 1}, {"BC", 1}, {"CB", -1}}));
  CHECK(reduce(W("AC")) == diagrams({{"CA", 1}, {"BC", -1}, {"CB", 1}}));
  CHECK(reduce(Word{}) == diagrams({{"", 1}}));
  CHECK(to_string(reduce(W("AB"))) == "BA + BC - CB");
}

TEST_CASE("the three commutators agree after reduction") {
  auto commutator = [](const char* xy, const char* yx) {
    IntDiagramPoly p = reduce(W(xy));
    p.add_scaled(reduce(W(yx)), BigInt(-1));
    return p;
  };
  CHECK(commutator("AB", "BA") == commutator("BC", "CB"));
  CHECK(commutator("BC", "CB") == commutator("CA", "AC"));
}

TEST_CASE("reduction is descending, degree preserving and idempotent") {
  for (int len = 0; len <= 6; ++len)
    for (const auto& w : all_words(len, "ABC")) {
      const IntDiagramPoly r = reduce(w);
      for (const auto& [x, c] : r.terms()) {
        CHECK(is_descending(x));
        CHECK(x.size() == w.size());
        IntDiagramPoly self;
        self.add_term(x, 1);
        CHECK(reduce(x) == self);
      }
      if (is_descending(w)) CHECK(r.terms().size() == 1);
    }
}

TEST_CASE("schedule does not matter") {
  Reducer left(Schedule::leftmost), right(Schedule::rightmost);
  for (int len = 0; len <= 7; ++len)
    for (const auto& w : all_words(len, "ABC")) CHECK(left.reduce(w) == right.reduce(w));
}

TEST_CASE("reduction is multiplicative") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(rng, 4), v = random_word(rng, 4);
    CHECK(reduce(u + v) == product(reduce(u), reduce(v)));
  }
}

TEST_CASE("A-free part") {
  for (int len = 0; len <= 7; ++len)
    for (const auto& w : all_words(len, "ABC")) {
      IntDiagramPoly expected;
      const IntDiagramPoly full = reduce(w);
      for (const auto& [x, c] : full.terms())
        if (x.count(Chord::A) == 0) expected.add_term(x, c);
      CHECK(reduce_a_free(w) == expected);
    }
}

TEST_CASE("reduce on a series") {
  IntSeries s(2);
  s.add_term(W("AB"), 2);
  s.add_term(W("BA"), -1);
  CHECK(reduce(s) == diagrams({{"BA", 1}, {"BC", 2}, {"CB", -2}}));
}

TEST_CASE("classify") {
  CHECK(classify(DescendingDiagram::from_word(W("CCCBCCC"))) == DiagramCode::plain({3, 3}));
  CHECK(classify(DescendingDiagram::from_word(W("CB"))) == DiagramCode::primed({1}));
  CHECK(classify(DescendingDiagram::from_word(Word{})) == DiagramCode::unit());
  CHECK(classify(DescendingDiagram::from_word(W("CA"))) == DiagramCode::zero());
  CHECK(classify(DescendingDiagram::from_word(W("BC"))) == DiagramCode::zero());
  CHECK(classify(DescendingDiagram::from_word(W("CBBC"))) == DiagramCode::zero());
  CHECK(to_string(DiagramCode::plain({3, 3})) == "[3,3]");
  CHECK(to_string(DiagramCode::primed({1})) == "[1]'");
  CHECK(to_string(DescendingDiagram::from_word(W("CCCBA"))) == "C^3 B A");
  CHECK_THROWS(DescendingDiagram::from_word(W("AB")));
}

TEST_CASE("codes are in bijection with the remaining words") {
  std::set<std::pair<int, std::vector<int>>> seen;
  for (int len = 1; len <= 9; ++len)
    for (const auto& w : all_words(len, "BC")) {
      const DiagramCode code = classify(DescendingDiagram::from_word(w));
      if (code.kind == DiagramCode::Kind::zero_class) continue;
      CHECK(code.word() == w);
      CHECK(seen.insert({static_cast<int>(code.kind), code.parts}).second);
    }
}

}  // TEST_SUITE
