#include <doctest.h>

#include <random>

#include "conway3/chi_symbol.hpp"
#include "conway3/two_bridge.hpp"
#include "conway3/verify.hpp"
#include "support.hpp"

using namespace conway3;
using conway3::testing::random_braid;

namespace {

Word W(const char* s) { return Word::from_string(s); }

}  // namespace

TEST_SUITE("chisymbol") {

TEST_CASE("p and q") {
  CHECK(p(0) == EvenPoly{1});
  CHECK(p(1) == EvenPoly{0, 1});
  CHECK(p(3) == EvenPoly{0, 0, 2, 1});
  CHECK(p_closed(2) == EvenPoly{0, 1, 1});
  CHECK(p_closed(0) == EvenPoly{1});
  CHECK(p_closed(4) == EvenPoly{0, 0, 1, 3, 1});
  CHECK(q(0) == EvenPoly{1});
  CHECK(q(1) == EvenPoly{1, 1});
  CHECK(q(2) == EvenPoly{1, 3, 1});
  CHECK_THROWS(p(-1));
}

TEST_CASE("recursions match the closed forms") {
  for (int k = 0; k <= 40; ++k) CHECK(p(k) == p_closed(k));
  for (int s = 0; s <= 40; ++s) CHECK(q(s) == q_closed(s));
}

TEST_CASE("alternating p-sum is the unknot") {
  for (int K = 0; K <= 30; ++K) {
    EvenPoly sum;
    for (int k = 0; k <= K; ++k) sum += k % 2 == 0 ? p(k) : -p(k);
    CHECK(sum.coeff(0) == 1);
    for (int j = 1; j <= K / 2; ++j) CHECK(sum.coeff(j) == 0);
  }
}

TEST_CASE("chi on codes") {
  CHECK(chi_code(DiagramCode::plain({1})) == EvenPoly{0, 1});
  CHECK(chi_code(DiagramCode::primed({1})) == EvenPoly{0, -1});
  CHECK(chi_code(DiagramCode::plain({3, 3})) == -(p(1) * p(2) * p(3)));
  CHECK(chi_code(DiagramCode::plain({3, 3})) == -(EvenPoly{0, 1} * EvenPoly{0, 1, 1} * EvenPoly{0, 0, 2, 1}));
  CHECK(chi_code(DiagramCode::plain({1, 1, 1})) == EvenPoly{0, 0, 0, 1});
  CHECK(chi_code(DiagramCode::unit()) == EvenPoly{1});
  CHECK(chi_code(DiagramCode::zero()).is_zero());
}

TEST_CASE("chi on words") {
  CHECK(chi(W("B")).is_zero());
  CHECK(chi(W("BC")).is_zero());
  CHECK(chi(W("C")) == EvenPoly{0, 1});
  CHECK(chi(W("CB")) == EvenPoly{0, -1});
  CHECK(chi(W("CA")).is_zero());
  CHECK(chi(W("CBBC")).is_zero());
  CHECK(chi_of_braid(parse_braid("x13"), 4) == EvenPoly{1, 1});
}

TEST_CASE("primed codes are the plain code with a trailing 1, divided by t^2") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    std::vector<int> parts(1 + rng() % 4);
    for (int& c : parts) c = 1 + static_cast<int>(rng() % 5);
    auto extended = parts;
    extended.push_back(1);
    CHECK(chi_code(DiagramCode::primed(parts)).shifted(1) == chi_code(DiagramCode::plain(extended)));
  }
}

TEST_CASE("lowest exponent is at least the diagram degree") {
  for (int len = 1; len <= 10; ++len)
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
      Word w;
      for (int i = 0; i < len; ++i) w.push_back((mask >> i) & 1u ? Chord::B : Chord::C);
      const EvenPoly x = chi(w);
      if (!x.is_zero()) CHECK(2 * x.lowest_half_degree() >= len);
    }
}

TEST_CASE("chi on a braid is stable in the degree bound") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const BraidWord w = random_braid(rng, 5, 2);
    const EvenPoly top = chi_of_braid_fast(w, 16);
    for (int n = 0; n <= 16; ++n) CHECK(chi_of_braid_fast(w, n) == top.truncated(n / 2));
  }
}

TEST_CASE("streaming route agrees with the explicit one") {
  for (const auto& w : all_words(4))
    for (int n : {4, 8}) CHECK(chi_of_braid_fast(w, n) == chi_of_braid(w, n));
  std::mt19937_64 rng(37);
  for (int i = 0; i < 60; ++i) {
    const BraidWord w = random_braid(rng, 6, 3);
    CHECK(chi_of_braid_fast(w, 10) == chi_of_braid(w, 10));
  }
}

TEST_CASE("partition transform") {
  CHECK(partition_transform(DiagramCode::plain({3, 3})) == PartitionMultiset({1, 2, 3}));
  CHECK(partition_transform(DiagramCode::plain({1})) == PartitionMultiset({1}));
  CHECK(partition_transform(DiagramCode::plain({1, 1, 1})) == PartitionMultiset({1, 1, 1}));
  CHECK_THROWS(partition_transform(DiagramCode::primed({2})));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    std::vector<int> parts(1 + rng() % 5);
    for (int& c : parts) c = 1 + static_cast<int>(rng() % 4);
    const EvenPoly value = p_product(partition_transform(DiagramCode::plain(parts)));
    const EvenPoly signed_value = parts.size() % 2 == 1 ? value : -value;
    CHECK(chi_code(DiagramCode::plain(parts)) == signed_value);
  }
}

TEST_CASE("binomial identity") {
  CHECK(binomial_identity_check(1, 0));
  CHECK(binomial_identity_check(3, 1));
  CHECK(binomial_identity_check(10, 4));
  for (int n = 1; n <= 40; ++n)
    for (int j = 0; j < n; ++j) CHECK(binomial_identity_check(n, j));
  CHECK_THROWS(binomial_identity_check(3, 3));
}

TEST_CASE("telescoping identity") {
  for (int n = 1; n <= 25; ++n) CHECK(telescoping_check(n));
  CHECK_THROWS(telescoping_check(0));
}

TEST_CASE("chi agrees with the subword sum of closures") {
  const VerifyReport r = subword_identity(8);
  CHECK(r.checked == 511);
  CHECK_MESSAGE(r.ok(), summary(r));
}

TEST_CASE("corrupted rule is caught") {
  ChiRules bad;
  bad.flip_primed_sign = true;
  CHECK(chi_code(DiagramCode::primed({1}), bad) == EvenPoly{0, 1});
  CHECK_FALSE(subword_identity(3, bad).ok());
  CHECK_FALSE(oracle_equivalence(all_words(2), bad).ok());
}

}  // TEST_SUITE
