#include <doctest.h>

#include <cmath>

#include "conway3/associator.hpp"
#include "conway3/verify.hpp"

using namespace conway3;

namespace {

RationalMzvCombination rational(const MzvCombination& m) {
  RationalMzvCombination out;
  for (const auto& [c, k] : m) out[c] = Rational(k);
  return out;
}

}  // namespace

TEST_SUITE("mzvassoc") {

TEST_CASE("low coefficients") {
  CHECK(associator_coefficient("ab") == MzvCombination{{{2}, -1}});
  CHECK(associator_coefficient("ba") == MzvCombination{{{2}, 1}});
  CHECK(associator_coefficient("aab") == MzvCombination{{{3}, -1}});
  CHECK(associator_coefficient("a").empty());
  CHECK(associator_coefficient("") == MzvCombination{{{}, 1}});

  // abab is zeta(2,2) up to double shuffle, whatever form it came out in
  RationalMzvCombination diff = rational(associator_coefficient("abab"));
  diff[{2, 2}] -= Rational(1);
  CHECK(vanishes_mod_double_shuffle(diff));
  CHECK(std::fabs(static_cast<double>(evaluate(associator_coefficient("abab"))) -
                  zeta({2, 2})) < 1e-12);
}

TEST_CASE("series support and truncation") {
  const AssociatorSeries phi = associator(6);
  CHECK(phi.coeffs.at("") == 1.0L);
  for (const auto& [w, c] : phi.coeffs) {
    CHECK(static_cast<int>(w.size()) <= 6);
    CHECK(c != 0.0L);
    CHECK(phi.symbolic.count(w) == 1);
    if (!w.empty()) CHECK(w.size() >= 2);  // no linear terms
  }
  // words made of one letter vanish
  CHECK(phi.coeffs.count("aaa") == 0);
  CHECK(phi.coeffs.count("bb") == 0);
  CHECK_THROWS_AS(associator(kMaxAssociatorDegree + 1), DegreeCapExceeded);
  CHECK_THROWS(associator(-1));
}

TEST_CASE("reference expansion") {
  const VerifyReport r = associator_fidelity(1e-8);
  CHECK(r.checked > 0);
  CHECK_MESSAGE(r.ok(), summary(r));
}

TEST_CASE("conjecture right-hand side") {
  CHECK(conjecture_rhs(1) == doctest::Approx(-1.644934).epsilon(1e-6));
  CHECK(conjecture_rhs(2) == doctest::Approx(-0.390314).epsilon(1e-5));
  CHECK(conjecture_rhs(3) == doctest::Approx(-0.332698).epsilon(1e-5));
  CHECK(conjecture_rhs(8) == doctest::Approx(-0.297505).epsilon(1e-5));
  CHECK(conjecture_rhs(1) == doctest::Approx(-zeta({2})));
}

TEST_CASE("chi on the associator") {
  const ConjecturePolynomial c = chi_on_associator(8);
  REQUIRE(c.coeffs.size() == 4);
  CHECK(c.coeffs[0] == doctest::Approx(-1.644934).epsilon(1e-6));
  CHECK(c.coeffs[1] == doctest::Approx(-0.390314).epsilon(1e-5));
  for (int n = 1; n <= 4; ++n) CHECK(std::fabs(c.coeffs[n - 1] - conjecture_rhs(n)) < 1e-9);
  for (double im : c.imag) CHECK(std::fabs(im) < kImaginaryTolerance);

  // a lower degree is a prefix
  const ConjecturePolynomial low = chi_on_associator(4);
  REQUIRE(low.coeffs.size() == 2);
  CHECK(low.coeffs[1] == doctest::Approx(c.coeffs[1]));
}

TEST_CASE("chi on the associator rejects bad input") {
  CHECK_THROWS(chi_on_associator(3));
  CHECK_THROWS_AS(chi_on_associator(kMaxAssociatorDegree + 2), DegreeCapExceeded);
  CHECK_THROWS_AS(chi_on_associator(4, TwoPiScaling::literal), ImaginaryResidue);
}

TEST_CASE("json") {
  const nlohmann::json j = to_json(chi_on_associator(4));
  CHECK(j.contains("coeffs"));
  CHECK(j["coeffs"].size() == 2);
  CHECK(to_json(associator(3)).contains("terms"));
}

}  // TEST_SUITE
