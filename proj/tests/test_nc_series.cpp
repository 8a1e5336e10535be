#include <doctest.h>

#include <random>

#include "conway3/nc_series.hpp"
#include "support.hpp"

using namespace conway3;
using conway3::testing::random_braid;
using conway3::testing::random_word;
using conway3::testing::series;

TEST_SUITE("ncseries") {

TEST_CASE("words") {
  const Word w = Word::from_string("CBA");
  CHECK(w.size() == 3);
  CHECK(w.to_string() == "CBA");
  CHECK(Word{}.to_string() == "1");
  CHECK(w.prefix(2).to_string() == "CB");
  CHECK(w.suffix_from(1).to_string() == "BA");
  CHECK(w.count(Chord::B) == 1);
  CHECK(Word::from_string("B") < Word::from_string("AA"));  // shorter first
  CHECK_THROWS(Word::from_string("D"));
}

TEST_CASE("ring operations") {
  CHECK(series({{"", 1}, {"A", 1}}, 2) * series({{"", 1}, {"A", -1}}, 2) ==
        series({{"", 1}, {"AA", -1}}, 2));
  CHECK(series({{"", 1}, {"C", 1}}, 3) * IntSeries::one(3) == series({{"", 1}, {"C", 1}}, 3));
  CHECK(series({{"", 1}, {"B", 1}}, 2) * series({{"", 1}, {"C", 1}}, 2) ==
        series({{"", 1}, {"B", 1}, {"C", 1}, {"BC", 1}}, 2));
  CHECK_THROWS_AS(IntSeries::one(2) * IntSeries::one(3), DegreeMismatch);
  CHECK_THROWS_AS(IntSeries::one(2) + IntSeries::one(3), DegreeMismatch);
  // terms above the bound are never stored
  CHECK(series({{"ABC", 5}}, 2).is_zero());
}

TEST_CASE("multiplication is associative and distributive") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    auto rnd = [&] {
      IntSeries s(5);
      for (int k = 0; k < 4; ++k) s.add_term(random_word(rng, 3), BigInt(int(rng() % 7) - 3));
      return s;
    };
    const IntSeries a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("geometric powers") {
  CHECK(geom_power(Chord::C, 1, 5) == series({{"", 1}, {"C", 1}}, 5));
  CHECK(geom_power(Chord::C, -1, 3) == series({{"", 1}, {"C", -1}, {"CC", 1}, {"CCC", -1}}, 3));
  CHECK(geom_power(Chord::B, 2, 2) == series({{"", 1}, {"B", 2}, {"BB", 1}}, 2));
  CHECK(geom_power(Chord::A, -2, 2) == series({{"", 1}, {"A", -2}, {"AA", 3}}, 2));
  CHECK_THROWS(geom_power(Chord::A, 0, 2));
  CHECK(geom_power(Chord::B, -3, 6) * geom_power(Chord::B, 3, 6) == IntSeries::one(6));
}

TEST_CASE("magnus expansion") {
  CHECK(magnus3(comb(parse_braid("x13")), 4) == series({{"", 1}, {"C", 1}}, 4));
  // 1 + t12 + t23 + t13 t23 - t23 t13 + t23 t12 + ...
  CHECK(magnus3(comb(parse_braid("x12 x23")), 2) ==
        series({{"", 1}, {"A", 1}, {"B", 1}, {"CB", 1}, {"BC", -1}, {"BA", 1}}, 2));
  CHECK(magnus3(comb(parse_braid("x13^-1")), 4) ==
        series({{"", 1}, {"C", -1}, {"CC", 1}, {"CCC", -1}, {"CCCC", 1}}, 4));
}

TEST_CASE("magnus expansion truncates consistently") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const CombedForm cf = comb(random_braid(rng, 4, 2));
    const IntSeries full = magnus3(cf, 6);
    for (int n = 0; n < 6; ++n) CHECK(full.truncated(n) == magnus3(cf, n));
  }
}

TEST_CASE("magnus expansion is multiplicative on the free factor") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    const CombedForm u = comb(random_braid(rng, 4));
    const CombedForm v = comb(random_braid(rng, 4));
    CombedForm uv{u.tail * v.tail, 0};
    CHECK(magnus3(uv, 5) == magnus3({u.tail, 0}, 5) * magnus3({v.tail, 0}, 5));
  }
}

TEST_CASE("nu3 and mu3 on positive words") {
  CHECK(nu3(Word{}) == SubwordSum{{Word{}, 1}});
  CHECK(nu3(Word::from_string("C")) == SubwordSum{{Word::from_string("C"), 1}, {Word{}, -1}});
  CHECK(nu3(Word::from_string("CB")) == SubwordSum{{Word::from_string("CB"), 1},
                                                   {Word::from_string("C"), -1},
                                                   {Word::from_string("B"), -1},
                                                   {Word{}, 1}});
  CHECK(mu3_positive(Word::from_string("C"), 3) == series({{"", 1}, {"C", 1}}, 3));
  CHECK(mu3_positive(Word::from_string("CB"), 3) ==
        series({{"", 1}, {"C", 1}, {"B", 1}, {"CB", 1}}, 3));
  CHECK(mu3_positive(Word{}, 3) == IntSeries::one(3));
  // repeated letters count positions, not distinct words
  CHECK(mu3_positive(Word::from_string("CC"), 2).coeff(Word::from_string("C")) == 2);
}

TEST_CASE("subword cap") {
  CHECK_THROWS_AS(nu3(Word::repeat(Chord::B, 17)), SubwordCapExceeded);
  CHECK_NOTHROW(nu3(Word::repeat(Chord::B, 17), 17));
  CHECK_THROWS_AS(mu3_positive(Word::repeat(Chord::C, 5), 5, 4), SubwordCapExceeded);
}

TEST_CASE("nu3 is a left inverse of mu3") {
  auto check = [](const Word& w) {
    const SubwordSum back = nu3(mu3_positive(w, w.size()));
    CHECK(back == SubwordSum{{w, 1}});
  };
  for (int len = 0; len <= 6; ++len) {
    int total = 1;
    for (int i = 0; i < len; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      std::string s;
      for (int i = 0, c = code; i < len; ++i, c /= 3) s += "ABC"[c % 3];
      check(Word::from_string(s));
    }
  }
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    Word w = random_word(rng, 10);
    while (w.size() < 7) w.push_back(Chord::B);
    check(w);
  }
}

TEST_CASE("magnus of a positive combed word is mu3_positive") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    const Word w = random_word(rng, 9, "BC");
    const BraidWord b = braid_of(w);
    if (!(positive_word(b) == w)) continue;  // adjacent letters merged into powers
    CHECK(magnus3(comb(b), 9) == mu3_positive(w, 9));
  }
  // merged powers are still positive words
  CHECK(magnus3(comb(parse_braid("x13^2 x23")), 3) == mu3_positive(Word::from_string("CCB"), 3));
}

TEST_CASE("json round trip") {
  const IntSeries s = magnus3(comb(parse_braid("x12 x23^-2")), 3);
  const nlohmann::json j = to_json(s);
  CHECK(j["N"] == 3);
  CHECK(j["terms"][0]["word"] == "");
  CHECK(j["terms"][0]["coeff"] == "1");
  CHECK(int_series_from_json(j) == s);
}

TEST_CASE("complex coefficients") {
  const ComplexSeries s = magnus3(comb(parse_braid("x12 x23")), 2)
                              .map_coefficients<std::complex<double>>([](const BigInt& c) {
                                return std::complex<double>(c.convert_to<double>(), 0.0);
                              });
  const ComplexSeries sq = s * s;
  CHECK(sq.coeff(Word::from_string("A")).real() == doctest::Approx(2.0));
  CHECK(sq.coeff(Word::from_string("AB")).real() == doctest::Approx(1.0));
}

}  // TEST_SUITE
