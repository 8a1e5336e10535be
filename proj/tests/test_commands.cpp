#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "conway3/associator.hpp"
#include "conway3/braid_word.hpp"
#include "conway3/commands.hpp"
#include "conway3/mzv.hpp"

using namespace conway3;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::function<int(std::ostream&)>& body) {
  std::ostringstream out, err;
  const int code = run_guarded([&] { return body(out); }, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config validation") {
  CHECK_NOTHROW(validate(Config{}));
  Config c;
  c.degree = -1;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = Config{};
  c.eps = 0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("comb") {
  const Run r = run([](std::ostream& o) { return cmd_comb("x12 x23", Config{}, o); });
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "x13 x23 x13^-1"));
  CHECK(run([](std::ostream& o) { return cmd_comb("", Config{}, o); }).out.find("identity") !=
        std::string::npos);
}

TEST_CASE("chi and conway agree on the trefoil") {
  const Run chi = run([](std::ostream& o) { return cmd_chi("x13", Config{}, false, o); });
  const Run conway = run([](std::ostream& o) { return cmd_conway("x13", Config{}, o); });
  CHECK(chi.code == kExitOk);
  CHECK(conway.code == kExitOk);
  CHECK(has(chi.out, "1 + t^2"));
  CHECK(has(conway.out, "1 + t^2"));
}

TEST_CASE("fraction input") {
  const Run r = run([](std::ostream& o) { return cmd_conway_fraction("5/1", Config{}, o); });
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "1 + 3t^2 + t^4"));
  CHECK(run([](std::ostream& o) { return cmd_conway_fraction("4/1", Config{}, o); }).code ==
        kExitUsage);
  CHECK(run([](std::ostream& o) { return cmd_conway_fraction("five", Config{}, o); }).code ==
        kExitUsage);
}

TEST_CASE("json output parses") {
  Config cfg;
  cfg.json = true;
  const Run r = run([&](std::ostream& o) { return cmd_conway("x13 x23^-1", cfg, o); });
  REQUIRE(r.code == kExitOk);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["fraction"]["p"] == "7");
  CHECK(j["alternating_word"] == nlohmann::json::array({1, -1}));
}

TEST_CASE("parse errors map to usage") {
  const Run r = run([](std::ostream& o) { return cmd_comb("x14", Config{}, o); });
  CHECK(r.code == kExitUsage);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("precision floor") {
  Config cfg;
  cfg.eps = 1e-16;
  CHECK(run([&](std::ostream& o) { return cmd_associator(4, cfg, o); }).code == kExitPrecision);
  CHECK(run([&](std::ostream& o) { return cmd_conjecture(2, false, cfg, o); }).code ==
        kExitPrecision);
}

TEST_CASE("exception mapping") {
  std::ostringstream err;
  CHECK(run_guarded([]() -> int { throw PrecisionUnattainable("p"); }, err) == kExitPrecision);
  CHECK(run_guarded([]() -> int { throw ImaginaryResidue("i"); }, err) == kExitPrecision);
  CHECK(run_guarded([]() -> int { throw std::invalid_argument("u"); }, err) == kExitUsage);
  CHECK(run_guarded([]() -> int { throw std::runtime_error("r"); }, err) == kExitMismatch);
  CHECK(run_guarded([] { return 0; }, err) == kExitOk);
}

TEST_CASE("verify and its negative control") {
  VerifyOptions opts;
  opts.max_len = 2;
  opts.random_len = 4;
  opts.subword_len = 4;
  Config cfg;
  cfg.samples = 20;
  CHECK(run([&](std::ostream& o) { return cmd_verify(opts, cfg, o); }).code == kExitOk);
  opts.corrupt_chi = true;
  CHECK(run([&](std::ostream& o) { return cmd_verify(opts, cfg, o); }).code == kExitMismatch);
}

TEST_CASE("conjecture table") {
  const Run r = run([](std::ostream& o) { return cmd_conjecture(3, false, Config{}, o); });
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "-1.644934"));
  CHECK(has(r.out, "-0.332698"));
  CHECK(run([](std::ostream& o) { return cmd_conjecture(2, true, Config{}, o); }).code ==
        kExitPrecision);
}

}  // TEST_SUITE
