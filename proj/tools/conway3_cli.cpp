// conway3: combing, Magnus expansion, the Conway symbol and its two-bridge
// oracle, and the associator evaluation, from the command line.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "conway3/commands.hpp"

int main(int argc, char** argv) {
  using namespace conway3;

  CLI::App app{"Conway polynomial symbol for pure 3-braids"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("-N,--degree", cfg.degree, "truncation degree");
  app.add_option("--samples", cfg.samples, "random samples for verify");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--eps", cfg.eps, "target precision for MZV values");
  app.add_flag("--json", cfg.json, "JSON output");

  std::string word;
  auto braid_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("word", word, "braid word, e.g. \"x12 x23^-1\"")->required();
    return sub;
  };

  CLI::App* comb_cmd = braid_command("comb", "combed form tail(x13, x23) · x12^e");
  CLI::App* magnus_cmd = braid_command("magnus", "Magnus expansion of the combed form");
  CLI::App* chi_cmd = braid_command("chi", "Conway coefficients through chi of the Magnus expansion");
  bool explicit_route = false;
  chi_cmd->add_flag("--explicit", explicit_route, "expand mu3 in full before reducing");

  CLI::App* conway_cmd = app.add_subcommand("conway", "Conway polynomial through the two-bridge oracle");
  conway_cmd->add_option("word", word, "braid word");
  std::string fraction;
  conway_cmd->add_option("--fraction", fraction, "two-bridge knot p/q instead of a braid");

  CLI::App* closure_cmd = braid_command("closure", "alternating word of the closure");
  CLI::App* cf_cmd = braid_command("cf", "continued fraction of the closure");
  CLI::App* fraction_cmd = braid_command("fraction", "two-bridge fraction of the closure");

  std::string letters;
  CLI::App* reduce_cmd = app.add_subcommand("reduce", "descending normal form of a word in A, B, C");
  reduce_cmd->add_option("letters", letters, "e.g. ABC")->required();

  VerifyOptions vopts;
  CLI::App* verify_cmd = app.add_subcommand("verify", "oracle-equivalence and subword suites");
  verify_cmd->add_option("--max-len", vopts.max_len, "exhaustive word length");
  verify_cmd->add_option("--random-len", vopts.random_len, "syllables per random word");
  verify_cmd->add_option("--max-exp", vopts.max_exp, "largest |exponent| in random words");
  verify_cmd->add_option("--subword-len", vopts.subword_len, "longest B/C word for the subword identity");
  verify_cmd->add_flag("--corrupt-chi", vopts.corrupt_chi, "negative control: wrong sign on primed codes");

  CLI::App* assoc_cmd = app.add_subcommand("associator", "associator coefficients up to --degree (<= 12)");

  int conj_n = 5;
  bool literal = false;
  CLI::App* conj_cmd = app.add_subcommand("conjecture", "chi on the associator against the MZV sums");
  conj_cmd->add_option("--n", conj_n, "number of T^2n coefficients");
  conj_cmd->add_flag("--literal-scaling", literal, "apply t = 2 pi i T to every term");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  return run_guarded(
      [&]() -> int {
        validate(cfg);
        std::ostream& out = std::cout;
        if (comb_cmd->parsed()) return cmd_comb(word, cfg, out);
        if (magnus_cmd->parsed()) return cmd_magnus(word, cfg, out);
        if (chi_cmd->parsed()) return cmd_chi(word, cfg, explicit_route, out);
        if (conway_cmd->parsed()) {
          if (!fraction.empty()) return cmd_conway_fraction(fraction, cfg, out);
          return cmd_conway(word, cfg, out);
        }
        if (closure_cmd->parsed()) return cmd_closure(word, cfg, out);
        if (cf_cmd->parsed()) return cmd_cf(word, cfg, out);
        if (fraction_cmd->parsed()) return cmd_fraction(word, cfg, out);
        if (reduce_cmd->parsed()) return cmd_reduce(letters, out);
        if (verify_cmd->parsed()) return cmd_verify(vopts, cfg, out);
        if (assoc_cmd->parsed()) return cmd_associator(cfg.degree, cfg, out);
        if (conj_cmd->parsed()) return cmd_conjecture(conj_n, literal, cfg, out);
        return kExitUsage;
      },
      std::cerr);
}
