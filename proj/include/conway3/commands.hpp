// Subcommands of the conway3 binary. Each writes to `out` and returns an exit
// code; errors propagate as exceptions and are mapped by run_guarded.
#ifndef CONWAY3_COMMANDS_HPP
#define CONWAY3_COMMANDS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace conway3 {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitPrecision = 3 };

struct Config {
  int degree = 8;         // truncation degree N
  int subword_cap = 16;
  std::uint64_t seed = 20240601;
  int samples = 500;
  double eps = 1e-8;
  bool json = false;
};

void validate(const Config& cfg);  // throws std::invalid_argument

int cmd_comb(const std::string& word, const Config& cfg, std::ostream& out);
int cmd_magnus(const std::string& word, const Config& cfg, std::ostream& out);
int cmd_reduce(const std::string& letters, std::ostream& out);
int cmd_chi(const std::string& word, const Config& cfg, bool explicit_route, std::ostream& out);
int cmd_conway(const std::string& word, const Config& cfg, std::ostream& out);
int cmd_conway_fraction(const std::string& fraction, const Config& cfg, std::ostream& out);
int cmd_closure(const std::string& word, const Config& cfg, std::ostream& out);
int cmd_cf(const std::string& word, const Config& cfg, std::ostream& out);
int cmd_fraction(const std::string& word, const Config& cfg, std::ostream& out);

struct VerifyOptions {
  int max_len = 4;
  int random_len = 8;
  int max_exp = 3;
  int subword_len = 8;
  bool corrupt_chi = false;  // negative control: flips the sign of primed codes
};
int cmd_verify(const VerifyOptions& opts, const Config& cfg, std::ostream& out);

int cmd_associator(int degree, const Config& cfg, std::ostream& out);
int cmd_conjecture(int n, bool literal_scaling, const Config& cfg, std::ostream& out);

/// Runs `body`, printing any exception to `err` and mapping it to an exit code.
int run_guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace conway3

#endif  // CONWAY3_COMMANDS_HPP
