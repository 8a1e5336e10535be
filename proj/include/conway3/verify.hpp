// Batch checks shared by the CLI `verify` command and the acceptance runner.
#ifndef CONWAY3_VERIFY_HPP
#define CONWAY3_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "conway3/braid_word.hpp"
#include "conway3/chi_symbol.hpp"
#include "conway3/mzv.hpp"

namespace conway3 {

struct Mismatch {
  std::string input;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string name;
  long checked = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  void merge(const VerifyReport& other);
};

std::string summary(const VerifyReport& r);

/// Every word of at most max_len letters x_ij^{+-1}, as typed (not reduced
/// before combing, though BraidWord merges adjacent letters).
std::vector<BraidWord> all_words(int max_len);

/// Seeded words with 1..max_len syllables and exponents in [-max_exp, max_exp] \ {0}.
std::vector<BraidWord> random_words(int samples, int max_len, int max_exp, std::uint64_t seed);

/// chi of mu3 against the two-bridge oracle. Each word is expanded to twice
/// the oracle degree plus a margin of two extra t^2 powers, which must vanish.
VerifyReport oracle_equivalence(const std::vector<BraidWord>& words, const ChiRules& rules = {});

/// chi by the explicit rules against the signed subword sum of Conway
/// polynomials of closures, for all B/C words up to max_len.
VerifyReport subword_identity(int max_len, const ChiRules& rules = {});

/// Laurent polynomial in the associator variables a, b with rational MZV
/// coefficients; the key of the inner map is the MZV monomial.
using MzvPolynomial = std::map<ABWord, RationalMzvCombination>;

/// The closed-form expansion of Phi through degree 4 in nested commutators,
/// with zeta(2)^2 rewritten through the stuffle product.
MzvPolynomial reference_associator_degree4();

/// Associator coefficients against reference_associator_degree4: exact, modulo
/// double shuffle, and numerically within eps.
VerifyReport associator_fidelity(double eps);

}  // namespace conway3

#endif  // CONWAY3_VERIFY_HPP
