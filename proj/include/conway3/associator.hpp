// The Drinfeld associator with shuffle-regularized MZV coefficients, and the
// value of the complexified Conway symbol on it.
#ifndef CONWAY3_ASSOCIATOR_HPP
#define CONWAY3_ASSOCIATOR_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "conway3/mzv.hpp"

namespace conway3 {

constexpr int kMaxAssociatorDegree = 12;

class DegreeCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when chi on the associator is not real to the tolerance.
class ImaginaryResidue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AssociatorSeries {
  int degree = 0;
  std::map<ABWord, long double> coeffs;        // nonzero coefficients only
  std::map<ABWord, MzvCombination> symbolic;   // same keys
};

/// Coefficient of w is (-1)^{depth w} times its regularized value.
MzvCombination associator_coefficient(std::string_view w);
AssociatorSeries associator(int degree);

struct ConjecturePolynomial {
  std::vector<double> coeffs;  // coeffs[n-1] multiplies T^{2n}
  std::vector<double> imag;    // imaginary residue before it was dropped
};

constexpr double kImaginaryTolerance = 1e-6;

/// How powers of 2 pi i are booked. A degree-d word of Phi carries
/// (2 pi i)^{-d} from a = A/2 pi i; its chi term t^{2j} becomes T^{2j} times
///   matched: (2 pi i)^d, so the factors cancel word by word;
///   literal: (2 pi i)^{2j}, i.e. t = 2 pi i T applied to every term.
/// Only `matched` reproduces the printed low-order coefficients; `literal`
/// leaves an imaginary residue from the odd-degree words.
enum class TwoPiScaling { matched, literal };

/// chi on the associator, coefficients of T^2 .. T^degree.
ConjecturePolynomial chi_on_associator(int degree, TwoPiScaling scaling = TwoPiScaling::matched);

/// sum_{k=1}^{n} (-1)^k (sum of zeta(l1..lk) over l_i >= 2, weight n+k).
double conjecture_rhs(int n);

nlohmann::json to_json(const AssociatorSeries& s);
nlohmann::json to_json(const ConjecturePolynomial& c);

}  // namespace conway3

#endif  // CONWAY3_ASSOCIATOR_HPP
