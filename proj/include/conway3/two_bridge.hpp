// Conway polynomials of short-circuit closures of 3-braids, computed through
// the two-bridge knot they close up to.
#ifndef CONWAY3_TWO_BRIDGE_HPP
#define CONWAY3_TWO_BRIDGE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "conway3/big_int.hpp"
#include "conway3/braid_word.hpp"
#include "conway3/even_poly.hpp"

namespace conway3 {

class NotAKnot : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exponents (a1, b1, a2, b2, ...) of x13^a1 x23^b1 x13^a2 ...; may end on an a.
struct AlternatingWord {
  std::vector<long> exponents;

  bool ends_in_a() const { return exponents.size() % 2 == 1; }
  friend bool operator==(const AlternatingWord&, const AlternatingWord&) = default;
};

/// Denominators c1, c2, ... of c1 + 1/(c2 + 1/(...)).
struct ContinuedFraction {
  std::vector<BigInt> terms;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Reduced p/q with q >= 0; 1/0 is the point at infinity.
struct Fraction {
  BigInt p = 0;
  BigInt q = 1;

  static Fraction make(BigInt num, BigInt den);
  bool is_infinite() const { return q == 0; }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

std::string to_string(const Fraction& f);
std::string to_string(const ContinuedFraction& cf);
std::string to_string(const AlternatingWord& w);

/// Integer Laurent polynomial in t.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::map<int, BigInt> terms);

  const std::map<int, BigInt>& terms() const { return terms_; }
  BigInt coeff(int e) const;
  BigInt value_at_one() const;
  bool is_symmetric() const;
  /// Shifts to a symmetric exponent range and fixes the sign so that the
  /// value at t = 1 is positive.
  LaurentPoly symmetrized() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, BigInt> terms_;
};

std::string to_string(const LaurentPoly& d);

/// Drops the x12 block and a leading x23 block, neither of which changes the
/// closure, and groups the rest into alternating exponent blocks.
AlternatingWord closure_word(const CombedForm& cf);

/// (2a1, -2b1, ..., 2ak, -2bk + 1) or (2a1, -2b1, ..., -2bk, 2a_{k+1} + 1).
/// The empty word gives (1), the unknot.
ContinuedFraction word_to_cf(const AlternatingWord& w);

/// Evaluates right to left over Q and infinity.
Fraction cf_to_fraction(const ContinuedFraction& cf);

/// Fractions with |p| up to this bound go through the O(|p|) exponent-sum
/// formula; larger ones through a tridiagonal Seifert matrix.
inline const BigInt kStaircaseLimit = 200001;

/// Alexander polynomial of the two-bridge knot p/q, symmetric, value 1 at t=1.
/// Throws NotAKnot for even p (links) and p = 0.
LaurentPoly alexander_2bridge(const Fraction& f);
/// Delta(t) = sum_{i<|p|} (-1)^i t^{e_i}, e_i = sum_{k<=i} (-1)^{floor(k q'/p)}, q' odd.
LaurentPoly alexander_staircase(const Fraction& f);
/// Conway polynomial from the even continued fraction p/q = [2c1, ..., 2cn]:
/// the continuant of (c1 z, -c2 z, c3 z, ...), the determinant of the
/// tridiagonal Seifert form of the plumbed bands.
EvenPoly conway_continuant(const Fraction& f);
/// All-even continued fraction of p/q; needs p odd, and q is first moved to
/// the even representative of its class mod p.
ContinuedFraction even_continued_fraction(const Fraction& f);

/// Rewrites a symmetric Delta in powers of z^2 = t - 2 + 1/t.
EvenPoly conway_from_alexander(const LaurentPoly& d);
/// Inverse change of variables.
LaurentPoly alexander_from_conway(const EvenPoly& c);

EvenPoly conway_of_fraction(const Fraction& f);

/// Every intermediate stage of conway_of_braid, for inspection.
struct ClosureTrace {
  CombedForm combed;
  AlternatingWord word;
  ContinuedFraction cf;
  Fraction fraction;
  LaurentPoly alexander;
  EvenPoly conway;
};

ClosureTrace trace_closure(const BraidWord& w);
EvenPoly conway_of_braid(const BraidWord& w);

nlohmann::json to_json(const ClosureTrace& t);

}  // namespace conway3

#endif  // CONWAY3_TWO_BRIDGE_HPP
