// Even integer polynomials sum_j c_j t^{2j} in the Conway variable t.
#ifndef CONWAY3_EVEN_POLY_HPP
#define CONWAY3_EVEN_POLY_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "conway3/big_int.hpp"

namespace conway3 {

class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class EvenPoly {
 public:
  EvenPoly() = default;
  /// Coefficients of t^0, t^2, t^4, ...
  EvenPoly(std::initializer_list<long> coeffs);
  explicit EvenPoly(std::vector<BigInt> coeffs);

  static EvenPoly constant(const BigInt& c) { return EvenPoly(std::vector<BigInt>{c}); }
  /// t^{2j}
  static EvenPoly t2_power(int j);

  /// Coefficient of t^{2j}; zero past the end.
  BigInt coeff(int j) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Highest j with a nonzero t^{2j} coefficient, -1 for zero.
  int half_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest j with a nonzero coefficient, -1 for zero.
  int lowest_half_degree() const;

  EvenPoly& operator+=(const EvenPoly& o);
  EvenPoly& operator-=(const EvenPoly& o);
  EvenPoly& operator*=(const BigInt& k);
  friend EvenPoly operator+(EvenPoly a, const EvenPoly& b) { return a += b; }
  friend EvenPoly operator-(EvenPoly a, const EvenPoly& b) { return a -= b; }
  friend EvenPoly operator-(EvenPoly a) { return a *= BigInt(-1); }
  friend EvenPoly operator*(EvenPoly a, const BigInt& k) { return a *= k; }
  friend EvenPoly operator*(const EvenPoly& a, const EvenPoly& b);

  /// Multiplies by t^{2j}.
  EvenPoly shifted(int j) const;
  /// Exact division by t^2; throws InexactDivision if the constant term is nonzero.
  EvenPoly divided_by_t2() const;
  /// Drops every coefficient of t^{2j} with j > max_j.
  EvenPoly truncated(int max_j) const;

  friend bool operator==(const EvenPoly&, const EvenPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// "1 + 3t^2 + t^4"
std::string to_string(const EvenPoly& p, const std::string& var = "t");
/// {"var":"t","even":true,"coeffs":[c0,c1,...]} with coefficient j of t^{2j}.
nlohmann::json to_json(const EvenPoly& p);
EvenPoly even_poly_from_json(const nlohmann::json& j);

}  // namespace conway3

#endif  // CONWAY3_EVEN_POLY_HPP
