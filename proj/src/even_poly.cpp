#include "conway3/even_poly.hpp"

#include <sstream>

namespace conway3 {

EvenPoly::EvenPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

EvenPoly::EvenPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

EvenPoly EvenPoly::t2_power(int j) {
  std::vector<BigInt> c(static_cast<std::size_t>(j) + 1);
  c.back() = 1;
  return EvenPoly(std::move(c));
}

void EvenPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt EvenPoly::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[j];
}

int EvenPoly::lowest_half_degree() const {
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return static_cast<int>(j);
  return -1;
}

EvenPoly& EvenPoly::operator+=(const EvenPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  trim();
  return *this;
}

EvenPoly& EvenPoly::operator-=(const EvenPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  trim();
  return *this;
}

EvenPoly& EvenPoly::operator*=(const BigInt& k) {
  for (auto& c : coeffs_) c *= k;
  trim();
  return *this;
}

EvenPoly operator*(const EvenPoly& a, const EvenPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return EvenPoly(std::move(c));
}

EvenPoly EvenPoly::shifted(int j) const {
  if (is_zero()) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(j), BigInt(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return EvenPoly(std::move(c));
}

EvenPoly EvenPoly::divided_by_t2() const {
  if (is_zero()) return {};
  if (coeffs_[0] != 0)
    throw InexactDivision("division by t^2 leaves remainder " + coeffs_[0].str());
  return EvenPoly(std::vector<BigInt>(coeffs_.begin() + 1, coeffs_.end()));
}

EvenPoly EvenPoly::truncated(int max_j) const {
  if (max_j < 0) return {};
  if (static_cast<int>(coeffs_.size()) <= max_j + 1) return *this;
  return EvenPoly(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + max_j + 1));
}

std::string to_string(const EvenPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    const BigInt& c = p.coeffs()[j];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (j == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << var << '^' << 2 * j;
  }
  return out.str();
}

nlohmann::json to_json(const EvenPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      coeffs.push_back(c.convert_to<long long>());
    else
      coeffs.push_back(c.str());
  }
  return {{"var", "t"}, {"even", true}, {"coeffs", coeffs}};
}

EvenPoly even_poly_from_json(const nlohmann::json& j) {
  std::vector<BigInt> c;
  for (const auto& x : j.at("coeffs")) {
    if (x.is_string())
      c.emplace_back(x.get<std::string>());
    else
      c.emplace_back(x.get<long long>());
  }
  return EvenPoly(std::move(c));
}

}  // namespace conway3
