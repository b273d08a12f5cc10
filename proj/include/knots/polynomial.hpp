#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace knots {

// Integer polynomial in t, coefficients in ascending degree with trailing
// zeros trimmed (the zero polynomial has no coefficients). Arithmetic
// throws std::overflow_error instead of wrapping.
class ConwayPoly {
 public:
  using Coeff = std::int64_t;

  ConwayPoly() = default;
  ConwayPoly(std::initializer_list<Coeff> coeffs);
  explicit ConwayPoly(std::vector<Coeff> coeffs);

  static ConwayPoly constant(Coeff c) { return ConwayPoly({c}); }
  static ConwayPoly monomial(Coeff c, int degree);

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // Coefficient of t^n; 0 outside the stored range (including n = -1).
  Coeff coefficient(int n) const;

  ConwayPoly times_t() const;
  ConwayPoly operator-() const;
  friend ConwayPoly operator+(const ConwayPoly& a, const ConwayPoly& b);
  friend ConwayPoly operator-(const ConwayPoly& a, const ConwayPoly& b);
  friend ConwayPoly operator*(const ConwayPoly& a, const ConwayPoly& b);
  friend bool operator==(const ConwayPoly&, const ConwayPoly&) = default;

 private:
  void trim();
  std::vector<Coeff> coeffs_;
};

// "1 + 3t^2 + t^4", "-t^3", "0".
std::string to_string(const ConwayPoly& p);
ConwayPoly parse_polynomial(std::string_view text);

}  // namespace knots
