#include "knots/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace knots {

namespace {

using Coeff = ConwayPoly::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

}  // namespace

ConwayPoly::ConwayPoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

ConwayPoly::ConwayPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ConwayPoly ConwayPoly::monomial(Coeff c, int degree) {
  std::vector<Coeff> v(degree + 1, 0);
  v[degree] = c;
  return ConwayPoly(std::move(v));
}

void ConwayPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ConwayPoly::Coeff ConwayPoly::coefficient(int n) const {
  if (n < 0 || n >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[n];
}

ConwayPoly ConwayPoly::times_t() const {
  if (is_zero()) return {};
  std::vector<Coeff> v(coeffs_.size() + 1, 0);
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + 1);
  return ConwayPoly(std::move(v));
}

ConwayPoly ConwayPoly::operator-() const {
  std::vector<Coeff> v = coeffs_;
  for (auto& c : v) c = checked_mul(c, -1);
  return ConwayPoly(std::move(v));
}

ConwayPoly operator+(const ConwayPoly& a, const ConwayPoly& b) {
  std::vector<Coeff> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(a.coefficient(static_cast<int>(i)), b.coefficient(static_cast<int>(i)));
  return ConwayPoly(std::move(v));
}

ConwayPoly operator-(const ConwayPoly& a, const ConwayPoly& b) { return a + (-b); }

ConwayPoly operator*(const ConwayPoly& a, const ConwayPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] = checked_add(v[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  return ConwayPoly(std::move(v));
}

std::string to_string(const ConwayPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= p.degree(); ++n) {
    Coeff c = p.coefficient(n);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Coeff mag = c < 0 ? -c : c;
    if (n == 0 || mag != 1) os << mag;
    if (n >= 1) os << 't';
    if (n >= 2) os << '^' << n;
    first = false;
  }
  return os.str();
}

ConwayPoly parse_polynomial(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&] { return std::invalid_argument("malformed polynomial '" + std::string(text) + "'"); };
  if (s.empty()) throw fail();
  std::vector<Coeff> coeffs;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw fail();
    }
    first = false;
    Coeff mag = 0;
    bool digits = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mag = checked_add(checked_mul(mag, 10), s[i] - '0');
      digits = true;
      ++i;
    }
    int degree = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      degree = 1;
      if (!digits) mag = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        degree = 0;
        bool exp_digits = false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          degree = degree * 10 + (s[i] - '0');
          exp_digits = true;
          ++i;
        }
        if (!exp_digits) throw fail();
      }
    } else if (!digits) {
      throw fail();
    }
    if (static_cast<int>(coeffs.size()) <= degree) coeffs.resize(degree + 1, 0);
    coeffs[degree] = checked_add(coeffs[degree], sign * mag);
  }
  return ConwayPoly(std::move(coeffs));
}

}  // namespace knots
