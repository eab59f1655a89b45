#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cycomp/bigint.hpp"

namespace cycomp {

// Dense polynomial with exact integer coefficients; index = degree, no
// trailing zeros. The zero polynomial has an empty coefficient sequence.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;  // zero
  explicit ExactPolynomial(std::vector<BigInt> coeffs);

  static ExactPolynomial one();
  static ExactPolynomial monomial(int degree, BigInt coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  // Coefficient of t^i; zero outside the stored range.
  const BigInt& coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  ExactPolynomial operator+(const ExactPolynomial& o) const;
  ExactPolynomial operator-(const ExactPolynomial& o) const;
  ExactPolynomial operator*(const ExactPolynomial& o) const;
  ExactPolynomial operator*(const BigInt& s) const;

  std::string str() const;  // "t+6t^2+6t^3+t^4"
  // JSON text {"coeffs":["0","1",...]} with decimal strings, exact at any width.
  std::string to_json() const;

  friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

// Expansion p = sum_j gamma[j] t^j (1+t)^(center_degree - 2j).
struct GammaExpansion {
  int center_degree = 0;
  std::vector<BigInt> gamma;  // index j = 0..floor(center_degree/2), trailing zeros trimmed

  const BigInt& coeff(int j) const;
  bool all_nonnegative() const;
  // Smallest j with gamma[j] < 0, if any: a gamma-positivity failure is
  // data, not an error.
  std::optional<int> first_negative() const;
};

// p is not symmetric about center_degree/2: coeff(index) != coeff(center_degree - index).
struct SymmetryFailure {
  int index = 0;
};

using GammaResult = std::variant<GammaExpansion, SymmetryFailure>;

// Peels gamma_j from lowest degree upward. Requires center_degree >= degree(p);
// succeeds exactly when p is symmetric about center_degree/2.
GammaResult gamma_expand(const ExactPolynomial& p, int center_degree);

}  // namespace cycomp
