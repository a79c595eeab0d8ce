#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qhyp {

/// Laurent polynomial in q with arbitrary-precision integer coefficients,
/// stored as a dense coefficient block plus an exponent offset:
///   sum_i c[i] * q^(lo + i).
/// Normalized form: either empty (zero) or first and last coefficients nonzero.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long n) : c_{mpz_class(n)} { trim(); }
  Laurent(const mpz_class& n) : c_{n} { trim(); }

  /// coeff * q^power
  static Laurent term(const mpz_class& coeff, int power);
  static Laurent q(int power = 1) { return term(1, power); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && lo_ == 0 && c_[0] == 1; }

  // Exponent range; only meaningful for nonzero polynomials.
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }

  const mpz_class& leading() const { return c_.back(); }
  mpz_class coeff(int power) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  Laurent operator-() const;
  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  bool operator==(const Laurent& o) const = default;

  /// Multiply by q^k.
  Laurent shifted(int k) const;

  /// gcd of |coefficients|; 0 for the zero polynomial.
  mpz_class content() const;
  void divide_content(const mpz_class& g);

  /// Exact evaluation at q = q0 (q0 != 0 required when lo() < 0).
  mpq_class eval(const mpq_class& q0) const;

  /// Rendered in descending powers, e.g. "q^2 + 1 + q^-2".
  std::string str() const;

 private:
  void trim();

  int lo_ = 0;
  std::vector<mpz_class> c_;
};

/// gcd of the ordinary-polynomial parts (exponent offsets ignored),
/// primitive with positive leading coefficient. Both inputs nonzero.
Laurent poly_gcd(const Laurent& a, const Laurent& b);

/// Exact division a / b; throws std::logic_error if not exact.
Laurent poly_div_exact(const Laurent& a, const Laurent& b);

}  // namespace qhyp
