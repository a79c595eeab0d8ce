#pragma once

#include "qhyp/laurent.hpp"

namespace qhyp {

struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Element of the field Q(q) of rational functions in q, held in canonical
/// form: integer Laurent numerator over an ordinary integer polynomial
/// denominator with nonzero constant term and positive leading coefficient,
/// the two sharing no polynomial factor and no common content. Equality is
/// structural.
class QScalar {
 public:
  QScalar() : den_(1) {}
  QScalar(long n) : num_(n), den_(1) {}
  QScalar(const mpz_class& n) : num_(n), den_(1) {}
  QScalar(const mpq_class& r) : num_(r.get_num()), den_(r.get_den()) { canonicalize(); }
  explicit QScalar(Laurent num) : num_(std::move(num)), den_(1) {}
  QScalar(Laurent num, Laurent den);

  static QScalar q(int power = 1) { return QScalar(Laurent::q(power)); }
  /// q-integer b_i = (q^i - q^-i)/(q - q^-1); b_{-i} = -b_i.
  static QScalar qint(long i);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }

  QScalar operator-() const;
  friend QScalar operator+(const QScalar& a, const QScalar& b);
  friend QScalar operator-(const QScalar& a, const QScalar& b);
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  friend QScalar operator/(const QScalar& a, const QScalar& b);
  QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
  QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
  QScalar& operator/=(const QScalar& o) { return *this = *this / o; }
  bool operator==(const QScalar& o) const = default;

  QScalar inverse() const;
  QScalar pow(long e) const;

  /// Exact value at q = q0; throws PoleError if the canonical denominator
  /// vanishes there, std::domain_error for q0 = 0.
  mpq_class eval_at(const mpq_class& q0) const;

  std::string str() const;
  static QScalar parse(const std::string& text);

 private:
  void canonicalize();

  Laurent num_;
  Laurent den_;
};

/// Complexification of Q(q) as pairs; conjugation negates the imaginary part
/// (q itself is treated as real).
class CScalar {
 public:
  CScalar() = default;
  CScalar(long n) : re_(n) {}
  CScalar(QScalar re) : re_(std::move(re)) {}
  CScalar(QScalar re, QScalar im) : re_(std::move(re)), im_(std::move(im)) {}

  static CScalar i() { return CScalar(QScalar(0), QScalar(1)); }

  const QScalar& re() const { return re_; }
  const QScalar& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  CScalar conj() const { return CScalar(re_, -im_); }
  CScalar operator-() const { return CScalar(-re_, -im_); }
  friend CScalar operator+(const CScalar& a, const CScalar& b) {
    return CScalar(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend CScalar operator-(const CScalar& a, const CScalar& b) {
    return CScalar(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend CScalar operator*(const CScalar& a, const CScalar& b) {
    return CScalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend CScalar operator/(const CScalar& a, const CScalar& b) { return a * b.inverse(); }
  CScalar& operator+=(const CScalar& o) { return *this = *this + o; }
  CScalar& operator-=(const CScalar& o) { return *this = *this - o; }
  CScalar& operator*=(const CScalar& o) { return *this = *this * o; }
  bool operator==(const CScalar& o) const = default;

  CScalar inverse() const {
    QScalar n = re_ * re_ + im_ * im_;
    return CScalar(re_ / n, -(im_ / n));
  }

  std::string str() const;

 private:
  QScalar re_;
  QScalar im_;
};

}  // namespace qhyp
