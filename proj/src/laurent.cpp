#include "qhyp/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qhyp {

void Laurent::trim() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  size_t tail = c_.size();
  while (c_[tail - 1] == 0) --tail;
  if (lead > 0) lo_ += static_cast<int>(lead);
  c_ = std::vector<mpz_class>(c_.begin() + lead, c_.begin() + tail);
}

Laurent Laurent::term(const mpz_class& coeff, int power) {
  Laurent r;
  r.lo_ = power;
  r.c_ = {coeff};
  r.trim();
  return r;
}

mpz_class Laurent::coeff(int power) const {
  if (is_zero() || power < lo_ || power > hi()) return 0;
  return c_[power - lo_];
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int lo = std::min(a.lo_, b.lo_);
  int hi = std::max(a.hi(), b.hi());
  Laurent r;
  r.lo_ = lo;
  r.c_.assign(hi - lo + 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[a.lo_ - lo + i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[b.lo_ - lo + i] += b.c_[i];
  r.trim();
  return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return Laurent();
  Laurent r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

Laurent Laurent::shifted(int k) const {
  if (is_zero()) return *this;
  Laurent r = *this;
  r.lo_ += k;
  return r;
}

mpz_class Laurent::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void Laurent::divide_content(const mpz_class& g) {
  if (g == 1) return;
  for (auto& x : c_) {
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    x = r;
  }
}

mpq_class Laurent::eval(const mpq_class& q0) const {
  if (is_zero()) return 0;
  if (q0 == 0 && lo_ < 0) throw std::domain_error("Laurent::eval: q = 0 with negative powers");
  // Horner on the polynomial part, then the offset power.
  mpq_class acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * q0 + mpq_class(c_[i]);
  mpq_class p = 1;
  int e = lo_ >= 0 ? lo_ : -lo_;
  for (int i = 0; i < e; ++i) p *= q0;
  if (lo_ < 0) {
    if (p == 0) throw std::domain_error("Laurent::eval: q = 0 with negative powers");
    acc /= p;
  } else {
    acc *= p;
  }
  acc.canonicalize();
  return acc;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int p = hi(); p >= lo_; --p) {
    mpz_class k = coeff(p);
    if (k == 0) continue;
    bool neg = k < 0;
    mpz_class a = abs(k);
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (a != 1 || p == 0) {
      out << a.get_str();
      if (p != 0) out << "*";
    }
    if (p != 0) {
      out << "q";
      if (p != 1) out << "^" << p;
    }
  }
  return out.str();
}

namespace {

using Coeffs = std::vector<mpz_class>;

void trim_vec(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

mpz_class vec_content(const Coeffs& a) {
  mpz_class g = 0;
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

void make_primitive(Coeffs& a) {
  mpz_class g = vec_content(a);
  if (g == 0 || g == 1) return;
  for (auto& x : a) {
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    x = r;
  }
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
Coeffs prem(Coeffs a, const Coeffs& b) {
  const mpz_class& lcb = b.back();
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    mpz_class lca = a.back();
    for (auto& x : a) x *= lcb;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= lca * b[i];
    trim_vec(a);
  }
  return a;
}

}  // namespace

Laurent poly_gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) throw std::logic_error("poly_gcd: zero input");
  Coeffs A = a.coeffs(), B = b.coeffs();
  make_primitive(A);
  make_primitive(B);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    Coeffs R = prem(A, B);
    make_primitive(R);
    A = std::move(B);
    B = std::move(R);
  }
  if (A.back() < 0)
    for (auto& x : A) x = -x;
  Laurent g;
  for (size_t i = 0; i < A.size(); ++i) g = g + Laurent::term(A[i], static_cast<int>(i));
  return g;
}

Laurent poly_div_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::logic_error("poly_div_exact: division by zero");
  if (a.is_zero()) return Laurent();
  Coeffs A = a.coeffs();
  const Coeffs& B = b.coeffs();
  int db = static_cast<int>(B.size()) - 1;
  int dq = static_cast<int>(A.size()) - 1 - db;
  if (dq < 0) throw std::logic_error("poly_div_exact: not divisible");
  Coeffs Q(dq + 1, 0);
  for (int k = dq; k >= 0; --k) {
    mpz_class num = A[k + db];
    mpz_class qk;
    mpz_class r;
    mpz_fdiv_qr(qk.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), B.back().get_mpz_t());
    if (r != 0) throw std::logic_error("poly_div_exact: not divisible");
    Q[k] = qk;
    for (int i = 0; i <= db; ++i) A[k + i] -= qk * B[i];
  }
  for (const auto& x : A)
    if (x != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  Laurent q;
  for (size_t i = 0; i < Q.size(); ++i) q = q + Laurent::term(Q[i], static_cast<int>(i));
  return q.shifted(a.lo() - b.lo());
}

}  // namespace qhyp
