#include "qhyp/qscalar.hpp"

#include <cctype>
#include <sstream>

namespace qhyp {

QScalar::QScalar(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QScalar: zero denominator");
  canonicalize();
}

void QScalar::canonicalize() {
  if (den_.is_zero()) throw std::domain_error("QScalar: zero denominator");
  if (num_.is_zero()) {
    num_ = Laurent();
    den_ = Laurent(1);
    return;
  }
  // Push the denominator's q-power into the numerator.
  int s = den_.lo();
  num_ = num_.shifted(-s);
  den_ = den_.shifted(-s);
  if (!den_.is_one()) {
    Laurent g = poly_gcd(num_, den_);
    if (g.hi() - g.lo() >= 1) {
      num_ = poly_div_exact(num_, g);
      den_ = poly_div_exact(den_, g);
    }
  }
  mpz_class cn = num_.content(), cd = den_.content(), g2;
  mpz_gcd(g2.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  num_.divide_content(g2);
  den_.divide_content(g2);
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QScalar QScalar::qint(long i) {
  Laurent s;
  long a = i >= 0 ? i : -i;
  for (long j = 0; j < a; ++j) s = s + Laurent::q(static_cast<int>(a - 1 - 2 * j));
  if (i < 0) s = -s;
  return QScalar(std::move(s));
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

QScalar operator+(const QScalar& a, const QScalar& b) {
  return QScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }

QScalar operator*(const QScalar& a, const QScalar& b) {
  return QScalar(a.num_ * b.num_, a.den_ * b.den_);
}

QScalar operator/(const QScalar& a, const QScalar& b) {
  if (b.is_zero()) throw std::domain_error("QScalar: division by zero");
  return QScalar(a.num_ * b.den_, a.den_ * b.num_);
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw std::domain_error("QScalar: inverse of zero");
  return QScalar(den_, num_);
}

QScalar QScalar::pow(long e) const {
  QScalar base = e >= 0 ? *this : inverse();
  long n = e >= 0 ? e : -e;
  QScalar r(1);
  for (long i = 0; i < n; ++i) r *= base;
  return r;
}

mpq_class QScalar::eval_at(const mpq_class& q0) const {
  if (q0 == 0) throw std::domain_error("QScalar::eval_at: q = 0");
  mpq_class d = den_.eval(q0);
  if (d == 0) throw PoleError("QScalar::eval_at: pole at q = " + q0.get_str());
  mpq_class r = num_.eval(q0) / d;
  r.canonicalize();
  return r;
}

std::string QScalar::str() const {
  if (den_.is_one()) return num_.str();
  auto wrap = [](const Laurent& p) {
    std::string s = p.str();
    bool simple = s.find_first_of("+-", 1) == std::string::npos && s[0] != '-';
    return simple ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::string CScalar::str() const {
  if (im_.is_zero()) return re_.str();
  std::string s = re_.is_zero() ? "" : re_.str() + " + ";
  return s + "i*(" + im_.str() + ")";
}

namespace {

// Recursive-descent parser for the rendered scalar grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-'* atom ('^' int)?
//   atom   := integer | 'q' | '(' expr ')'
class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  QScalar parse() {
    QScalar r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("QScalar::parse: " + why + " at position " +
                                std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  long integer() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    long v = std::stol(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  QScalar atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      QScalar r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == 'q') {
      ++pos_;
      return QScalar::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return QScalar(mpz_class(s_.substr(start, pos_ - start)));
    }
    fail("expected atom");
  }

  QScalar factor() {
    if (eat('-')) return -factor();
    QScalar a = atom();
    if (eat('^')) return a.pow(integer());
    return a;
  }

  QScalar term() {
    QScalar a = factor();
    for (;;) {
      if (eat('*'))
        a *= factor();
      else if (eat('/'))
        a /= factor();
      else
        return a;
    }
  }

  QScalar expr() {
    skip_ws();
    QScalar a = term();
    for (;;) {
      if (eat('+'))
        a += term();
      else if (peek() == '-')
        a += term();  // unary minus inside factor handles the sign
      else
        return a;
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

QScalar QScalar::parse(const std::string& text) { return Parser(text).parse(); }

}  // namespace qhyp
