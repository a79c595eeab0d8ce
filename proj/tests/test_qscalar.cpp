#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhyp/qscalar.hpp"

using namespace qhyp;

TEST_CASE("Laurent arithmetic and normalization") {
  Laurent a = Laurent::q(2) + Laurent(1);              // q^2 + 1
  Laurent b = Laurent::q(-1) * (Laurent::q(2) - Laurent(1));  // q - q^-1
  CHECK(a.lo() == 0);
  CHECK(a.hi() == 2);
  CHECK(b.lo() == -1);
  CHECK(a * b == Laurent::q(3) - Laurent::q(-1));
  CHECK((a - a).is_zero());
  CHECK(Laurent(0).is_zero());
  CHECK((Laurent::q(3) - Laurent::q(3)).is_zero());
  CHECK(a.eval(2) == 5);
  CHECK(b.eval(mpq_class(1, 2)) == mpq_class(-3, 2));
}

TEST_CASE("poly_gcd and exact division") {
  Laurent q2m1 = Laurent::q(2) - Laurent(1);
  Laurent qm1 = Laurent::q(1) - Laurent(1);
  Laurent g = poly_gcd(q2m1, qm1);
  CHECK(g == qm1);
  CHECK(poly_div_exact(q2m1, qm1) == Laurent::q(1) + Laurent(1));
  CHECK_THROWS_AS(poly_div_exact(Laurent::q(2) + Laurent(1), qm1), std::logic_error);
  // content is stripped: the gcd is primitive with positive leading coefficient
  Laurent big = Laurent(-6) * qm1;
  CHECK(poly_gcd(big, Laurent(4) * qm1) == qm1);
}

TEST_CASE("q-integers") {
  CHECK(QScalar::qint(0).is_zero());
  CHECK(QScalar::qint(1).is_one());
  CHECK(QScalar::qint(2) == QScalar::q(1) + QScalar::q(-1));
  CHECK(QScalar::qint(3) == QScalar::q(2) + QScalar(1) + QScalar::q(-2));
  CHECK(QScalar::qint(-2) == -QScalar::qint(2));
  // recurrence b_{i+1} = (q + q^-1) b_i - b_{i-1}
  for (long i = 1; i <= 10; ++i)
    CHECK(QScalar::qint(i + 1) ==
          (QScalar::q(1) + QScalar::q(-1)) * QScalar::qint(i) - QScalar::qint(i - 1));
  CHECK(QScalar::qint(7).eval_at(1) == 7);
}

TEST_CASE("canonical forms make equality structural") {
  QScalar a = (QScalar::q(2) - QScalar(1)) / (QScalar::q(1) - QScalar(1));
  CHECK(a == QScalar::q(1) + QScalar(1));
  QScalar b = QScalar(Laurent(2)) / QScalar(Laurent(4));
  CHECK(b == QScalar(mpq_class(1, 2)));
  // denominator is an ordinary polynomial with positive leading coefficient
  QScalar c = QScalar(1) / (QScalar::q(-1) - QScalar::q(1));
  CHECK(c.den().lo() == 0);
  CHECK(c.den().leading() > 0);
  CHECK(c * (QScalar::q(-1) - QScalar::q(1)) == QScalar(1));
}

TEST_CASE("field axioms on a sample set") {
  std::vector<QScalar> xs = {
      QScalar(0), QScalar(1), QScalar(-3), QScalar::q(1), QScalar::q(-2),
      QScalar::qint(3), (QScalar::q(1) + QScalar(1)) / (QScalar::q(3) - QScalar(2)),
      QScalar(mpq_class(7, 5))};
  for (const QScalar& x : xs)
    for (const QScalar& y : xs) {
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK(x - y == -(y - x));
      if (!y.is_zero()) CHECK((x / y) * y == x);
      for (const QScalar& z : xs) {
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
    }
}

TEST_CASE("pow and inverse") {
  QScalar x = QScalar::q(1) + QScalar(1);
  CHECK(x.pow(0).is_one());
  CHECK(x.pow(3) == x * x * x);
  CHECK(x.pow(-2) == (x * x).inverse());
  CHECK(QScalar::q(5) == QScalar::q(1).pow(5));
  CHECK_THROWS(QScalar(0).inverse());
}

TEST_CASE("evaluation and poles") {
  QScalar a = QScalar(1) / (QScalar::q(1) - QScalar(1));
  CHECK_THROWS_AS(a.eval_at(1), PoleError);
  CHECK(a.eval_at(2) == 1);
  CHECK_THROWS_AS(QScalar::q(-1).eval_at(0), std::domain_error);
  QScalar b = (QScalar::q(2) - QScalar(1)) / (QScalar::q(1) - QScalar(1));
  CHECK(b.eval_at(1) == 2);  // cancellation happens in canonical form
}

TEST_CASE("parse round-trips str") {
  std::vector<QScalar> xs = {
      QScalar(0), QScalar(7), QScalar(-1), QScalar::q(3), QScalar::q(-4),
      QScalar::qint(4), QScalar(mpq_class(-3, 8)),
      (QScalar(2) * QScalar::q(2) + QScalar(1)) / (QScalar::q(4) + QScalar::q(2) + QScalar(1)),
      -(QScalar::q(1).inverse() + QScalar::q(1))};
  for (const QScalar& x : xs) CHECK(QScalar::parse(x.str()) == x);
  CHECK(QScalar::parse("q^2 + 1 + q^-2") == QScalar::qint(3));
  CHECK(QScalar::parse("(q - q^-1) / (q - q^-1)").is_one());
  CHECK(QScalar::parse("3*q^2/(q+1)") == QScalar(3) * QScalar::q(2) / (QScalar::q(1) + QScalar(1)));
  CHECK_THROWS(QScalar::parse("q +"));
  CHECK_THROWS(QScalar::parse("x"));
}

TEST_CASE("CScalar complex arithmetic") {
  CScalar i = CScalar::i();
  CHECK(i * i == CScalar(-1));
  CHECK(i.conj() == -i);
  CScalar z(QScalar::q(1), QScalar(2));
  CHECK(z * z.inverse() == CScalar(1));
  CHECK((z + z.conj()).im().is_zero());
  CHECK((z * z.conj()).is_real());
}
