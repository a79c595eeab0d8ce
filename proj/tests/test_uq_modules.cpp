#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhyp/uq_modules.hpp"

using namespace qhyp;

TEST_CASE("spin module shape and weights") {
  SpinModule m = build_spin_module(3);
  CHECK(m.dim() == 4);
  CHECK(m.weights == std::vector<int>{3, 1, -1, -3});
  // X is the superdiagonal of ones, Y the subdiagonal of partial q-integer sums
  CHECK(m.X(0, 1).is_one());
  CHECK(m.X(1, 0).is_zero());
  CHECK(m.Y(1, 0) == QScalar::qint(3));
  CHECK(m.Y(2, 1) == QScalar::qint(3) + QScalar::qint(1));
  CHECK(m.Y(3, 2) == QScalar::qint(3) + QScalar::qint(1) + QScalar::qint(-1));
  CHECK(m.qH(0, 0) == QScalar::q(3));
  CHECK(m.qHinv(3, 3) == QScalar::q(3));
}

TEST_CASE("defining relations hold symbolically") {
  for (int l = 0; l <= 6; ++l) CHECK(check_uq_relations(build_spin_module(l)));
}

TEST_CASE("l=1 relations by hand") {
  SpinModule m = build_spin_module(1);
  QMatrix hx = m.H * m.X - m.X * m.H;
  CHECK(hx == QScalar(2) * m.X);
  QMatrix xy = m.X * m.Y - m.Y * m.X;
  QMatrix rhs(2, 2);
  rhs(0, 0) = QScalar(1);
  rhs(1, 1) = QScalar(-1);
  CHECK(xy == rhs);  // (q^H - q^-H)/(q - q^-1) = diag(b_1, b_-1)
}

TEST_CASE("endo action weight structure") {
  SpinModule m = build_spin_module(2);
  size_t n = m.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      QMatrix e(n, n);
      e(i, j) = QScalar(1);
      // H.E_ij = (w_i - w_j) E_ij
      QMatrix he = endo_action(m, Gen::H, e);
      CHECK(he == QScalar(m.weights[i] - m.weights[j]) * e);
      // q^H conjugation scales by q^(w_i - w_j)
      CHECK(endo_qh_action(m, e, false) == QScalar::q(m.weights[i] - m.weights[j]) * e);
      CHECK(endo_qh_action(m, e, true) == QScalar::q(m.weights[j] - m.weights[i]) * e);
    }
}

TEST_CASE("endo action is multiplicative through the coproduct") {
  for (int l = 1; l <= 2; ++l) {
    SpinModule m = build_spin_module(l);
    size_t n = m.dim();
    // a small spanning family of products
    std::vector<QMatrix> ms;
    QMatrix a(n, n), b(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        a(i, j) = QScalar(static_cast<long>(i + 2 * j + 1));
        b(i, j) = (i == j) ? QScalar::q(static_cast<int>(i)) : QScalar(static_cast<long>(i) - static_cast<long>(j));
      }
    ms.push_back(a);
    ms.push_back(b);
    ms.push_back(QMatrix::identity(n));
    for (const QMatrix& m1 : ms)
      for (const QMatrix& m2 : ms)
        for (Gen g : {Gen::X, Gen::Y, Gen::H})
          CHECK(check_endo_multiplicativity(m, g, m1, m2));
  }
}

TEST_CASE("endo operators satisfy the U_q(sl(2)) relations") {
  for (int l = 1; l <= 3; ++l) CHECK(check_endo_uq_relations(build_spin_module(l)));
}

TEST_CASE("operator matrix agrees with the action") {
  SpinModule m = build_spin_module(1);
  size_t n = m.dim();
  for (Gen g : {Gen::X, Gen::Y, Gen::H}) {
    QMatrix op = endo_operator_matrix(m, g);
    QMatrix e(n, n);
    e(0, 1) = QScalar(3);
    e(1, 0) = QScalar::q(2);
    QMatrix img = endo_action(m, g, e);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) {
        QScalar s;
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) s += op(r * n + c, i * n + j) * e(i, j);
        CHECK(s == img(r, c));
      }
  }
}

TEST_CASE("weight-2 highest vectors in End are unique for l >= 1") {
  CHECK(weight2_kernel_dim(build_spin_module(0)) == 0);
  for (int l = 1; l <= 4; ++l) CHECK(weight2_kernel_dim(build_spin_module(l)) == 1);
}
