#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhyp/spin_reps.hpp"

using namespace qhyp;

namespace {

QScalar b2() { return QScalar::q(1) + QScalar::q(-1); }

QMatrix eval_matrix(const QMatrix& m, const mpq_class& q0) {
  QMatrix r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = QScalar(m(i, j).eval_at(q0));
  return r;
}

}  // namespace

TEST_CASE("printed l=1 matrices") {
  BraidedRep r = build_braided_rep(1, 2);
  QMatrix u{{QScalar(0), QScalar(1)}, {QScalar(0), QScalar(0)}};
  QMatrix v{{QScalar::q(-1), QScalar(0)}, {QScalar(0), -QScalar::q(1)}};
  QMatrix w{{QScalar(0), QScalar(0)}, {QScalar::q(-1), QScalar(0)}};
  CHECK(r.U == u);
  CHECK(r.V == v);
  CHECK(r.W == w);
  CHECK(r.theta == QScalar::q(3) + QScalar::q(-1));
  CHECK(r.casimir == QScalar::qint(3));  // q^2 + 1 + q^-2 = b_1 b_3 q^0
}

TEST_CASE("printed l=2 matrices, W carrying the same prefactor as V") {
  BraidedRep r = build_braided_rep(2, 2);
  QMatrix u(3, 3), v(3, 3), w(3, 3);
  u(0, 1) = QScalar::q(2);
  u(1, 2) = QScalar(1);
  v(0, 0) = b2();
  v(1, 1) = b2() * (QScalar(1) - QScalar::q(2));
  v(2, 2) = -(b2() * QScalar::q(2));
  w(1, 0) = b2();
  w(2, 1) = b2();
  CHECK(r.U == u);
  CHECK(r.V == v);
  CHECK(r.W == w);
}

TEST_CASE("highest weight property of U") {
  for (int l = 1; l <= 4; ++l) {
    BraidedRep r = build_braided_rep(l, 2);
    CHECK(endo_action(r.module, Gen::X, r.U).is_zero());
    CHECK(endo_action(r.module, Gen::H, r.U) == QScalar(2) * r.U);
    // U, V, W have weights 2, 0, -2
    CHECK(endo_action(r.module, Gen::H, r.V).is_zero());
    CHECK(endo_action(r.module, Gen::H, r.W) == QScalar(-2) * r.W);
  }
}

TEST_CASE("theta law and the three relations for l <= 6") {
  for (int l = 1; l <= 6; ++l) {
    BraidedRep r = build_braided_rep(l, 2);
    CHECK(r.theta == QScalar::q(2 * l + 1) + QScalar::q(-1));
    QScalar q2 = QScalar::q(2);
    QScalar q3q = QScalar::q(3) + QScalar::q(1);
    CHECK(q2 * (r.U * r.V) - r.V * r.U == -(r.theta * r.U));
    CHECK(q3q * (r.U * r.W - r.W * r.U) + (QScalar(1) - q2) * (r.V * r.V) ==
          r.theta * r.V);
    CHECK(-(q2 * (r.V * r.W)) + r.W * r.V == r.theta * r.W);
  }
}

TEST_CASE("first-matrix-entry derivation of theta") {
  for (int l = 1; l <= 4; ++l) {
    BraidedRep r = build_braided_rep(l, 2);
    QScalar y1 = QScalar::qint(l);
    QScalar y2 = QScalar::qint(l) + QScalar::qint(l - 2);
    QScalar v1 = y1 * QScalar::q(l - 2);
    QScalar v2 = y2 * QScalar::q(l - 2) - y1 * QScalar::q(l);
    CHECK(r.V(0, 0) == v1);
    if (l >= 1) CHECK(r.V(1, 1) == v2);
    CHECK(r.theta == v1 - QScalar::q(2) * v2);
  }
}

TEST_CASE("Casimir scalar value") {
  for (int l = 1; l <= 6; ++l) {
    BraidedRep r = build_braided_rep(l, 2);
    QScalar expect = QScalar::qint(l) * QScalar::qint(l + 2) * QScalar::q(2 * l - 2);
    CHECK(casimir_value(r) == expect);
    CHECK(r.casimir == expect);
    CHECK(expect.eval_at(1) == l * (l + 2));
  }
}

TEST_CASE("c_k closed formula against the matrix oracle") {
  for (int l = 1; l <= 4; ++l)
    for (mpq_class h : {mpq_class(1), mpq_class(2), mpq_class(7, 3)}) {
      BraidedRep r = build_braided_rep(l, h);
      QScalar q3q = QScalar::q(3) + QScalar::q(1);
      QMatrix cas = q3q * (r.Ur * r.Wr) + r.Vr * r.Vr + b2() * (r.Wr * r.Ur);
      CHECK(cas == braided_module_value(l, h) * QMatrix::identity(r.module.dim()));
    }
  // sampled cross-check away from q = 1
  BraidedRep r3 = build_braided_rep(3, 1);
  QScalar q3q = QScalar::q(3) + QScalar::q(1);
  QMatrix cas = q3q * (r3.Ur * r3.Wr) + r3.Vr * r3.Vr + b2() * (r3.Wr * r3.Ur);
  CHECK(cas(0, 0).eval_at(mpq_class(3, 2)) == braided_module_value(3, 1).eval_at(mpq_class(3, 2)));
}

TEST_CASE("rescaled triple is a genuine representation") {
  for (int l = 1; l <= 4; ++l) {
    BraidedRep r = build_braided_rep(l, 2);
    QScalar q2 = QScalar::q(2);
    QScalar q3q = QScalar::q(3) + QScalar::q(1);
    QScalar h2 = QScalar(4);
    CHECK(q2 * (r.Ur * r.Vr) - r.Vr * r.Ur == -(h2 * r.Ur));
    CHECK(q3q * (r.Ur * r.Wr - r.Wr * r.Ur) + (QScalar(1) - q2) * (r.Vr * r.Vr) ==
          h2 * r.Vr);
    CHECK(-(q2 * (r.Vr * r.Wr)) + r.Wr * r.Vr == h2 * r.Wr);
    CHECK(r.nu == r.theta / h2);
    CHECK(r.rescale * r.nu == QScalar(1));
  }
}

TEST_CASE("classical limit of the rescaled l=2 triple") {
  BraidedRep r = build_braided_rep(2, 2);
  QMatrix u = eval_matrix(r.Ur, 1), v = eval_matrix(r.Vr, 1), w = eval_matrix(r.Wr, 1);
  // sl(2) commutation relations for the h=2 normalization
  CHECK(u * v - v * u == QScalar(-4) * u);
  CHECK(u * w - w * u == QScalar(2) * v);
  CHECK(v * w - w * v == QScalar(-4) * w);
}

TEST_CASE("unicity of the weight-2 highest vector") {
  CHECK(!verify_unicity(0));
  for (int l = 1; l <= 4; ++l) CHECK(verify_unicity(l));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_braided_rep(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_braided_rep(1, 0), std::invalid_argument);
}

TEST_CASE("theta zero set is reported symbolically nonzero") {
  for (int l = 1; l <= 6; ++l) {
    BraidedRep r = build_braided_rep(l, 2);
    CHECK(!r.theta.is_zero());
    // theta = q^-1 (q^{2l+2} + 1): vanishes only where q^{2l+2} = -1
    CHECK(r.theta == QScalar::q(-1) * (QScalar::q(2 * l + 2) + QScalar(1)));
  }
}
