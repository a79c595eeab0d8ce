#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhyp/braided_core.hpp"

using namespace qhyp;

TEST_CASE("V-module matrices satisfy the module relations") {
  const VModuleData& vm = v_module();
  CHECK(vm.X(0, 1) == -(QScalar::q(1) + QScalar::q(-1)));  // Xv = -(q+q^-1)u
  CHECK(vm.X(1, 2).is_one());                              // Xw = v
  CHECK(vm.Y(1, 0) == QScalar(-1));                        // Yu = -v
  CHECK(vm.Y(2, 1) == QScalar::q(1) + QScalar::q(-1));     // Yv = (q+q^-1)w
  QMatrix hx = vm.H * vm.X - vm.X * vm.H;
  CHECK(hx == QScalar(2) * vm.X);
  QMatrix xy = vm.X * vm.Y - vm.Y * vm.X;
  QMatrix rhs(3, 3);
  rhs(0, 0) = QScalar::qint(2);
  rhs(2, 2) = QScalar::qint(-2);
  CHECK(xy == rhs);
}

TEST_CASE("tensor square projectors decompose the identity") {
  const TensorSquare& ts = decompose_tensor_square();
  CHECK(ts.P0 * ts.P0 == ts.P0);
  CHECK(ts.P1 * ts.P1 == ts.P1);
  CHECK(ts.P2 * ts.P2 == ts.P2);
  CHECK((ts.P0 * ts.P1).is_zero());
  CHECK((ts.P0 * ts.P2).is_zero());
  CHECK((ts.P1 * ts.P2).is_zero());
  CHECK(ts.P0 + ts.P1 + ts.P2 == QMatrix::identity(9));
  CHECK(rank(ts.P0) == 1);
  CHECK(rank(ts.P1) == 3);
  CHECK(rank(ts.P2) == 5);
}

TEST_CASE("projectors and braiding commute with the coproduct action") {
  const TensorSquare& ts = decompose_tensor_square();
  const QMatrix& s = braiding_operator();
  CHECK(s * s == QMatrix::identity(9));
  for (const QMatrix* p : {&ts.P0, &ts.P1, &ts.P2, &s}) {
    CHECK(*p * ts.actX == ts.actX * *p);
    CHECK(*p * ts.actY == ts.actY * *p);
    CHECK(*p * ts.actH == ts.actH * *p);
  }
}

TEST_CASE("bracket table entries and module morphism property") {
  QMatrix br = qlie_bracket_map(2);
  QScalar m = QScalar(4) / (QScalar(1) + QScalar::q(4));
  CHECK(br(0, 1) == -(QScalar::q(2) * m));                              // [u,v]
  CHECK(br(1, 2) == m / (QScalar::q(1) + QScalar::q(-1)));              // [u,w]
  CHECK(br(0, 3) == m);                                                 // [v,u]
  CHECK(br(1, 4) == (QScalar(1) - QScalar::q(2)) * m);                  // [v,v]
  CHECK(br(2, 5) == -(QScalar::q(2) * m));                              // [v,w]
  CHECK(br(1, 6) == -(m / (QScalar::q(1) + QScalar::q(-1))));           // [w,u]
  CHECK(br(2, 7) == m);                                                 // [w,v]
  CHECK(br(0, 0).is_zero());
  CHECK(br(2, 8).is_zero());

  const VModuleData& vm = v_module();
  const TensorSquare& ts = decompose_tensor_square();
  CHECK(vm.X * br == br * ts.actX);
  CHECK(vm.Y * br == br * ts.actY);
  CHECK(vm.H * br == br * ts.actH);
}

TEST_CASE("bracket vanishes on the spin-2 component") {
  QMatrix br = qlie_bracket_map(2);
  const TensorSquare& ts = decompose_tensor_square();
  CHECK((br * ts.P2).is_zero());
}

TEST_CASE("antisymmetry holds only classically") {
  QMatrix br = qlie_bracket_map(2);
  // [u,v] + [v,u] = (1 - q^2) M u: nonzero symbolically, zero at q = 1
  QScalar s = br(0, 1) + br(0, 3);
  CHECK(!s.is_zero());
  CHECK(s == (QScalar(1) - QScalar::q(2)) * (QScalar(4) / (QScalar(1) + QScalar::q(4))));
  CHECK(s.eval_at(1) == 0);
  QMatrix classical = qlie_bracket_map_at(2, 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(classical(k, 3 * i + j) == -classical(k, 3 * j + i));
}

TEST_CASE("qlie_bracket on vectors matches the table") {
  VVector u{QScalar(1), QScalar(0), QScalar(0)};
  VVector v{QScalar(0), QScalar(1), QScalar(0)};
  VVector uv = qlie_bracket(u, v, 2);
  QScalar m = QScalar(4) / (QScalar(1) + QScalar::q(4));
  CHECK(uv[0] == -(QScalar::q(2) * m));
  CHECK(uv[1].is_zero());
  CHECK(uv[2].is_zero());
  // bilinearity
  VVector a{QScalar(2), QScalar::q(1), QScalar(0)};
  VVector b{QScalar(0), QScalar(1), QScalar(-3)};
  VVector ab = qlie_bracket(a, b, 2);
  QMatrix br = qlie_bracket_map(2);
  for (int k = 0; k < 3; ++k) {
    QScalar expect;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) expect += a[i] * b[j] * br(k, 3 * i + j);
    CHECK(ab[k] == expect);
  }
}

TEST_CASE("generalized Lie structure conditions") {
  for (auto [h, c] : std::initializer_list<std::pair<mpq_class, mpq_class>>{
           {2, 5}, {1, 0}, {0, 3}, {mpq_class(7, 3), 1}}) {
    GenLieReport rep = check_generalized_lie(h, c);
    CHECK(rep.cond_a);
    CHECK(rep.cond_b);
    CHECK(rep.cond_c);
  }
  // classical sample point gives the same intersection dimension
  GenLieReport sym = check_generalized_lie(2, 5);
  GenLieReport cls = check_generalized_lie_at(2, 5, 1);
  CHECK(sym.dim_k == cls.dim_k);
}

TEST_CASE("almost Jacobi factor") {
  auto nu = check_almost_jacobi(2);
  REQUIRE(nu.has_value());
  CHECK(*nu == QScalar::q(4) - QScalar::q(2) + QScalar(1));
  CHECK(nu->eval_at(1) == 1);
  CHECK(!nu->is_one());
  // the factor does not depend on h
  CHECK(check_almost_jacobi(mpq_class(7, 3)) == nu);
  CHECK_THROWS_AS(check_almost_jacobi(0), std::invalid_argument);
}
