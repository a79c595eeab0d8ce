#include "qhyp/braided_core.hpp"

namespace qhyp {

namespace {

// Everything below is built from an arbitrary value of q so the same code
// path serves both the symbolic field element and rational sample points.
struct Core {
  VModuleData vm;
  TensorSquare ts;
};

Core build_core(const QScalar& qv) {
  auto qp = [&](int k) { return qv.pow(k); };
  QScalar b2 = qp(1) + qp(-1);

  Core c;
  c.vm.X = QMatrix{{QScalar(0), -b2, QScalar(0)},
                   {QScalar(0), QScalar(0), QScalar(1)},
                   {QScalar(0), QScalar(0), QScalar(0)}};
  c.vm.Y = QMatrix{{QScalar(0), QScalar(0), QScalar(0)},
                   {QScalar(-1), QScalar(0), QScalar(0)},
                   {QScalar(0), b2, QScalar(0)}};
  c.vm.H = QMatrix{{QScalar(2), QScalar(0), QScalar(0)},
                   {QScalar(0), QScalar(0), QScalar(0)},
                   {QScalar(0), QScalar(0), QScalar(-2)}};
  c.vm.qH = QMatrix(3, 3);
  c.vm.qHinv = QMatrix(3, 3);
  for (int i = 0; i < 3; ++i) {
    c.vm.qH(i, i) = qp(2 - 2 * i);
    c.vm.qHinv(i, i) = qp(2 * i - 2);
  }

  QMatrix id3 = QMatrix::identity(3);
  c.ts.actX = kron(c.vm.X, id3) + kron(c.vm.qHinv, c.vm.X);
  c.ts.actY = kron(id3, c.vm.Y) + kron(c.vm.Y, c.vm.qH);
  c.ts.actH = kron(c.vm.H, id3) + kron(id3, c.vm.H);

  // Column order: V0 | V1 (3 vectors) | V2 (5 vectors). Basis of V⊗V is
  // uu, uv, uw, vu, vv, vw, wu, wv, ww.
  QMatrix b(9, 9);
  QScalar q3q = qp(3) + qp(1);
  // V0: (q^3+q) uw + vv + (q+q^-1) wu
  b(2, 0) = q3q;
  b(4, 0) = QScalar(1);
  b(6, 0) = b2;
  // V1: q^2 uv - vu;  (q^3+q)(uw - wu) + (1-q^2) vv;  -q^2 vw + wv
  b(1, 1) = qp(2);
  b(3, 1) = QScalar(-1);
  b(2, 2) = q3q;
  b(6, 2) = -q3q;
  b(4, 2) = QScalar(1) - qp(2);
  b(5, 3) = -qp(2);
  b(7, 3) = QScalar(1);
  // V2: uu;  uv + q^2 vu;  uw - q vv + q^4 wu;  vw + q^2 wv;  ww
  b(0, 4) = QScalar(1);
  b(1, 5) = QScalar(1);
  b(3, 5) = qp(2);
  b(2, 6) = QScalar(1);
  b(4, 6) = -qp(1);
  b(6, 6) = qp(4);
  b(5, 7) = QScalar(1);
  b(7, 7) = qp(2);
  b(8, 8) = QScalar(1);
  c.ts.span = b;

  auto binv_opt = inverse(b);
  if (!binv_opt) throw std::logic_error("tensor square spans are degenerate");
  const QMatrix& binv = *binv_opt;
  auto proj = [&](size_t from, size_t count) {
    QMatrix d(9, 9);
    for (size_t k = from; k < from + count; ++k) d(k, k) = QScalar(1);
    return b * d * binv;
  };
  c.ts.P0 = proj(0, 1);
  c.ts.P1 = proj(1, 3);
  c.ts.P2 = proj(4, 5);
  return c;
}

const Core& symbolic_core() {
  static const Core core = build_core(QScalar::q());
  return core;
}

QMatrix bracket_map(const QScalar& qv, const mpq_class& h) {
  auto qp = [&](int k) { return qv.pow(k); };
  QScalar m = QScalar(2 * mpq_class(h)) / (QScalar(1) + qp(4));
  QScalar mm = m / (qp(1) + qp(-1));
  QMatrix br(3, 9);
  br(0, 1) = -qp(2) * m;  // [u,v] = -q^2 M u
  br(1, 2) = mm;          // [u,w] = (q+q^-1)^{-1} M v
  br(0, 3) = m;           // [v,u] = M u
  br(1, 4) = (QScalar(1) - qp(2)) * m;  // [v,v] = (1-q^2) M v
  br(2, 5) = -qp(2) * m;  // [v,w] = -q^2 M w
  br(1, 6) = -mm;         // [w,u] = -(q+q^-1)^{-1} M v
  br(2, 7) = m;           // [w,v] = M w
  return br;
}

GenLieReport gen_lie_impl(const Core& core, const QScalar& qv, const mpq_class& h,
                          const mpq_class& c) {
  QMatrix id3 = QMatrix::identity(3);
  const QMatrix& p2 = core.ts.P2;

  // K = (I⊗V) ∩ (V⊗I) as the nullspace of the stacked system
  // (P2⊗id)x = 0, (id⊗P2)x = 0 inside the 27-dimensional space.
  QMatrix top = kron(p2, id3);
  QMatrix bot = kron(id3, p2);
  QMatrix sys(54, 27);
  for (size_t i = 0; i < 27; ++i)
    for (size_t j = 0; j < 27; ++j) {
      sys(i, j) = top(i, j);
      sys(27 + i, j) = bot(i, j);
    }
  QMatrix kb = nullspace(sys);

  // α (extended by zero off V1) and β (zero off V0) in span coordinates.
  auto binv = *inverse(core.ts.span);
  QMatrix ca(3, 9);
  QScalar h2 = QScalar(2 * mpq_class(h));
  ca(0, 1) = -h2;  // α(q^2 uv - vu) = -2h u
  ca(1, 2) = h2;   // α((q^3+q)(uw-wu) + (1-q^2)vv) = 2h v
  ca(2, 3) = h2;   // α(-q^2 vw + wv) = 2h w
  QMatrix a = ca * binv;
  QMatrix cb(1, 9);
  cb(0, 0) = QScalar(mpq_class(c));  // β(C_q span) = c
  QMatrix beta = cb * binv;

  QMatrix a_op = kron(a, id3) - kron(id3, a);     // 9 x 27
  QMatrix b_op = kron(beta, id3) - kron(id3, beta);  // 3 x 27

  QMatrix y = a_op * kb;  // 9 x dimK
  GenLieReport rep;
  rep.dim_k = kb.cols();
  rep.cond_a = (p2 * y).is_zero();
  rep.cond_b = (a * y + b_op * kb).is_zero();
  rep.cond_c = (beta * y).is_zero();
  (void)qv;
  return rep;
}

}  // namespace

const VModuleData& v_module() { return symbolic_core().vm; }

const TensorSquare& decompose_tensor_square() { return symbolic_core().ts; }

const QMatrix& braiding_operator() {
  static const QMatrix s = [] {
    const TensorSquare& ts = decompose_tensor_square();
    return ts.P0 - ts.P1 + ts.P2;
  }();
  return s;
}

QMatrix qlie_bracket_map(const mpq_class& h) { return bracket_map(QScalar::q(), h); }

QMatrix qlie_bracket_map_at(const mpq_class& h, const mpq_class& q0) {
  return bracket_map(QScalar(mpq_class(q0)), h);
}

VVector qlie_bracket(const VVector& a, const VVector& b, const mpq_class& h) {
  QMatrix br = qlie_bracket_map(h);
  VVector r{QScalar(0), QScalar(0), QScalar(0)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      QScalar c = a[i] * b[j];
      if (c.is_zero()) continue;
      for (int k = 0; k < 3; ++k) r[k] += c * br(k, 3 * i + j);
    }
  return r;
}

GenLieReport check_generalized_lie(const mpq_class& h, const mpq_class& c) {
  return gen_lie_impl(symbolic_core(), QScalar::q(), h, c);
}

GenLieReport check_generalized_lie_at(const mpq_class& h, const mpq_class& c,
                                      const mpq_class& q0) {
  QScalar qv((mpq_class(q0)));
  Core core = build_core(qv);
  return gen_lie_impl(core, qv, h, c);
}

std::optional<QScalar> check_almost_jacobi(const mpq_class& h) {
  if (h == 0) throw std::invalid_argument("check_almost_jacobi: h must be nonzero");
  QMatrix br = qlie_bracket_map(h);
  auto adj = [&](int z) {
    QMatrix r(3, 3);
    for (int k = 0; k < 3; ++k)
      for (int x = 0; x < 3; ++x) r(k, x) = br(k, 3 * z + x);
    return r;
  };
  QMatrix ru = adj(0), rv = adj(1), rw = adj(2);
  QScalar q2 = QScalar::q(2);
  QScalar q3q = QScalar::q(3) + QScalar::q(1);
  // Targets are normalized by the bracket's own constant M = 2h(1+q^4)^{-1},
  // so that ν(1) = 1 against the classical adjoint representation; the
  // printed 2h-normalized factor is this ν divided by 1+q^4.
  QScalar h2 = QScalar(2 * mpq_class(h)) / (QScalar(1) + QScalar::q(4));

  QMatrix lhs1 = q2 * (ru * rv) - rv * ru;
  QMatrix lhs2 = q3q * (ru * rw - rw * ru) + (QScalar(1) - q2) * (rv * rv);
  QMatrix lhs3 = -q2 * (rv * rw) + rw * rv;
  QMatrix t1 = -h2 * ru, t2 = h2 * rv, t3 = h2 * rw;

  std::optional<QScalar> nu;
  auto probe = [&](const QMatrix& lhs, const QMatrix& t) {
    for (size_t i = 0; i < 3 && !nu; ++i)
      for (size_t j = 0; j < 3 && !nu; ++j)
        if (!t(i, j).is_zero()) nu = lhs(i, j) / t(i, j);
  };
  probe(lhs1, t1);
  probe(lhs2, t2);
  probe(lhs3, t3);
  if (!nu) return std::nullopt;
  if (lhs1 == *nu * t1 && lhs2 == *nu * t2 && lhs3 == *nu * t3) return nu;
  return std::nullopt;
}

}  // namespace qhyp
