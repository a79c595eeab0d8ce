#include "qhyp/uq_modules.hpp"

namespace qhyp {

SpinModule build_spin_module(int l) {
  if (l < 0) throw std::invalid_argument("build_spin_module: l must be >= 0");
  SpinModule m;
  m.l = l;
  size_t n = m.dim();
  m.X = QMatrix(n, n);
  m.Y = QMatrix(n, n);
  m.H = QMatrix(n, n);
  m.qH = QMatrix(n, n);
  m.qHinv = QMatrix(n, n);
  for (int j = 0; j <= l; ++j) {
    int w = l - 2 * j;
    m.weights.push_back(w);
    m.H(j, j) = QScalar(w);
    m.qH(j, j) = QScalar::q(w);
    m.qHinv(j, j) = QScalar::q(-w);
  }
  // y_j = b_l + b_{l-2} + ... + b_{l-2(j-1)}, the triangular system
  // y_1 = b_l, y_{j+1} - y_j = b_{l-2j}, -y_l = b_{-l}.
  QScalar y(0);
  for (int j = 1; j <= l; ++j) {
    m.X(j - 1, j) = QScalar(1);
    y += QScalar::qint(l - 2 * (j - 1));
    m.Y(j, j - 1) = y;
  }
  return m;
}

bool check_uq_relations(const SpinModule& m) {
  QMatrix two_x = QScalar(2) * m.X;
  if (m.H * m.X - m.X * m.H != two_x) return false;
  QMatrix minus_two_y = QScalar(-2) * m.Y;
  if (m.H * m.Y - m.Y * m.H != minus_two_y) return false;
  QMatrix rhs(m.dim(), m.dim());
  for (size_t i = 0; i < m.dim(); ++i) rhs(i, i) = QScalar::qint(m.weights[i]);
  return m.X * m.Y - m.Y * m.X == rhs;
}

QMatrix endo_action(const SpinModule& m, Gen gen, const QMatrix& M) {
  if (M.rows() != m.dim() || M.cols() != m.dim())
    throw std::invalid_argument("endo_action: dimension mismatch");
  switch (gen) {
    case Gen::X:
      return m.X * M - m.qHinv * M * m.qH * m.X;
    case Gen::H:
      return m.H * M - M * m.H;
    case Gen::Y:
      return (m.Y * M - M * m.Y) * m.qHinv;
  }
  throw std::logic_error("endo_action: bad generator");
}

QMatrix endo_qh_action(const SpinModule& m, const QMatrix& M, bool inv) {
  return inv ? m.qHinv * M * m.qH : m.qH * M * m.qHinv;
}

bool check_endo_multiplicativity(const SpinModule& m, Gen gen, const QMatrix& M1,
                                 const QMatrix& M2) {
  QMatrix lhs = endo_action(m, gen, M1 * M2);
  switch (gen) {
    case Gen::H:
      // Δ(H) = H⊗1 + 1⊗H
      return lhs == endo_action(m, Gen::H, M1) * M2 + M1 * endo_action(m, Gen::H, M2);
    case Gen::X:
      // Δ(X) = X⊗1 + q^{-H}⊗X
      return lhs == endo_action(m, Gen::X, M1) * M2 +
                        endo_qh_action(m, M1, true) * endo_action(m, Gen::X, M2);
    case Gen::Y:
      // Δ(Y) = 1⊗Y + Y⊗q^{H}
      return lhs == M1 * endo_action(m, Gen::Y, M2) +
                        endo_action(m, Gen::Y, M1) * endo_qh_action(m, M2, false);
  }
  throw std::logic_error("check_endo_multiplicativity: bad generator");
}

QMatrix endo_operator_matrix(const SpinModule& m, Gen gen) {
  size_t n = m.dim();
  QMatrix op(n * n, n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      QMatrix e(n, n);
      e(i, j) = QScalar(1);
      QMatrix img = endo_action(m, gen, e);
      for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) op(r * n + c, i * n + j) = img(r, c);
    }
  return op;
}

size_t weight2_kernel_dim(const SpinModule& m) {
  size_t n = m.dim();
  QMatrix opX = endo_operator_matrix(m, Gen::X);
  QMatrix opH = endo_operator_matrix(m, Gen::H);
  // Stack X.M = 0 over (H - 2).M = 0.
  QMatrix sys(2 * n * n, n * n);
  for (size_t i = 0; i < n * n; ++i)
    for (size_t j = 0; j < n * n; ++j) {
      sys(i, j) = opX(i, j);
      sys(n * n + i, j) = opH(i, j) - (i == j ? QScalar(2) : QScalar(0));
    }
  return nullspace(sys).cols();
}

bool check_endo_uq_relations(const SpinModule& m) {
  size_t n = m.dim();
  QScalar denom = QScalar::q() - QScalar::q(-1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      QMatrix e(n, n);
      e(i, j) = QScalar(1);
      QMatrix hx = endo_action(m, Gen::H, endo_action(m, Gen::X, e)) -
                   endo_action(m, Gen::X, endo_action(m, Gen::H, e));
      if (hx != QScalar(2) * endo_action(m, Gen::X, e)) return false;
      QMatrix hy = endo_action(m, Gen::H, endo_action(m, Gen::Y, e)) -
                   endo_action(m, Gen::Y, endo_action(m, Gen::H, e));
      if (hy != QScalar(-2) * endo_action(m, Gen::Y, e)) return false;
      QMatrix xy = endo_action(m, Gen::X, endo_action(m, Gen::Y, e)) -
                   endo_action(m, Gen::Y, endo_action(m, Gen::X, e));
      QMatrix k = endo_qh_action(m, e, false);
      QMatrix kinv = endo_qh_action(m, e, true);
      QMatrix rhs = QScalar(1) / denom * (k - kinv);
      if (xy != rhs) return false;
    }
  return true;
}

}  // namespace qhyp
