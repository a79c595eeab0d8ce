#include "qhyp/spin_reps.hpp"

namespace qhyp {

namespace {

// Scalar θ with LHS = -θ * RHS-pattern read off from the first nonzero entry,
// then verified entrywise by the caller.
QScalar extract_ratio(const QMatrix& lhs, const QMatrix& pattern) {
  for (size_t i = 0; i < pattern.rows(); ++i)
    for (size_t j = 0; j < pattern.cols(); ++j)
      if (!pattern(i, j).is_zero()) return lhs(i, j) / pattern(i, j);
  throw std::logic_error("extract_ratio: zero pattern matrix");
}

}  // namespace

BraidedRep build_braided_rep(int l, const mpq_class& h) {
  if (l < 1) throw std::invalid_argument("build_braided_rep: l must be >= 1");
  if (h == 0) throw std::invalid_argument("build_braided_rep: h must be nonzero");
  BraidedRep rep;
  rep.l = l;
  rep.h = h;
  rep.module = build_spin_module(l);
  const SpinModule& m = rep.module;
  size_t n = m.dim();

  rep.U = QMatrix(n, n);
  for (int j = 0; j < l; ++j) rep.U(j, j + 1) = QScalar::q(2 * (l - 1 - j));
  rep.V = -endo_action(m, Gen::Y, rep.U);
  QScalar b2 = QScalar::q() + QScalar::q(-1);
  rep.W = b2.inverse() * endo_action(m, Gen::Y, rep.V);

  // θ from q^2 UV - VU = -θ U, then all three relations cross-checked.
  QScalar q2 = QScalar::q(2);
  QScalar q3q = QScalar::q(3) + QScalar::q(1);
  QMatrix r1 = q2 * (rep.U * rep.V) - rep.V * rep.U;
  rep.theta = -extract_ratio(r1, rep.U);
  QMatrix r2 = q3q * (rep.U * rep.W - rep.W * rep.U) + (QScalar(1) - q2) * (rep.V * rep.V);
  QMatrix r3 = -q2 * (rep.V * rep.W) + rep.W * rep.V;
  if (r1 != -rep.theta * rep.U || r2 != rep.theta * rep.V || r3 != rep.theta * rep.W)
    throw std::logic_error("build_braided_rep: relations do not share a single theta");

  QScalar h2 = QScalar(2 * mpq_class(h));
  rep.nu = rep.theta / h2;
  rep.rescale = h2 / rep.theta;
  rep.Ur = rep.rescale * rep.U;
  rep.Vr = rep.rescale * rep.V;
  rep.Wr = rep.rescale * rep.W;
  rep.casimir = casimir_value(rep);
  return rep;
}

QScalar casimir_value(const BraidedRep& rep) {
  QScalar q3q = QScalar::q(3) + QScalar::q(1);
  QScalar b2 = QScalar::q() + QScalar::q(-1);
  QMatrix c = q3q * (rep.U * rep.W) + rep.V * rep.V + b2 * (rep.W * rep.U);
  size_t n = c.rows();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && !c(i, j).is_zero())
        throw std::logic_error("casimir_value: non-scalar operator");
  for (size_t i = 1; i < n; ++i)
    if (c(i, i) != c(0, 0)) throw std::logic_error("casimir_value: non-scalar operator");
  return c(0, 0);
}

QScalar braided_module_value(int l, const mpq_class& h) {
  if (l < 1) throw std::invalid_argument("braided_module_value: l must be >= 1");
  QScalar theta = QScalar::q(2 * l + 1) + QScalar::q(-1);
  QScalar factor = QScalar(2 * mpq_class(h)) / theta;
  return QScalar::qint(l) * QScalar::qint(l + 2) * QScalar::q(2 * l - 2) * factor * factor;
}

bool verify_unicity(int l) {
  if (l < 1) return false;
  return weight2_kernel_dim(build_spin_module(l)) == 1;
}

}  // namespace qhyp
