#pragma once

#include "qhyp/uq_modules.hpp"

namespace qhyp {

/// The spin-k almost representation (U, V, W) inside End(U_k), its factor θ,
/// the braided Casimir scalar, and the rescaled genuine representation.
struct BraidedRep {
  int l = 0;
  mpq_class h;
  SpinModule module;
  QMatrix U, V, W;
  QScalar theta;     // q^{2l+1} + q^{-1}
  QScalar nu;        // θ / (2h)
  QScalar casimir;   // b_l b_{l+2} q^{2l-2}
  QScalar rescale;   // 2h / θ
  QMatrix Ur, Vr, Wr;  // rescaled triple, a genuine representation
};

/// U is the superdiagonal diag_+(q^{2(l-1)}, ..., 1); V = -Y.U and
/// W = (q+q^-1)^{-1} Y.V under the End action. θ is extracted from the first
/// relation and all three are verified with it.
BraidedRep build_braided_rep(int l, const mpq_class& h);

/// Asserts (q^3+q)UW + V^2 + (q+q^-1)WU is a scalar matrix and returns the
/// diagonal value.
QScalar casimir_value(const BraidedRep& rep);

/// Closed formula c_k = b_l b_{l+2} q^{2l-2} (2h/θ)^2.
QScalar braided_module_value(int l, const mpq_class& h);

/// True iff {M : X.M = 0, H.M = 2M} is exactly 1-dimensional in End(U_k).
bool verify_unicity(int l);

}  // namespace qhyp
