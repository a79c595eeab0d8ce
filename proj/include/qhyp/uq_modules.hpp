#pragma once

#include "qhyp/matrix.hpp"

namespace qhyp {

enum class Gen { X, Y, H };

/// The spin-k irreducible module of U_q(sl(2)), l = 2k, dimension l+1,
/// in the basis where X is the superdiagonal of ones and H is diagonal
/// with weights l, l-2, ..., -l.
struct SpinModule {
  int l = 0;
  std::vector<int> weights;  // l, l-2, ..., -l
  QMatrix X, Y, H, qH, qHinv;

  size_t dim() const { return static_cast<size_t>(l) + 1; }
};

SpinModule build_spin_module(int l);

/// The three defining relations [H,X]=2X, [H,Y]=-2Y,
/// [X,Y]=(q^H - q^-H)/(q - q^-1), exactly over Q(q).
bool check_uq_relations(const SpinModule& m);

/// Action on End(U_k) induced through the coproduct and antipode:
///   X.M = X M - q^{-H} M q^{H} X,  H.M = H M - M H,  Y.M = (Y M - M Y) q^{-H}.
QMatrix endo_action(const SpinModule& m, Gen gen, const QMatrix& M);

/// Conjugation by q^{±H}: the action of the group-like elements on End(U_k).
QMatrix endo_qh_action(const SpinModule& m, const QMatrix& M, bool inv);

/// Multiplicativity of the End action against the coproduct of gen.
bool check_endo_multiplicativity(const SpinModule& m, Gen gen, const QMatrix& M1,
                                 const QMatrix& M2);

/// Matrix of M -> endo_action(gen, M) on the (l+1)^2-dimensional space,
/// row-major vec convention.
QMatrix endo_operator_matrix(const SpinModule& m, Gen gen);

/// Dimension of {M : X.M = 0, H.M = 2M} inside End(U_k), by exact
/// symbolic nullspace over Q(q).
size_t weight2_kernel_dim(const SpinModule& m);

/// The ρ_End operators satisfy the U_q(sl(2)) relations on End(U_k)
/// (checked on all elementary matrices).
bool check_endo_uq_relations(const SpinModule& m);

}  // namespace qhyp
