#pragma once

#include <array>
#include <optional>

#include "qhyp/uq_modules.hpp"

namespace qhyp {

/// Coordinates in the basis {u, v, w} of the 3-dimensional module V.
using VVector = std::array<QScalar, 3>;

/// The module V with Hu=2u, Hv=0, Hw=-2w, Xu=0, Xv=-(q+q^-1)u, Xw=v,
/// Yu=-v, Yv=(q+q^-1)w, Yw=0.
struct VModuleData {
  QMatrix X, Y, H, qH, qHinv;
};

const VModuleData& v_module();

/// V⊗V with ordered basis uu, uv, uw, vu, vv, vw, wu, wv, ww (index 3i+j),
/// split into the spin-0/1/2 components with their projectors.
struct TensorSquare {
  QMatrix span;              // 9x9, columns: V0 | V1 (3) | V2 (5)
  QMatrix P0, P1, P2;        // projectors onto V0, V1, V2
  QMatrix actX, actY, actH;  // coproduct action on V⊗V
};

const TensorSquare& decompose_tensor_square();

/// The involutive braiding on V⊗V: +1 on V0 and V2, -1 on V1.
const QMatrix& braiding_operator();

/// The q-Lie bracket as a linear map V⊗V -> V (3x9 matrix) for the given h,
/// built from the paper's 9-entry table with M = 2h(1+q^4)^{-1}.
QMatrix qlie_bracket_map(const mpq_class& h);

/// Same with q evaluated at the rational sample q0.
QMatrix qlie_bracket_map_at(const mpq_class& h, const mpq_class& q0);

VVector qlie_bracket(const VVector& a, const VVector& b, const mpq_class& h);

struct GenLieReport {
  size_t dim_k = 0;  // dim (I⊗V) ∩ (V⊗I)
  bool cond_a = false;
  bool cond_b = false;
  bool cond_c = false;
  bool all() const { return cond_a && cond_b && cond_c; }
};

/// Conditions a-c of the generalized Lie structure for the maps α (scaled by
/// h) and β (scaled by c), by exact subspace computation in V^{⊗3}.
GenLieReport check_generalized_lie(const mpq_class& h, const mpq_class& c);

/// Same computation with every scalar evaluated at q = q0 (oracle path for
/// comparing dim K against the classical value at q0 = 1).
GenLieReport check_generalized_lie_at(const mpq_class& h, const mpq_class& c,
                                      const mpq_class& q0);

/// Searches for a common factor ν(q) making the left-adjoint action
/// ρ(z)x = [z,x] satisfy the three almost-representation relations, with the
/// right-hand sides normalized by M = 2h(1+q^4)^{-1} so that ν(1) = 1;
/// returns the factor, or nullopt if no single factor works.
std::optional<QScalar> check_almost_jacobi(const mpq_class& h);

}  // namespace qhyp
