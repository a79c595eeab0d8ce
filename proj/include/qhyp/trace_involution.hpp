#pragma once

#include "qhyp/braided_core.hpp"
#include "qhyp/quotient_algebra.hpp"

namespace qhyp {

/// Invariant projection onto the trivial component of the degree-<= d part of
/// A_{0,q}^c: the complement is spanned by the generator images {g.b}, valid
/// for semisimple modules at generic q.
class InvariantProjector {
 public:
  InvariantProjector(int d, const QScalar& c);

  /// λ in the unique decomposition x = λ·1 + r with r in the complement.
  QScalar trace(const NFPoly& x) const;

  const std::vector<Monomial>& basis() const { return basis_; }
  const AlgebraConfig& config() const { return cfg_; }

 private:
  std::vector<QScalar> coords(const NFPoly& x) const;

  int d_;
  AlgebraConfig cfg_;
  std::vector<Monomial> basis_;
  std::map<Monomial, size_t> index_;
  QMatrix system_;  // [complement columns | 1]
};

/// tr_q x in A_{0,q}^c, normalized by tr_q 1 = 1.
QScalar braided_trace(const NFPoly& x, const QScalar& c, int d);

/// (q^2-1)/(2(q^{2m+2}-1)) (1+(-1)^m) (q sqrt(c))^{sign*m}; sign=-1 is the
/// printed convention, sign=+1 the one the projection oracle matches.
QScalar trace_formula_vm(int m, const mpq_class& c, int sign);

/// Matrix trace of M q^{±H}.
QScalar quantum_trace_end(const SpinModule& m, const QMatrix& M, bool use_qh_inverse);

/// The unique convention for which Tr_q(ρ_End(a) M) = ε(a) Tr_q(M) holds on
/// all elementary M; true = q^{-H}, false = q^{H}, nullopt if neither or both.
std::optional<bool> select_convention(int l);

/// Antilinear map on the complexified span of {u,v,w}: e_k* is column k of J,
/// extended by (λz)* = conj(λ) z*.
struct InvolutionCandidate {
  CMatrix J;
  std::string name;

  static InvolutionCandidate minus_identity();
  static InvolutionCandidate diag_1m1();      // u*=u, v*=-v, w*=w
  static InvolutionCandidate compact_form();  // u*=w, v*=v, w*=u
};

/// conj(J)·J = id.
bool is_involutive(const InvolutionCandidate& jc);

/// [a*, b*] = -([a,b])* on all nine basis pairs.
bool check_involution(const InvolutionCandidate& jc, const mpq_class& h);

struct InvolutionClassification {
  bool degenerate = false;  // the (1-q^2) constraint collapses (q = 1)
  std::vector<InvolutionCandidate> involutions;
};

/// Solves the coordination constraints over the 9-coefficient ansatz,
/// following the elimination order β1, β3, β2 ∈ {0,-1}, α2, γ2, γ1, α3,
/// then α1 and γ3, keeping the real involutive solutions.
InvolutionClassification classify_involutions(const mpq_class& h);

/// Same at a sampled q0 (reports the degeneracy at q0 = 1).
InvolutionClassification classify_involutions_at(const mpq_class& h, const mpq_class& q0);

/// The ideal of A_{h,q}^c is stable under the extension *μ = μ(*⊗*)S̃.
bool check_extension_consistency(const InvolutionCandidate& jc, const mpq_class& h,
                                 const QScalar& c);

/// Brackets of odd elements (z* = -z) are odd.
bool check_odd_subalgebra(const InvolutionCandidate& jc, const mpq_class& h);

/// A pair of even elements whose bracket is not even, if one exists.
std::optional<std::pair<int, int>> even_part_nonclosure_witness(const InvolutionCandidate& jc,
                                                                const mpq_class& h);

}  // namespace qhyp
