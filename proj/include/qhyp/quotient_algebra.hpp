#pragma once

#include <map>
#include <string>

#include "qhyp/spin_reps.hpp"

namespace qhyp {

enum class AlgebraMode { Enveloping, Quotient };

/// Rewrite configuration for A_{h,q} (enveloping) or A_{h,q}^c (quotient).
/// The reducible words are vu, wv, wu, and in quotient mode the family
/// u v^b w; the uw-elimination coefficients are derived from the Casimir
/// relation and the wu-rule by exact linear elimination at construction.
struct AlgebraConfig {
  AlgebraMode mode = AlgebraMode::Enveloping;
  QScalar h;
  QScalar c;
  // Normal form of uw in quotient mode: uw_v2 v^2 + uw_v1 v + uw_c.
  QScalar uw_v2, uw_v1, uw_c;

  static AlgebraConfig enveloping(const mpq_class& h);
  static AlgebraConfig quotient(const mpq_class& h, const QScalar& c);
};

/// Ordered monomial u^a v^b w^e.
struct Monomial {
  int a = 0, b = 0, e = 0;
  auto operator<=>(const Monomial&) const = default;
  int degree() const { return a + b + e; }
  std::string word() const;  // letters, e.g. "uuvw"
  std::string str() const;   // e.g. "u^2vw", "1"
  static Monomial parse(const std::string& text);
};

/// Element of the algebra in normal form: monomial -> coefficient,
/// zero coefficients never stored.
class NFPoly {
 public:
  NFPoly() = default;
  static NFPoly one() { return constant(QScalar(1)); }
  static NFPoly constant(const QScalar& s);
  static NFPoly gen(char letter);
  static NFPoly monomial(const Monomial& m, const QScalar& coeff);

  void add(const Monomial& m, const QScalar& coeff);
  const std::map<Monomial, QScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  QScalar coeff(const Monomial& m) const;

  NFPoly operator-() const;
  friend NFPoly operator+(const NFPoly& a, const NFPoly& b);
  friend NFPoly operator-(const NFPoly& a, const NFPoly& b);
  friend NFPoly operator*(const QScalar& s, const NFPoly& p);
  bool operator==(const NFPoly&) const = default;

  std::string str() const;

 private:
  std::map<Monomial, QScalar> terms_;
};

/// Free-algebra element: word over {u,v,w} -> coefficient.
using WordPoly = std::map<std::string, QScalar>;

NFPoly reduce_word(const std::string& word, const AlgebraConfig& cfg);
NFPoly reduce(const WordPoly& p, const AlgebraConfig& cfg);
NFPoly multiply(const NFPoly& x, const NFPoly& y, const AlgebraConfig& cfg);

/// Local confluence on every word of length <= max_len: each one-step
/// reduct normalizes to the same normal form.
bool check_confluence(const AlgebraConfig& cfg, int max_len);

/// Number of irreducible monomials of total degree exactly d.
int graded_dimension(const AlgebraConfig& cfg, int d);

/// Generator action on a free-algebra word through the iterated coproduct.
WordPoly uq_act_free(Gen g, const std::string& word);

/// Action on the quotient: act on a representative word, then reduce.
NFPoly uq_act(Gen g, const NFPoly& x, const AlgebraConfig& cfg);

/// The defining relations as free-algebra elements (each must reduce to 0).
std::vector<WordPoly> defining_relations(const AlgebraConfig& cfg);

/// The action maps every defining relation into the ideal.
bool check_uq_act_well_defined(const AlgebraConfig& cfg);

/// μ(S̃ t) = μ(t) in A_{0,q}^c for all 9 basis tensors t.
bool check_braided_commutativity(const QScalar& c);

/// First basis tensor (i, j) with μ(S̃ t) != μ(t), if any.
std::optional<std::pair<int, int>> braided_commutativity_counterexample(
    const AlgebraConfig& cfg);

/// Matrix image of reduce(word) under the rescaled representation equals the
/// direct product of generator matrices along the word.
bool rep_consistency(const BraidedRep& rep, const std::string& word,
                     const AlgebraConfig& cfg);

/// Diagnostic: normal form of C_q x - x C_q for a generator letter.
NFPoly casimir_commutator_residual(const AlgebraConfig& cfg, char letter);

}  // namespace qhyp
