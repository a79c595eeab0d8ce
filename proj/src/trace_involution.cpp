#include "qhyp/trace_involution.hpp"

#include <algorithm>

namespace qhyp {

namespace {

// ---------------------------------------------------------------------------
// Square roots in Q(q), used for the quadratic steps of the classification.

std::optional<mpz_class> mpz_sqrt_exact(const mpz_class& v) {
  if (v < 0) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (r * r != v) return std::nullopt;
  return r;
}

std::optional<Laurent> sqrt_laurent(const Laurent& p) {
  if (p.is_zero()) return Laurent();
  if (p.lo() % 2 != 0 || p.hi() % 2 != 0) return std::nullopt;
  const std::vector<mpz_class>& c = p.coeffs();
  int deg = static_cast<int>(c.size()) - 1;
  int m = deg / 2;
  auto lead = mpz_sqrt_exact(c[deg]);
  if (!lead) return std::nullopt;
  std::vector<mpz_class> s(m + 1);
  s[m] = *lead;
  if (s[m] == 0) return std::nullopt;  // leading coeff of p is nonzero
  for (int k = m - 1; k >= 0; --k) {
    mpz_class acc = c[k + m];
    for (int i = k + 1; i <= m - 1; ++i) acc -= s[i] * s[k + m - i];
    mpz_class d = 2 * s[m];
    if (acc % d != 0) return std::nullopt;
    s[k] = acc / d;
  }
  Laurent root;
  for (int i = 0; i <= m; ++i) root = root + Laurent::term(s[i], p.lo() / 2 + i);
  if (!(root * root == p)) return std::nullopt;
  return root;
}

/// Real square root in Q(q) when one exists: sqrt(n/d) = sqrt(n d)/d.
std::optional<QScalar> qscalar_sqrt(const QScalar& a) {
  if (a.is_zero()) return QScalar(0);
  auto s = sqrt_laurent(a.num() * a.den());
  if (!s) return std::nullopt;
  return QScalar(*s, a.den());
}

// ---------------------------------------------------------------------------
// Sparse polynomials in the 9 ansatz coefficients; variable 3a+x is the
// coefficient of e_x in e_a^*.

using Exps = std::array<int, 9>;

struct Poly9 {
  std::map<Exps, QScalar> terms;

  void add(const Exps& e, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  static Poly9 var(int i) {
    Poly9 p;
    Exps e{};
    e[i] = 1;
    p.add(e, QScalar(1));
    return p;
  }

  static Poly9 constant(const QScalar& c) {
    Poly9 p;
    p.add(Exps{}, c);
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  Poly9 operator+(const Poly9& o) const {
    Poly9 r = *this;
    for (const auto& [e, c] : o.terms) r.add(e, c);
    return r;
  }

  Poly9 operator*(const Poly9& o) const {
    Poly9 r;
    for (const auto& [ea, ca] : terms)
      for (const auto& [eb, cb] : o.terms) {
        Exps e = ea;
        for (int i = 0; i < 9; ++i) e[i] += eb[i];
        r.add(e, ca * cb);
      }
    return r;
  }

  Poly9 subst(int i, const QScalar& val) const {
    Poly9 r;
    for (const auto& [e, coeff] : terms) {
      QScalar c = coeff;
      for (int k = 0; k < e[i]; ++k) c *= val;
      Exps e2 = e;
      e2[i] = 0;
      r.add(e2, c);
    }
    return r;
  }

  /// Coefficients (c0, c1, c2) if univariate of degree <= 2 in variable i.
  std::optional<std::array<QScalar, 3>> as_quadratic(int i) const {
    std::array<QScalar, 3> c{QScalar(0), QScalar(0), QScalar(0)};
    for (const auto& [e, coeff] : terms) {
      for (int j = 0; j < 9; ++j)
        if (j != i && e[j] != 0) return std::nullopt;
      if (e[i] > 2) return std::nullopt;
      c[e[i]] += coeff;
    }
    return c;
  }
};

/// [e_a^*, e_b^*]_k + ( ([e_a,e_b])^* )_k as a polynomial in the 9 unknowns.
Poly9 relation_poly(const QMatrix& br, int a, int b, int k) {
  Poly9 p;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      const QScalar& c = br(k, 3 * x + y);
      if (c.is_zero()) continue;
      p = p + Poly9::constant(c) * Poly9::var(3 * a + x) * Poly9::var(3 * b + y);
    }
  for (int z = 0; z < 3; ++z) {
    const QScalar& c = br(z, 3 * a + b);
    if (!c.is_zero()) p = p + Poly9::constant(c) * Poly9::var(3 * z + k);
  }
  return p;
}

/// (conj(J) J - id)_{x z} = sum_y J(y,z) J(x,y) - delta, entries real here.
Poly9 involutive_poly(int z, int x) {
  Poly9 p;
  for (int y = 0; y < 3; ++y) p = p + Poly9::var(3 * z + y) * Poly9::var(3 * y + x);
  if (z == x) p = p + Poly9::constant(QScalar(-1));
  return p;
}

CMatrix real_matrix(const QMatrix& m) {
  CMatrix r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = CScalar(m(i, j));
  return r;
}

InvolutionClassification classify_impl(const QMatrix& br) {
  // Elimination script: each step isolates one unknown from one component of
  // one bracket relation (or of involutivity), in an order that keeps every
  // step univariate. Branches: the β2 step is quadratic with roots {0, -1},
  // the α1 step quadratic with roots {±1}.
  struct Step {
    bool involutive;
    int a, b, k;  // relation indices, or (a, b) for the involutivity entry
    int var;
  };
  const std::vector<Step> script = {
      {false, 0, 0, 1, 1},  // [u*,u*] v-component  -> β1
      {false, 2, 2, 1, 7},  // [w*,w*] v-component  -> β3
      {false, 1, 1, 1, 4},  // [v*,v*] v-component  -> β2 in {0,-1}
      {false, 2, 0, 0, 3},  // [w*,u*] u-component  -> α2
      {false, 2, 0, 2, 5},  // [w*,u*] w-component  -> γ2
      {false, 0, 1, 2, 2},  // [u*,v*] w-component  -> γ1
      {false, 2, 1, 0, 6},  // [w*,v*] u-component  -> α3
      {true, 0, 0, 0, 0},   // (J~J - id)_{uu}      -> α1 = ±1
      {false, 0, 2, 1, 8},  // [u*,w*] v-component  -> γ3
  };

  InvolutionClassification out;
  std::vector<std::array<QScalar, 9>> solutions;

  auto descend = [&](auto&& self, size_t step, std::array<QScalar, 9> vals,
                     std::array<bool, 9> have) -> void {
    if (step == script.size()) {
      // Every unknown is assigned; accept only full solutions of the system.
      auto eval = [&](Poly9 p) {
        for (int i = 0; i < 9; ++i) p = p.subst(i, vals[i]);
        return p.is_zero();
      };
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          for (int k = 0; k < 3; ++k)
            if (!eval(relation_poly(br, a, b, k))) return;
      for (int z = 0; z < 3; ++z)
        for (int x = 0; x < 3; ++x)
          if (!eval(involutive_poly(z, x))) return;
      solutions.push_back(vals);
      return;
    }

    const Step& st = script[step];
    Poly9 p = st.involutive ? involutive_poly(st.a, st.b)
                            : relation_poly(br, st.a, st.b, st.k);
    for (int i = 0; i < 9; ++i)
      if (have[i]) p = p.subst(i, vals[i]);
    auto quad = p.as_quadratic(st.var);
    if (!quad) throw std::logic_error("classify_involutions: step not univariate");
    const auto& [c0, c1, c2] = *quad;

    if (c0.is_zero() && c1.is_zero() && c2.is_zero()) {
      out.degenerate = true;  // the constraint collapses (q^2 = 1)
      return;
    }
    std::vector<QScalar> roots;
    if (c2.is_zero()) {
      if (c1.is_zero()) return;  // inconsistent branch
      roots.push_back(-(c0 / c1));
    } else {
      auto s = qscalar_sqrt(c1 * c1 - QScalar(4) * c2 * c0);
      if (!s) return;  // no real root in Q(q)
      QScalar half = QScalar(1) / (QScalar(2) * c2);
      roots.push_back((-c1 + *s) * half);
      if (!s->is_zero()) roots.push_back((-c1 - *s) * half);
    }
    for (const QScalar& r : roots) {
      auto v2 = vals;
      auto h2 = have;
      v2[st.var] = r;
      h2[st.var] = true;
      self(self, step + 1, v2, h2);
    }
  };

  std::array<QScalar, 9> vals{};
  std::array<bool, 9> have{};
  descend(descend, 0, vals, have);

  for (const auto& sol : solutions) {
    QMatrix j(3, 3);
    for (int a = 0; a < 3; ++a)
      for (int x = 0; x < 3; ++x) j(x, a) = sol[3 * a + x];
    bool dup = false;
    for (const auto& known : out.involutions)
      if (known.J == real_matrix(j)) dup = true;
    if (dup) continue;
    InvolutionCandidate cand;
    cand.J = real_matrix(j);
    if (cand.J == InvolutionCandidate::minus_identity().J)
      cand.name = "-id";
    else if (cand.J == InvolutionCandidate::diag_1m1().J)
      cand.name = "diag(1,-1,1)";
    else
      cand.name = "solution";
    out.involutions.push_back(std::move(cand));
  }
  std::sort(out.involutions.begin(), out.involutions.end(),
            [](const InvolutionCandidate& a, const InvolutionCandidate& b) {
              return a.name < b.name;
            });
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Braided trace via the invariant projection.

InvariantProjector::InvariantProjector(int d, const QScalar& c)
    : d_(d), cfg_(AlgebraConfig::quotient(0, c)) {
  if (d < 0) throw std::invalid_argument("InvariantProjector: negative degree bound");
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      for (int e = 0; a + b + e <= d; ++e) {
        Monomial m{a, b, e};
        if (reduce_word(m.word(), cfg_) == NFPoly::monomial(m, QScalar(1))) {
          index_[m] = basis_.size();
          basis_.push_back(m);
        }
      }

  size_t n = basis_.size();
  QMatrix complement(n, 3 * n);
  size_t col = 0;
  for (const Monomial& m : basis_)
    for (Gen g : {Gen::X, Gen::Y, Gen::H}) {
      NFPoly img = uq_act(g, NFPoly::monomial(m, QScalar(1)), cfg_);
      std::vector<QScalar> v = coords(img);
      for (size_t i = 0; i < n; ++i) complement(i, col) = v[i];
      ++col;
    }

  system_ = QMatrix(n, 3 * n + 1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < 3 * n; ++j) system_(i, j) = complement(i, j);
  system_(index_.at(Monomial{}), 3 * n) = QScalar(1);

  // The decomposition x = λ·1 + (generator images) determines λ only if 1
  // stays outside the complement.
  if (rank(system_) != rank(complement) + 1)
    throw std::runtime_error("InvariantProjector: unit lies in the generator image span");
}

std::vector<QScalar> InvariantProjector::coords(const NFPoly& x) const {
  std::vector<QScalar> v(basis_.size());
  for (const auto& [m, c] : x.terms()) {
    auto it = index_.find(m);
    if (it == index_.end())
      throw std::invalid_argument("InvariantProjector: degree exceeds the bound");
    v[it->second] = c;
  }
  return v;
}

QScalar InvariantProjector::trace(const NFPoly& x) const {
  auto sol = solve(system_, coords(x));
  if (!sol) throw std::runtime_error("InvariantProjector: element not decomposable");
  return sol->back();
}

QScalar braided_trace(const NFPoly& x, const QScalar& c, int d) {
  return InvariantProjector(d, c).trace(x);
}

QScalar trace_formula_vm(int m, const mpq_class& c, int sign) {
  if (m < 0 || (sign != 1 && sign != -1))
    throw std::invalid_argument("trace_formula_vm: bad arguments");
  if (m % 2 != 0) return QScalar(0);
  QScalar ratio = (QScalar::q(2) - QScalar(1)) / (QScalar::q(2 * m + 2) - QScalar(1));
  return ratio * QScalar::q(sign * m) * QScalar(c).pow(sign * (m / 2));
}

QScalar quantum_trace_end(const SpinModule& m, const QMatrix& M, bool use_qh_inverse) {
  return (M * (use_qh_inverse ? m.qHinv : m.qH)).trace();
}

std::optional<bool> select_convention(int l) {
  SpinModule m = build_spin_module(l);
  size_t n = m.dim();
  auto invariant = [&](bool flag) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        QMatrix e(n, n);
        e(i, j) = QScalar(1);
        for (Gen g : {Gen::X, Gen::Y, Gen::H})
          // ε vanishes on X, Y, H, so the quantum trace of g.M must be 0.
          if (!quantum_trace_end(m, endo_action(m, g, e), flag).is_zero()) return false;
      }
    return true;
  };
  bool lo = invariant(false), hi = invariant(true);
  if (lo == hi) return std::nullopt;
  return hi;
}

// ---------------------------------------------------------------------------
// Involutions.

InvolutionCandidate InvolutionCandidate::minus_identity() {
  return {-CMatrix::identity(3), "-id"};
}

InvolutionCandidate InvolutionCandidate::diag_1m1() {
  CMatrix j(3, 3);
  j(0, 0) = CScalar(1);
  j(1, 1) = CScalar(-1);
  j(2, 2) = CScalar(1);
  return {j, "diag(1,-1,1)"};
}

InvolutionCandidate InvolutionCandidate::compact_form() {
  CMatrix j(3, 3);
  j(2, 0) = CScalar(1);  // u* = w
  j(1, 1) = CScalar(1);  // v* = v
  j(0, 2) = CScalar(1);  // w* = u
  return {j, "compact form"};
}

bool is_involutive(const InvolutionCandidate& jc) {
  CMatrix conj(3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) conj(i, j) = jc.J(i, j).conj();
  return jc.J * conj == CMatrix::identity(3);
}

bool check_involution(const InvolutionCandidate& jc, const mpq_class& h) {
  CMatrix br = real_matrix(qlie_bracket_map(h));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int k = 0; k < 3; ++k) {
        CScalar lhs;
        for (int x = 0; x < 3; ++x)
          for (int y = 0; y < 3; ++y) lhs += jc.J(x, a) * jc.J(y, b) * br(k, 3 * x + y);
        CScalar rhs;
        for (int z = 0; z < 3; ++z) rhs += br(z, 3 * a + b) * jc.J(k, z);
        if (!(lhs + rhs).is_zero()) return false;
      }
  return true;
}

InvolutionClassification classify_involutions(const mpq_class& h) {
  if (h == 0) throw std::invalid_argument("classify_involutions: h must be nonzero");
  return classify_impl(qlie_bracket_map(h));
}

InvolutionClassification classify_involutions_at(const mpq_class& h, const mpq_class& q0) {
  if (h == 0) throw std::invalid_argument("classify_involutions: h must be nonzero");
  return classify_impl(qlie_bracket_map_at(h, q0));
}

bool check_extension_consistency(const InvolutionCandidate& jc, const mpq_class& h,
                                 const QScalar& c) {
  AlgebraConfig cfg = AlgebraConfig::quotient(h, c);
  const QMatrix& s = braiding_operator();
  const std::string letters = "uvw";

  for (const WordPoly& rel : defining_relations(cfg)) {
    // r* term by term: degree two through μ(*⊗*)S̃, degree one through J,
    // constants through conjugation (real here).
    std::map<std::string, CScalar> image;
    auto put = [&](const std::string& w, const CScalar& v) {
      if (v.is_zero()) return;
      auto [it, inserted] = image.try_emplace(w, v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) image.erase(it);
      }
    };
    for (const auto& [word, coeff] : rel) {
      CScalar cc(coeff);
      if (word.size() == 0) {
        put("", cc);
      } else if (word.size() == 1) {
        int k = static_cast<int>(letters.find(word[0]));
        for (int x = 0; x < 3; ++x) put(std::string(1, letters[x]), cc * jc.J(x, k));
      } else if (word.size() == 2) {
        int i = static_cast<int>(letters.find(word[0]));
        int j = static_cast<int>(letters.find(word[1]));
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) {
            const QScalar& sc = s(3 * k + l, 3 * i + j);
            if (sc.is_zero()) continue;
            for (int x = 0; x < 3; ++x)
              for (int y = 0; y < 3; ++y) {
                CScalar v = cc * CScalar(sc) * jc.J(x, k) * jc.J(y, l);
                put({letters[x], letters[y]}, v);
              }
          }
      } else {
        throw std::logic_error("check_extension_consistency: relation degree > 2");
      }
    }
    WordPoly re, im;
    for (const auto& [word, v] : image) {
      if (!v.re().is_zero()) re[word] = v.re();
      if (!v.im().is_zero()) im[word] = v.im();
    }
    if (!reduce(re, cfg).is_zero() || !reduce(im, cfg).is_zero()) return false;
  }
  return true;
}

namespace {

/// Basis of {z : J conj(z) = s z} for s = ±1, one complex 3-vector per column.
std::vector<std::array<CScalar, 3>> eigenspace(const CMatrix& j, int s) {
  QMatrix sys(6, 6);
  for (size_t i = 0; i < 3; ++i)
    for (size_t k = 0; k < 3; ++k) {
      // J conj(z) = s z with z = x + iy reads A x + B y = s x, B x - A y = s y.
      sys(i, k) = j(i, k).re();
      sys(i, 3 + k) = j(i, k).im();
      sys(3 + i, k) = j(i, k).im();
      sys(3 + i, 3 + k) = -j(i, k).re();
      if (i == k) {
        sys(i, k) -= QScalar(s);
        sys(3 + i, 3 + k) -= QScalar(s);
      }
    }
  QMatrix ns = nullspace(sys);
  std::vector<std::array<CScalar, 3>> basis;
  for (size_t c = 0; c < ns.cols(); ++c) {
    std::array<CScalar, 3> z;
    for (size_t i = 0; i < 3; ++i) z[i] = CScalar(ns(i, c), ns(3 + i, c));
    basis.push_back(z);
  }
  return basis;
}

std::array<CScalar, 3> bracket_c(const CMatrix& br, const std::array<CScalar, 3>& a,
                                 const std::array<CScalar, 3>& b) {
  std::array<CScalar, 3> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CScalar c = a[i] * b[j];
      if (c.is_zero()) continue;
      for (int k = 0; k < 3; ++k) r[k] += c * br(k, 3 * i + j);
    }
  return r;
}

bool has_parity(const CMatrix& j, const std::array<CScalar, 3>& z, int s) {
  for (int i = 0; i < 3; ++i) {
    CScalar lhs;
    for (int k = 0; k < 3; ++k) lhs += j(i, k) * z[k].conj();
    if (!(lhs - CScalar(QScalar(s)) * z[i]).is_zero()) return false;
  }
  return true;
}

}  // namespace

bool check_odd_subalgebra(const InvolutionCandidate& jc, const mpq_class& h) {
  CMatrix br = real_matrix(qlie_bracket_map(h));
  auto odd = eigenspace(jc.J, -1);
  for (const auto& a : odd)
    for (const auto& b : odd)
      if (!has_parity(jc.J, bracket_c(br, a, b), -1)) return false;
  return true;
}

std::optional<std::pair<int, int>> even_part_nonclosure_witness(const InvolutionCandidate& jc,
                                                                const mpq_class& h) {
  CMatrix br = real_matrix(qlie_bracket_map(h));
  auto even = eigenspace(jc.J, 1);
  for (size_t i = 0; i < even.size(); ++i)
    for (size_t j = 0; j < even.size(); ++j) {
      auto w = bracket_c(br, even[i], even[j]);
      bool zero = w[0].is_zero() && w[1].is_zero() && w[2].is_zero();
      if (!zero && !has_parity(jc.J, w, 1))
        return std::make_pair(static_cast<int>(i), static_cast<int>(j));
    }
  return std::nullopt;
}

}  // namespace qhyp
