#include "qhyp/quotient_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "qhyp/braided_core.hpp"

namespace qhyp {

namespace {

QScalar q2() { return QScalar::q(2); }
QScalar b2() { return QScalar::q() + QScalar::q(-1); }
QScalar q3q() { return QScalar::q(3) + QScalar::q(1); }

void wp_add(WordPoly& p, const std::string& w, const QScalar& c) {
  if (c.is_zero()) return;
  auto it = p.find(w);
  if (it == p.end()) {
    p.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

struct Redex {
  size_t pos = 0;
  size_t len = 0;
  WordPoly rhs;  // replacement for word[pos, pos+len)
};

// Replacement of the family pattern u v^b w: q^{-2b} (v - 2h)^b R(v) with
// R(v) the uw normal form.
WordPoly family_rhs(const AlgebraConfig& cfg, int b) {
  std::vector<QScalar> r = {cfg.uw_c, cfg.uw_v1, cfg.uw_v2};  // coeffs of v^k
  QScalar h2 = QScalar(2) * cfg.h;
  QScalar qm2 = QScalar::q(-2);
  for (int t = 0; t < b; ++t) {
    // multiply by (v - 2h)/q^2
    std::vector<QScalar> nr(r.size() + 1);
    for (size_t k = 0; k < r.size(); ++k) {
      nr[k + 1] += qm2 * r[k];
      nr[k] -= qm2 * h2 * r[k];
    }
    r = std::move(nr);
  }
  WordPoly out;
  for (size_t k = 0; k < r.size(); ++k) wp_add(out, std::string(k, 'v'), r[k]);
  return out;
}

std::optional<Redex> redex_at(const std::string& w, size_t i, const AlgebraConfig& cfg) {
  QScalar h2 = QScalar(2) * cfg.h;
  if (i + 1 < w.size()) {
    std::string pair = w.substr(i, 2);
    if (pair == "vu") {
      WordPoly rhs;
      wp_add(rhs, "uv", q2());
      wp_add(rhs, "u", h2);
      return Redex{i, 2, std::move(rhs)};
    }
    if (pair == "wv") {
      WordPoly rhs;
      wp_add(rhs, "vw", q2());
      wp_add(rhs, "w", h2);
      return Redex{i, 2, std::move(rhs)};
    }
    if (pair == "wu") {
      WordPoly rhs;
      wp_add(rhs, "uw", QScalar(1));
      wp_add(rhs, "vv", (QScalar(1) - q2()) / q3q());
      wp_add(rhs, "v", -h2 / q3q());
      return Redex{i, 2, std::move(rhs)};
    }
  }
  if (cfg.mode == AlgebraMode::Quotient && w[i] == 'u') {
    size_t j = i + 1;
    while (j < w.size() && w[j] == 'v') ++j;
    if (j < w.size() && w[j] == 'w')
      return Redex{i, j - i + 1, family_rhs(cfg, static_cast<int>(j - i - 1))};
  }
  return std::nullopt;
}

std::optional<Redex> leftmost_redex(const std::string& w, const AlgebraConfig& cfg) {
  for (size_t i = 0; i < w.size(); ++i)
    if (auto r = redex_at(w, i, cfg)) return r;
  return std::nullopt;
}

std::vector<Redex> all_redexes(const std::string& w, const AlgebraConfig& cfg) {
  std::vector<Redex> out;
  for (size_t i = 0; i < w.size(); ++i)
    if (auto r = redex_at(w, i, cfg)) out.push_back(std::move(*r));
  return out;
}

WordPoly apply_redex(const std::string& w, const Redex& r, const QScalar& coeff) {
  std::string prefix = w.substr(0, r.pos);
  std::string suffix = w.substr(r.pos + r.len);
  WordPoly out;
  for (const auto& [mid, c] : r.rhs) wp_add(out, prefix + mid + suffix, coeff * c);
  return out;
}

Monomial word_monomial(const std::string& w) {
  Monomial m;
  for (char ch : w) {
    if (ch == 'u')
      ++m.a;
    else if (ch == 'v')
      ++m.b;
    else
      ++m.e;
  }
  return m;
}

}  // namespace

AlgebraConfig AlgebraConfig::enveloping(const mpq_class& h) {
  AlgebraConfig cfg;
  cfg.mode = AlgebraMode::Enveloping;
  cfg.h = QScalar(mpq_class(h));
  return cfg;
}

AlgebraConfig AlgebraConfig::quotient(const mpq_class& h, const QScalar& c) {
  AlgebraConfig cfg;
  cfg.mode = AlgebraMode::Quotient;
  cfg.h = QScalar(mpq_class(h));
  cfg.c = c;
  // Eliminate uw from the Casimir relation
  //   (q^3+q) uw + v^2 + (q+q^-1) wu = c
  // using wu = uw + s2 v^2 + s1 v from the wu-rule.
  QScalar s2 = (QScalar(1) - q2()) / q3q();
  QScalar s1 = -(QScalar(2) * cfg.h) / q3q();
  QScalar d = q3q() + b2();
  cfg.uw_v2 = -(QScalar(1) + b2() * s2) / d;
  cfg.uw_v1 = -(b2() * s1) / d;
  cfg.uw_c = c / d;
  return cfg;
}

std::string Monomial::word() const {
  return std::string(a, 'u') + std::string(b, 'v') + std::string(e, 'w');
}

std::string Monomial::str() const {
  if (degree() == 0) return "1";
  std::ostringstream out;
  auto emit = [&](char ch, int n) {
    if (n == 0) return;
    out << ch;
    if (n > 1) out << "^" << n;
  };
  emit('u', a);
  emit('v', b);
  emit('w', e);
  return out.str();
}

Monomial Monomial::parse(const std::string& text) {
  Monomial m;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.substr(i, 1) == "1") {
    ++i;
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("Monomial::parse: " + text);
    return m;
  }
  while (i < text.size()) {
    char ch = text[i++];
    int n = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      n = std::stoi(text.substr(start, i - start));
    }
    if (ch == 'u')
      m.a += n;
    else if (ch == 'v')
      m.b += n;
    else if (ch == 'w')
      m.e += n;
    else
      throw std::invalid_argument("Monomial::parse: bad letter in " + text);
    skip_ws();
  }
  return m;
}

NFPoly NFPoly::constant(const QScalar& s) {
  NFPoly p;
  p.add(Monomial{}, s);
  return p;
}

NFPoly NFPoly::gen(char letter) {
  Monomial m;
  if (letter == 'u')
    m.a = 1;
  else if (letter == 'v')
    m.b = 1;
  else if (letter == 'w')
    m.e = 1;
  else
    throw std::invalid_argument("NFPoly::gen: bad letter");
  return monomial(m, QScalar(1));
}

NFPoly NFPoly::monomial(const Monomial& m, const QScalar& coeff) {
  NFPoly p;
  p.add(m, coeff);
  return p;
}

void NFPoly::add(const Monomial& m, const QScalar& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

int NFPoly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

QScalar NFPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QScalar(0) : it->second;
}

NFPoly NFPoly::operator-() const {
  NFPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

NFPoly operator+(const NFPoly& a, const NFPoly& b) {
  NFPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add(m, c);
  return r;
}

NFPoly operator-(const NFPoly& a, const NFPoly& b) { return a + (-b); }

NFPoly operator*(const QScalar& s, const NFPoly& p) {
  NFPoly r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : p.terms_) r.add(m, s * c);
  return r;
}

std::string NFPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, QScalar>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
    return x.first.degree() > y.first.degree();
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : ts) {
    if (!first) out << " + ";
    first = false;
    std::string cs = c.str();
    if (m.degree() == 0) {
      out << cs;
      continue;
    }
    if (cs == "1") {
      out << m.str();
      continue;
    }
    if (cs == "-1") {
      out << "-" << m.str();
      continue;
    }
    bool wrap = cs.find_first_of("+-", 1) != std::string::npos;
    out << (wrap ? "(" + cs + ")" : cs) << "*" << m.str();
  }
  return out.str();
}

NFPoly reduce(const WordPoly& p, const AlgebraConfig& cfg) {
  NFPoly result;
  WordPoly work = p;
  while (!work.empty()) {
    // Pick the longest word first so normal terms accumulate monotonically.
    auto it = std::max_element(work.begin(), work.end(), [](const auto& x, const auto& y) {
      return x.first.size() < y.first.size();
    });
    std::string w = it->first;
    QScalar c = it->second;
    work.erase(it);
    auto r = leftmost_redex(w, cfg);
    if (!r) {
      result.add(word_monomial(w), c);
      continue;
    }
    for (const auto& [nw, nc] : apply_redex(w, *r, c)) wp_add(work, nw, nc);
  }
  return result;
}

NFPoly reduce_word(const std::string& word, const AlgebraConfig& cfg) {
  for (char ch : word)
    if (ch != 'u' && ch != 'v' && ch != 'w')
      throw std::invalid_argument("reduce_word: bad letter in \"" + word + "\"");
  WordPoly p;
  wp_add(p, word, QScalar(1));
  return reduce(p, cfg);
}

NFPoly multiply(const NFPoly& x, const NFPoly& y, const AlgebraConfig& cfg) {
  WordPoly p;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) wp_add(p, mx.word() + my.word(), cx * cy);
  return reduce(p, cfg);
}

bool check_confluence(const AlgebraConfig& cfg, int max_len) {
  if (max_len < 3) throw std::invalid_argument("check_confluence: max_len must be >= 3");
  std::vector<std::string> words = {""};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : words)
      for (char ch : {'u', 'v', 'w'}) next.push_back(w + ch);
    words = std::move(next);
    for (const auto& w : words) {
      NFPoly nf = reduce_word(w, cfg);
      for (const auto& r : all_redexes(w, cfg)) {
        if (reduce(apply_redex(w, r, QScalar(1)), cfg) != nf) return false;
      }
    }
  }
  return true;
}

int graded_dimension(const AlgebraConfig& cfg, int d) {
  if (d < 0) throw std::invalid_argument("graded_dimension: d must be >= 0");
  int count = 0;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b) {
      Monomial m{a, b, d - a - b};
      if (!leftmost_redex(m.word(), cfg)) ++count;
    }
  return count;
}

WordPoly uq_act_free(Gen g, const std::string& word) {
  // Letter images and the group-like scalars of q^{±H} on letters.
  auto letter_image = [&](char ch) -> WordPoly {
    WordPoly img;
    switch (g) {
      case Gen::X:
        if (ch == 'v') wp_add(img, "u", -b2());
        if (ch == 'w') wp_add(img, "v", QScalar(1));
        break;
      case Gen::Y:
        if (ch == 'u') wp_add(img, "v", QScalar(-1));
        if (ch == 'v') wp_add(img, "w", b2());
        break;
      case Gen::H:
        if (ch == 'u') wp_add(img, "u", QScalar(2));
        if (ch == 'w') wp_add(img, "w", QScalar(-2));
        break;
    }
    return img;
  };
  auto grouplike = [&](char ch) -> QScalar {
    int w = ch == 'u' ? 2 : (ch == 'w' ? -2 : 0);
    switch (g) {
      case Gen::X:  // q^{-H} on the left factors
        return QScalar::q(-w);
      case Gen::Y:  // q^{H} on the right factors
        return QScalar::q(w);
      case Gen::H:
        return QScalar(1);
    }
    return QScalar(1);
  };

  WordPoly out;
  QScalar left(1);
  for (size_t i = 0; i < word.size(); ++i) {
    QScalar scale = left;
    if (g == Gen::Y) {
      scale = QScalar(1);
      for (size_t k = i + 1; k < word.size(); ++k) scale *= grouplike(word[k]);
    }
    for (const auto& [img, c] : letter_image(word[i]))
      wp_add(out, word.substr(0, i) + img + word.substr(i + 1), scale * c);
    if (g == Gen::X) left *= grouplike(word[i]);
  }
  return out;
}

NFPoly uq_act(Gen g, const NFPoly& x, const AlgebraConfig& cfg) {
  WordPoly acc;
  for (const auto& [m, c] : x.terms())
    for (const auto& [w, cw] : uq_act_free(g, m.word())) wp_add(acc, w, c * cw);
  return reduce(acc, cfg);
}

std::vector<WordPoly> defining_relations(const AlgebraConfig& cfg) {
  QScalar h2 = QScalar(2) * cfg.h;
  std::vector<WordPoly> rels;
  WordPoly r1;  // q^2 uv - vu + 2h u
  wp_add(r1, "uv", q2());
  wp_add(r1, "vu", QScalar(-1));
  wp_add(r1, "u", h2);
  rels.push_back(std::move(r1));
  WordPoly r2;  // (q^3+q)(uw - wu) + (1-q^2) v^2 - 2h v
  wp_add(r2, "uw", q3q());
  wp_add(r2, "wu", -q3q());
  wp_add(r2, "vv", QScalar(1) - q2());
  wp_add(r2, "v", -h2);
  rels.push_back(std::move(r2));
  WordPoly r3;  // -q^2 vw + wv - 2h w
  wp_add(r3, "vw", -q2());
  wp_add(r3, "wv", QScalar(1));
  wp_add(r3, "w", -h2);
  rels.push_back(std::move(r3));
  if (cfg.mode == AlgebraMode::Quotient) {
    WordPoly r4;  // C_q - c
    wp_add(r4, "uw", q3q());
    wp_add(r4, "vv", QScalar(1));
    wp_add(r4, "wu", b2());
    wp_add(r4, "", -cfg.c);
    rels.push_back(std::move(r4));
  }
  return rels;
}

bool check_uq_act_well_defined(const AlgebraConfig& cfg) {
  for (const auto& rel : defining_relations(cfg)) {
    if (!reduce(rel, cfg).is_zero()) return false;
    for (Gen g : {Gen::X, Gen::Y, Gen::H}) {
      WordPoly img;
      for (const auto& [w, c] : rel)
        for (const auto& [iw, ic] : uq_act_free(g, w)) wp_add(img, iw, c * ic);
      if (!reduce(img, cfg).is_zero()) return false;
    }
  }
  return true;
}

std::optional<std::pair<int, int>> braided_commutativity_counterexample(
    const AlgebraConfig& cfg) {
  const QMatrix& s = braiding_operator();
  const char letters[3] = {'u', 'v', 'w'};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      NFPoly lhs = reduce_word({letters[i], letters[j]}, cfg);
      NFPoly rhs;
      for (int k = 0; k < 9; ++k) {
        const QScalar& coeff = s(k, 3 * i + j);
        if (coeff.is_zero()) continue;
        rhs = rhs + coeff * reduce_word({letters[k / 3], letters[k % 3]}, cfg);
      }
      if (lhs != rhs) return std::make_pair(i, j);
    }
  return std::nullopt;
}

bool check_braided_commutativity(const QScalar& c) {
  AlgebraConfig cfg = AlgebraConfig::quotient(0, c);
  return !braided_commutativity_counterexample(cfg).has_value();
}

bool rep_consistency(const BraidedRep& rep, const std::string& word,
                     const AlgebraConfig& cfg) {
  size_t n = rep.module.dim();
  auto gen_matrix = [&](char ch) -> const QMatrix& {
    return ch == 'u' ? rep.Ur : (ch == 'v' ? rep.Vr : rep.Wr);
  };
  QMatrix direct = QMatrix::identity(n);
  for (char ch : word) direct = direct * gen_matrix(ch);

  QMatrix image(n, n);
  NFPoly nf = reduce_word(word, cfg);
  for (const auto& [m, c] : nf.terms()) {
    QMatrix term = QMatrix::identity(n);
    for (char ch : m.word()) term = term * gen_matrix(ch);
    image = image + c * term;
  }
  return image == direct;
}

NFPoly casimir_commutator_residual(const AlgebraConfig& cfg, char letter) {
  WordPoly cq;
  wp_add(cq, "uw", q3q());
  wp_add(cq, "vv", QScalar(1));
  wp_add(cq, "wu", b2());
  NFPoly c_nf = reduce(cq, cfg);
  NFPoly x = NFPoly::gen(letter);
  return multiply(c_nf, x, cfg) - multiply(x, c_nf, cfg);
}

}  // namespace qhyp
