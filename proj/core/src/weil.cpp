#include "cdk/weil.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cdk {

namespace {
int parity_of(CliffWord w) { return std::popcount(w) & 1; }
}  // namespace

std::string cliff_word_str(CliffWord w, const char* sym) {
  if (w == 0) return "1";
  std::string out;
  for (int i = 0; i < 32; ++i)
    if (w & (1u << i)) {
      if (!out.empty()) out += "*";
      out += sym + std::to_string(i + 1);
    }
  return out;
}

std::string pbw_word_str(const PbwWord& e) {
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "Xh" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// blade products

CliffWord cliff_mask_mul(CliffWord A, CliffWord B, Scalar& coeff) {
  while (B) {
    int b = std::countr_zero(B);
    B &= B - 1;
    if (std::popcount(A >> (b + 1)) & 1) coeff = -coeff;
    CliffWord bit = 1u << b;
    if (A & bit) {
      coeff = coeff * Scalar::ratio(1, 2);  // X_i X_i = 1/2
      A &= ~bit;
    } else {
      A |= bit;
    }
  }
  return A;
}

bool wedge_mask_mul(CliffWord A, CliffWord B, int& sign) {
  if (A & B) return false;
  while (B) {
    int b = std::countr_zero(B);
    B &= B - 1;
    if (std::popcount(A >> (b + 1)) & 1) sign = -sign;
    A |= 1u << b;
  }
  return true;
}

// ---------------------------------------------------------------------------
// CliffordElement / ExteriorElement

void CliffordElement::add(CliffWord w, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = t_.find(w);
  if (it == t_.end()) t_.emplace(w, s);
  else {
    it->second += s;
    if (it->second.is_zero()) t_.erase(it);
  }
}

int CliffordElement::top_degree() const {
  int d = -1;
  for (const auto& [w, s] : t_) d = std::max(d, std::popcount(w));
  return d;
}

CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
  CliffordElement r = a;
  for (const auto& [w, s] : b.t_) r.add(w, s);
  return r;
}

CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
  CliffordElement r = a;
  for (const auto& [w, s] : b.t_) r.add(w, -s);
  return r;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  CliffordElement r;
  for (const auto& [wa, sa] : a.t_)
    for (const auto& [wb, sb] : b.t_) {
      Scalar c = sa * sb;
      CliffWord w = cliff_mask_mul(wa, wb, c);
      r.add(w, c);
    }
  return r;
}

CliffordElement operator*(const Scalar& s, const CliffordElement& a) {
  CliffordElement r;
  for (const auto& [w, v] : a.t_) r.add(w, s * v);
  return r;
}

std::string CliffordElement::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [w, s] : t_) {
    if (!out.empty()) out += " + ";
    out += "(" + s.str() + ")*" + cliff_word_str(w);
  }
  return out;
}

void ExteriorElement::add(CliffWord w, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = t_.find(w);
  if (it == t_.end()) t_.emplace(w, s);
  else {
    it->second += s;
    if (it->second.is_zero()) t_.erase(it);
  }
}

int ExteriorElement::top_degree() const {
  int d = -1;
  for (const auto& [w, s] : t_) d = std::max(d, std::popcount(w));
  return d;
}

ExteriorElement operator+(const ExteriorElement& a, const ExteriorElement& b) {
  ExteriorElement r = a;
  for (const auto& [w, s] : b.t_) r.add(w, s);
  return r;
}

ExteriorElement operator-(const ExteriorElement& a, const ExteriorElement& b) {
  ExteriorElement r = a;
  for (const auto& [w, s] : b.t_) r.add(w, -s);
  return r;
}

ExteriorElement operator*(const ExteriorElement& a, const ExteriorElement& b) {
  ExteriorElement r;
  for (const auto& [wa, sa] : a.t_)
    for (const auto& [wb, sb] : b.t_) {
      int sign = 1;
      CliffWord A = wa;
      if (!wedge_mask_mul(A, wb, sign)) continue;
      CliffWord w = A;
      r.add(w, Scalar(sign) * sa * sb);
    }
  return r;
}

ExteriorElement operator*(const Scalar& s, const ExteriorElement& a) {
  ExteriorElement r;
  for (const auto& [w, v] : a.t_) r.add(w, s * v);
  return r;
}

std::string ExteriorElement::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [w, s] : t_) {
    if (!out.empty()) out += " + ";
    out += "(" + s.str() + ")*" + cliff_word_str(w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weil elements

namespace {
const WeilAlgebra* join_ctx(const WeilAlgebra* a, const WeilAlgebra* b) {
  if (a && b && a != b) throw lie_error("elements from different Weil algebra contexts");
  return a ? a : b;
}
int pbw_len(const PbwWord& e) {
  int n = 0;
  for (auto x : e) n += x;
  return n;
}
}  // namespace

void WeilElement::add(const WeilKey& k, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) t_.emplace(k, s);
  else {
    it->second += s;
    if (it->second.is_zero()) t_.erase(it);
  }
}

int WeilElement::degree() const {
  int d = -1;
  for (const auto& [k, s] : t_) d = std::max(d, 2 * pbw_len(k.pbw) + std::popcount(k.cliff));
  return d;
}

WeilElement WeilElement::top_part() const {
  WeilElement r(A_);
  int d = degree();
  for (const auto& [k, s] : t_)
    if (2 * pbw_len(k.pbw) + std::popcount(k.cliff) == d) r.add(k, s);
  return r;
}

WeilElement WeilElement::even_part() const {
  WeilElement r(A_);
  for (const auto& [k, s] : t_)
    if (!parity_of(k.cliff)) r.add(k, s);
  return r;
}

WeilElement WeilElement::odd_part() const {
  WeilElement r(A_);
  for (const auto& [k, s] : t_)
    if (parity_of(k.cliff)) r.add(k, s);
  return r;
}

WeilElement operator+(const WeilElement& a, const WeilElement& b) {
  WeilElement r(join_ctx(a.A_, b.A_));
  r.t_ = a.t_;
  for (const auto& [k, s] : b.t_) r.add(k, s);
  return r;
}

WeilElement operator-(const WeilElement& a, const WeilElement& b) {
  WeilElement r(join_ctx(a.A_, b.A_));
  r.t_ = a.t_;
  for (const auto& [k, s] : b.t_) r.add(k, -s);
  return r;
}

WeilElement operator*(const Scalar& s, const WeilElement& a) {
  WeilElement r(a.A_);
  for (const auto& [k, v] : a.t_) r.add(k, s * v);
  return r;
}

std::string WeilElement::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [k, s] : t_) {
    if (!out.empty()) out += " + ";
    out += "(" + s.str() + ")*" + pbw_word_str(k.pbw);
    if (k.cliff) out += "*" + cliff_word_str(k.cliff);
  }
  return out;
}

void ClassicalWeilElement::add(const WeilKey& k, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) t_.emplace(k, s);
  else {
    it->second += s;
    if (it->second.is_zero()) t_.erase(it);
  }
}

int ClassicalWeilElement::degree() const {
  int d = -1;
  for (const auto& [k, s] : t_) d = std::max(d, 2 * pbw_len(k.pbw) + std::popcount(k.cliff));
  return d;
}

ClassicalWeilElement ClassicalWeilElement::top_part() const {
  ClassicalWeilElement r(A_);
  int d = degree();
  for (const auto& [k, s] : t_)
    if (2 * pbw_len(k.pbw) + std::popcount(k.cliff) == d) r.add(k, s);
  return r;
}

ClassicalWeilElement operator+(const ClassicalWeilElement& a, const ClassicalWeilElement& b) {
  ClassicalWeilElement r(join_ctx(a.A_, b.A_));
  r.t_ = a.t_;
  for (const auto& [k, s] : b.t_) r.add(k, s);
  return r;
}

ClassicalWeilElement operator-(const ClassicalWeilElement& a, const ClassicalWeilElement& b) {
  ClassicalWeilElement r(join_ctx(a.A_, b.A_));
  r.t_ = a.t_;
  for (const auto& [k, s] : b.t_) r.add(k, -s);
  return r;
}

ClassicalWeilElement operator*(const ClassicalWeilElement& a, const ClassicalWeilElement& b) {
  ClassicalWeilElement r(join_ctx(a.A_, b.A_));
  for (const auto& [ka, sa] : a.t_)
    for (const auto& [kb, sb] : b.t_) {
      int sign = 1;
      CliffWord w = ka.cliff;
      if (!wedge_mask_mul(w, kb.cliff, sign)) continue;
      PbwWord e = ka.pbw;
      if (e.size() < kb.pbw.size()) e.resize(kb.pbw.size(), 0);
      for (size_t i = 0; i < kb.pbw.size(); ++i) e[i] += kb.pbw[i];
      r.add({std::move(e), w}, Scalar(sign) * sa * sb);
    }
  return r;
}

ClassicalWeilElement operator*(const Scalar& s, const ClassicalWeilElement& a) {
  ClassicalWeilElement r(a.A_);
  for (const auto& [k, v] : a.t_) r.add(k, s * v);
  return r;
}

std::string ClassicalWeilElement::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [k, s] : t_) {
    if (!out.empty()) out += " + ";
    out += "(" + s.str() + ")*" + pbw_word_str(k.pbw);
    if (k.cliff) out += "*w(" + cliff_word_str(k.cliff, "Y") + ")";
  }
  return out;
}

// ---------------------------------------------------------------------------
// WeilAlgebra

WeilAlgebra::WeilAlgebra(LiePtr g) : g_(std::move(g)) {
  const int n = g_->dim();
  gamma_.resize(n);
  lambda_.resize(n);
  for (int i = 0; i < n; ++i) {
    CliffordElement ge;
    ExteriorElement le;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        const Scalar& c = g_->c(u, v, i);  // <X_i, [X_u, X_v]>
        if (c.is_zero()) continue;
        ge.add((1u << u) | (1u << v), -c);
        le.add((1u << u) | (1u << v), -c);
      }
    gamma_[i] = std::move(ge);
    lambda_[i] = std::move(le);
  }
  // d(Xh_i) = sum_{u<v} c[u][v][i] (Xbar_u X_v - X_u Xbar_v), both flavors
  d_of_even_.resize(n);
  cd_of_even_.resize(n);
  for (int i = 0; i < n; ++i) {
    WeilElement dq = zero();
    ClassicalWeilElement dc = czero();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        const Scalar& c = g_->c(u, v, i);
        if (c.is_zero()) continue;
        dq = dq + c * (bar_gen(u) * odd_gen(v) - odd_gen(u) * bar_gen(v));
        dc = dc + c * (cbar_gen(u) * codd_gen(v) - codd_gen(u) * cbar_gen(v));
      }
    d_of_even_[i] = std::move(dq);
    cd_of_even_[i] = std::move(dc);
  }
}

WeilElement WeilAlgebra::scalar(Scalar s) const {
  WeilElement e(this);
  e.add({PbwWord(dim(), 0), 0}, std::move(s));
  return e;
}

WeilElement WeilAlgebra::odd_gen(int i) const {
  WeilElement e(this);
  e.add({PbwWord(dim(), 0), 1u << i}, Scalar(1));
  return e;
}

WeilElement WeilAlgebra::even_gen(int i) const {
  PbwWord w(dim(), 0);
  w[i] = 1;
  WeilElement e(this);
  e.add({std::move(w), 0}, Scalar(1));
  return e;
}

WeilElement WeilAlgebra::bar_gen(int i) const { return even_gen(i) + embed(gamma_[i]); }

WeilElement WeilAlgebra::embed(const CliffordElement& c) const {
  WeilElement e(this);
  for (const auto& [w, s] : c.terms()) e.add({PbwWord(dim(), 0), w}, s);
  return e;
}

ClassicalWeilElement WeilAlgebra::cscalar(Scalar s) const {
  ClassicalWeilElement e(this);
  e.add({PbwWord(dim(), 0), 0}, std::move(s));
  return e;
}

ClassicalWeilElement WeilAlgebra::codd_gen(int i) const {
  ClassicalWeilElement e(this);
  e.add({PbwWord(dim(), 0), 1u << i}, Scalar(1));
  return e;
}

ClassicalWeilElement WeilAlgebra::ceven_gen(int i) const {
  PbwWord w(dim(), 0);
  w[i] = 1;
  ClassicalWeilElement e(this);
  e.add({std::move(w), 0}, Scalar(1));
  return e;
}

ClassicalWeilElement WeilAlgebra::cbar_gen(int i) const { return ceven_gen(i) + embed(lambda_[i]); }

ClassicalWeilElement WeilAlgebra::embed(const ExteriorElement& x) const {
  ClassicalWeilElement e(this);
  for (const auto& [w, s] : x.terms()) e.add({PbwWord(dim(), 0), w}, s);
  return e;
}

CliffordElement WeilAlgebra::gamma_of(const std::vector<Scalar>& v) const {
  CliffordElement out;
  for (int i = 0; i < dim(); ++i)
    if (!v[i].is_zero()) out = out + v[i] * gamma_[i];
  return out;
}

ExteriorElement WeilAlgebra::lambda_of(const std::vector<Scalar>& v) const {
  ExteriorElement out;
  for (int i = 0; i < dim(); ++i)
    if (!v[i].is_zero()) out = out + v[i] * lambda_[i];
  return out;
}

CliffordElement WeilAlgebra::gamma_p(const SubalgebraSplit& s, int z) const {
  CliffordElement out;
  for (size_t ia = 0; ia < s.p_idx.size(); ++ia)
    for (size_t ib = ia + 1; ib < s.p_idx.size(); ++ib) {
      int a = s.p_idx[ia], b = s.p_idx[ib];
      const Scalar& c = g_->c(a, b, z);
      if (!c.is_zero()) out.add((1u << a) | (1u << b), -c);
    }
  return out;
}

ExteriorElement WeilAlgebra::lambda_p(const SubalgebraSplit& s, int z) const {
  ExteriorElement out;
  for (size_t ia = 0; ia < s.p_idx.size(); ++ia)
    for (size_t ib = ia + 1; ib < s.p_idx.size(); ++ib) {
      int a = s.p_idx[ia], b = s.p_idx[ib];
      const Scalar& c = g_->c(a, b, z);
      if (!c.is_zero()) out.add((1u << a) | (1u << b), -c);
    }
  return out;
}

// ---------------------------------------------------------------------------
// multiplication

void WeilAlgebra::normalize_pbw(const std::vector<int>& letters, const Scalar& coeff,
                                std::map<PbwWord, Scalar>& acc) const {
  std::vector<std::pair<std::vector<int>, Scalar>> work;
  work.emplace_back(letters, coeff);
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    size_t i = 0;
    bool sorted = true;
    for (; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) { sorted = false; break; }
    if (sorted) {
      PbwWord e(dim(), 0);
      for (int x : w) ++e[x];
      auto it = acc.find(e);
      if (it == acc.end()) acc.emplace(std::move(e), c);
      else it->second += c;
      continue;
    }
    const int a = w[i], b = w[i + 1];
    {
      auto swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      work.emplace_back(std::move(swapped), c);
    }
    for (int k = 0; k < dim(); ++k) {
      const Scalar& cv = g_->c(a, b, k);
      if (cv.is_zero()) continue;
      std::vector<int> shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + i);
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
      work.emplace_back(std::move(shorter), c * cv);
    }
  }
}

WeilElement operator*(const WeilElement& a, const WeilElement& b) {
  const WeilAlgebra* A = join_ctx(a.A_, b.A_);
  WeilElement r(A);
  for (const auto& [ka, sa] : a.t_)
    for (const auto& [kb, sb] : b.t_) {
      Scalar c = sa * sb;
      CliffWord w = cliff_mask_mul(ka.cliff, kb.cliff, c);
      if (c.is_zero()) continue;
      std::vector<int> letters;
      for (size_t i = 0; i < ka.pbw.size(); ++i)
        for (int rep = 0; rep < ka.pbw[i]; ++rep) letters.push_back(static_cast<int>(i));
      for (size_t i = 0; i < kb.pbw.size(); ++i)
        for (int rep = 0; rep < kb.pbw[i]; ++rep) letters.push_back(static_cast<int>(i));
      std::map<PbwWord, Scalar> acc;
      A->normalize_pbw(letters, c, acc);
      for (auto& [e, v] : acc) r.add({e, w}, v);
    }
  return r;
}

// ---------------------------------------------------------------------------
// derivations

WeilElement WeilAlgebra::apply_derivation(const WeilElement& w, bool odd,
                                          const std::function<WeilElement(int)>& on_even,
                                          const std::function<WeilElement(int)>& on_odd) const {
  WeilElement out = zero();
  for (const auto& [k, s] : w.terms()) {
    std::vector<std::pair<bool, int>> letters;  // (is_even, index), evens first
    for (size_t i = 0; i < k.pbw.size(); ++i)
      for (int rep = 0; rep < k.pbw[i]; ++rep) letters.emplace_back(true, static_cast<int>(i));
    for (int i = 0; i < dim(); ++i)
      if (k.cliff & (1u << i)) letters.emplace_back(false, i);

    int odd_before = 0;
    for (size_t t = 0; t < letters.size(); ++t) {
      auto [is_even, idx] = letters[t];
      WeilElement img = is_even ? on_even(idx) : on_odd(idx);
      if (!img.is_zero()) {
        // prefix and suffix monomials around position t
        WeilElement pre = scalar(Scalar(1)), suf = scalar(Scalar(1));
        {
          PbwWord pe(dim(), 0), se(dim(), 0);
          CliffWord pc = 0, sc = 0;
          for (size_t u = 0; u < letters.size(); ++u) {
            if (u == t) continue;
            auto [ue, ui] = letters[u];
            if (u < t) { if (ue) ++pe[ui]; else pc |= 1u << ui; }
            else { if (ue) ++se[ui]; else sc |= 1u << ui; }
          }
          pre = WeilElement(this);
          pre.add({pe, pc}, Scalar(1));
          suf = WeilElement(this);
          suf.add({se, sc}, Scalar(1));
        }
        Scalar sign = (odd && (odd_before & 1)) ? Scalar(-1) : Scalar(1);
        out = out + (sign * s) * (pre * img * suf);
      }
      if (!is_even) ++odd_before;
    }
  }
  return out;
}

ClassicalWeilElement WeilAlgebra::apply_derivation(
    const ClassicalWeilElement& w, bool odd,
    const std::function<ClassicalWeilElement(int)>& on_even,
    const std::function<ClassicalWeilElement(int)>& on_odd) const {
  ClassicalWeilElement out = czero();
  for (const auto& [k, s] : w.terms()) {
    std::vector<std::pair<bool, int>> letters;
    for (size_t i = 0; i < k.pbw.size(); ++i)
      for (int rep = 0; rep < k.pbw[i]; ++rep) letters.emplace_back(true, static_cast<int>(i));
    for (int i = 0; i < dim(); ++i)
      if (k.cliff & (1u << i)) letters.emplace_back(false, i);

    int odd_before = 0;
    for (size_t t = 0; t < letters.size(); ++t) {
      auto [is_even, idx] = letters[t];
      ClassicalWeilElement img = is_even ? on_even(idx) : on_odd(idx);
      if (!img.is_zero()) {
        PbwWord pe(dim(), 0), se(dim(), 0);
        CliffWord pc = 0, sc = 0;
        for (size_t u = 0; u < letters.size(); ++u) {
          if (u == t) continue;
          auto [ue, ui] = letters[u];
          if (u < t) { if (ue) ++pe[ui]; else pc |= 1u << ui; }
          else { if (ue) ++se[ui]; else sc |= 1u << ui; }
        }
        ClassicalWeilElement pre(this), suf(this);
        pre.add({pe, pc}, Scalar(1));
        suf.add({se, sc}, Scalar(1));
        Scalar sign = (odd && (odd_before & 1)) ? Scalar(-1) : Scalar(1);
        out = out + (sign * s) * (pre * img * suf);
      }
      if (!is_even) ++odd_before;
    }
  }
  return out;
}

WeilElement WeilAlgebra::contraction(int a, const WeilElement& w) const {
  return apply_derivation(
      w, true, [this](int) { return zero(); },
      [this, a](int j) { return j == a ? scalar(Scalar(1)) : zero(); });
}

WeilElement WeilAlgebra::lie_derivative(int a, const WeilElement& w) const {
  auto bracket_img = [this, a](int j, bool even) {
    WeilElement out = zero();
    for (int k = 0; k < dim(); ++k) {
      const Scalar& c = g_->c(a, j, k);
      if (!c.is_zero()) out = out + c * (even ? even_gen(k) : odd_gen(k));
    }
    return out;
  };
  return apply_derivation(
      w, false, [&](int j) { return bracket_img(j, true); },
      [&](int j) { return bracket_img(j, false); });
}

WeilElement WeilAlgebra::differential(const WeilElement& w) const {
  return apply_derivation(
      w, true, [this](int j) { return d_of_even_[j]; },
      [this](int j) { return bar_gen(j); });
}

WeilElement WeilAlgebra::super_commutator(const WeilElement& a, const WeilElement& b) const {
  WeilElement ae = a.even_part(), ao = a.odd_part();
  WeilElement be = b.even_part(), bo = b.odd_part();
  // [a,b] = ab - (-1)^{|a||b|} ba on parity components
  return (ae * be - be * ae) + (ae * bo - bo * ae) + (ao * be - be * ao) + (ao * bo + bo * ao);
}

ClassicalWeilElement WeilAlgebra::contraction(int a, const ClassicalWeilElement& w) const {
  return apply_derivation(
      w, true, [this](int) { return czero(); },
      [this, a](int j) { return j == a ? cscalar(Scalar(1)) : czero(); });
}

ClassicalWeilElement WeilAlgebra::lie_derivative(int a, const ClassicalWeilElement& w) const {
  auto bracket_img = [this, a](int j, bool even) {
    ClassicalWeilElement out = czero();
    for (int k = 0; k < dim(); ++k) {
      const Scalar& c = g_->c(a, j, k);
      if (!c.is_zero()) out = out + c * (even ? ceven_gen(k) : codd_gen(k));
    }
    return out;
  };
  return apply_derivation(
      w, false, [&](int j) { return bracket_img(j, true); },
      [&](int j) { return bracket_img(j, false); });
}

ClassicalWeilElement WeilAlgebra::differential(const ClassicalWeilElement& w) const {
  return apply_derivation(
      w, true, [this](int j) { return cd_of_even_[j]; },
      [this](int j) { return cbar_gen(j); });
}

// ---------------------------------------------------------------------------
// maps

CliffordElement WeilAlgebra::chevalley(const ExteriorElement& e) const {
  CliffordElement out;
  for (const auto& [w, s] : e.terms()) out.add(w, s);
  return out;
}

ExteriorElement WeilAlgebra::chevalley_inv(const CliffordElement& c) const {
  ExteriorElement out;
  for (const auto& [w, s] : c.terms()) out.add(w, s);
  return out;
}

WeilElement WeilAlgebra::pbw(const PbwWord& monomial) const {
  std::vector<int> letters;
  Rational mult_fact(1);
  for (size_t i = 0; i < monomial.size(); ++i) {
    for (int rep = 0; rep < monomial[i]; ++rep) {
      letters.push_back(static_cast<int>(i));
      mult_fact *= (rep + 1);
    }
  }
  Rational total_fact(1);
  for (size_t n = 2; n <= letters.size(); ++n) total_fact *= static_cast<long>(n);
  const Scalar coeff{Rational(mult_fact / total_fact)};
  WeilElement out = zero();
  std::sort(letters.begin(), letters.end());
  std::map<PbwWord, Scalar> acc;
  do {
    normalize_pbw(letters, coeff, acc);
  } while (std::next_permutation(letters.begin(), letters.end()));
  for (auto& [e, v] : acc) out.add({e, 0}, v);
  return out;
}

WeilElement WeilAlgebra::pbw_symbol(const ClassicalWeilElement& c) const {
  WeilElement out = zero();
  for (const auto& [k, s] : c.terms()) {
    WeilElement cl(this);
    cl.add({PbwWord(dim(), 0), k.cliff}, Scalar(1));
    out = out + s * (pbw(k.pbw) * cl);
  }
  return out;
}

WeilElement WeilAlgebra::quantize(const ClassicalWeilElement& c) const {
  WeilElement out = zero();
  for (const auto& [key, s] : c.terms()) {
    // expand Xh_i = Xbar_i - lambda(X_i) over the symmetric part
    struct Term {
      std::vector<int> bars;
      CliffWord wedge;
      Scalar coeff;
    };
    std::vector<Term> terms{{{}, key.cliff, s}};
    for (size_t i = 0; i < key.pbw.size(); ++i) {
      for (int rep = 0; rep < key.pbw[i]; ++rep) {
        std::vector<Term> next;
        for (const auto& t : terms) {
          Term with = t;
          with.bars.push_back(static_cast<int>(i));
          next.push_back(std::move(with));
          for (const auto& [lw, ls] : lambda_[i].terms()) {
            int sign = 1;
            CliffWord w = t.wedge;
            if (!wedge_mask_mul(w, lw, sign)) continue;
            next.push_back({t.bars, w, -Scalar(sign) * ls * t.coeff});
          }
        }
        terms = std::move(next);
      }
    }
    // super-symmetrize each (bars, wedge) word over the generators Xbar, X
    for (const auto& t : terms) {
      std::vector<std::pair<bool, int>> letters;  // (is_even, index)
      for (int b : t.bars) letters.emplace_back(true, b);
      for (int i = 0; i < dim(); ++i)
        if (t.wedge & (1u << i)) letters.emplace_back(false, i);
      const size_t n = letters.size();
      if (n == 0) {
        out = out + scalar(t.coeff);
        continue;
      }
      std::vector<int> perm(n);
      for (size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
      Rational nfact(1);
      for (size_t m = 2; m <= n; ++m) nfact *= static_cast<long>(m);
      WeilElement sym = zero();
      do {
        // Koszul sign: inversions among the odd letters
        std::vector<int> odd_positions;
        for (size_t r = 0; r < n; ++r)
          if (!letters[perm[r]].first) odd_positions.push_back(perm[r]);
        int inv = 0;
        for (size_t x = 0; x < odd_positions.size(); ++x)
          for (size_t y = x + 1; y < odd_positions.size(); ++y)
            if (odd_positions[x] > odd_positions[y]) ++inv;
        WeilElement prod = scalar(Scalar((inv & 1) ? -1 : 1));
        for (size_t r = 0; r < n; ++r) {
          auto [is_even, idx] = letters[perm[r]];
          prod = prod * (is_even ? bar_gen(idx) : odd_gen(idx));
        }
        sym = sym + prod;
      } while (std::next_permutation(perm.begin(), perm.end()));
      out = out + (t.coeff * Scalar(Rational(1) / nfact)) * sym;
    }
  }
  return out;
}

ClassicalWeilElement WeilAlgebra::classical_cubic_dirac() const {
  ClassicalWeilElement d = czero();
  const Scalar third = Scalar::ratio(1, 3);
  for (int i = 0; i < dim(); ++i)
    d = d + (ceven_gen(i) + third * embed(lambda_[i])) * codd_gen(i);
  return d;
}

// ---------------------------------------------------------------------------
// Dirac operators and Casimirs

WeilElement WeilAlgebra::cubic_dirac() const {
  WeilElement d = zero();
  const Scalar third = Scalar::ratio(1, 3);
  for (int i = 0; i < dim(); ++i)
    d = d + (even_gen(i) + third * embed(gamma_[i])) * odd_gen(i);
  return d;
}

WeilElement WeilAlgebra::cubic_dirac_sub(const std::vector<int>& k_idx) const {
  // image of the cubic Dirac operator of the subalgebra k under the inclusion
  // generated by X in k and Xbar in kbar
  WeilElement d = zero();
  const Scalar two_thirds = Scalar::ratio(2, 3);
  for (int i : k_idx) {
    CliffordElement gk;
    for (size_t ua = 0; ua < k_idx.size(); ++ua)
      for (size_t ub = ua + 1; ub < k_idx.size(); ++ub) {
        int u = k_idx[ua], v = k_idx[ub];
        const Scalar& c = g_->c(u, v, i);
        if (!c.is_zero()) gk.add((1u << u) | (1u << v), -c);
      }
    d = d + (bar_gen(i) - two_thirds * embed(gk)) * odd_gen(i);
  }
  return d;
}

WeilElement WeilAlgebra::relative_dirac_diff(const SubalgebraSplit& s) const {
  return cubic_dirac() - cubic_dirac_sub(s.k_idx);
}

WeilElement WeilAlgebra::relative_dirac_explicit(const SubalgebraSplit& s) const {
  WeilElement d = zero();
  const Scalar third = Scalar::ratio(1, 3);
  for (int y : s.p_idx) d = d + even_gen(y) * odd_gen(y);
  for (int y : s.p_idx) d = d + third * (odd_gen(y) * embed(gamma_p(s, y)));
  return d;
}

WeilElement WeilAlgebra::casimir() const {
  WeilElement o = zero();
  for (int i = 0; i < dim(); ++i) o = o + even_gen(i) * even_gen(i);
  return o;
}

WeilElement WeilAlgebra::diag_casimir_k(const SubalgebraSplit& s) const {
  WeilElement o = zero();
  for (int i : s.k_idx) {
    WeilElement diag = even_gen(i) + embed(gamma_p(s, i));
    o = o + diag * diag;
  }
  return o;
}

ClassicalWeilElement WeilAlgebra::flat_laplacian() const {
  ClassicalWeilElement o = czero();
  for (int i = 0; i < dim(); ++i) o = o + ceven_gen(i) * ceven_gen(i);
  return o;
}

// ---------------------------------------------------------------------------
// random elements for property checks

WeilElement WeilAlgebra::random_element(int max_degree, std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> nterms(2, 4), coef(-3, 3), pick(0, dim() - 1);
  WeilElement out = zero();
  for (int t = nterms(rng); t > 0; --t) {
    PbwWord e(dim(), 0);
    CliffWord w = 0;
    int target = std::uniform_int_distribution<int>(0, max_degree)(rng);
    while (2 * pbw_len(e) + std::popcount(w) < target) {
      if (target - 2 * pbw_len(e) - std::popcount(w) >= 2 && (rng() & 1))
        ++e[pick(rng)];
      else {
        w |= 1u << pick(rng);  // may hit an existing bit, loop re-checks the degree
        if ((rng() & 7) == 0) break;
      }
    }
    int c = coef(rng);
    if (c == 0) c = 1;
    out.add({e, w}, Scalar(c));
  }
  return out;
}

ClassicalWeilElement WeilAlgebra::random_classical(int max_degree, std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> nterms(2, 4), coef(-3, 3), pick(0, dim() - 1);
  ClassicalWeilElement out = czero();
  for (int t = nterms(rng); t > 0; --t) {
    PbwWord e(dim(), 0);
    CliffWord w = 0;
    int budget = std::uniform_int_distribution<int>(0, max_degree)(rng);
    while (budget >= 2 && (rng() & 1)) {
      ++e[pick(rng)];
      budget -= 2;
    }
    while (budget >= 1) {
      w |= 1u << pick(rng);
      budget = max_degree - 2 * pbw_len(e) - std::popcount(w);
      if ((rng() & 3) == 0) break;
    }
    int c = coef(rng);
    if (c == 0) c = 1;
    out.add({e, w}, Scalar(c));
  }
  return out;
}

}  // namespace cdk
