#include "cdk/spinor.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace cdk {

ScalarMatrix ScalarMatrix::identity(int n) {
  ScalarMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

ScalarMatrix operator+(const ScalarMatrix& x, const ScalarMatrix& y) {
  ScalarMatrix r(x.n);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

ScalarMatrix operator-(const ScalarMatrix& x, const ScalarMatrix& y) {
  ScalarMatrix r(x.n);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

ScalarMatrix operator*(const ScalarMatrix& x, const ScalarMatrix& y) {
  ScalarMatrix r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const Scalar& v = x.at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < x.n; ++j) {
        if (y.at(k, j).is_zero()) continue;
        r.at(i, j) += v * y.at(k, j);
      }
    }
  return r;
}

ScalarMatrix operator*(const Scalar& s, const ScalarMatrix& x) {
  ScalarMatrix r(x.n);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = s * x.a[i];
  return r;
}

ScalarMatrix ScalarMatrix::kron(const ScalarMatrix& x, const ScalarMatrix& y) {
  ScalarMatrix r(x.n * y.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      if (x.at(i, j).is_zero()) continue;
      for (int p = 0; p < y.n; ++p)
        for (int q = 0; q < y.n; ++q)
          r.at(i * y.n + p, j * y.n + q) = x.at(i, j) * y.at(p, q);
    }
  return r;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& v : a)
    if (!v.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------

SpinorRep SpinorRep::build(int m, std::vector<std::pair<int, int>> pairing) {
  if (m < 1) throw lie_error("spinor space needs dim p = 2m >= 2 (dim p must be even)");
  SpinorRep S;
  S.m_ = m;
  if (pairing.empty())
    for (int j = 0; j < m; ++j) pairing.emplace_back(2 * j, 2 * j + 1);
  if (static_cast<int>(pairing.size()) != m) throw lie_error("pairing size must be m");
  S.pairing_ = pairing;

  const int N = 1 << m;
  S.grading_.resize(N);
  for (int s = 0; s < N; ++s) S.grading_[s] = (std::popcount(static_cast<unsigned>(s)) & 1) ? -1 : 1;

  // creation/annihilation with Jordan-Wigner signs; states are mode subsets
  auto jw_sign = [](int mode, int state) {
    int lower = state & ((1 << mode) - 1);
    return (std::popcount(static_cast<unsigned>(lower)) & 1) ? -1 : 1;
  };
  std::vector<ScalarMatrix> create(m, ScalarMatrix(N)), annihilate(m, ScalarMatrix(N));
  for (int j = 0; j < m; ++j)
    for (int s = 0; s < N; ++s) {
      if (!(s & (1 << j))) create[j].at(s | (1 << j), s) = Scalar(jw_sign(j, s));
      else annihilate[j].at(s & ~(1 << j), s) = Scalar(jw_sign(j, s));
    }

  // c(Y_2j) = (a_j^+ + a_j)/sqrt(2),  c(Y_2j+1) = i (a_j - a_j^+)/sqrt(2);
  // this sign choice yields tr_s(Y_1 ... Y_2m) = (-i)^m with the vacuum even.
  const Scalar inv_sqrt2 = Scalar::sqrt_of(2) * Scalar::ratio(1, 2);
  S.c_.assign(2 * m, ScalarMatrix(N));
  for (int j = 0; j < m; ++j) {
    S.c_[pairing[j].first] = inv_sqrt2 * (create[j] + annihilate[j]);
    S.c_[pairing[j].second] = (Scalar::i() * inv_sqrt2) * (annihilate[j] - create[j]);
  }
  return S;
}

Scalar SpinorRep::supertrace(const ScalarMatrix& M) const {
  Scalar s;
  for (int i = 0; i < M.n; ++i) s += Scalar(grading_[i]) * M.at(i, i);
  return s;
}

Scalar SpinorRep::supertrace_word(CliffWord mask) const {
  ScalarMatrix M = ScalarMatrix::identity(dim());
  for (int i = 0; i < 2 * m_; ++i)
    if (mask & (1u << i)) M = M * c_[i];
  return supertrace(M);
}

ScalarMatrix SpinorRep::matrix_of(const CliffordElement& c) const {
  ScalarMatrix out(dim());
  for (const auto& [w, s] : c.terms()) {
    ScalarMatrix M = ScalarMatrix::identity(dim());
    for (int i = 0; i < 2 * m_; ++i)
      if (w & (1u << i)) M = M * c_[i];
    out = out + s * M;
  }
  return out;
}

// ---------------------------------------------------------------------------

ScalarMatrix AuxRep::pi_star_of(int h) const {
  if (!abelian) return pi_star.at(static_cast<size_t>(h));
  ScalarMatrix m(1);
  m.at(0, 0) = Scalar::i() * mu.comp.at(static_cast<size_t>(h));
  return m;
}

AuxRep load_pi_star(const std::string& path, const Weight& mu, int dim_k) {
  std::ifstream in(path);
  if (!in) throw lie_error("cannot open pi-star file: " + path);
  std::string tok;
  if (!(in >> tok) || tok.rfind("dimv=", 0) != 0)
    throw lie_error(path + ": expected 'dimv=N' header");
  int n = std::stoi(tok.substr(5));
  if (n < 1) throw lie_error(path + ": bad dimv");
  AuxRep aux;
  aux.mu = mu;
  aux.abelian = false;
  for (int h = 0; h < dim_k; ++h) {
    ScalarMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!(in >> tok)) throw lie_error(path + ": truncated matrix data");
        m.at(i, j) = Scalar::parse(tok);
      }
    aux.pi_star.push_back(std::move(m));
  }
  return aux;
}

CliffordElement gamma_p_local(const WeilAlgebra& W, const SubalgebraSplit& split, int global_k) {
  CliffordElement out;
  const auto& p = split.p_idx;
  for (size_t ia = 0; ia < p.size(); ++ia)
    for (size_t ib = ia + 1; ib < p.size(); ++ib) {
      const Scalar& c = W.lie().c(p[ia], p[ib], global_k);
      if (!c.is_zero()) out.add((1u << ia) | (1u << ib), -c);
    }
  return out;
}

ExteriorElement lambda_p_local(const WeilAlgebra& W, const SubalgebraSplit& split, int global_k) {
  ExteriorElement out;
  const auto& p = split.p_idx;
  for (size_t ia = 0; ia < p.size(); ++ia)
    for (size_t ib = ia + 1; ib < p.size(); ++ib) {
      const Scalar& c = W.lie().c(p[ia], p[ib], global_k);
      if (!c.is_zero()) out.add((1u << ia) | (1u << ib), -c);
    }
  return out;
}

ScalarMatrix nu_star(const WeilAlgebra& W, const SubalgebraSplit& split, const SpinorRep& S,
                     const AuxRep& aux, int h) {
  if (!aux.abelian && static_cast<int>(aux.pi_star.size()) != static_cast<int>(split.k_idx.size()))
    throw lie_error("nu_star: pi_star matrices must match dim k");
  ScalarMatrix gp = S.matrix_of(gamma_p_local(W, split, split.k_idx.at(static_cast<size_t>(h))));
  ScalarMatrix pis = aux.pi_star_of(h);
  return ScalarMatrix::kron(gp, ScalarMatrix::identity(pis.n)) +
         ScalarMatrix::kron(ScalarMatrix::identity(S.dim()), pis);
}

}  // namespace cdk
