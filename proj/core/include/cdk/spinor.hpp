#pragma once

// Concrete 2^m-dimensional graded spinor module for Cl(p) (fermionic Fock
// construction), super traces, and the representation nu_* = gamma^p + pi_*
// on E = S (x) V. All matrices are exact.

#include <vector>

#include "cdk/rootdata.hpp"
#include "cdk/scalar.hpp"
#include "cdk/weil.hpp"

namespace cdk {

struct ScalarMatrix {
  int n = 0;
  std::vector<Scalar> a;  // row-major

  ScalarMatrix() = default;
  explicit ScalarMatrix(int n_) : n(n_), a(static_cast<size_t>(n_) * n_) {}
  Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static ScalarMatrix identity(int n);
  static ScalarMatrix zero(int n) { return ScalarMatrix(n); }

  friend ScalarMatrix operator+(const ScalarMatrix& x, const ScalarMatrix& y);
  friend ScalarMatrix operator-(const ScalarMatrix& x, const ScalarMatrix& y);
  friend ScalarMatrix operator*(const ScalarMatrix& x, const ScalarMatrix& y);
  friend ScalarMatrix operator*(const Scalar& s, const ScalarMatrix& x);
  friend bool operator==(const ScalarMatrix& x, const ScalarMatrix& y) {
    return x.n == y.n && x.a == y.a;
  }
  static ScalarMatrix kron(const ScalarMatrix& x, const ScalarMatrix& y);
  bool is_zero() const;
};

// Spinor space S for Cl(p), dim p = 2m. Basis states are subsets of the m
// fermionic modes; the grading is (-1)^(mode count), vacuum even. The basis
// vectors of p act through the mode pairing (2j, 2j+1) (local p indices).
class SpinorRep {
 public:
  // pairing[j] = (local index of the "real" leg, local index of the "imaginary"
  // leg) of mode j; default pairing is (0,1), (2,3), ...
  static SpinorRep build(int m, std::vector<std::pair<int, int>> pairing = {});

  int m() const { return m_; }
  int dim() const { return 1 << m_; }
  const ScalarMatrix& action(int local_p_index) const { return c_[local_p_index]; }
  const std::vector<int>& grading() const { return grading_; }  // +-1 per state

  Scalar supertrace(const ScalarMatrix& M) const;
  // super trace of a Clifford basis word given as a local p mask
  Scalar supertrace_word(CliffWord local_mask) const;
  // action matrix of a Clifford element in local p indices
  ScalarMatrix matrix_of(const CliffordElement& c) const;
  Scalar supertrace_of(const CliffordElement& c) const { return supertrace(matrix_of(c)); }

 private:
  int m_ = 0;
  std::vector<std::pair<int, int>> pairing_;
  std::vector<ScalarMatrix> c_;
  std::vector<int> grading_;
};

// Auxiliary K-module V with highest weight mu: a weight character for abelian
// k, or explicit pi_* matrices (one per k-basis vector) for the general case.
struct AuxRep {
  Weight mu;                          // components in the dual t-basis
  bool abelian = true;
  std::vector<ScalarMatrix> pi_star;  // used when !abelian; size = dim k

  int dim_v() const { return abelian ? 1 : pi_star.front().n; }
  // pi_*(X_h) for the h-th k-basis vector; abelian convention:
  // pi_*(X) = i <mu, X> id on C_mu.
  ScalarMatrix pi_star_of(int h) const;
};

// Plug-in format for nonabelian pi_*: `dimv=N` header, then dim(k) blocks of
// N rows with N scalar literals each.
AuxRep load_pi_star(const std::string& path, const Weight& mu, int dim_k);

// nu_*(X_h) = gamma^p(X_h) (x) 1 + 1 (x) pi_*(X_h) on S (x) V, for the h-th
// basis vector of k (h indexes split.k_idx).
ScalarMatrix nu_star(const WeilAlgebra& W, const SubalgebraSplit& split, const SpinorRep& S,
                     const AuxRep& aux, int h);

// gamma^p of a k-basis vector as a CliffordElement in local p indices.
CliffordElement gamma_p_local(const WeilAlgebra& W, const SubalgebraSplit& split, int global_k);
ExteriorElement lambda_p_local(const WeilAlgebra& W, const SubalgebraSplit& split, int global_k);

}  // namespace cdk
