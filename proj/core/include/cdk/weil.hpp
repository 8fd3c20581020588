#pragma once

// Normal-form arithmetic in Cl(g), wedge(g), U(ghat) and the quantum Weil
// algebra W(g) = U(ghat) (x) Cl(g), together with the derivations iota, L, d,
// the Chevalley / PBW / quantization maps, and the cubic Dirac operators.
//
// Conventions (fixed throughout):
//   * odd generators X_i satisfy  X_i X_j + X_j X_i = <X_i, X_j>  (so X_i^2 = 1/2),
//   * even generators Xh_i commute with the odd ones and satisfy
//     Xh_i Xh_j - Xh_j Xh_i = sum_k c[i][j][k] Xh_k,
//   * bar generators are never stored: Xbar_i = Xh_i + gamma(X_i) (quantum)
//     and Xbar_i = Xh_i + lambda(X_i) (classical) are expanded on input,
//   * normal form: Clifford words strictly increasing, PBW words weakly
//     increasing, in the declared basis order.
// Filtration degree of a monomial is 2*(PBW length) + (Clifford length).

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "cdk/rootdata.hpp"
#include "cdk/scalar.hpp"

namespace cdk {

using CliffWord = std::uint32_t;                // bit set = basis index present
using PbwWord = std::vector<std::uint16_t>;     // exponent per basis index

std::string cliff_word_str(CliffWord w, const char* sym = "X");
std::string pbw_word_str(const PbwWord& e);

// ---------------------------------------------------------------------------

class CliffordElement {
 public:
  CliffordElement() = default;
  explicit CliffordElement(Scalar s) { add(0, std::move(s)); }
  static CliffordElement generator(int i) { CliffordElement e; e.add(1u << i, Scalar(1)); return e; }

  void add(CliffWord w, const Scalar& s);
  bool is_zero() const { return t_.empty(); }
  const std::map<CliffWord, Scalar>& terms() const { return t_; }
  int top_degree() const;

  friend CliffordElement operator+(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator*(const Scalar& s, const CliffordElement& a);
  CliffordElement operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const CliffordElement& a, const CliffordElement& b) { return a.t_ == b.t_; }

  std::string str() const;

 private:
  std::map<CliffWord, Scalar> t_;
};

class ExteriorElement {
 public:
  ExteriorElement() = default;
  explicit ExteriorElement(Scalar s) { add(0, std::move(s)); }
  static ExteriorElement generator(int i) { ExteriorElement e; e.add(1u << i, Scalar(1)); return e; }

  void add(CliffWord w, const Scalar& s);
  bool is_zero() const { return t_.empty(); }
  const std::map<CliffWord, Scalar>& terms() const { return t_; }
  int top_degree() const;

  friend ExteriorElement operator+(const ExteriorElement& a, const ExteriorElement& b);
  friend ExteriorElement operator-(const ExteriorElement& a, const ExteriorElement& b);
  friend ExteriorElement operator*(const ExteriorElement& a, const ExteriorElement& b);  // wedge
  friend ExteriorElement operator*(const Scalar& s, const ExteriorElement& a);
  ExteriorElement operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) { return a.t_ == b.t_; }

  std::string str() const;

 private:
  std::map<CliffWord, Scalar> t_;
};

// blade product helpers (shared by the spinor module)
// e_A * e_B with the Clifford rule: returns the surviving mask; sign and the
// power of 1/2 from repeated indices are accumulated into coeff.
CliffWord cliff_mask_mul(CliffWord A, CliffWord B, Scalar& coeff);
// wedge: zero overlap only; sign into coeff, returns false if it dies
bool wedge_mask_mul(CliffWord A, CliffWord B, int& sign);

// ---------------------------------------------------------------------------

struct WeilKey {
  PbwWord pbw;
  CliffWord cliff = 0;
  auto operator<=>(const WeilKey&) const = default;
};

class WeilAlgebra;

// Element of U(ghat) (x) Cl(g) in normal form.
class WeilElement {
 public:
  WeilElement() = default;
  explicit WeilElement(const WeilAlgebra* A) : A_(A) {}

  const WeilAlgebra* algebra() const { return A_; }
  void add(const WeilKey& k, const Scalar& s);
  bool is_zero() const { return t_.empty(); }
  const std::map<WeilKey, Scalar>& terms() const { return t_; }

  int degree() const;           // filtration degree, -1 for 0
  WeilElement top_part() const;  // homogeneous part of top filtration degree
  WeilElement even_part() const;
  WeilElement odd_part() const;  // parity = Clifford length mod 2

  friend WeilElement operator+(const WeilElement& a, const WeilElement& b);
  friend WeilElement operator-(const WeilElement& a, const WeilElement& b);
  friend WeilElement operator*(const WeilElement& a, const WeilElement& b);
  friend WeilElement operator*(const Scalar& s, const WeilElement& a);
  WeilElement operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const WeilElement& a, const WeilElement& b) { return a.t_ == b.t_; }

  std::string str() const;

 private:
  friend class WeilAlgebra;
  const WeilAlgebra* A_ = nullptr;
  std::map<WeilKey, Scalar> t_;
};

// Element of S(ghat) (x) wedge(g) (the associated graded algebra) in normal form.
class ClassicalWeilElement {
 public:
  ClassicalWeilElement() = default;
  explicit ClassicalWeilElement(const WeilAlgebra* A) : A_(A) {}

  const WeilAlgebra* algebra() const { return A_; }
  void add(const WeilKey& k, const Scalar& s);
  bool is_zero() const { return t_.empty(); }
  const std::map<WeilKey, Scalar>& terms() const { return t_; }

  int degree() const;
  ClassicalWeilElement top_part() const;

  friend ClassicalWeilElement operator+(const ClassicalWeilElement& a, const ClassicalWeilElement& b);
  friend ClassicalWeilElement operator-(const ClassicalWeilElement& a, const ClassicalWeilElement& b);
  friend ClassicalWeilElement operator*(const ClassicalWeilElement& a, const ClassicalWeilElement& b);
  friend ClassicalWeilElement operator*(const Scalar& s, const ClassicalWeilElement& a);
  ClassicalWeilElement operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const ClassicalWeilElement& a, const ClassicalWeilElement& b) {
    return a.t_ == b.t_;
  }

  std::string str() const;

 private:
  friend class WeilAlgebra;
  const WeilAlgebra* A_ = nullptr;
  std::map<WeilKey, Scalar> t_;
};

// ---------------------------------------------------------------------------

class WeilAlgebra {
 public:
  explicit WeilAlgebra(LiePtr g);

  const LieAlgebra& lie() const { return *g_; }
  LiePtr lie_ptr() const { return g_; }
  int dim() const { return g_->dim(); }

  // element factories
  WeilElement zero() const { return WeilElement(this); }
  WeilElement scalar(Scalar s) const;
  WeilElement odd_gen(int i) const;        // X_i
  WeilElement even_gen(int i) const;       // Xh_i
  WeilElement bar_gen(int i) const;        // Xh_i + gamma(X_i)
  WeilElement embed(const CliffordElement& c) const;

  ClassicalWeilElement czero() const { return ClassicalWeilElement(this); }
  ClassicalWeilElement cscalar(Scalar s) const;
  ClassicalWeilElement codd_gen(int i) const;   // X_i (degree 1)
  ClassicalWeilElement ceven_gen(int i) const;  // Xh_i (degree 2)
  ClassicalWeilElement cbar_gen(int i) const;   // Xh_i + lambda(X_i)
  ClassicalWeilElement embed(const ExteriorElement& e) const;

  // gamma(X_i) in Cl(g): [gamma(X), Y] = [X, Y]_g; lambda is its wedge twin
  const CliffordElement& gamma(int i) const { return gamma_[i]; }
  const ExteriorElement& lambda(int i) const { return lambda_[i]; }
  CliffordElement gamma_of(const std::vector<Scalar>& v) const;
  ExteriorElement lambda_of(const std::vector<Scalar>& v) const;

  // gamma^p(Z) = -1/2 sum_{a,b in p} <Z, [Y_a, Y_b]> Y_a Y_b  (global indices)
  CliffordElement gamma_p(const SubalgebraSplit& s, int z_global) const;
  ExteriorElement lambda_p(const SubalgebraSplit& s, int z_global) const;

  // derivations (quantum)
  WeilElement contraction(int a, const WeilElement& w) const;     // iota_{X_a}
  WeilElement lie_derivative(int a, const WeilElement& w) const;  // L_{X_a}
  WeilElement differential(const WeilElement& w) const;           // Leibniz from generators
  WeilElement super_commutator(const WeilElement& a, const WeilElement& b) const;

  // derivations (classical)
  ClassicalWeilElement contraction(int a, const ClassicalWeilElement& w) const;
  ClassicalWeilElement lie_derivative(int a, const ClassicalWeilElement& w) const;
  ClassicalWeilElement differential(const ClassicalWeilElement& w) const;

  // maps
  CliffordElement chevalley(const ExteriorElement& e) const;
  ExteriorElement chevalley_inv(const CliffordElement& c) const;
  // PBW symmetrization of one symmetric monomial into U(ghat), realized as the
  // Clifford-trivial subalgebra of W(g).
  WeilElement pbw(const PbwWord& monomial) const;
  WeilElement pbw_symbol(const ClassicalWeilElement& c) const;  // PBW (x) chevalley
  WeilElement quantize(const ClassicalWeilElement& c) const;    // super symmetrization in Xbar, X
  ClassicalWeilElement classical_cubic_dirac() const;           // sum (Xh_i + lambda(X_i)/3) X_i

  // cubic Dirac operators
  WeilElement cubic_dirac() const;
  WeilElement cubic_dirac_sub(const std::vector<int>& k_idx) const;  // image of D_k in W(g)
  WeilElement relative_dirac_diff(const SubalgebraSplit& s) const;   // D_g - D_k
  WeilElement relative_dirac_explicit(const SubalgebraSplit& s) const;

  // Casimir Omega = sum Xh_i Xh_i and its diagonal k-embedding
  WeilElement casimir() const;
  WeilElement diag_casimir_k(const SubalgebraSplit& s) const;  // sum (Xh+gamma^p)(Xh+gamma^p)
  ClassicalWeilElement flat_laplacian() const;                 // sum Xh_i Xh_i, classical

  // deterministic random sampling for property checks
  WeilElement random_element(int max_degree, std::mt19937_64& rng) const;
  ClassicalWeilElement random_classical(int max_degree, std::mt19937_64& rng) const;

 private:
  void normalize_pbw(const std::vector<int>& letters, const Scalar& coeff,
                     std::map<PbwWord, Scalar>& acc) const;
  WeilElement apply_derivation(const WeilElement& w, bool odd,
                               const std::function<WeilElement(int)>& on_even,
                               const std::function<WeilElement(int)>& on_odd) const;
  ClassicalWeilElement apply_derivation(const ClassicalWeilElement& w, bool odd,
                                        const std::function<ClassicalWeilElement(int)>& on_even,
                                        const std::function<ClassicalWeilElement(int)>& on_odd) const;

  LiePtr g_;
  std::vector<CliffordElement> gamma_;
  std::vector<ExteriorElement> lambda_;
  std::vector<WeilElement> d_of_even_;            // d(Xh_i), quantum
  std::vector<ClassicalWeilElement> cd_of_even_;  // d(Xh_i), classical

  friend class WeilElement;
  friend class ClassicalWeilElement;
};

}  // namespace cdk
