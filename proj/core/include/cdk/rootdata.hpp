#pragma once

// Lie-algebra input model: structure constants in a declared orthonormal
// basis, invariance validation, subalgebra splits, root data, rho, Casimir
// trace, weight multiplicities (Freudenthal), and the Weyl dimension formula.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cdk/report.hpp"
#include "cdk/scalar.hpp"

namespace cdk {

struct lie_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structure constants of [X_i, X_j] = sum_k c[i][j][k] X_k in a basis that is
// declared orthonormal for the invariant inner product.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, int dim)
      : name_(std::move(name)), dim_(dim), c_(static_cast<size_t>(dim) * dim * dim) {}

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }

  const Scalar& c(int i, int j, int k) const { return c_[idx(i, j, k)]; }
  void set_c(int i, int j, int k, Scalar v) { c_[idx(i, j, k)] = std::move(v); }

  // [v, w] for coordinate vectors
  std::vector<Scalar> bracket(const std::vector<Scalar>& v, const std::vector<Scalar>& w) const;
  // <X_a, [X_i, X_j]> = c[i][j][a] in the orthonormal basis
  const Scalar& pairing_with_bracket(int a, int i, int j) const { return c(i, j, a); }

  // shipped maximal-torus split for builtins (k-basis indices, 0-based)
  const std::vector<int>& torus_indices() const { return torus_; }
  void set_torus_indices(std::vector<int> t) { torus_ = std::move(t); }

 private:
  size_t idx(int i, int j, int k) const {
    return (static_cast<size_t>(i) * dim_ + j) * dim_ + k;
  }
  std::string name_;
  int dim_;
  std::vector<Scalar> c_;
  std::vector<int> torus_;
};

using LiePtr = std::shared_ptr<const LieAlgebra>;

// Orthogonal split g = k (+) p given by a partition of the basis indices.
struct SubalgebraSplit {
  std::vector<int> k_idx;
  std::vector<int> p_idx;

  int local_p(int global) const;  // position of a global index in p_idx
  // Validates [k,k] in k and [k,p] in p; throws on violation.
  static SubalgebraSplit make(const LieAlgebra& g, std::vector<int> k_indices);
};

struct Weight {
  std::vector<Scalar> comp;  // components in the dual basis of the declared t-basis
};

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b);
Scalar norm2(const std::vector<Scalar>& a);

struct RootDatum {
  LiePtr g;
  std::vector<int> cartan;                        // t-basis indices into g
  std::vector<std::vector<Scalar>> positives;     // root vectors, t-coordinates
  std::vector<std::pair<int, int>> planes;        // oriented p-plane (a,b) per positive root:
                                                  // [H, Y_a] = alpha(H) Y_b
  std::vector<std::vector<Scalar>> simples;
  std::vector<Scalar> rho;                        // half-sum of positives

  int rank() const { return static_cast<int>(cartan.size()); }
  bool is_dominant(const Weight& w) const;
  bool is_integral(const Weight& w) const;
};

// Per-axiom validation: antisymmetry, Jacobi, total antisymmetry of c
// (invariance of the inner product in an orthonormal basis).
std::vector<Report> validate(const LieAlgebra& g);

// Builtins: su2, su3, torus<n> (or torus(n)), su2xsu2. Each ships a
// maximal-torus split.
LiePtr builtin(const std::string& name);

// Text format: header `dim=N`, optional `split= i1 i2 ...` (1-based k-basis
// indices), rows `i j k value` (1-based). Missing mirrors c[j][i][k] are
// filled with -value; explicit rows always win.
LiePtr load_algebra_file(const std::string& path);

LiePtr algebra_from_spec(const std::string& name_or_path);  // builtin or file

// Simultaneous decomposition of ad(t) on p into oriented 2-planes.
// Requires t abelian and maximal; the declared p-basis must be root-aligned
// (each p vector couples to exactly one partner under every ad(H)).
RootDatum root_datum(LiePtr g, const SubalgebraSplit& t);

// tr_g(Omega_g) = sum_i tr(ad X_i ad X_i), from structure constants.
Scalar casimir_trace(const LieAlgebra& g);
// Casimir trace of the subalgebra spanned by k_idx.
Scalar casimir_trace_sub(const LieAlgebra& g, const std::vector<int>& k_idx);

// (1/24) tr_g(Omega_g) = -|rho|^2  (Freudenthal-de Vries, Kostant's form)
Report strange_formula_check(const LieAlgebra& g, const RootDatum& rd);

// Scalar of the Casimir on the irreducible with highest weight mu:
// -|mu+rho|^2 + |rho|^2.
Scalar casimir_scalar(const RootDatum& rd, const Weight& mu);

class WeightDiagram {
 public:
  // entries in BFS level order; keys are coefficient vectors of lambda - nu in
  // the simple-root basis
  struct Entry {
    Weight weight;
    std::vector<int> coeffs;
    long mult;
  };
  std::vector<Entry> entries;

  const Weight& highest() const { return lambda_; }
  long multiplicity(const RootDatum& rd, const Weight& nu) const;
  long total() const;

 private:
  friend WeightDiagram weight_multiplicities(const RootDatum&, const Weight&);
  Weight lambda_;
  std::map<std::vector<int>, long> by_coeffs_;
};

// Full weight diagram of the irreducible module V_lambda (Freudenthal).
WeightDiagram weight_multiplicities(const RootDatum& rd, const Weight& lambda);

// prod <lambda+rho, alpha> / <rho, alpha> over positive roots.
long weyl_dim(const RootDatum& rd, const Weight& lambda);

Weight parse_weight(const std::string& text, int rank);

}  // namespace cdk
