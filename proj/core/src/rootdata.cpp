#include "cdk/rootdata.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cdk {

std::vector<Scalar> LieAlgebra::bracket(const std::vector<Scalar>& v,
                                        const std::vector<Scalar>& w) const {
  std::vector<Scalar> out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (w[j].is_zero()) continue;
      for (int k = 0; k < dim_; ++k) {
        const Scalar& cv = c(i, j, k);
        if (!cv.is_zero()) out[k] += v[i] * w[j] * cv;
      }
    }
  }
  return out;
}

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  Scalar s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Scalar norm2(const std::vector<Scalar>& a) { return dot(a, a); }

// ---------------------------------------------------------------------------
// validation

std::vector<Report> validate(const LieAlgebra& g) {
  std::vector<Report> out;
  const int n = g.dim();
  const std::string base = g.name();

  {
    std::vector<std::string> wit;
    for (int i = 0; i < n && wit.empty(); ++i)
      for (int j = 0; j < n && wit.empty(); ++j)
        for (int k = 0; k < n && wit.empty(); ++k)
          if (!(g.c(i, j, k) + g.c(j, i, k)).is_zero())
            wit.push_back("c[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "][" +
                          std::to_string(k + 1) + "] + c[" + std::to_string(j + 1) + "][" +
                          std::to_string(i + 1) + "][" + std::to_string(k + 1) +
                          "] = " + (g.c(i, j, k) + g.c(j, i, k)).str());
    out.push_back(wit.empty() ? Report::pass(base + "/antisymmetry", "antisymmetry",
                                             "c[i][j][k] = -c[j][i][k]")
                              : Report::fail(base + "/antisymmetry", "antisymmetry",
                                             "c[i][j][k] = -c[j][i][k]", wit));
  }
  {
    std::vector<std::string> wit;
    for (int i = 0; i < n && wit.empty(); ++i)
      for (int j = i + 1; j < n && wit.empty(); ++j)
        for (int k = j + 1; k < n && wit.empty(); ++k)
          for (int l = 0; l < n; ++l) {
            Scalar s;
            for (int m = 0; m < n; ++m)
              s += g.c(j, k, m) * g.c(i, m, l) + g.c(k, i, m) * g.c(j, m, l) +
                   g.c(i, j, m) * g.c(k, m, l);
            if (!s.is_zero()) {
              wit.push_back("jacobiator(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            "," + std::to_string(k + 1) + ") component " + std::to_string(l + 1) +
                            " = " + s.str());
              break;
            }
          }
    out.push_back(wit.empty()
                      ? Report::pass(base + "/jacobi", "jacobi", "[[X,Y],Z] + cyclic = 0")
                      : Report::fail(base + "/jacobi", "jacobi", "[[X,Y],Z] + cyclic = 0", wit));
  }
  {
    // invariance <ad_X Y, Z> + <Y, ad_X Z> = 0 in an orthonormal basis is
    // antisymmetry of c in its last two slots
    std::vector<std::string> wit;
    for (int i = 0; i < n && wit.empty(); ++i)
      for (int j = 0; j < n && wit.empty(); ++j)
        for (int k = 0; k < n && wit.empty(); ++k)
          if (!(g.c(i, j, k) + g.c(i, k, j)).is_zero())
            wit.push_back("c[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "][" +
                          std::to_string(k + 1) + "] + c[" + std::to_string(i + 1) + "][" +
                          std::to_string(k + 1) + "][" + std::to_string(j + 1) +
                          "] = " + (g.c(i, j, k) + g.c(i, k, j)).str());
    out.push_back(wit.empty() ? Report::pass(base + "/invariance", "invariance",
                                             "<ad_X Y, Z> + <Y, ad_X Z> = 0")
                              : Report::fail(base + "/invariance", "invariance",
                                             "<ad_X Y, Z> + <Y, ad_X Z> = 0", wit));
  }
  return out;
}

// ---------------------------------------------------------------------------
// builtins

namespace {

void set_antisym(LieAlgebra& g, int i, int j, int k, const Scalar& v) {
  // totally antisymmetric fill from one representative (0-based indices)
  g.set_c(i, j, k, v);
  g.set_c(j, k, i, v);
  g.set_c(k, i, j, v);
  g.set_c(j, i, k, -v);
  g.set_c(i, k, j, -v);
  g.set_c(k, j, i, -v);
}

std::shared_ptr<LieAlgebra> make_su2() {
  auto g = std::make_shared<LieAlgebra>("su2", 3);
  set_antisym(*g, 0, 1, 2, Scalar(1));
  g->set_torus_indices({2});
  return g;
}

std::shared_ptr<LieAlgebra> make_su3() {
  auto g = std::make_shared<LieAlgebra>("su3", 8);
  const Scalar half = Scalar::ratio(1, 2);
  const Scalar s32 = Scalar::sqrt_of(3) * half;
  set_antisym(*g, 0, 1, 2, Scalar(1));
  set_antisym(*g, 0, 3, 6, half);
  set_antisym(*g, 0, 4, 5, -half);
  set_antisym(*g, 1, 3, 5, half);
  set_antisym(*g, 1, 4, 6, half);
  set_antisym(*g, 2, 3, 4, half);
  set_antisym(*g, 2, 5, 6, -half);
  set_antisym(*g, 3, 4, 7, s32);
  set_antisym(*g, 5, 6, 7, s32);
  g->set_torus_indices({2, 7});
  return g;
}

std::shared_ptr<LieAlgebra> make_torus(int n) {
  auto g = std::make_shared<LieAlgebra>("torus" + std::to_string(n), n);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  g->set_torus_indices(all);
  return g;
}

std::shared_ptr<LieAlgebra> make_su2xsu2() {
  auto g = std::make_shared<LieAlgebra>("su2xsu2", 6);
  set_antisym(*g, 0, 1, 2, Scalar(1));
  set_antisym(*g, 3, 4, 5, Scalar(1));
  g->set_torus_indices({2, 5});
  return g;
}

}  // namespace

LiePtr builtin(const std::string& name) {
  if (name == "su2") return make_su2();
  if (name == "su3") return make_su3();
  if (name == "su2xsu2") return make_su2xsu2();
  if (name.rfind("torus", 0) == 0) {
    std::string arg = name.substr(5);
    if (!arg.empty() && arg.front() == '(' && arg.back() == ')')
      arg = arg.substr(1, arg.size() - 2);
    int n = 0;
    try {
      n = std::stoi(arg);
    } catch (...) {
      throw lie_error("unknown builtin algebra: " + name);
    }
    if (n < 1 || n > 32) throw lie_error("torus rank out of range: " + name);
    return make_torus(n);
  }
  throw lie_error("unknown builtin algebra: " + name);
}

LiePtr load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lie_error("cannot open algebra file: " + path);
  std::string line;
  int dim = -1;
  std::vector<int> split;
  struct Row { int i, j, k; Scalar v; };
  std::vector<Row> rows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first.rfind("dim=", 0) == 0) {
      dim = std::stoi(first.substr(4));
      continue;
    }
    if (first.rfind("split=", 0) == 0) {
      std::string rest = first.substr(6);
      if (!rest.empty()) split.push_back(std::stoi(rest) - 1);
      int v;
      while (ls >> v) split.push_back(v - 1);
      continue;
    }
    Row r;
    std::string vtext;
    try {
      r.i = std::stoi(first) - 1;
      if (!(ls >> r.j >> r.k >> vtext)) throw lie_error("");
      --r.j; --r.k;
      r.v = Scalar::parse(vtext);
    } catch (...) {
      throw lie_error(path + ":" + std::to_string(lineno) + ": bad row '" + line + "'");
    }
    rows.push_back(std::move(r));
  }
  if (dim <= 0) throw lie_error(path + ": missing or bad 'dim=N' header");
  auto g = std::make_shared<LieAlgebra>(path, dim);
  auto in_range = [dim](int x) { return x >= 0 && x < dim; };
  std::vector<bool> given(static_cast<size_t>(dim) * dim * dim, false);
  auto flat = [dim](int i, int j, int k) {
    return (static_cast<size_t>(i) * dim + j) * dim + k;
  };
  for (const auto& r : rows) {
    if (!in_range(r.i) || !in_range(r.j) || !in_range(r.k))
      throw lie_error(path + ": index out of range in a row");
    g->set_c(r.i, r.j, r.k, r.v);
    given[flat(r.i, r.j, r.k)] = true;
  }
  // fill unset mirrors; explicit rows win
  for (const auto& r : rows)
    if (!given[flat(r.j, r.i, r.k)]) g->set_c(r.j, r.i, r.k, -r.v);
  for (int s : split)
    if (!in_range(s)) throw lie_error(path + ": split index out of range");
  g->set_torus_indices(split);
  return g;
}

LiePtr algebra_from_spec(const std::string& name_or_path) {
  try {
    return builtin(name_or_path);
  } catch (const lie_error&) {
    return load_algebra_file(name_or_path);
  }
}

// ---------------------------------------------------------------------------
// splits and root data

int SubalgebraSplit::local_p(int global) const {
  for (size_t i = 0; i < p_idx.size(); ++i)
    if (p_idx[i] == global) return static_cast<int>(i);
  throw lie_error("index not in p");
}

SubalgebraSplit SubalgebraSplit::make(const LieAlgebra& g, std::vector<int> k_indices) {
  SubalgebraSplit s;
  std::vector<bool> in_k(g.dim(), false);
  for (int i : k_indices) {
    if (i < 0 || i >= g.dim()) throw lie_error("split index out of range");
    in_k[i] = true;
  }
  s.k_idx = std::move(k_indices);
  std::sort(s.k_idx.begin(), s.k_idx.end());
  for (int i = 0; i < g.dim(); ++i)
    if (!in_k[i]) s.p_idx.push_back(i);
  // [k,k] in k and [k,p] in p
  for (int a : s.k_idx)
    for (int b : s.k_idx)
      for (int x : s.p_idx)
        if (!g.c(a, b, x).is_zero())
          throw lie_error("declared k is not a subalgebra: [k,k] leaks into p");
  for (int a : s.k_idx)
    for (int y : s.p_idx)
      for (int x : s.k_idx)
        if (!g.c(a, y, x).is_zero())
          throw lie_error("split is not reductive: [k,p] leaks into k");
  return s;
}

RootDatum root_datum(LiePtr g, const SubalgebraSplit& t) {
  const int r = static_cast<int>(t.k_idx.size());
  // t abelian
  for (int a : t.k_idx)
    for (int b : t.k_idx)
      for (int k = 0; k < g->dim(); ++k)
        if (!g->c(a, b, k).is_zero()) throw lie_error("root_datum: t is not abelian");

  RootDatum rd;
  rd.g = g;
  rd.cartan = t.k_idx;

  // pair up p under the joint ad(t) action
  const auto& p = t.p_idx;
  const int np = static_cast<int>(p.size());
  std::vector<int> partner(np, -1);
  for (int ia = 0; ia < np; ++ia) {
    for (int ib = 0; ib < np; ++ib) {
      if (ia == ib) continue;
      bool coupled = false;
      for (int h : t.k_idx)
        if (!g->c(h, p[ia], p[ib]).is_zero()) { coupled = true; break; }
      if (coupled) {
        if (partner[ia] != -1 && partner[ia] != ib)
          throw lie_error("root_datum: declared p-basis is not root-aligned in 2-planes");
        partner[ia] = ib;
      }
    }
  }
  for (int ia = 0; ia < np; ++ia) {
    if (partner[ia] == -1)
      throw lie_error("root_datum: t is not maximal (centralizer vector outside t)");
    if (partner[partner[ia]] != ia)
      throw lie_error("root_datum: declared p-basis is not root-aligned in 2-planes");
  }

  std::vector<bool> used(np, false);
  for (int ia = 0; ia < np; ++ia) {
    if (used[ia]) continue;
    int ib = partner[ia];
    used[ia] = used[ib] = true;
    int a = p[ia], b = p[ib];
    std::vector<Scalar> alpha(r);
    for (int h = 0; h < r; ++h) alpha[h] = g->c(t.k_idx[h], a, b);
    // orientation: make the first nonzero coordinate positive
    int flip = 0;
    for (int h = 0; h < r; ++h) {
      if (alpha[h].is_zero()) continue;
      flip = alpha[h].sign() < 0;
      break;
    }
    if (flip) {
      std::swap(a, b);
      for (auto& x : alpha) x = -x;
    }
    rd.positives.push_back(alpha);
    rd.planes.emplace_back(a, b);
  }

  rd.rho.assign(r, Scalar());
  for (const auto& alpha : rd.positives)
    for (int h = 0; h < r; ++h) rd.rho[h] += Scalar::ratio(1, 2) * alpha[h];

  // simple roots: positives that are not sums of two positives
  for (const auto& alpha : rd.positives) {
    bool decomposable = false;
    for (const auto& b1 : rd.positives) {
      for (const auto& b2 : rd.positives) {
        bool eq = true;
        for (int h = 0; h < r; ++h)
          if (!(b1[h] + b2[h] == alpha[h])) { eq = false; break; }
        if (eq) { decomposable = true; break; }
      }
      if (decomposable) break;
    }
    if (!decomposable) rd.simples.push_back(alpha);
  }
  return rd;
}

bool RootDatum::is_dominant(const Weight& w) const {
  for (const auto& alpha : simples)
    if (dot(w.comp, alpha).sign() < 0) return false;
  return true;
}

bool RootDatum::is_integral(const Weight& w) const {
  for (const auto& alpha : simples) {
    Scalar q = (Scalar(2) * dot(w.comp, alpha)) / norm2(alpha);
    if (!q.is_rational()) return false;
    Rational v = q.rational_value();
    if (v.get_den() != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Casimir traces

Scalar casimir_trace_sub(const LieAlgebra& g, const std::vector<int>& k_idx) {
  // tr(ad X_i ad X_i) = sum_{j,k} c[i][j][k] c[i][k][j] over the subalgebra
  Scalar s;
  for (int i : k_idx)
    for (int j : k_idx)
      for (int k : k_idx) s += g.c(i, j, k) * g.c(i, k, j);
  return s;
}

Scalar casimir_trace(const LieAlgebra& g) {
  std::vector<int> all(g.dim());
  for (int i = 0; i < g.dim(); ++i) all[i] = i;
  return casimir_trace_sub(g, all);
}

Report strange_formula_check(const LieAlgebra& g, const RootDatum& rd) {
  Scalar lhs = Scalar::ratio(1, 24) * casimir_trace(g);
  Scalar rhs = -norm2(rd.rho);
  const std::string prov = "(1/24) tr Omega = -|rho|^2";
  if (lhs == rhs) return Report::pass(g.name() + "/strange-formula", "strange-formula", prov);
  return Report::fail(g.name() + "/strange-formula", "strange-formula", prov,
                      {"lhs = " + lhs.str() + ", rhs = " + rhs.str()});
}

Scalar casimir_scalar(const RootDatum& rd, const Weight& mu) {
  if (!rd.is_dominant(mu)) throw lie_error("casimir_scalar: weight is not dominant");
  std::vector<Scalar> shifted(mu.comp);
  for (size_t h = 0; h < shifted.size(); ++h) shifted[h] += rd.rho[h];
  return -norm2(shifted) + norm2(rd.rho);
}

// ---------------------------------------------------------------------------
// weight diagrams (Freudenthal) and the Weyl dimension formula

namespace {

// solve G x = b exactly (small dense system over the scalar field)
std::vector<Scalar> solve_linear(std::vector<std::vector<Scalar>> G, std::vector<Scalar> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (!G[row][col].is_zero()) { piv = row; break; }
    if (piv < 0) throw lie_error("singular Gram matrix in weight coordinates");
    std::swap(G[col], G[piv]);
    std::swap(b[col], b[piv]);
    Scalar inv = G[col][col].inverse();
    for (int j = col; j < n; ++j) G[col][j] = G[col][j] * inv;
    b[col] = b[col] * inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || G[row][col].is_zero()) continue;
      Scalar f = G[row][col];
      for (int j = col; j < n; ++j) G[row][j] -= f * G[col][j];
      b[row] -= f * b[col];
    }
  }
  return b;
}

std::vector<int> simple_coords(const RootDatum& rd, const std::vector<Scalar>& v) {
  const int ns = static_cast<int>(rd.simples.size());
  std::vector<std::vector<Scalar>> G(ns, std::vector<Scalar>(ns));
  std::vector<Scalar> b(ns);
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < ns; ++j) G[i][j] = dot(rd.simples[i], rd.simples[j]);
    b[i] = dot(v, rd.simples[i]);
  }
  auto x = solve_linear(std::move(G), std::move(b));
  std::vector<int> out(ns);
  for (int i = 0; i < ns; ++i) {
    if (!x[i].is_rational()) throw lie_error("non-rational simple-root coordinate");
    Rational q = x[i].rational_value();
    if (q.get_den() != 1) throw lie_error("non-integral simple-root coordinate");
    out[i] = static_cast<int>(q.get_num().get_si());
  }
  return out;
}

}  // namespace

long WeightDiagram::multiplicity(const RootDatum& rd, const Weight& nu) const {
  std::vector<Scalar> diff(lambda_.comp);
  for (size_t h = 0; h < diff.size(); ++h) diff[h] -= nu.comp[h];
  std::vector<int> coords;
  try {
    coords = simple_coords(rd, diff);
  } catch (const lie_error&) {
    return 0;  // not in the root lattice translate of lambda
  }
  for (int ci : coords)
    if (ci < 0) return 0;
  auto it = by_coeffs_.find(coords);
  return it == by_coeffs_.end() ? 0 : it->second;
}

long WeightDiagram::total() const {
  long t = 0;
  for (const auto& e : entries) t += e.mult;
  return t;
}

WeightDiagram weight_multiplicities(const RootDatum& rd, const Weight& lambda) {
  if (!rd.is_dominant(lambda) || !rd.is_integral(lambda))
    throw lie_error("weight_multiplicities: weight is not dominant integral");

  WeightDiagram dg;
  dg.lambda_ = lambda;
  const int rank = rd.rank();
  const int ns = static_cast<int>(rd.simples.size());

  auto weight_of = [&](const std::vector<int>& coeffs) {
    Weight w;
    w.comp = lambda.comp;
    for (int i = 0; i < ns; ++i)
      for (int h = 0; h < rank; ++h) w.comp[h] -= Scalar(coeffs[i]) * rd.simples[i][h];
    return w;
  };

  // positive roots in simple coordinates
  std::vector<std::vector<int>> pos_coords;
  for (const auto& alpha : rd.positives) pos_coords.push_back(simple_coords(rd, alpha));

  std::vector<Scalar> lam_rho(lambda.comp);
  for (int h = 0; h < rank; ++h) lam_rho[h] += rd.rho[h];
  const Scalar lam_rho2 = norm2(lam_rho);

  std::map<std::vector<int>, long> mult;
  std::vector<std::vector<int>> frontier;
  std::vector<int> origin(ns, 0);
  mult[origin] = 1;
  dg.entries.push_back({weight_of(origin), origin, 1});
  frontier.push_back(origin);

  while (!frontier.empty()) {
    // candidates one simple-root step deeper
    std::map<std::vector<int>, bool> cand;
    for (const auto& c : frontier)
      for (int i = 0; i < ns; ++i) {
        auto c2 = c;
        ++c2[i];
        cand[c2] = true;
      }
    std::vector<std::vector<int>> next;
    for (const auto& [c2, _] : cand) {
      if (mult.count(c2)) continue;
      Weight nu = weight_of(c2);
      std::vector<Scalar> nu_rho(nu.comp);
      for (int h = 0; h < rank; ++h) nu_rho[h] += rd.rho[h];
      Scalar denom = lam_rho2 - norm2(nu_rho);
      Scalar num;
      for (size_t ai = 0; ai < rd.positives.size(); ++ai) {
        for (int k = 1;; ++k) {
          std::vector<int> up = c2;
          bool neg = false;
          for (int i = 0; i < ns; ++i) {
            up[i] -= k * pos_coords[ai][i];
            if (up[i] < 0) neg = true;
          }
          if (neg) break;
          auto it = mult.find(up);
          long m = (it == mult.end()) ? 0 : it->second;
          if (m == 0) continue;
          std::vector<Scalar> shifted(nu.comp);
          for (int h = 0; h < rank; ++h)
            shifted[h] += Scalar(k) * rd.positives[ai][h];
          num += Scalar(2 * m) * dot(shifted, rd.positives[ai]);
        }
      }
      long mval = 0;
      if (denom.is_zero()) {
        if (!num.is_zero()) throw lie_error("Freudenthal recursion inconsistency");
      } else {
        Scalar q = num / denom;
        Rational qr = q.rational_value();
        if (qr.get_den() != 1 || qr < 0) throw lie_error("non-integral Freudenthal multiplicity");
        mval = static_cast<long>(qr.get_num().get_si());
      }
      mult[c2] = mval;
      if (mval > 0) {
        dg.entries.push_back({nu, c2, mval});
        next.push_back(c2);
      }
    }
    frontier = std::move(next);
  }
  dg.by_coeffs_.clear();
  for (const auto& e : dg.entries) dg.by_coeffs_[e.coeffs] = e.mult;
  return dg;
}

long weyl_dim(const RootDatum& rd, const Weight& lambda) {
  if (!rd.is_dominant(lambda) || !rd.is_integral(lambda))
    throw lie_error("weyl_dim: weight is not dominant integral");
  std::vector<Scalar> lam_rho(lambda.comp);
  for (int h = 0; h < rd.rank(); ++h) lam_rho[h] += rd.rho[h];
  Scalar num(1), den(1);
  for (const auto& alpha : rd.positives) {
    num *= dot(lam_rho, alpha);
    den *= dot(rd.rho, alpha);
  }
  Scalar q = num / den;
  Rational qr = q.rational_value();
  if (qr.get_den() != 1 || qr <= 0) throw lie_error("Weyl dimension is not a positive integer");
  return static_cast<long>(qr.get_num().get_si());
}

Weight parse_weight(const std::string& text, int rank) {
  Weight w;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      w.comp.push_back(Scalar::parse(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) w.comp.push_back(Scalar::parse(cur));
  if (static_cast<int>(w.comp.size()) != rank)
    throw lie_error("weight has " + std::to_string(w.comp.size()) + " components, expected " +
                    std::to_string(rank));
  return w;
}

}  // namespace cdk
