#include "cdk/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace cdk {

GaussRat GaussRat::inverse() const {
  Rational n = norm();
  if (n == 0) throw scalar_error("division by zero");
  GaussRat c = conj();
  return {c.re / n, c.im / n};
}

Scalar Scalar::pi_pow(int k) {
  Scalar s;
  s.terms_[{k, 1}] = GaussRat(Rational(1));
  return s;
}

Scalar Scalar::sqrt_of(unsigned long n) {
  if (n == 0) return Scalar();
  unsigned long outside = 1;
  for (unsigned long f = 2; f * f <= n; ++f) {
    while (n % (f * f) == 0) {
      n /= f * f;
      outside *= f;
    }
  }
  Scalar s;
  s.terms_[{0, n}] = GaussRat(Rational(static_cast<long>(outside)));
  return s;
}

bool Scalar::is_rational() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& [k, q] = *terms_.begin();
  return k.pi == 0 && k.rad == 1 && q.im == 0;
}

bool Scalar::is_real() const {
  for (const auto& [k, q] : terms_)
    if (q.im != 0) return false;
  return true;
}

bool Scalar::is_pi_free() const {
  for (const auto& [k, q] : terms_)
    if (k.pi != 0) return false;
  return true;
}

Rational Scalar::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw scalar_error("not a plain rational: " + str());
  return terms_.begin()->second.re;
}

void Scalar::add_term(const Key& k, const GaussRat& q) {
  if (q.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, q);
  } else {
    it->second = it->second + q;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r = a;
  for (const auto& [k, q] : b.terms_) r.add_term(k, q);
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar r = a;
  for (const auto& [k, q] : b.terms_) r.add_term(k, -q);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (const auto& [k, q] : terms_) r.terms_[k] = -q;
  return r;
}

namespace {
unsigned long gcd_ul(unsigned long a, unsigned long b) {
  while (b) { unsigned long t = a % b; a = b; b = t; }
  return a;
}
}  // namespace

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  for (const auto& [ka, qa] : a.terms_) {
    for (const auto& [kb, qb] : b.terms_) {
      // sqrt(r1)*sqrt(r2) = g*sqrt((r1/g)(r2/g)) with g = gcd(r1, r2);
      // both factors square-free keeps the product square-free.
      unsigned long g = gcd_ul(ka.rad, kb.rad);
      Scalar::Key k{ka.pi + kb.pi, (ka.rad / g) * (kb.rad / g)};
      GaussRat q = qa * qb * GaussRat(Rational(static_cast<long>(g)));
      r.add_term(k, q);
    }
  }
  return r;
}

Scalar Scalar::conj() const {
  Scalar r;
  for (const auto& [k, q] : terms_) r.terms_[k] = q.conj();
  return r;
}

namespace {
unsigned long smallest_prime_factor(unsigned long n) {
  for (unsigned long f = 2; f * f <= n; ++f)
    if (n % f == 0) return f;
  return n;
}
}  // namespace

Scalar Scalar::inverse() const {
  if (terms_.empty()) throw scalar_error("division by zero");
  // all terms must share one pi power; factor it out
  int piw = terms_.begin()->first.pi;
  for (const auto& [k, q] : terms_)
    if (k.pi != piw) throw scalar_error("inverse of a pi-inhomogeneous scalar: " + str());
  Scalar body;
  for (const auto& [k, q] : terms_) body.terms_[{0, k.rad}] = q;

  // invert in the iterated quadratic extension by conjugating one prime at a time
  Scalar inv(1);
  while (true) {
    if (body.terms_.size() == 1) {
      const auto& [k, q] = *body.terms_.begin();
      Scalar m;
      m.terms_[{0, k.rad}] =
          q.inverse() * GaussRat(Rational(1, static_cast<long>(k.rad)));
      inv = inv * m;
      break;
    }
    unsigned long p = 1;
    for (const auto& [k, q] : body.terms_)
      if (k.rad != 1) { p = smallest_prime_factor(k.rad); break; }
    if (p == 1) throw scalar_error("inverse: unexpected duplicate rational terms");
    // body = A + B*sqrt(p) with A, B free of sqrt(p)
    Scalar conjugate;
    for (const auto& [k, q] : body.terms_) {
      bool has_p = (k.rad % p == 0);
      conjugate.terms_[k] = has_p ? -q : q;
    }
    inv = inv * conjugate;
    body = body * conjugate;  // = A^2 - p B^2, free of sqrt(p)
  }
  return Scalar::pi_pow(-piw) * inv;
}

int Scalar::sign() const {
  if (!is_real() || !is_pi_free())
    throw scalar_error("sign of a non-real or pi-carrying scalar: " + str());
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_.begin()->second.re);
  for (long bits = 128; bits <= 16384; bits *= 2) {
    BigFloat v = to_real(bits);
    // certified when |v| clears the accumulated rounding headroom
    BigFloat scale(0.0, bits);
    for (const auto& [k, q] : terms_) {
      BigFloat t(0.0, bits);
      mpfr_set_q(t.raw(), q.re.get_mpq_t(), MPFR_RNDN);
      scale += abs(t) * sqrt(BigFloat(static_cast<long>(k.rad), bits));
    }
    BigFloat eps = scale;
    mpfr_mul_2si(eps.raw(), eps.raw(), -(bits - 16), MPFR_RNDN);
    if (abs(v) > eps) return v.sign();
  }
  throw scalar_error("sign could not be certified: " + str());
}

BigComplex Scalar::to_complex(long bits) const {
  BigComplex acc(bits);
  BigFloat pi_val = BigFloat::pi(bits);
  for (const auto& [k, q] : terms_) {
    BigFloat t(1.0, bits);
    if (k.pi != 0) {
      BigFloat p(1.0, bits);
      for (int n = 0; n < std::abs(k.pi); ++n) p *= pi_val;
      t = (k.pi > 0) ? p : BigFloat(1.0, bits) / p;
    }
    if (k.rad != 1) t *= sqrt(BigFloat(static_cast<long>(k.rad), bits));
    BigFloat re(0.0, bits), im(0.0, bits);
    mpfr_set_q(re.raw(), q.re.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(im.raw(), q.im.get_mpq_t(), MPFR_RNDN);
    acc += BigComplex{re * t, im * t};
  }
  return acc;
}

BigFloat Scalar::to_real(long bits) const {
  if (!is_real()) throw scalar_error("to_real on a complex scalar: " + str());
  return to_complex(bits).re;
}

std::string BigFloat::str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

// ---------------------------------------------------------------------------
// rendering

namespace {
std::string rat_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}
}  // namespace

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, q] : terms_) {
    // coefficient part
    std::vector<std::string> factors;
    std::string coef;
    bool neg = false;
    if (q.im == 0) {
      Rational r = q.re;
      if (r < 0) { neg = true; r = -r; }
      if (r != 1 || (k.rad == 1 && k.pi == 0)) coef = rat_str(r);
    } else if (q.re == 0) {
      Rational r = q.im;
      if (r < 0) { neg = true; r = -r; }
      coef = (r == 1) ? "i" : rat_str(r) + "*i";
    } else {
      coef = "(" + rat_str(q.re) + (q.im > 0 ? "+" : "-") +
             rat_str(abs(q.im)) + "*i)";
    }
    if (!coef.empty()) factors.push_back(coef);
    if (k.rad != 1) factors.push_back("sqrt(" + std::to_string(k.rad) + ")");
    if (k.pi == 1) factors.push_back("pi");
    else if (k.pi != 0) factors.push_back("pi^" + std::to_string(k.pi));
    std::string term;
    for (size_t j = 0; j < factors.size(); ++j)
      term += (j ? "*" : "") + factors[j];
    if (first) {
      out += (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Lex {
  const std::string& s;
  size_t p = 0;
  void skip() { while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p; }
  bool eat(char c) {
    skip();
    if (p < s.size() && s[p] == c) { ++p; return true; }
    return false;
  }
  char peek() {
    skip();
    return p < s.size() ? s[p] : '\0';
  }
  long integer() {
    skip();
    bool neg = eat('-');
    if (!neg) eat('+');
    skip();
    if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p])))
      throw scalar_error("expected integer in scalar literal: " + s);
    long v = 0;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p])))
      v = v * 10 + (s[p++] - '0');
    return neg ? -v : v;
  }
  bool word(const char* w) {
    skip();
    size_t n = std::char_traits<char>::length(w);
    if (s.compare(p, n, w) == 0) { p += n; return true; }
    return false;
  }
};

Scalar parse_atom(Lex& lx) {
  if (lx.word("sqrt")) {
    if (!lx.eat('(')) throw scalar_error("expected ( after sqrt");
    long d = lx.integer();
    if (!lx.eat(')')) throw scalar_error("expected ) in sqrt");
    if (d < 0) throw scalar_error("sqrt of a negative integer; use i explicitly");
    return Scalar::sqrt_of(static_cast<unsigned long>(d));
  }
  if (lx.word("pi")) {
    int k = 1;
    if (lx.eat('^')) k = static_cast<int>(lx.integer());
    return Scalar::pi_pow(k);
  }
  if (lx.word("i")) return Scalar::i();
  long n = lx.integer();
  return Scalar(Rational(n));
}

Scalar parse_term(Lex& lx) {
  bool neg = false;
  while (true) {
    if (lx.eat('-')) { neg = !neg; continue; }
    if (lx.eat('+')) continue;
    break;
  }
  Scalar v = parse_atom(lx);
  while (true) {
    if (lx.eat('*')) { v = v * parse_atom(lx); continue; }
    if (lx.eat('/')) { v = v * parse_atom(lx).inverse(); continue; }
    break;
  }
  return neg ? -v : v;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  Lex lx{text};
  Scalar v = parse_term(lx);
  while (true) {
    char c = lx.peek();
    if (c == '+' || c == '-') {
      v = v + parse_term(lx);  // sign handled inside the term
      continue;
    }
    break;
  }
  lx.skip();
  if (lx.p != text.size()) throw scalar_error("trailing junk in scalar literal: " + text);
  return v;
}

// ---------------------------------------------------------------------------

bool is_square_free(unsigned long n) {
  if (n == 0) return false;
  for (unsigned long f = 2; f * f <= n; ++f)
    if (n % (f * f) == 0) return false;
  return true;
}

void ScalarContext::adjoin_radical(unsigned long d) {
  if (d < 2 || !is_square_free(d))
    throw scalar_error("adjoin_radical: " + std::to_string(d) + " is not square-free (or < 2)");
  radicals_[d] = true;
}

Scalar ScalarContext::sqrt(unsigned long d) const {
  if (d == 1) return Scalar(1);
  if (!adjoined(d)) throw scalar_error("radical sqrt(" + std::to_string(d) + ") not adjoined");
  return Scalar::sqrt_of(d);
}

}  // namespace cdk
