#pragma once

// Exact coefficient arithmetic for all symbolic modules.
//
// A Scalar is a finite sum  Σ q · pi^k · sqrt(r)  with q a Gaussian rational,
// k an integer (pi is a formal central symbol with a formal inverse), and r a
// square-free positive integer (r = 1 means no radical). Monomials in distinct
// (k, r) are linearly independent over Q(i), so equality is map equality and
// zero is the empty sum. Floats only ever appear through to_real/to_complex.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "cdk/bigfloat.hpp"

namespace cdk {

using Rational = mpq_class;

struct scalar_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a + b*i with exact rational a, b
struct GaussRat {
  Rational re = 0, im = 0;

  GaussRat() = default;
  GaussRat(Rational r) : re(std::move(r)) {}
  GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRat conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  GaussRat inverse() const;

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRat operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
};

class Scalar {
 public:
  struct Key {
    int pi = 0;                // power of the formal symbol pi
    unsigned long rad = 1;     // square-free integer under the square root
    auto operator<=>(const Key&) const = default;
  };

  Scalar() = default;
  Scalar(long n) { if (n != 0) terms_[{}] = GaussRat(Rational(n)); }
  Scalar(int n) : Scalar(static_cast<long>(n)) {}
  Scalar(Rational q) { if (q != 0) terms_[{}] = GaussRat(std::move(q)); }
  Scalar(GaussRat q) { if (!q.is_zero()) terms_[{}] = std::move(q); }

  static Scalar i() { return Scalar(GaussRat(Rational(0), Rational(1))); }
  static Scalar pi_pow(int k);
  // sqrt of a positive integer; square factors are pulled out, the remaining
  // square-free part stays under the root (sqrt(12) = 2*sqrt(3)).
  static Scalar sqrt_of(unsigned long n);
  static Scalar ratio(long num, long den) { return Scalar(Rational(num, den)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_real() const;              // no imaginary parts
  bool is_pi_free() const;
  Rational rational_value() const;   // throws unless a plain rational

  // exact sign of a real, pi-free scalar (-1, 0, +1)
  int sign() const;

  Scalar conj() const;               // complex conjugate (fixes pi and radicals)
  Scalar inverse() const;            // monomials, or pi-homogeneous elements of
                                     // an iterated quadratic extension
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  BigComplex to_complex(long bits) const;
  BigFloat to_real(long bits) const;   // throws if the value has an imaginary part

  std::string str() const;
  // Literals: rationals, i, pi^k, sqrt(d), products and quotients thereof,
  // combined with + and -. E.g. "-1/2", "sqrt(3)/2", "1+2*i", "1/4*pi^-2".
  static Scalar parse(const std::string& text);

  const std::map<Key, GaussRat>& terms() const { return terms_; }

 private:
  void add_term(const Key& k, const GaussRat& q);
  std::map<Key, GaussRat> terms_;  // no zero values stored
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

// Coefficient context per the input model: tracks which radicals have been
// adjoined. Arithmetic itself is context-free; this is the validated gate for
// introducing new radicals from user input.
class ScalarContext {
 public:
  // d must be a square-free integer >= 2
  void adjoin_radical(unsigned long d);
  bool adjoined(unsigned long d) const { return radicals_.count(d) != 0; }
  Scalar sqrt(unsigned long d) const;

 private:
  std::map<unsigned long, bool> radicals_;
};

bool is_square_free(unsigned long n);

}  // namespace cdk
