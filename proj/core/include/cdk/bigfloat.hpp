#pragma once

// Thin value-semantic wrapper around MPFR reals, plus a small complex type.
// Precision is carried per value; binary operations use the larger operand
// precision. Only the spectral paths use floats; symbolic code never does.

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace cdk {

class BigFloat {
 public:
  explicit BigFloat(long prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(double x, long prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  BigFloat(long x, long prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, o.prec()); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) { mpfr_set_prec(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  long prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(int digits = 20) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return bin(mpfr_add, a, b); }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return bin(mpfr_sub, a, b); }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return bin(mpfr_mul, a, b); }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return bin(mpfr_div, a, b); }
  BigFloat operator-() const { BigFloat r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  friend BigFloat abs(const BigFloat& a) { BigFloat r(a.prec()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
  friend BigFloat sqrt(const BigFloat& a) { BigFloat r(a.prec()); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
  friend BigFloat exp(const BigFloat& a) { BigFloat r(a.prec()); mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r; }
  friend BigFloat log(const BigFloat& a) { BigFloat r(a.prec()); mpfr_log(r.v_, a.v_, MPFR_RNDN); return r; }
  friend BigFloat sin(const BigFloat& a) { BigFloat r(a.prec()); mpfr_sin(r.v_, a.v_, MPFR_RNDN); return r; }
  friend BigFloat cos(const BigFloat& a) { BigFloat r(a.prec()); mpfr_cos(r.v_, a.v_, MPFR_RNDN); return r; }

  static BigFloat pi(long prec) { BigFloat r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

 private:
  using mpfr_binop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static BigFloat bin(mpfr_binop op, const BigFloat& a, const BigFloat& b) {
    BigFloat r(a.prec() > b.prec() ? a.prec() : b.prec());
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

struct BigComplex {
  BigFloat re, im;

  explicit BigComplex(long prec = 128) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigFloat& s, const BigComplex& a) {
    return {s * a.re, s * a.im};
  }
  BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }

  friend BigFloat abs(const BigComplex& a) { return sqrt(a.re * a.re + a.im * a.im); }
  // exp(i*t)
  static BigComplex unit(const BigFloat& t) { return {cos(t), sin(t)}; }
};

}  // namespace cdk
