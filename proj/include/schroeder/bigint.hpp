#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace schroeder {

// Arbitrary-precision integer, value semantics over GMP.
class BigInt {
 public:
  BigInt() { mpz_init(z_); }
  BigInt(long v) { mpz_init_set_si(z_, v); }  // NOLINT(runtime/explicit)
  BigInt(unsigned long v) { mpz_init_set_ui(z_, v); }
  BigInt(int v) { mpz_init_set_si(z_, v); }
  BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
  BigInt(BigInt&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  ~BigInt() { mpz_clear(z_); }

  BigInt& operator=(const BigInt& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }

  // Decimal parse; throws std::invalid_argument on malformed input.
  static BigInt from_decimal(std::string_view s);

  BigInt& operator+=(const BigInt& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  BigInt& operator-=(const BigInt& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  BigInt& operator*=(const BigInt& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }
  BigInt& operator*=(unsigned long v) {
    mpz_mul_ui(z_, z_, v);
    return *this;
  }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator*(BigInt a, unsigned long b) { return a *= b; }

  // this += a*b
  void addmul(const BigInt& a, const BigInt& b) { mpz_addmul(z_, a.z_, b.z_); }
  void submul(const BigInt& a, const BigInt& b) { mpz_submul(z_, a.z_, b.z_); }

  void divexact_ui(unsigned long d) { mpz_divexact_ui(z_, z_, d); }

  // Floor division with remainder: a = q*b + r, 0 <= r < b (b > 0).
  static void fdiv_qr(BigInt& q, BigInt& r, const BigInt& a, const BigInt& b) {
    mpz_fdiv_qr(q.z_, r.z_, a.z_, b.z_);
  }

  int cmp(const BigInt& o) const { return mpz_cmp(z_, o.z_); }
  friend bool operator==(const BigInt& a, const BigInt& b) { return a.cmp(b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return a.cmp(b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return a.cmp(b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return a.cmp(b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return a.cmp(b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return a.cmp(b) >= 0; }

  bool is_zero() const { return mpz_sgn(z_) == 0; }
  int sign() const { return mpz_sgn(z_); }
  bool fits_ulong() const { return mpz_fits_ulong_p(z_) != 0; }
  unsigned long to_ulong() const { return mpz_get_ui(z_); }
  double to_double() const { return mpz_get_d(z_); }
  // Natural log of a positive value, exact to double precision.
  double log() const;
  // Number of bits of |value|; 0 for value 0.
  size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(z_, 2); }

  std::string to_string() const;

  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw() { return z_; }

 private:
  mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

// Exact rational, reduced, value semantics over GMP.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long v) {  // NOLINT(runtime/explicit)
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const BigInt& num);
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  ~Rational() { mpq_clear(q_); }

  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    mpq_div(q_, q_, o.q_);
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }

  BigInt numerator() const;
  BigInt denominator() const;
  double to_double() const { return mpq_get_d(q_); }
  // "num/den" in lowest terms ("num" alone when den == 1).
  std::string to_string() const;

  mpq_srcptr raw() const { return q_; }
  mpq_ptr raw() { return q_; }

 private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace schroeder
