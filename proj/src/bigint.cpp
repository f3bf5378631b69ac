#include "schroeder/bigint.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace schroeder {

BigInt BigInt::from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::string buf(s);
  BigInt r;
  if (mpz_set_str(r.z_, buf.c_str(), 10) != 0)
    throw std::invalid_argument("malformed integer literal: " + buf);
  return r;
}

double BigInt::log() const {
  if (mpz_sgn(z_) <= 0) throw std::domain_error("log of non-positive BigInt");
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, z_);
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

std::string BigInt::to_string() const {
  char* s = mpz_get_str(nullptr, 10, z_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::domain_error("rational with zero denominator");
  mpq_init(q_);
  mpz_set(mpq_numref(q_), num.raw());
  mpz_set(mpq_denref(q_), den.raw());
  mpq_canonicalize(q_);
}

Rational::Rational(const BigInt& num) {
  mpq_init(q_);
  mpz_set(mpq_numref(q_), num.raw());
}

BigInt Rational::numerator() const {
  BigInt r;
  mpz_set(r.raw(), mpq_numref(q_));
  return r;
}

BigInt Rational::denominator() const {
  BigInt r;
  mpz_set(r.raw(), mpq_denref(q_));
  return r;
}

std::string Rational::to_string() const {
  BigInt den = denominator();
  if (mpz_cmp_ui(den.raw(), 1) == 0) return numerator().to_string();
  return numerator().to_string() + "/" + den.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace schroeder
