#pragma once

// Coefficient fields. Rational (GMP mpq) is the reference field; PrimeField
// is a faster Z/p used for cross-checks. Generic code goes through
// FieldTraits so that gmpxx expression templates never leak into `auto`.

#include "errors.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace syzdepth {

using Rational = mpq_class;

std::string to_string(const Rational& q);
// Accepts "p", "-p", "p/q"; throws InputError otherwise or on q == 0.
Rational parse_rational(const std::string& text);

template <std::uint32_t P>
class PrimeField {
  static_assert(P > 2 && P < (1u << 31), "modulus must fit below 2^31");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr PrimeField() = default;
  constexpr PrimeField(long long v) : v_(reduce(v)) {}  // NOLINT(implicit)

  constexpr std::uint32_t value() const noexcept { return v_; }

  friend constexpr PrimeField operator+(PrimeField a, PrimeField b) {
    std::uint32_t s = a.v_ + b.v_;
    return raw(s >= P ? s - P : s);
  }
  friend constexpr PrimeField operator-(PrimeField a, PrimeField b) {
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + P - b.v_);
  }
  constexpr PrimeField operator-() const { return raw(v_ == 0 ? 0 : P - v_); }
  friend constexpr PrimeField operator*(PrimeField a, PrimeField b) {
    return raw(static_cast<std::uint32_t>(std::uint64_t{a.v_} * b.v_ % P));
  }
  friend PrimeField operator/(PrimeField a, PrimeField b) { return a * b.inverse(); }
  PrimeField& operator+=(PrimeField o) { return *this = *this + o; }
  PrimeField& operator-=(PrimeField o) { return *this = *this - o; }
  PrimeField& operator*=(PrimeField o) { return *this = *this * o; }
  PrimeField& operator/=(PrimeField o) { return *this = *this / o; }
  friend constexpr bool operator==(PrimeField a, PrimeField b) { return a.v_ == b.v_; }

  PrimeField inverse() const {
    if (v_ == 0) throw InternalError("division by zero in prime field");
    std::uint64_t result = 1, base = v_, e = P - 2;
    while (e) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return raw(static_cast<std::uint32_t>(result));
  }

 private:
  static constexpr PrimeField raw(std::uint32_t v) {
    PrimeField f;
    f.v_ = v;
    return f;
  }
  static constexpr std::uint32_t reduce(long long v) {
    long long r = v % static_cast<long long>(P);
    return static_cast<std::uint32_t>(r < 0 ? r + P : r);
  }

  std::uint32_t v_ = 0;
};

// 2^31 - 1.
using Mersenne31 = PrimeField<2147483647u>;

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool is_one(const Rational& x) { return x == 1; }
  static Rational from_rational(const Rational& q) { return q; }
  static std::string to_string(const Rational& x) { return syzdepth::to_string(x); }
  static constexpr const char* name = "QQ";
};

template <std::uint32_t P>
struct FieldTraits<PrimeField<P>> {
  using F = PrimeField<P>;
  static bool is_zero(const F& x) { return x.value() == 0; }
  static bool is_one(const F& x) { return x.value() == 1; }
  static F from_rational(const Rational& q) {
    mpz_class num = q.get_num() % P, den = q.get_den() % P;
    if (den == 0) throw InputError("denominator vanishes modulo the field characteristic");
    return F(num.get_si()) / F(den.get_si());
  }
  static std::string to_string(const F& x) { return std::to_string(x.value()); }
  static constexpr const char* name = "ZZ/p";
};

}  // namespace syzdepth
