#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace syzdepth {

// Variable priority is fixed x_1 > x_2 > ... > x_n for both orders.
enum class MonomialOrder { lex, degrevlex };

const char* to_string(MonomialOrder order) noexcept;

// Integer exponent vector of length n. Entries may be negative when the
// vector is used as a degree shift. Arithmetic throws std::overflow_error
// instead of wrapping.
class Multidegree {
 public:
  using value_type = std::int32_t;
  using storage_type = boost::container::small_vector<value_type, 8>;

  Multidegree() = default;
  explicit Multidegree(std::size_t n) : e_(n, 0) {}
  Multidegree(std::initializer_list<value_type> entries) : e_(entries) {}
  explicit Multidegree(std::span<const value_type> entries)
      : e_(entries.begin(), entries.end()) {}

  static Multidegree unit(std::size_t n, std::size_t index);

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  std::int64_t total() const noexcept;
  bool is_nonnegative() const noexcept;
  bool is_zero() const noexcept;

  // Componentwise a <= b.
  bool leq(const Multidegree& other) const;

  Multidegree& operator+=(const Multidegree& other);
  Multidegree& operator-=(const Multidegree& other);
  friend Multidegree operator+(Multidegree a, const Multidegree& b) { return a += b; }
  friend Multidegree operator-(Multidegree a, const Multidegree& b) { return a -= b; }

  friend bool operator==(const Multidegree& a, const Multidegree& b) { return a.e_ == b.e_; }

  std::vector<value_type> to_vector() const { return {e_.begin(), e_.end()}; }
  std::string to_string() const;
  std::size_t hash() const noexcept;

 private:
  storage_type e_;
};

// Lexicographic comparison: the first differing coordinate decides.
std::strong_ordering lex_compare(const Multidegree& a, const Multidegree& b);

Multidegree componentwise_max(const Multidegree& a, const Multidegree& b);

// A monomial x^a with a componentwise nonnegative.
class Monomial {
 public:
  Monomial() = default;
  // The monomial 1 in n variables.
  explicit Monomial(std::size_t n) : d_(n) {}
  Monomial(std::initializer_list<Multidegree::value_type> exponents);
  explicit Monomial(Multidegree exponents);

  static Monomial variable(std::size_t n, std::size_t index);

  const Multidegree& degree() const noexcept { return d_; }
  std::size_t size() const noexcept { return d_.size(); }
  Multidegree::value_type operator[](std::size_t i) const { return d_[i]; }
  std::int64_t total_degree() const noexcept { return d_.total(); }
  bool is_one() const noexcept { return d_.is_zero(); }

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.d_ == b.d_; }

  // "x1^2*x3", or "1".
  std::string to_string() const;
  std::size_t hash() const noexcept { return d_.hash(); }

 private:
  Multidegree d_;
};

Monomial lcm(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);
// True iff v divides u.
bool divides(const Monomial& v, const Monomial& u);
// u / v when v divides u.
std::optional<Monomial> divide(const Monomial& u, const Monomial& v);
// Zero-based indices of the variables occurring in u.
std::vector<std::size_t> support(const Monomial& u);
bool is_squarefree(const Monomial& u) noexcept;

std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b);

struct MultidegreeHash {
  std::size_t operator()(const Multidegree& d) const noexcept { return d.hash(); }
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// Throws InputError unless both have n entries.
void require_same_size(std::size_t a, std::size_t b, const char* what);

}  // namespace syzdepth
