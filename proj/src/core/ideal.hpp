#pragma once

#include "monomial.hpp"

#include <span>
#include <string>
#include <vector>

namespace syzdepth {

// Monomial ideal of K[x_1..x_n]. Generators are stored as given; minimal()
// returns the unique minimal generating set in canonical order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::size_t n) : n_(n) {}
  MonomialIdeal(std::size_t n, std::vector<Monomial> generators);

  static MonomialIdeal unit(std::size_t n);
  static MonomialIdeal maximal(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;

  bool contains(const Monomial& u) const;
  MonomialIdeal minimal() const;
  MonomialIdeal colon(const Monomial& v) const;
  MonomialIdeal operator+(const MonomialIdeal& other) const;

  // Componentwise maximum of the generator exponents (the lcm of the generators).
  Multidegree lcm_exponent() const;
  // Smallest total degree of a generator; -1 for the zero ideal.
  std::int64_t min_generator_degree() const;

  // Minimal generating sets compared; this is ideal equality.
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

// Deduplicates and removes generators divisible by others; canonical order is
// ascending total degree, then lex descending.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

void sort_canonical(std::vector<Monomial>& gens);

}  // namespace syzdepth
