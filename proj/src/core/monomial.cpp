#include "monomial.hpp"

#include "errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace syzdepth {

namespace {

Multidegree::value_type checked_add(Multidegree::value_type a, Multidegree::value_type b) {
  Multidegree::value_type r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

Multidegree::value_type checked_sub(Multidegree::value_type a, Multidegree::value_type b) {
  Multidegree::value_type r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

}  // namespace

const char* to_string(MonomialOrder order) noexcept {
  return order == MonomialOrder::lex ? "lex" : "degrevlex";
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InputError(std::string(what) + ": mismatched variable count (" + std::to_string(a) +
                     " vs " + std::to_string(b) + ")");
  }
}

Multidegree Multidegree::unit(std::size_t n, std::size_t index) {
  if (index >= n) throw InputError("unit vector index out of range");
  Multidegree d(n);
  d[index] = 1;
  return d;
}

std::int64_t Multidegree::total() const noexcept {
  return std::accumulate(e_.begin(), e_.end(), std::int64_t{0});
}

bool Multidegree::is_nonnegative() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](value_type x) { return x >= 0; });
}

bool Multidegree::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](value_type x) { return x == 0; });
}

bool Multidegree::leq(const Multidegree& other) const {
  require_same_size(size(), other.size(), "componentwise comparison");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Multidegree& Multidegree::operator+=(const Multidegree& other) {
  require_same_size(size(), other.size(), "multidegree addition");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = checked_add(e_[i], other.e_[i]);
  return *this;
}

Multidegree& Multidegree::operator-=(const Multidegree& other) {
  require_same_size(size(), other.size(), "multidegree subtraction");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = checked_sub(e_[i], other.e_[i]);
  return *this;
}

std::string Multidegree::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

std::size_t Multidegree::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (value_type x : e_) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::strong_ordering lex_compare(const Multidegree& a, const Multidegree& b) {
  require_same_size(a.size(), b.size(), "lex_compare");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

Multidegree componentwise_max(const Multidegree& a, const Multidegree& b) {
  require_same_size(a.size(), b.size(), "componentwise max");
  Multidegree r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial::Monomial(std::initializer_list<Multidegree::value_type> exponents)
    : Monomial(Multidegree(exponents)) {}

Monomial::Monomial(Multidegree exponents) : d_(std::move(exponents)) {
  if (!d_.is_nonnegative()) throw InputError("monomial with negative exponent " + d_.to_string());
}

Monomial Monomial::variable(std::size_t n, std::size_t index) {
  return Monomial(Multidegree::unit(n, index));
}

Monomial& Monomial::operator*=(const Monomial& other) {
  d_ += other.d_;
  return *this;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (d_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (d_[i] > 1) s += "^" + std::to_string(d_[i]);
  }
  return s.empty() ? "1" : s;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  return Monomial(componentwise_max(u.degree(), v.degree()));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  require_same_size(u.size(), v.size(), "gcd");
  Multidegree r = u.degree();
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(u[i], v[i]);
  return Monomial(std::move(r));
}

bool divides(const Monomial& v, const Monomial& u) { return v.degree().leq(u.degree()); }

std::optional<Monomial> divide(const Monomial& u, const Monomial& v) {
  if (!divides(v, u)) return std::nullopt;
  return Monomial(u.degree() - v.degree());
}

std::vector<std::size_t> support(const Monomial& u) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > 0) s.push_back(i);
  return s;
}

bool is_squarefree(const Monomial& u) noexcept {
  return std::all_of(u.degree().begin(), u.degree().end(), [](auto x) { return x <= 1; });
}

std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b) {
  require_same_size(a.size(), b.size(), "monomial comparison");
  if (order == MonomialOrder::lex) return lex_compare(a.degree(), b.degree());
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

}  // namespace syzdepth
