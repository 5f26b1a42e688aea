#include "ideal.hpp"

#include "errors.hpp"

#include <algorithm>

namespace syzdepth {

void sort_canonical(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return lex_compare(a.degree(), b.degree()) > 0;
  });
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  sort_canonical(gens);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    // Canonical order is by ascending degree, so any divisor is already kept.
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> generators)
    : n_(n), gens_(std::move(generators)) {
  for (const auto& g : gens_) require_same_size(n_, g.size(), "ideal generator");
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) { return MonomialIdeal(n, {Monomial(n)}); }

MonomialIdeal MonomialIdeal::maximal(std::size_t n) {
  std::vector<Monomial> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(Monomial::variable(n, i));
  return MonomialIdeal(n, std::move(g));
}

bool MonomialIdeal::is_unit() const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_one(); });
}

bool MonomialIdeal::contains(const Monomial& u) const {
  require_same_size(n_, u.size(), "ideal membership");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, u); });
}

MonomialIdeal MonomialIdeal::minimal() const { return MonomialIdeal(n_, minimalize(gens_)); }

MonomialIdeal MonomialIdeal::colon(const Monomial& v) const {
  std::vector<Monomial> q;
  q.reserve(gens_.size());
  for (const auto& g : gens_) q.push_back(*divide(g, gcd(g, v)));
  return MonomialIdeal(n_, minimalize(std::move(q)));
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  require_same_size(n_, other.n_, "ideal sum");
  std::vector<Monomial> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(n_, minimalize(std::move(g)));
}

Multidegree MonomialIdeal::lcm_exponent() const {
  Multidegree g(n_);
  for (const auto& u : gens_) g = componentwise_max(g, u.degree());
  return g;
}

std::int64_t MonomialIdeal::min_generator_degree() const {
  std::int64_t best = -1;
  for (const auto& u : gens_)
    if (best < 0 || u.total_degree() < best) best = u.total_degree();
  return best;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a.n_ == b.n_ && minimalize(a.gens_) == minimalize(b.gens_);
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "0";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

}  // namespace syzdepth
