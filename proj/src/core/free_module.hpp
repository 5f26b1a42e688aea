#pragma once

#include "errors.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "monomial.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace syzdepth {

struct BasisElement {
  Multidegree degree;
  std::string label;
};

// Ordered multihomogeneous basis e_1 > e_2 > ... of a free Z^n-graded module.
// Position 0 is the largest basis element of the position-over-term order.
class OrderedBasis {
 public:
  OrderedBasis() = default;
  OrderedBasis(std::size_t n, std::vector<BasisElement> elements);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  const BasisElement& operator[](std::size_t i) const { return elems_[i]; }
  const Multidegree& degree(std::size_t i) const { return elems_[i].degree; }
  const std::vector<BasisElement>& elements() const noexcept { return elems_; }

  // deg(e_1) >= deg(e_2) >= ... in the lexicographic order.
  bool is_lex_refined() const;

  // new_of_old[i] is the new position of the element at old position i.
  OrderedBasis permuted(std::span<const std::size_t> new_of_old) const;

 private:
  std::size_t n_ = 0;
  std::vector<BasisElement> elems_;
};

struct LexRefinement {
  OrderedBasis basis;
  std::vector<std::size_t> new_of_old;
};

// Stable sort into weakly lex-decreasing degrees.
LexRefinement sort_lex_refined(const OrderedBasis& basis);

std::vector<std::size_t> invert_permutation(std::span<const std::size_t> new_of_old);

// Position-over-term comparison: u e_i > v e_j iff i < j, or i == j and u > v.
inline std::strong_ordering compare_pot(MonomialOrder order, const Monomial& u, std::size_t i,
                                        const Monomial& v, std::size_t j) {
  if (i != j) return j <=> i;
  return compare(order, u, v);
}

template <class K>
struct Term {
  K coefficient;
  Monomial monomial;
  std::size_t position = 0;

  friend bool operator==(const Term& a, const Term& b) {
    return a.position == b.position && a.monomial == b.monomial && a.coefficient == b.coefficient;
  }
};

// Element of a free module as a normalized term sum: no two terms share
// (monomial, position), no zero coefficients, terms sorted descending in the
// position-over-term order built on the stored scalar monomial order.
template <class K>
class ModuleVector {
 public:
  using Traits = FieldTraits<K>;

  ModuleVector() = default;
  explicit ModuleVector(MonomialOrder order) : order_(order) {}
  explicit ModuleVector(std::vector<Term<K>> terms, MonomialOrder order = MonomialOrder::lex)
      : order_(order), terms_(std::move(terms)) {
    normalize();
  }

  static ModuleVector basis_vector(std::size_t n, std::size_t position,
                                   MonomialOrder order = MonomialOrder::lex) {
    return ModuleVector({Term<K>{K(1), Monomial(n), position}}, order);
  }

  MonomialOrder order() const noexcept { return order_; }
  const std::vector<Term<K>>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  const Term<K>& leading_term() const {
    if (terms_.empty()) throw InputError("no leading term: zero vector");
    return terms_.front();
  }

  ModuleVector with_order(MonomialOrder order) const {
    ModuleVector v = *this;
    if (order != order_) {
      v.order_ = order;
      v.sort_terms();
    }
    return v;
  }

  // this += c * m * g
  void add_multiple(const K& c, const Monomial& m, const ModuleVector& g) {
    if (Traits::is_zero(c) || g.is_zero()) return;
    std::vector<Term<K>> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    // Multiplication by a monomial preserves the term order, so scaled
    // terms of g stay sorted and a single merge suffices.
    std::optional<Term<K>> cur;
    auto next_b = [&]() {
      if (b == g.terms_.end()) return std::optional<Term<K>>{};
      Term<K> t{K(c * b->coefficient), b->monomial * m, b->position};
      ++b;
      return std::optional<Term<K>>{std::move(t)};
    };
    cur = next_b();
    while (a != terms_.end() || cur) {
      if (!cur) {
        out.push_back(std::move(*a++));
        continue;
      }
      if (a == terms_.end()) {
        out.push_back(std::move(*cur));
        cur = next_b();
        continue;
      }
      auto cmp = compare_pot(order_, a->monomial, a->position, cur->monomial, cur->position);
      if (cmp > 0) {
        out.push_back(std::move(*a++));
      } else if (cmp < 0) {
        out.push_back(std::move(*cur));
        cur = next_b();
      } else {
        K s = a->coefficient + cur->coefficient;
        if (!Traits::is_zero(s)) out.push_back(Term<K>{std::move(s), a->monomial, a->position});
        ++a;
        cur = next_b();
      }
    }
    terms_ = std::move(out);
  }

  ModuleVector& operator+=(const ModuleVector& g) {
    require_compatible(g);
    add_multiple(K(1), unit_monomial(g), g);
    return *this;
  }
  ModuleVector& operator-=(const ModuleVector& g) {
    require_compatible(g);
    add_multiple(K(-1), unit_monomial(g), g);
    return *this;
  }
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  ModuleVector operator-() const {
    ModuleVector v = *this;
    for (auto& t : v.terms_) t.coefficient = -t.coefficient;
    return v;
  }

  ModuleVector scaled(const K& c, const Monomial& m) const {
    if (Traits::is_zero(c)) return ModuleVector(order_);
    ModuleVector v = *this;
    for (auto& t : v.terms_) {
      t.coefficient *= c;
      t.monomial *= m;
    }
    return v;
  }

  ModuleVector monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / terms_.front().coefficient;
    return scaled(inv, Monomial(terms_.front().monomial.size()));
  }

  // Relabels positions; new_of_old maps each old position to its new one.
  ModuleVector permuted(std::span<const std::size_t> new_of_old) const {
    ModuleVector v = *this;
    for (auto& t : v.terms_) t.position = new_of_old[t.position];
    v.sort_terms();
    return v;
  }

  // Removes and returns the leading term.
  Term<K> take_leading() {
    if (terms_.empty()) throw InputError("no leading term: zero vector");
    Term<K> t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
  }

  // Appends a term that is smaller than every term already present.
  void append_smaller(Term<K> t) { terms_.push_back(std::move(t)); }

  // Shifts every position by offset (embedding into a larger direct sum).
  ModuleVector shifted_positions(std::size_t offset) const {
    ModuleVector v = *this;
    for (auto& t : v.terms_) t.position += offset;
    return v;
  }

  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    if (a.order_ == b.order_) return a.terms_ == b.terms_;
    return a.terms_ == b.with_order(a.order_).terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) s += " + ";
      s += "(" + Traits::to_string(terms_[i].coefficient) + ")*" + terms_[i].monomial.to_string() +
           "*e" + std::to_string(terms_[i].position + 1);
    }
    return s;
  }

 private:
  static Monomial unit_monomial(const ModuleVector& g) {
    return Monomial(g.terms_.empty() ? 0 : g.terms_.front().monomial.size());
  }

  void require_compatible(const ModuleVector& g) const {
    if (g.order_ != order_ && !g.is_zero() && !is_zero())
      throw InputError("module vectors carry different monomial orders");
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [&](const Term<K>& a, const Term<K>& b) {
      return compare_pot(order_, a.monomial, a.position, b.monomial, b.position) > 0;
    });
  }

  void normalize() {
    sort_terms();
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().position == t.position && out.back().monomial == t.monomial) {
        out.back().coefficient += t.coefficient;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const Term<K>& t) { return Traits::is_zero(t.coefficient); });
    terms_ = std::move(out);
  }

  MonomialOrder order_ = MonomialOrder::lex;
  std::vector<Term<K>> terms_;
};

template <class K>
Term<K> leading_term(const ModuleVector<K>& v, MonomialOrder scalar_order) {
  return v.with_order(scalar_order).leading_term();
}

template <class K, class L>
ModuleVector<L> convert_coefficients(const ModuleVector<K>& v) {
  std::vector<Term<L>> terms;
  terms.reserve(v.size());
  for (const auto& t : v.terms())
    terms.push_back(Term<L>{FieldTraits<L>::from_rational(t.coefficient), t.monomial, t.position});
  return ModuleVector<L>(std::move(terms), v.order());
}

struct VectorDegree {
  std::optional<Multidegree> degree;  // set iff the vector is nonzero and multihomogeneous
  bool zero = false;
};

template <class K>
VectorDegree multidegree_of(const ModuleVector<K>& v, const OrderedBasis& basis) {
  if (v.is_zero()) return {std::nullopt, true};
  std::optional<Multidegree> d;
  for (const auto& t : v.terms()) {
    if (t.position >= basis.size()) throw InputError("term position outside the basis");
    Multidegree td = t.monomial.degree() + basis.degree(t.position);
    if (!d) {
      d = std::move(td);
    } else if (!(*d == td)) {
      return {std::nullopt, false};
    }
  }
  return {d, false};
}

// All points of the box [0, upper], by ascending total degree, then lex.
std::vector<Multidegree> box_points(const Multidegree& upper);

// Positions whose basis degree lies below a; these index the coordinates of
// the degree-a slice (coordinate k stands for x^(a - deg e_pos[k]) e_pos[k]).
std::vector<std::size_t> slice_positions(const OrderedBasis& basis, const Multidegree& a);

// Coordinates of a multihomogeneous vector of degree a on slice_positions.
template <class K>
std::vector<K> slice_coordinates(const ModuleVector<K>& v, std::span<const std::size_t> positions) {
  std::vector<K> x(positions.size(), K(0));
  for (const auto& t : v.terms()) {
    auto it = std::lower_bound(positions.begin(), positions.end(), t.position);
    if (it == positions.end() || *it != t.position)
      throw InputError("vector has a term outside the requested graded slice");
    x[static_cast<std::size_t>(it - positions.begin())] = t.coefficient;
  }
  return x;
}

template <class K>
ModuleVector<K> from_slice_coordinates(const std::vector<K>& x, std::span<const std::size_t> positions,
                                       const OrderedBasis& basis, const Multidegree& a,
                                       MonomialOrder order = MonomialOrder::lex) {
  std::vector<Term<K>> terms;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (FieldTraits<K>::is_zero(x[k])) continue;
    terms.push_back(Term<K>{x[k], Monomial(a - basis.degree(positions[k])), positions[k]});
  }
  return ModuleVector<K>(std::move(terms), order);
}

// Vector-space basis of the degree-a part of the submodule generated by gens.
// Generators must be multihomogeneous; a must lie componentwise below box_upper.
template <class K>
std::vector<ModuleVector<K>> graded_piece(std::span<const ModuleVector<K>> gens, const Multidegree& a,
                                          const OrderedBasis& basis, const Multidegree& box_upper) {
  require_same_size(a.size(), basis.n(), "graded_piece degree");
  if (!a.leq(box_upper))
    throw InputError("degree " + a.to_string() + " outside the declared box " + box_upper.to_string());
  auto positions = slice_positions(basis, a);
  DenseRows<K> rows;
  for (const auto& g : gens) {
    auto deg = multidegree_of(g, basis);
    if (deg.zero) continue;
    if (!deg.degree) throw InputError("graded_piece needs multihomogeneous generators");
    if (!deg.degree->leq(a)) continue;
    ModuleVector<K> shifted = g.scaled(K(1), Monomial(a - *deg.degree));
    rows.push_back(slice_coordinates(shifted, positions));
  }
  auto ech = reduced_row_echelon(std::move(rows), positions.size());
  std::vector<ModuleVector<K>> out;
  for (const auto& row : ech.rows) out.push_back(from_slice_coordinates(row, positions, basis, a));
  return out;
}

template <class K>
std::size_t graded_dimension(std::span<const ModuleVector<K>> gens, const Multidegree& a,
                             const OrderedBasis& basis) {
  return graded_piece<K>(gens, a, basis, a).size();
}

}  // namespace syzdepth
