#include "free_module.hpp"

#include <numeric>

namespace syzdepth {

OrderedBasis::OrderedBasis(std::size_t n, std::vector<BasisElement> elements)
    : n_(n), elems_(std::move(elements)) {
  for (const auto& e : elems_) require_same_size(n_, e.degree.size(), "basis element degree");
}

bool OrderedBasis::is_lex_refined() const {
  for (std::size_t i = 1; i < elems_.size(); ++i)
    if (lex_compare(elems_[i - 1].degree, elems_[i].degree) < 0) return false;
  return true;
}

OrderedBasis OrderedBasis::permuted(std::span<const std::size_t> new_of_old) const {
  if (new_of_old.size() != elems_.size()) throw InputError("permutation size mismatch");
  std::vector<BasisElement> out(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) out[new_of_old[i]] = elems_[i];
  return OrderedBasis(n_, std::move(out));
}

LexRefinement sort_lex_refined(const OrderedBasis& basis) {
  std::vector<std::size_t> old_of_new(basis.size());
  std::iota(old_of_new.begin(), old_of_new.end(), std::size_t{0});
  std::stable_sort(old_of_new.begin(), old_of_new.end(), [&](std::size_t a, std::size_t b) {
    return lex_compare(basis.degree(a), basis.degree(b)) > 0;
  });
  auto new_of_old = invert_permutation(old_of_new);
  return {basis.permuted(new_of_old), std::move(new_of_old)};
}

std::vector<std::size_t> invert_permutation(std::span<const std::size_t> p) {
  std::vector<std::size_t> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

std::vector<std::size_t> slice_positions(const OrderedBasis& basis, const Multidegree& a) {
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis.degree(i).leq(a)) pos.push_back(i);
  return pos;
}

std::vector<Multidegree> box_points(const Multidegree& upper) {
  if (!upper.is_nonnegative()) throw InputError("box upper corner must be nonnegative");
  std::vector<Multidegree> pts;
  Multidegree cur(upper.size());
  while (true) {
    pts.push_back(cur);
    std::size_t i = 0;
    while (i < upper.size() && cur[i] == upper[i]) cur[i++] = 0;
    if (i == upper.size()) break;
    ++cur[i];
  }
  std::stable_sort(pts.begin(), pts.end(), [](const Multidegree& a, const Multidegree& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return lex_compare(a, b) < 0;
  });
  return pts;
}

}  // namespace syzdepth
