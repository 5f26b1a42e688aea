#pragma once

// Buchberger's algorithm for submodules of a free module S^r under a
// position-over-term order: position 0 is the largest basis element, ties
// broken by the scalar monomial order. Used as the independent oracle for
// every initial-module statement.

#include "field.hpp"
#include "free_module.hpp"
#include "ideal.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace syzdepth {

template <class K>
struct GroebnerBasis {
  std::vector<ModuleVector<K>> generators;  // monic, sorted by descending leading term
  MonomialOrder order = MonomialOrder::lex;
  bool reduced = true;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped = 0;
  std::size_t zero_reductions = 0;
};

// Reduced Groebner basis. Pairs are treated in increasing lcm multidegree
// (total degree, then lex), ties by pair index.
template <class K>
GroebnerBasis<K> buchberger(std::span<const ModuleVector<K>> gens, MonomialOrder order,
                            BuchbergerStats* stats = nullptr);

// Full normal form of v with respect to the given (not necessarily monic) vectors.
template <class K>
ModuleVector<K> reduce(const ModuleVector<K>& v, std::span<const ModuleVector<K>> basis);

// Every S-vector of two elements with leading terms at one position reduces to zero.
template <class K>
bool is_groebner_basis(std::span<const ModuleVector<K>> gens, MonomialOrder order);

// Generators of the kernel of S^k -> S^r, e_j -> columns[j], obtained from a
// Groebner basis of the graph module with the target positions first. The
// result is a Groebner basis of the kernel for the position-over-term order.
template <class K>
std::vector<ModuleVector<K>> kernel_groebner_basis(std::span<const ModuleVector<K>> columns,
                                                   std::size_t target_rank, std::size_t n,
                                                   MonomialOrder order);

// ini(M) = (+)_j I_j e_j with every I_j given by its minimal generators.
struct InitialModule {
  std::size_t n = 0;
  std::vector<MonomialIdeal> components;

  std::size_t rank() const noexcept { return components.size(); }
  bool is_zero() const;
  bool contains(const Monomial& u, std::size_t position) const;
  friend bool operator==(const InitialModule& a, const InitialModule& b);
  std::string to_string() const;
};

// Monomial module generated by the leading terms of the given vectors.
template <class K>
InitialModule leading_term_module(std::span<const ModuleVector<K>> gens, std::size_t rank, std::size_t n,
                                  MonomialOrder order);

// Initial module of the submodule generated by gens, via Buchberger over the
// rationals. With cross_check, the computation is repeated under the other
// scalar order and must agree (the leading terms of multihomogeneous elements
// depend only on the basis).
InitialModule initial_module(std::span<const ModuleVector<Rational>> gens, std::size_t rank, std::size_t n,
                             MonomialOrder order = MonomialOrder::lex, bool cross_check = false);

struct SliceCheck {
  bool ok = true;
  std::optional<Multidegree> first_failure;
  std::size_t module_dimension = 0;   // at the failure
  std::size_t initial_dimension = 0;  // at the failure
};

// dim M_a == dim ini(M)_a for every a in [0, box_upper].
SliceCheck hilbert_slice_check(std::span<const ModuleVector<Rational>> gens, const InitialModule& ini,
                               const OrderedBasis& basis, const Multidegree& box_upper);

// Every minimal generator u e_j has a squarefree total degree u * x^deg(e_j).
bool is_squarefree_module(const InitialModule& ini, const OrderedBasis& basis);

// Permutes the positions of every vector.
template <class K>
std::vector<ModuleVector<K>> permute_positions(std::span<const ModuleVector<K>> gens,
                                               std::span<const std::size_t> new_of_old) {
  std::vector<ModuleVector<K>> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.permuted(new_of_old));
  return out;
}

}  // namespace syzdepth
