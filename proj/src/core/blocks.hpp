#pragma once

// Circular block structures on [n] and the interval partition of squarefree
// order filters built from them.

#include "field.hpp"
#include "ideal.hpp"
#include "stanley.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace syzdepth {

// Subsets of [n] are sorted lists of 1-based elements.
using Subset = std::vector<std::size_t>;

struct Block {
  Subset b;  // clockwise from the anchor
  Subset g;  // clockwise, possibly empty
  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockStructure {
  std::size_t n = 0;
  Subset a;
  Rational delta;
  std::vector<Block> blocks;  // clockwise, starting at the block with the smallest anchor
};

// Violated axiom, or none. Checks that the arcs tile the circle in the order
// B_1, G_1, B_2, ..., the anchors lie in A, the gaps avoid A, and the two
// counting conditions hold.
std::optional<std::string> block_axiom_violation(const BlockStructure& s);

// The structure for 1 <= delta <= (n-1)/|A|, A nonempty.
BlockStructure block_structure(std::size_t n, const Subset& a, const Rational& delta);

// Every structure satisfying the axioms, found by enumerating anchors and
// block lengths.
std::vector<BlockStructure> enumerate_block_structures(std::size_t n, const Subset& a, const Rational& delta);

// A together with all gap elements.
Subset f_delta(std::size_t n, const Subset& a, const Rational& delta);

// f_{s+1}(A~) restricted to [n], where A~ = A + {n+1, ..., 2n-|A|} inside
// [ns + n + s]. Requires n >= as + a + s; s = 0 returns A.
Subset lifted_f(std::size_t n, const Subset& a, std::size_t s);

struct SigmaSchedule {
  std::size_t r = 0, s = 0;
  std::vector<std::size_t> sigma;  // sigma[i-1] = sigma(i)
};

SigmaSchedule sigma_schedule(std::size_t s);

// Largest s with (2s+1)(s+1) <= budget; budget >= 1.
std::size_t largest_s(std::uint64_t budget);

struct SqfreePartition {
  std::size_t n = 0, s = 0, r = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> intervals;  // bitmasks, bit j-1 = element j
  std::size_t value = 0;                                         // min |top|
};

inline constexpr std::size_t max_filter_variables = 20;

// Staged construction over the order filter (given as bitmasks). Throws
// InputError naming a member B and an element j with B + j missing when the
// family is not up-closed.
SqfreePartition squarefree_partition(std::size_t n, const std::vector<std::uint64_t>& filter);

// Every up-closed family of subsets of [n], n <= 5, in a fixed order.
std::vector<std::vector<std::uint64_t>> all_order_filters(std::size_t n);

// Supports of the squarefree monomials in a squarefree ideal.
std::vector<std::uint64_t> order_filter(const MonomialIdeal& ideal);
MonomialIdeal ideal_of_filter(std::size_t n, const std::vector<std::uint64_t>& filter);

// Pairwise disjoint, inside the filter, covering it.
DecompositionCheck check_filter_partition(std::size_t n, const std::vector<std::uint64_t>& filter,
                                          const std::vector<std::pair<std::uint64_t, std::uint64_t>>& intervals);

std::vector<Interval> to_intervals(std::size_t n, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& iv);
std::uint64_t to_mask(const Subset& s);
Subset from_mask(std::uint64_t m);

// 2s+1 for the largest s with (2s+1)(s+1) <= n+1.
std::size_t sqfree_lower_bound(std::size_t n);
// 2 floor((isqrt(8n+9)+1)/4) - 1.
std::size_t sqfree_lower_bound_closed(std::size_t n);

// 2s+1+d+p for the largest s with (2s+1)(s+1) <= n+1-d-p.
std::size_t syzygy_sqfree_bound(std::size_t n, std::size_t d, std::size_t p);
// 2 floor((isqrt(8(n-d-p)+9)+1)/4) + d + p - 1.
std::size_t syzygy_sqfree_bound_closed(std::size_t n, std::size_t d, std::size_t p);

}  // namespace syzdepth
