#pragma once

#include "groebner.hpp"
#include "ideal.hpp"
#include "monomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace syzdepth {

// Box [0, g] with the points of the module I/J flagged.
class CharPoset {
 public:
  // g defaults to the lcm exponent of the generators of I and J.
  CharPoset(const MonomialIdeal& i, std::optional<MonomialIdeal> j = std::nullopt,
            std::optional<Multidegree> cap = std::nullopt);

  std::size_t n() const noexcept { return cap_.size(); }
  const Multidegree& cap() const noexcept { return cap_; }
  const MonomialIdeal& ideal() const noexcept { return i_; }
  const std::optional<MonomialIdeal>& quotient_ideal() const noexcept { return j_; }

  std::size_t box_size() const noexcept { return box_size_; }
  // Module points, ascending in lex order.
  const std::vector<Multidegree>& points() const noexcept { return points_; }
  bool in_module(const Multidegree& a) const;

 private:
  MonomialIdeal i_;
  std::optional<MonomialIdeal> j_;
  Multidegree cap_;
  std::size_t box_size_ = 1;
  std::vector<Multidegree> points_;
};

struct Interval {
  Multidegree a, b;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// |{j : b_j = g_j}|.
std::size_t interval_value(const Interval& iv, const Multidegree& g);

struct SdepthResult {
  std::size_t sdepth = 0;
  Multidegree cap;
  std::vector<Interval> partition;
  std::size_t free_variables = 0;  // variables absent from every generator
  bool empty_module = false;
};

inline constexpr std::size_t default_point_limit = 512;

// Maximum over interval partitions of the minimal interval value. Variables
// absent from all generators are split off and added back. Throws LimitError
// when the reduced poset has more than point_limit module points.
SdepthResult exact_sdepth(const CharPoset& poset, std::size_t point_limit = default_point_limit);

// Decision version: a partition with every value >= d, if one exists.
std::optional<std::vector<Interval>> partition_with_value(const CharPoset& poset, std::size_t d,
                                                          std::size_t point_limit = default_point_limit);

SdepthResult sdepth_of_ideal(const MonomialIdeal& i, std::size_t point_limit = default_point_limit);
// sdepth of S/I.
SdepthResult sdepth_of_quotient(const MonomialIdeal& i, std::size_t point_limit = default_point_limit);

struct FiltrationBound {
  std::size_t bound = 0;
  bool all_zero = false;
  std::vector<std::optional<std::size_t>> component_sdepth;  // none for zero components
};

// min over nonzero components of sdepth I_j (the shift by deg e_j is irrelevant).
FiltrationBound filtration_lower_bound(const InitialModule& ini, std::size_t point_limit = default_point_limit);

struct StanleySpace {
  Monomial u;
  std::vector<std::size_t> z;  // zero-based variables
};

std::vector<StanleySpace> partition_to_decomposition(const CharPoset& poset, const std::vector<Interval>& partition);

struct DecompositionCheck {
  bool ok = true;
  std::optional<Multidegree> failure;
  std::string reason;
};

// Each module point of the box [0, box_upper] lies in exactly one space and no
// other degree is covered.
DecompositionCheck verify_decomposition(const std::vector<StanleySpace>& spaces, const CharPoset& poset,
                                        const Multidegree& box_upper);

// Intervals lie in the module, are pairwise disjoint, and cover every point.
DecompositionCheck verify_partition(const CharPoset& poset, const std::vector<Interval>& partition);

}  // namespace syzdepth
