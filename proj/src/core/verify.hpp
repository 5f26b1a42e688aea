#pragma once

// Seeded random instance streams and the per-theorem checks run on them.

#include "serialize.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace syzdepth {

struct Caps {
  std::size_t max_n = 4, max_m = 4;
  int max_exp = 3;
};

struct VerifyJob {
  std::string theorem;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::optional<Caps> caps;               // theorem defaults when unset
  bool exhaustive = false;                // sqfree-stde: every order filter of [max_n]
  std::optional<std::size_t> only_trial;  // replay a single trial
  std::optional<Json> instance;           // run on this instance instead of a generated one
  std::size_t threads = 0;                // 0: hardware concurrency
};

struct VerifyResult {
  std::vector<Report> reports;  // ordered by trial, then p
  std::size_t trials = 0;
  std::size_t failed_trials = 0;
  bool all_pass() const noexcept { return failed_trials == 0; }
};

const std::vector<std::string>& theorem_ids();
Caps default_caps(const std::string& theorem);

// splitmix64 of seed and trial index.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

// Uniform n in [1, max_n], m in [1, max_m], exponents in [0, max_exp];
// zero vectors are redrawn, the result is minimalized.
MonomialIdeal random_ideal(std::mt19937_64& rng, const Caps& caps, std::size_t min_generators = 1);
MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, const Caps& caps);
// Generators with pairwise disjoint supports, in random order.
std::vector<Monomial> random_complete_intersection(std::mt19937_64& rng, const Caps& caps);

// Throws InputError for an unknown theorem or inconsistent job, LimitError
// when an instance exceeds a size guard.
VerifyResult run_verify(const VerifyJob& job);

}  // namespace syzdepth
