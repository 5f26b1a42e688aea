// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is nonzero when any criterion fails.

#include "blocks.hpp"
#include "complex.hpp"
#include "stanley.hpp"
#include "syzygy_initial.hpp"
#include "verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace syzdepth;

namespace {

constexpr std::uint64_t corpus_seed = 2024;
const Caps corpus_caps{4, 5, 3};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<MonomialIdeal> corpus(std::size_t count) {
  std::vector<MonomialIdeal> out;
  for (std::size_t t = 0; t < count; ++t) {
    std::mt19937_64 rng(trial_seed(corpus_seed, t));
    out.push_back(random_ideal(rng, corpus_caps));
  }
  return out;
}

// Runs a harness job; the detail names the first failing report.
Outcome harness(const std::string& theorem, std::size_t trials, std::optional<Caps> caps, std::uint64_t seed,
                bool exhaustive = false) {
  VerifyJob job;
  job.theorem = theorem;
  job.trials = trials;
  job.caps = caps;
  job.seed = seed;
  job.exhaustive = exhaustive;
  VerifyResult r = run_verify(job);
  std::size_t checked = 0, skipped = 0;
  Outcome o;
  for (const auto& rep : r.reports) {
    if (rep.witness.is_object() && rep.witness.contains("skipped"))
      ++skipped;
    else
      ++checked;
    if (!rep.pass && o.pass) {
      o.pass = false;
      o.detail = "first failure: " + report_to_json(rep).dump();
    }
  }
  if (o.pass)
    o.detail = std::to_string(r.trials) + " trials, " + std::to_string(checked) + " reports checked, " +
               std::to_string(skipped) + " skipped";
  return o;
}

Outcome complex_validity() {
  std::size_t complexes = 0;
  for (const auto& ideal : corpus(200)) {
    const MonomialIdeal mi = ideal.minimal();
    std::vector<std::pair<FreeComplex, MonomialIdeal>> todo;
    todo.emplace_back(taylor_complex(mi.generators()), mi);
    if (is_stable(mi)) todo.emplace_back(eliahou_kervaire(mi), mi);
    MonomialIdeal closure = stable_closure(mi);
    todo.emplace_back(eliahou_kervaire(closure), closure);
    for (const auto& [c, resolved] : todo) {
      ++complexes;
      auto cc = check_complex(c);
      if (!cc.ok) return {false, c.kind() + " on " + resolved.to_string() + ": " + cc.message};
      auto ex = check_resolution(c, resolved);
      if (!ex.ok())
        return {false, c.kind() + " on " + resolved.to_string() + " not exact at p = " +
                           std::to_string(ex.failures.front().p) + ", degree " + ex.failures.front().degree.to_string()};
    }
  }
  return {true, "200 ideals, " + std::to_string(complexes) + " complexes exact on [0, g+1]^n"};
}

Outcome boundary_three_way() {
  Outcome o = harness("boundary-gb", 200, corpus_caps, corpus_seed);
  if (!o.pass) return o;
  std::size_t checked = 0;
  std::mt19937_64 rng(trial_seed(corpus_seed, 1000));
  for (int t = 0; t < 100; ++t) {
    auto u = random_complete_intersection(rng, {4, 4, 3});
    FreeComplex k = koszul_complex(u);
    for (std::size_t p = 0; p <= k.length(); ++p) {
      auto rep = verify_boundary_gb(k, p, std::span<const Monomial>(u));
      ++checked;
      if (!rep.equal || !rep.closed_form)
        return {false, "Koszul on " + MonomialIdeal(u.front().size(), u).to_string() + ", p = " + std::to_string(p)};
    }
  }
  return {true, o.detail + "; Koszul: 100 regular sequences, " + std::to_string(checked) + " degrees"};
}

Outcome stanley_anchors() {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto m = MonomialIdeal::maximal(n);
    const std::size_t got = sdepth_of_ideal(m).sdepth;
    if (got != (n + 1) / 2) return {false, "sdepth of the maximal ideal, n = " + std::to_string(n) + ": " +
                                               std::to_string(got)};
    if (sdepth_of_quotient(m).sdepth != 0) return {false, "sdepth S/m != 0 for n = " + std::to_string(n)};
  }
  std::mt19937_64 rng(trial_seed(corpus_seed, 2000));
  std::size_t cases = 0;
  for (int t = 0; t < 150; ++t) {
    auto u = random_complete_intersection(rng, {5, 3, 2});
    const std::size_t n = u.front().size(), m = u.size();
    MonomialIdeal ci(n, u);
    const std::size_t got = sdepth_of_ideal(ci).sdepth;
    ++cases;
    if (got != n - m / 2)
      return {false, ci.to_string() + ": sdepth " + std::to_string(got) + ", expected " + std::to_string(n - m / 2)};
  }
  return {true, "maximal ideals n = 1..5, S/m, " + std::to_string(cases) + " complete intersections"};
}

Outcome block_structures() {
  const std::vector<Rational> deltas{Rational(1), Rational(3, 2), Rational(2), Rational(3)};
  std::size_t built = 0, unique_checked = 0;
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      const Subset a = from_mask(mask);
      for (const auto& delta : deltas) {
        if (delta * static_cast<long>(a.size()) > static_cast<long>(n - 1)) continue;
        BlockStructure s = block_structure(n, a, delta);
        ++built;
        if (auto bad = block_axiom_violation(s))
          return {false, "n = " + std::to_string(n) + ", A mask " + std::to_string(mask) + ", delta " +
                             to_string(delta) + ": " + *bad};
        if (n <= 6) {
          auto all = enumerate_block_structures(n, a, delta);
          ++unique_checked;
          if (all.size() != 1 || all.front().blocks != s.blocks)
            return {false, "n = " + std::to_string(n) + ", A mask " + std::to_string(mask) + ", delta " +
                               to_string(delta) + ": " + std::to_string(all.size()) + " structures"};
        }
      }
    }
  return {true, std::to_string(built) + " structures satisfy the axioms, " + std::to_string(unique_checked) +
                    " unique by exhaustive search"};
}

Outcome sqfree_partitions() {
  Outcome ex = harness("sqfree-stde", 0, Caps{4, 1, 1}, 0, true);
  if (!ex.pass) return ex;
  Outcome rnd = harness("sqfree-stde", 200, Caps{9, 5, 1}, corpus_seed);
  if (!rnd.pass) return rnd;
  auto m5 = order_filter(MonomialIdeal::maximal(5));
  const std::size_t value = squarefree_partition(5, m5).value;
  const std::size_t exact = sdepth_of_ideal(MonomialIdeal::maximal(5)).sdepth;
  if (value != 3 || exact != 3)
    return {false, "maximal ideal n = 5: value " + std::to_string(value) + ", exact " + std::to_string(exact)};
  return {true, "all order filters of [4]: " + ex.detail + "; random: " + rnd.detail + "; n = 5 maximal: 3 = 3"};
}

Outcome closed_forms() {
  for (std::size_t n = 1; n <= 1000000; ++n)
    if (sqfree_lower_bound(n) != sqfree_lower_bound_closed(n))
      return {false, "sqfree bound differs at n = " + std::to_string(n)};
  std::size_t triples = 0;
  for (std::size_t n = 1; n <= 100; ++n)
    for (std::size_t d = 0; d <= n; ++d)
      for (std::size_t p = 1; d + p <= n; ++p) {
        const std::size_t budget = n + 1 - d - p;
        std::size_t s = 0;
        while ((2 * (s + 1) + 1) * (s + 2) <= budget) ++s;
        const std::size_t want = 2 * s + 1 + d + p;
        ++triples;
        if (syzygy_sqfree_bound(n, d, p) != want || syzygy_sqfree_bound_closed(n, d, p) != want)
          return {false, "syzygy bound differs at (n, d, p) = (" + std::to_string(n) + ", " + std::to_string(d) +
                             ", " + std::to_string(p) + ")"};
      }
  return {true, "n = 1..10^6 and " + std::to_string(triples) + " triples (n, d, p)"};
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0: no runtime target
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "complex validity", 120, complex_validity},
      {2, "initial modules avoid x_1..x_p", 0,
       [] { return harness("theorem-main", 200, corpus_caps, corpus_seed); }},
      {3, "boundary Groebner bases, three-way", 0, boundary_three_way},
      {4, "Groebner bases along mapping cones", 0,
       [] { return harness("lemma-groebner", 50, Caps{4, 4, 3}, corpus_seed); }},
      {5, "Stanley depth anchors", 300, stanley_anchors},
      {6, "syzygy Stanley depth >= p+1", 0, [] { return harness("mainsyz", 200, corpus_caps, corpus_seed); }},
      {7, "complete intersections", 0, [] { return harness("regular", 200, Caps{5, 3, 2}, corpus_seed); }},
      {8, "block structures", 0, block_structures},
      {9, "squarefree interval partitions", 180, sqfree_partitions},
      {10, "closed forms", 10, closed_forms},
      {11, "squarefree syzygies", 0, [] { return harness("squarefree", 100, Caps{7, 6, 1}, corpus_seed); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the runtime target";
    }
    failed += !o.pass;
    std::printf("criterion %2d %s  %s: %s (%.2f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
