#include "blocks.hpp"

#include "errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace syzdepth {

namespace {

std::vector<bool> membership(std::size_t n, const Subset& a) {
  std::vector<bool> in(n + 1, false);
  for (auto x : a) {
    if (x < 1 || x > n) throw InputError("element " + std::to_string(x) + " is not in [" + std::to_string(n) + "]");
    if (in[x]) throw InputError("repeated element " + std::to_string(x));
    in[x] = true;
  }
  return in;
}

std::size_t next(std::size_t x, std::size_t n) { return x == n ? 1 : x + 1; }

std::string show(const Subset& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

void check_delta(std::size_t n, const Subset& a, const Rational& delta) {
  if (a.empty()) throw InputError("block structures need a nonempty A");
  if (delta < 1) throw InputError("density must be at least 1");
  if (delta * static_cast<long>(a.size()) > static_cast<long>(n) - 1)
    throw InputError("density " + to_string(delta) + " exceeds (n-1)/|A| = " + std::to_string(n - 1) + "/" +
                     std::to_string(a.size()));
}

// Rotate so the block with the smallest anchor comes first.
void canonicalize(BlockStructure& s) {
  if (s.blocks.empty()) return;
  auto first = std::min_element(s.blocks.begin(), s.blocks.end(),
                                [](const Block& x, const Block& y) { return x.b.front() < y.b.front(); });
  std::rotate(s.blocks.begin(), first, s.blocks.end());
}

std::optional<BlockStructure> greedy_from(std::size_t n, const Subset& a, const std::vector<bool>& in,
                                          const Rational& delta, std::size_t start) {
  BlockStructure s{n, a, delta, {}};
  std::size_t pos = start, used = 0;
  const Rational up = delta - 1;
  while (used < n) {
    if (!in[pos]) return std::nullopt;
    Block blk;
    Rational run = 0;
    bool closed = false;
    while (used < n) {
      run += in[pos] ? up : Rational(-1);
      blk.b.push_back(pos);
      pos = next(pos, n);
      ++used;
      if (run < 1) {
        closed = true;
        break;
      }
    }
    if (!closed) return std::nullopt;
    while (used < n && !in[pos]) {
      blk.g.push_back(pos);
      pos = next(pos, n);
      ++used;
    }
    s.blocks.push_back(std::move(blk));
  }
  canonicalize(s);
  if (block_axiom_violation(s)) return std::nullopt;
  return s;
}

}  // namespace

std::optional<std::string> block_axiom_violation(const BlockStructure& s) {
  const std::size_t n = s.n;
  std::vector<bool> in = membership(n, s.a);
  if (s.blocks.empty()) return "no blocks";
  std::vector<std::size_t> order;
  for (const auto& blk : s.blocks) {
    order.insert(order.end(), blk.b.begin(), blk.b.end());
    order.insert(order.end(), blk.g.begin(), blk.g.end());
  }
  if (order.size() != n) return "arcs cover " + std::to_string(order.size()) + " elements, not " + std::to_string(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] < 1 || order[k] > n) return "element out of range";
    if (next(order[k], n) != order[(k + 1) % n]) return "arcs are not consecutive around the circle";
  }
  for (const auto& blk : s.blocks) {
    if (blk.b.empty()) return "empty block";
    if (!in[blk.b.front()]) return "block " + show(blk.b) + " does not start in A";
    for (auto x : blk.g)
      if (in[x]) return "gap " + show(blk.g) + " meets A";
    long hits = 0, len = 0;
    for (std::size_t k = 0; k < blk.b.size(); ++k) {
      ++len;
      if (in[blk.b[k]]) ++hits;
      if (k + 1 < blk.b.size() && !(Rational(len + 1) <= s.delta * hits))
        return "prefix of length " + std::to_string(len) + " of block " + show(blk.b) + " is too sparse";
    }
    Rational cap = s.delta * hits;
    if (!(cap - 1 < len && Rational(len) <= cap)) return "block " + show(blk.b) + " has the wrong length";
  }
  return std::nullopt;
}

BlockStructure block_structure(std::size_t n, const Subset& a, const Rational& delta) {
  std::vector<bool> in = membership(n, a);
  check_delta(n, a, delta);
  Subset sorted = a;
  std::sort(sorted.begin(), sorted.end());

  // Preferred start: the first element of A after the longest A-free arc.
  std::size_t best_start = sorted.front(), best_len = 0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    std::size_t x = sorted[k], y = sorted[(k + 1) % sorted.size()];
    std::size_t len = (y + n - x - 1) % n;
    if (sorted.size() == 1) len = n - 1;
    if (len > best_len) {
      best_len = len;
      best_start = y;
    }
  }
  std::vector<std::size_t> starts{best_start};
  for (auto x : sorted)
    if (x != best_start) starts.push_back(x);
  for (auto st : starts)
    if (auto s = greedy_from(n, sorted, in, delta, st)) return *s;
  throw InternalError("no block structure found for A = " + show(sorted) + ", delta = " + to_string(delta));
}

std::vector<BlockStructure> enumerate_block_structures(std::size_t n, const Subset& a, const Rational& delta) {
  std::vector<bool> in = membership(n, a);
  Subset sorted = a;
  std::sort(sorted.begin(), sorted.end());
  std::vector<BlockStructure> out;
  const std::size_t k = sorted.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    Subset anchors;
    for (std::size_t t = 0; t < k; ++t)
      if (mask >> t & 1u) anchors.push_back(sorted[t]);
    std::vector<std::size_t> room(anchors.size());
    for (std::size_t t = 0; t < anchors.size(); ++t) {
      std::size_t x = anchors[t], y = anchors[(t + 1) % anchors.size()];
      room[t] = anchors.size() == 1 ? n : (y + n - x) % n;
    }
    std::vector<std::size_t> len(anchors.size(), 1);
    while (true) {
      BlockStructure s{n, sorted, delta, {}};
      for (std::size_t t = 0; t < anchors.size(); ++t) {
        Block blk;
        std::size_t x = anchors[t];
        for (std::size_t u = 0; u < room[t]; ++u, x = next(x, n)) (u < len[t] ? blk.b : blk.g).push_back(x);
        s.blocks.push_back(std::move(blk));
      }
      if (!block_axiom_violation(s)) out.push_back(std::move(s));
      std::size_t t = 0;
      while (t < len.size() && len[t] == room[t]) len[t++] = 1;
      if (t == len.size()) break;
      ++len[t];
    }
  }
  return out;
}

Subset f_delta(std::size_t n, const Subset& a, const Rational& delta) {
  BlockStructure s = block_structure(n, a, delta);
  Subset out = s.a;
  for (const auto& blk : s.blocks) out.insert(out.end(), blk.g.begin(), blk.g.end());
  std::sort(out.begin(), out.end());
  return out;
}

Subset lifted_f(std::size_t n, const Subset& a, std::size_t s) {
  membership(n, a);
  const std::size_t k = a.size();
  if (n < k * s + k + s)
    throw InputError("lifted construction needs n >= as + a + s (n=" + std::to_string(n) + ", a=" +
                     std::to_string(k) + ", s=" + std::to_string(s) + ")");
  Subset sorted = a;
  std::sort(sorted.begin(), sorted.end());
  if (s == 0) return sorted;
  const std::size_t big = n * s + n + s;
  Subset tilde = sorted;
  for (std::size_t x = n + 1; x <= 2 * n - k; ++x) tilde.push_back(x);
  Subset f = f_delta(big, tilde, Rational(static_cast<long>(s + 1)));
  Subset out;
  for (auto x : f)
    if (x <= n) out.push_back(x);
  return out;
}

SigmaSchedule sigma_schedule(std::size_t s) {
  SigmaSchedule out;
  out.s = s;
  out.r = 2 * s;
  for (std::size_t i = 1; i <= out.r; ++i) out.sigma.push_back(i >= s + 1 ? s : 2 * s + 1 - i);
  return out;
}

std::size_t largest_s(std::uint64_t budget) {
  if (budget < 1) throw InputError("budget must be positive");
  std::size_t s = 0;
  while ((2 * (s + 1) + 1) * (s + 2) <= budget) ++s;
  return s;
}

std::uint64_t to_mask(const Subset& s) {
  std::uint64_t m = 0;
  for (auto x : s) {
    if (x < 1 || x > 64) throw InputError("element out of range for a bitmask");
    m |= std::uint64_t{1} << (x - 1);
  }
  return m;
}

Subset from_mask(std::uint64_t m) {
  Subset out;
  for (std::size_t j = 0; j < 64; ++j)
    if (m >> j & 1u) out.push_back(j + 1);
  return out;
}

namespace {

std::vector<bool> filter_table(std::size_t n, const std::vector<std::uint64_t>& filter) {
  if (n > max_filter_variables) throw LimitError("order filters are limited to " +
                                                 std::to_string(max_filter_variables) + " elements");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<bool> in(full + 1, false);
  for (auto m : filter) {
    if (m & ~full) throw InputError("subset " + show(from_mask(m)) + " is not inside [" + std::to_string(n) + "]");
    in[m] = true;
  }
  return in;
}

}  // namespace

SqfreePartition squarefree_partition(std::size_t n, const std::vector<std::uint64_t>& filter) {
  if (n < 1) throw InputError("n must be positive");
  std::vector<bool> in = filter_table(n, filter);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t m = 0; m <= full; ++m) {
    if (!in[m]) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!(m >> j & 1u) && !in[m | (std::uint64_t{1} << j)])
        throw InputError("not an order filter: " + show(from_mask(m)) + " is a member but " +
                         show(from_mask(m | (std::uint64_t{1} << j))) + " is not");
  }

  SqfreePartition out;
  out.n = n;
  out.s = largest_s(n + 1);
  SigmaSchedule sched = sigma_schedule(out.s);
  out.r = sched.r;
  out.value = n;
  if (in[0]) {
    out.intervals.emplace_back(0, full);
    return out;
  }

  std::vector<bool> covered(full + 1, false);
  auto add = [&](std::uint64_t lo, std::uint64_t hi) {
    // Enumerate the supersets of lo inside hi.
    const std::uint64_t free = hi & ~lo;
    for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
      std::uint64_t c = lo | sub;
      if (!in[c]) throw InternalError("interval leaves the filter at " + show(from_mask(c)));
      if (covered[c]) throw InternalError("intervals overlap at " + show(from_mask(c)));
      covered[c] = true;
      if (sub == 0) break;
    }
    out.intervals.emplace_back(lo, hi);
    out.value = std::min<std::size_t>(out.value, static_cast<std::size_t>(std::popcount(hi)));
  };

  for (std::size_t a = 1; a <= out.r && a <= n; ++a) {
    std::vector<std::uint64_t> stage;
    for (std::uint64_t m = 0; m <= full; ++m)
      if (in[m] && !covered[m] && static_cast<std::size_t>(std::popcount(m)) == a) stage.push_back(m);
    // Lex order of A as a sorted list.
    std::sort(stage.begin(), stage.end(), [](std::uint64_t x, std::uint64_t y) { return from_mask(x) < from_mask(y); });
    for (auto m : stage) add(m, to_mask(lifted_f(n, from_mask(m), sched.sigma[a - 1])));
  }
  for (std::uint64_t m = 0; m <= full; ++m)
    if (in[m] && !covered[m]) add(m, m);
  return out;
}

std::vector<std::vector<std::uint64_t>> all_order_filters(std::size_t n) {
  if (n > 5) throw LimitError("order filters are enumerated only for n <= 5");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  // Decide subsets from the top down; a subset may join only if all of its
  // one-element extensions already did.
  std::vector<std::uint64_t> order;
  for (std::uint64_t m = 0; m <= full; ++m) order.push_back(m);
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint64_t x, std::uint64_t y) { return std::popcount(x) > std::popcount(y); });
  std::vector<bool> in(full + 1, false);
  std::vector<std::vector<std::uint64_t>> out;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      std::vector<std::uint64_t> f;
      for (std::uint64_t m = 0; m <= full; ++m)
        if (in[m]) f.push_back(m);
      out.push_back(std::move(f));
      return;
    }
    const std::uint64_t m = order[k];
    self(self, k + 1);
    for (std::size_t j = 0; j < n; ++j)
      if (!(m >> j & 1u) && !in[m | (std::uint64_t{1} << j)]) return;
    in[m] = true;
    self(self, k + 1);
    in[m] = false;
  };
  rec(rec, 0);
  return out;
}

std::vector<std::uint64_t> order_filter(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.n();
  const MonomialIdeal mi = ideal.minimal();
  for (const auto& u : mi.generators())
    if (!is_squarefree(u)) throw InputError("ideal is not squarefree: " + u.to_string());
  std::vector<bool> in = filter_table(n, {});
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < in.size(); ++m) {
    Multidegree d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = (m >> j) & 1u;
    if (mi.contains(Monomial(d))) out.push_back(m);
  }
  return out;
}

MonomialIdeal ideal_of_filter(std::size_t n, const std::vector<std::uint64_t>& filter) {
  std::vector<Monomial> gens;
  for (auto m : filter) {
    Multidegree d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = (m >> j) & 1u;
    gens.emplace_back(d);
  }
  return MonomialIdeal(n, minimalize(std::move(gens)));
}

DecompositionCheck check_filter_partition(std::size_t n, const std::vector<std::uint64_t>& filter,
                                          const std::vector<std::pair<std::uint64_t, std::uint64_t>>& intervals) {
  std::vector<bool> in = filter_table(n, filter);
  DecompositionCheck out;
  auto fail = [&](std::uint64_t m, std::string why) {
    out.ok = false;
    Multidegree d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = (m >> j) & 1u;
    out.failure = d;
    out.reason = std::move(why);
    return out;
  };
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    auto [lo, hi] = intervals[k];
    if ((lo & ~hi) || hi >= in.size()) return fail(lo, "malformed interval");
    if (!in[lo] || !in[hi]) return fail(lo, "interval bottom " + show(from_mask(lo)) + " is outside the filter");
    for (std::size_t l = k + 1; l < intervals.size(); ++l) {
      auto [lo2, hi2] = intervals[l];
      if (((lo | lo2) & ~(hi & hi2)) == 0)
        return fail(lo | lo2, "intervals " + show(from_mask(lo)) + ".." + show(from_mask(hi)) + " and " +
                                  show(from_mask(lo2)) + ".." + show(from_mask(hi2)) + " meet");
    }
  }
  for (std::uint64_t m = 0; m < in.size(); ++m) {
    if (!in[m]) continue;
    bool hit = std::any_of(intervals.begin(), intervals.end(),
                           [m](const auto& iv) { return (iv.first & ~m) == 0 && (m & ~iv.second) == 0; });
    if (!hit) return fail(m, "member " + show(from_mask(m)) + " is not covered");
  }
  return out;
}

std::vector<Interval> to_intervals(std::size_t n, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& iv) {
  std::vector<Interval> out;
  for (auto [lo, hi] : iv) {
    Interval x{Multidegree(n), Multidegree(n)};
    for (std::size_t j = 0; j < n; ++j) {
      x.a[j] = (lo >> j) & 1u;
      x.b[j] = (hi >> j) & 1u;
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t sqfree_lower_bound(std::size_t n) {
  if (n < 1) throw InputError("n must be positive");
  return 2 * largest_s(n + 1) + 1;
}

namespace {

std::uint64_t isqrt(std::uint64_t x) {
  mpz_class r = sqrt(mpz_class(static_cast<unsigned long>(x)));
  return r.get_ui();
}

}  // namespace

std::size_t sqfree_lower_bound_closed(std::size_t n) {
  if (n < 1) throw InputError("n must be positive");
  return 2 * ((isqrt(8 * n + 9) + 1) / 4) - 1;
}

std::size_t syzygy_sqfree_bound(std::size_t n, std::size_t d, std::size_t p) {
  if (p < 1) throw InputError("p must be at least 1");
  if (n + 1 < d + p + 1) throw InputError("need n + 1 - d - p >= 1");
  return 2 * largest_s(n + 1 - d - p) + 1 + d + p;
}

std::size_t syzygy_sqfree_bound_closed(std::size_t n, std::size_t d, std::size_t p) {
  if (p < 1) throw InputError("p must be at least 1");
  if (n + 1 < d + p + 1) throw InputError("need n + 1 - d - p >= 1");
  return 2 * ((isqrt(8 * (n - d - p) + 9) + 1) / 4) + d + p - 1;
}

}  // namespace syzdepth
