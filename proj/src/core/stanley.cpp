#include "stanley.hpp"

#include "errors.hpp"
#include "free_module.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <unordered_set>

namespace syzdepth {

namespace {

Multidegree lcm_of(const MonomialIdeal& i, const std::optional<MonomialIdeal>& j) {
  Multidegree g(i.n());
  for (const auto& u : i.generators()) g = componentwise_max(g, u.degree());
  if (j)
    for (const auto& u : j->generators()) g = componentwise_max(g, u.degree());
  return g;
}

}  // namespace

CharPoset::CharPoset(const MonomialIdeal& i, std::optional<MonomialIdeal> j, std::optional<Multidegree> cap)
    : i_(i.minimal()), j_(std::move(j)) {
  if (j_) {
    require_same_size(i_.n(), j_->n(), "quotient ideal");
    *j_ = j_->minimal();
    for (const auto& u : j_->generators())
      if (!i_.contains(u)) throw InputError("J is not contained in I: " + u.to_string() + " is not in I");
  }
  cap_ = cap ? *cap : lcm_of(i_, j_);
  require_same_size(cap_.size(), i_.n(), "cap");
  for (std::size_t v = 0; v < cap_.size(); ++v)
    if (cap_[v] < 0) throw InputError("cap must be nonnegative");
  for (const auto& u : i_.generators())
    if (!u.degree().leq(cap_)) throw InputError("cap does not dominate generator " + u.to_string());
  if (j_)
    for (const auto& u : j_->generators())
      if (!u.degree().leq(cap_)) throw InputError("cap does not dominate generator " + u.to_string());

  for (std::size_t v = 0; v < cap_.size(); ++v) {
    box_size_ *= static_cast<std::size_t>(cap_[v]) + 1;
    if (box_size_ > (std::size_t{1} << 24)) throw LimitError("characteristic poset box is too large");
  }
  // Odometer over the box in lex order.
  Multidegree a(cap_.size());
  for (std::size_t k = 0; k < box_size_; ++k) {
    if (in_module(a)) points_.push_back(a);
    for (std::size_t v = cap_.size(); v-- > 0;) {
      if (a[v] < cap_[v]) {
        ++a[v];
        break;
      }
      a[v] = 0;
    }
  }
}

bool CharPoset::in_module(const Multidegree& a) const {
  Monomial u(a);
  return i_.contains(u) && !(j_ && j_->contains(u));
}

std::size_t interval_value(const Interval& iv, const Multidegree& g) {
  require_same_size(iv.b.size(), g.size(), "interval");
  std::size_t k = 0;
  for (std::size_t j = 0; j < g.size(); ++j)
    if (iv.b[j] == g[j]) ++k;
  return k;
}

namespace {

struct BlocksHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : v) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return h;
  }
};

// Backtracking over partitions into intervals [c, c + (g - c)|_Z]: the
// lex-smallest uncovered point c is the bottom of its interval, and any
// interval of value >= d through c splits into such pieces of value >= d
// (exactly d, or the singleton when c already has d capped coordinates).
class Search {
 public:
  Search(const CharPoset& p, std::size_t d) : p_(p), d_(d), n_(p.n()) {
    const auto& pts = p.points();
    stride_.assign(n_, 1);
    for (std::size_t v = n_; v-- > 1;) stride_[v - 1] = stride_[v] * (static_cast<std::size_t>(p.cap()[v]) + 1);
    index_of_box_.assign(p.box_size(), -1);
    for (std::size_t k = 0; k < pts.size(); ++k) index_of_box_[box_index(pts[k])] = static_cast<long>(k);
    covered_.assign((pts.size() + 63) / 64, 0);
    remaining_ = pts.size();
  }

  std::optional<std::vector<Interval>> run() {
    if (solve()) return chosen_;
    return std::nullopt;
  }

 private:
  std::size_t box_index(const Multidegree& a) const {
    std::size_t k = 0;
    for (std::size_t v = 0; v < n_; ++v) k += static_cast<std::size_t>(a[v]) * stride_[v];
    return k;
  }
  bool is_covered(std::size_t k) const { return (covered_[k / 64] >> (k % 64)) & 1u; }
  void flip(std::size_t k) { covered_[k / 64] ^= std::uint64_t{1} << (k % 64); }

  std::size_t first_uncovered() const {
    for (std::size_t w = 0; w < covered_.size(); ++w)
      if (~covered_[w]) {
        std::size_t k = w * 64 + static_cast<std::size_t>(__builtin_ctzll(~covered_[w]));
        if (k < p_.points().size()) return k;
      }
    return p_.points().size();
  }

  // Module indices of [c, top] when all of them are uncovered module points.
  bool collect(const Multidegree& c, const Multidegree& top, std::vector<std::size_t>& out) const {
    out.clear();
    Multidegree a = c;
    while (true) {
      long k = index_of_box_[box_index(a)];
      if (k < 0 || is_covered(static_cast<std::size_t>(k))) return false;
      out.push_back(static_cast<std::size_t>(k));
      std::size_t v = n_;
      while (v-- > 0) {
        if (a[v] < top[v]) {
          ++a[v];
          break;
        }
        a[v] = c[v];
      }
      if (v == static_cast<std::size_t>(-1)) return true;
    }
  }

  bool place(const Multidegree& c, const Multidegree& top) {
    std::vector<std::size_t> idx;
    if (!collect(c, top, idx)) return false;
    for (auto k : idx) flip(k);
    remaining_ -= idx.size();
    chosen_.push_back({c, top});
    if (solve()) return true;
    chosen_.pop_back();
    remaining_ += idx.size();
    for (auto k : idx) flip(k);
    return false;
  }

  bool solve() {
    if (remaining_ == 0) return true;
    if (failed_.count(covered_)) return false;
    const std::size_t k = first_uncovered();
    const Multidegree& c = p_.points()[k];
    const Multidegree& g = p_.cap();
    std::vector<std::size_t> open;
    std::size_t capped = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (c[v] == g[v]) ++capped;
      else open.push_back(v);
    }
    bool ok = false;
    if (capped >= d_) {
      ok = place(c, c);
    } else if (open.size() >= d_ - capped) {
      const std::size_t need = d_ - capped;
      std::vector<std::size_t> pick(need);
      for (std::size_t t = 0; t < need; ++t) pick[t] = t;
      while (true) {
        Multidegree top = c;
        for (auto t : pick) top[open[t]] = g[open[t]];
        if (place(c, top)) {
          ok = true;
          break;
        }
        std::size_t t = need;
        while (t-- > 0 && pick[t] == open.size() - need + t) {
        }
        if (t == static_cast<std::size_t>(-1)) break;
        ++pick[t];
        for (std::size_t u = t + 1; u < need; ++u) pick[u] = pick[u - 1] + 1;
      }
    }
    if (!ok) failed_.insert(covered_);
    return ok;
  }

  const CharPoset& p_;
  std::size_t d_, n_;
  std::vector<std::size_t> stride_;
  std::vector<long> index_of_box_;
  std::vector<std::uint64_t> covered_;
  std::size_t remaining_ = 0;
  std::vector<Interval> chosen_;
  std::unordered_set<std::vector<std::uint64_t>, BlocksHash> failed_;
};

// Largest value of an interval with bottom c inside the module.
std::size_t best_value_at(const CharPoset& p, const Multidegree& c) {
  const std::size_t n = p.n();
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
    Multidegree top = c;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1u) top[v] = p.cap()[v];
      else if (c[v] == p.cap()[v]) ++k;
    }
    if (k <= best) continue;
    bool inside = true;
    for (const auto& a : box_points(top - c)) {
      if (!p.in_module(a + c)) {
        inside = false;
        break;
      }
    }
    if (inside) best = k;
  }
  return best;
}

std::vector<std::size_t> absent_variables(const CharPoset& p) {
  std::vector<bool> used(p.n(), false);
  auto mark = [&](const MonomialIdeal& i) {
    for (const auto& u : i.generators())
      for (auto v : support(u)) used[v] = true;
  };
  mark(p.ideal());
  if (p.quotient_ideal()) mark(*p.quotient_ideal());
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < p.n(); ++v)
    if (!used[v]) out.push_back(v);
  return out;
}

Monomial restrict(const Monomial& u, const std::vector<std::size_t>& keep) {
  Multidegree d(keep.size());
  for (std::size_t t = 0; t < keep.size(); ++t) d[t] = u[keep[t]];
  return Monomial(d);
}

MonomialIdeal restrict(const MonomialIdeal& i, const std::vector<std::size_t>& keep) {
  std::vector<Monomial> gens;
  for (const auto& u : i.generators()) gens.push_back(restrict(u, keep));
  return MonomialIdeal(keep.size(), std::move(gens));
}

struct Reduced {
  CharPoset poset;
  std::vector<std::size_t> keep, absent;
};

Reduced reduce_free_variables(const CharPoset& p) {
  auto absent = absent_variables(p);
  std::vector<std::size_t> keep;
  for (std::size_t v = 0, a = 0; v < p.n(); ++v) {
    if (a < absent.size() && absent[a] == v) ++a;
    else keep.push_back(v);
  }
  std::optional<MonomialIdeal> j;
  if (p.quotient_ideal()) j = restrict(*p.quotient_ideal(), keep);
  Multidegree cap(keep.size());
  for (std::size_t t = 0; t < keep.size(); ++t) cap[t] = p.cap()[keep[t]];
  return {CharPoset(restrict(p.ideal(), keep), j, cap), keep, absent};
}

Interval embed(const Interval& iv, const Reduced& r, const Multidegree& cap) {
  Interval out{Multidegree(cap.size()), cap};
  for (std::size_t t = 0; t < r.keep.size(); ++t) {
    out.a[r.keep[t]] = iv.a[t];
    out.b[r.keep[t]] = iv.b[t];
  }
  return out;
}

void check_limit(const CharPoset& p, std::size_t limit) {
  if (p.points().size() > limit)
    throw LimitError("module has " + std::to_string(p.points().size()) + " poset points (limit " +
                     std::to_string(limit) + "); use the filtration or squarefree lower bounds instead");
}

}  // namespace

std::optional<std::vector<Interval>> partition_with_value(const CharPoset& poset, std::size_t d,
                                                          std::size_t point_limit) {
  if (d > poset.n()) return std::nullopt;
  Reduced r = reduce_free_variables(poset);
  check_limit(r.poset, point_limit);
  const std::size_t free = r.absent.size();
  const std::size_t local = d > free ? d - free : 0;
  auto part = Search(r.poset, local).run();
  if (!part) return std::nullopt;
  std::vector<Interval> out;
  for (const auto& iv : *part) out.push_back(embed(iv, r, poset.cap()));
  return out;
}

SdepthResult exact_sdepth(const CharPoset& poset, std::size_t point_limit) {
  SdepthResult res;
  res.cap = poset.cap();
  if (poset.points().empty()) {
    res.sdepth = poset.n();
    res.empty_module = true;
    return res;
  }
  Reduced r = reduce_free_variables(poset);
  check_limit(r.poset, point_limit);
  res.free_variables = r.absent.size();

  std::size_t upper = r.poset.n();
  for (const auto& c : r.poset.points()) {
    bool minimal = true;
    for (std::size_t v = 0; v < c.size() && minimal; ++v) {
      if (c[v] == 0) continue;
      Multidegree below = c;
      --below[v];
      if (r.poset.in_module(below)) minimal = false;
    }
    if (minimal) upper = std::min(upper, best_value_at(r.poset, c));
  }
  for (std::size_t d = upper + 1; d-- > 0;) {
    auto part = Search(r.poset, d).run();
    if (!part) continue;
    res.sdepth = d + r.absent.size();
    for (const auto& iv : *part) res.partition.push_back(embed(iv, r, poset.cap()));
    return res;
  }
  throw InternalError("no interval partition found, not even the trivial one");
}

SdepthResult sdepth_of_ideal(const MonomialIdeal& i, std::size_t point_limit) {
  return exact_sdepth(CharPoset(i), point_limit);
}

SdepthResult sdepth_of_quotient(const MonomialIdeal& i, std::size_t point_limit) {
  return exact_sdepth(CharPoset(MonomialIdeal::unit(i.n()), i), point_limit);
}

FiltrationBound filtration_lower_bound(const InitialModule& ini, std::size_t point_limit) {
  FiltrationBound out;
  out.component_sdepth.assign(ini.rank(), std::nullopt);
  std::map<std::string, std::shared_future<std::size_t>> jobs;
  std::vector<std::string> keys(ini.rank());
  for (std::size_t j = 0; j < ini.rank(); ++j) {
    const auto& comp = ini.components[j];
    if (comp.is_zero()) continue;
    keys[j] = comp.minimal().to_string();
    if (jobs.count(keys[j])) continue;
    jobs.emplace(keys[j], std::async(std::launch::async, [comp, point_limit] {
                            return sdepth_of_ideal(comp, point_limit).sdepth;
                          }).share());
  }
  out.bound = ini.n;
  out.all_zero = true;
  for (std::size_t j = 0; j < ini.rank(); ++j) {
    if (keys[j].empty()) continue;
    out.all_zero = false;
    std::size_t v = jobs.at(keys[j]).get();
    out.component_sdepth[j] = v;
    out.bound = std::min(out.bound, v);
  }
  return out;
}

std::vector<StanleySpace> partition_to_decomposition(const CharPoset& poset,
                                                     const std::vector<Interval>& partition) {
  const auto& g = poset.cap();
  std::vector<StanleySpace> out;
  for (const auto& iv : partition) {
    std::vector<std::size_t> z;
    for (std::size_t v = 0; v < poset.n(); ++v)
      if (iv.b[v] == g[v]) z.push_back(v);
    // Coordinates strictly below the cap contribute one space per value.
    Multidegree span = iv.b - iv.a;
    for (std::size_t v : z) span[v] = 0;
    for (const auto& off : box_points(span)) out.push_back({Monomial(iv.a + off), z});
  }
  return out;
}

namespace {

bool space_covers(const StanleySpace& s, const Multidegree& a) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] < s.u[v]) return false;
    if (a[v] != s.u[v] && !std::binary_search(s.z.begin(), s.z.end(), v)) return false;
  }
  return true;
}

}  // namespace

DecompositionCheck verify_decomposition(const std::vector<StanleySpace>& spaces, const CharPoset& poset,
                                        const Multidegree& box_upper) {
  require_same_size(box_upper.size(), poset.n(), "box");
  std::vector<StanleySpace> sorted = spaces;
  for (auto& s : sorted) {
    require_same_size(s.u.size(), poset.n(), "Stanley space");
    std::sort(s.z.begin(), s.z.end());
  }
  DecompositionCheck out;
  for (const auto& a : box_points(box_upper)) {
    std::size_t hits = 0;
    for (const auto& s : sorted)
      if (space_covers(s, a)) ++hits;
    const std::size_t want = poset.in_module(a) ? 1 : 0;
    if (hits != want) {
      out.ok = false;
      out.failure = a;
      out.reason = "degree " + a.to_string() + " covered " + std::to_string(hits) + " times, expected " +
                   std::to_string(want);
      return out;
    }
  }
  return out;
}

DecompositionCheck verify_partition(const CharPoset& poset, const std::vector<Interval>& partition) {
  DecompositionCheck out;
  std::map<std::vector<Multidegree::value_type>, std::size_t> hits;
  for (const auto& iv : partition) {
    if (!iv.a.leq(iv.b) || !iv.b.leq(poset.cap()) || !iv.a.is_nonnegative()) {
      out.ok = false;
      out.failure = iv.a;
      out.reason = "malformed interval [" + iv.a.to_string() + ", " + iv.b.to_string() + "]";
      return out;
    }
    for (const auto& off : box_points(iv.b - iv.a)) ++hits[(iv.a + off).to_vector()];
  }
  for (const auto& [k, count] : hits) {
    Multidegree a{std::span<const Multidegree::value_type>(k)};
    if (!poset.in_module(a) || count > 1) {
      out.ok = false;
      out.failure = a;
      out.reason = poset.in_module(a) ? "point " + a.to_string() + " covered " + std::to_string(count) + " times"
                                      : "point " + a.to_string() + " is outside the module";
      return out;
    }
  }
  for (const auto& a : poset.points())
    if (!hits.count(a.to_vector())) {
      out.ok = false;
      out.failure = a;
      out.reason = "point " + a.to_string() + " is not covered";
      return out;
    }
  return out;
}

}  // namespace syzdepth
