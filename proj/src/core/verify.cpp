#include "verify.hpp"

#include "errors.hpp"
#include "syzygy_initial.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <thread>

namespace syzdepth {

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"theorem-main", "boundary-gb", "mainsyz",       "regular",
                                            "sqfree-stde",  "squarefree",  "lemma-groebner"};
  return ids;
}

Caps default_caps(const std::string& theorem) {
  if (theorem == "regular") return {5, 3, 2};
  if (theorem == "sqfree-stde") return {9, 5, 1};
  if (theorem == "squarefree") return {7, 5, 1};
  if (theorem == "mainsyz") return {4, 5, 3};
  return {4, 4, 3};
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

void check_caps(const Caps& caps) {
  if (caps.max_n < 1 || caps.max_m < 1 || caps.max_exp < 1) throw InputError("size caps must be positive");
}

}  // namespace

MonomialIdeal random_ideal(std::mt19937_64& rng, const Caps& caps, std::size_t min_generators) {
  check_caps(caps);
  if (min_generators > caps.max_m) throw InputError("generator cap below the required number of generators");
  if (min_generators > 1 && caps.max_n < 2) throw InputError("two minimal generators need n >= 2");
  std::uniform_int_distribution<int> expo(0, caps.max_exp);
  while (true) {
    const std::size_t n = uniform(rng, min_generators > 1 ? 2 : 1, caps.max_n);
    const std::size_t m = uniform(rng, min_generators, caps.max_m);
    std::vector<Monomial> gens;
    while (gens.size() < m) {
      Multidegree d(n);
      for (std::size_t v = 0; v < n; ++v) d[v] = expo(rng);
      if (!d.is_zero()) gens.emplace_back(d);
    }
    MonomialIdeal ideal = MonomialIdeal(n, std::move(gens)).minimal();
    if (ideal.generators().size() >= min_generators) return ideal;
  }
}

MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, const Caps& caps) {
  Caps c = caps;
  c.max_exp = 1;
  return random_ideal(rng, c);
}

std::vector<Monomial> random_complete_intersection(std::mt19937_64& rng, const Caps& caps) {
  check_caps(caps);
  const std::size_t n = uniform(rng, 1, caps.max_n);
  const std::size_t m = uniform(rng, 1, std::min(caps.max_m, n));
  std::vector<std::size_t> vars(n);
  for (std::size_t v = 0; v < n; ++v) vars[v] = v;
  std::shuffle(vars.begin(), vars.end(), rng);
  std::vector<Multidegree> d(m, Multidegree(n));
  std::uniform_int_distribution<int> expo(1, caps.max_exp);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t owner = k < m ? k : uniform(rng, 0, m);
    if (owner < m) d[owner][vars[k]] = expo(rng);
  }
  return {d.begin(), d.end()};
}

namespace {

struct Instance {
  Json json;
  MonomialIdeal ideal;          // as given, generator order kept
  std::optional<std::vector<std::uint64_t>> filter;
};

Json filter_to_json(std::size_t n, const std::vector<std::uint64_t>& f) {
  Json sets = Json::array();
  for (auto m : f) sets.push_back(from_mask(m));
  return Json{{"n", n}, {"sets", sets}};
}

std::vector<std::uint64_t> filter_from_json(const Json& j, std::size_t& n) {
  try {
    n = j.at("n").get<std::size_t>();
    std::vector<std::uint64_t> out;
    for (const auto& s : j.at("sets")) out.push_back(to_mask(s.get<Subset>()));
    std::sort(out.begin(), out.end());
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed filter: ") + e.what());
  }
}

Report base(const std::string& theorem, const Instance& inst, std::size_t trial) {
  Report r;
  r.theorem = theorem;
  r.instance = inst.json;
  r.trial = trial;
  r.p = nullptr;
  r.witness = nullptr;
  return r;
}

std::vector<Monomial> gens_of(const MonomialIdeal& i) { return i.generators(); }

Json strings(const std::vector<std::string>& v) { return Json(v); }

// ---- theorem-main ----------------------------------------------------------

std::vector<Report> check_theorem_main(const Instance& inst, std::size_t trial) {
  auto u = gens_of(inst.ideal.minimal());
  std::vector<FreeComplex> complexes;
  complexes.push_back(taylor_complex(u));
  complexes.push_back(minimize(complexes.front()));
  if (is_stable(inst.ideal)) complexes.push_back(eliahou_kervaire(inst.ideal));
  std::vector<Report> out;
  for (std::size_t p = 0; p <= inst.ideal.n(); ++p) {
    Report r = base("theorem-main", inst, trial);
    r.p = p;
    Json fails = Json::array();
    std::string note;
    for (const auto& c : complexes) {
      auto rep = verify_theorem_main(c, p);
      note = rep.note;
      if (!rep.pass) fails.push_back({{"complex", c.kind()}, {"violations", strings(rep.violations)}});
    }
    r.pass = fails.empty();
    if (!r.pass) r.witness = {{"failures", fails}};
    else if (!note.empty()) r.witness = {{"note", note}};
    out.push_back(std::move(r));
  }
  return out;
}

// ---- boundary-gb -----------------------------------------------------------

std::vector<Report> check_boundary_gb(const Instance& inst, std::size_t trial) {
  auto u = gens_of(inst.ideal.minimal());
  FreeComplex t = taylor_complex(u);
  MonomialIdeal closure = stable_closure(inst.ideal);
  FreeComplex ek = eliahou_kervaire(closure);
  std::vector<Report> out;
  const std::size_t top = std::max(t.length(), ek.length());
  for (std::size_t p = 0; p < top; ++p) {
    Report r = base("boundary-gb", inst, trial);
    r.p = p;
    Json fails = Json::array();
    if (p < t.length()) {
      auto rep = verify_boundary_gb(t, p, std::span<const Monomial>(u));
      if (!rep.equal)
        fails.push_back({{"complex", "taylor"},
                         {"boundary", rep.boundary.to_string()},
                         {"oracle", rep.oracle.to_string()},
                         {"closed_form", rep.closed_form ? rep.closed_form->to_string() : ""}});
    }
    if (p < ek.length()) {
      auto rep = verify_boundary_gb(ek, p);
      if (!rep.equal)
        fails.push_back({{"complex", "eliahou-kervaire"},
                         {"stable_closure", ideal_to_json(closure)},
                         {"boundary", rep.boundary.to_string()},
                         {"oracle", rep.oracle.to_string()}});
    }
    r.pass = fails.empty();
    if (!r.pass) r.witness = {{"failures", fails}};
    out.push_back(std::move(r));
  }
  return out;
}

// ---- mainsyz ---------------------------------------------------------------

// Z_p = 0 or free in a minimal resolution.
std::optional<std::string> trivial_syzygy(const FreeComplex& minimal, std::size_t p) {
  if (minimal.rank(p + 1) == 0) return "Z_p = 0";
  if (minimal.rank(p + 2) == 0) return "Z_p is free";
  return std::nullopt;
}

Json component_values(const FiltrationBound& fb) {
  Json v = Json::array();
  for (const auto& c : fb.component_sdepth) v.push_back(c ? Json(*c) : Json(nullptr));
  return v;
}

// The raw Taylor resolution and its minimization, both lex-refined.
struct SyzygyPair {
  FreeComplex minimal, raw;
};

SyzygyPair resolutions(const MonomialIdeal& mi) {
  FreeComplex t = taylor_complex(gens_of(mi));
  return {minimize(t).lex_refined(), t.lex_refined()};
}

std::vector<Report> check_mainsyz(const Instance& inst, std::size_t trial) {
  const std::size_t n = inst.ideal.n();
  const SyzygyPair rs = resolutions(inst.ideal.minimal());
  std::vector<Report> out;
  for (std::size_t p = 1; p < n; ++p) {
    Report r = base("mainsyz", inst, trial);
    r.p = p;
    if (auto why = trivial_syzygy(rs.minimal, p)) {
      r.witness = {{"skipped", *why}};
    } else {
      r.witness = Json::object();
      for (const auto* c : {&rs.minimal, &rs.raw}) {
        auto fb = filtration_lower_bound(oracle_initial_module(*c, p));
        r.pass = r.pass && fb.bound >= p + 1;
        r.witness[c == &rs.raw ? "taylor" : "minimized"] = {
            {"bound", fb.bound}, {"required", p + 1}, {"components", component_values(fb)}};
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---- regular ---------------------------------------------------------------

std::vector<Report> check_regular(const Instance& inst, std::size_t trial) {
  const std::size_t n = inst.ideal.n();
  auto u = gens_of(inst.ideal);
  const std::size_t m = u.size();
  FreeComplex t = taylor_complex(u);
  std::vector<Report> out;
  for (std::size_t p = 1; p <= m; ++p) {
    Report r = base("regular", inst, trial);
    r.p = p;
    InitialModule ini = oracle_initial_module(t, p);
    InitialModule closed = taylor_initial_module(u, p);
    auto fb = filtration_lower_bound(ini);
    const std::size_t required = n - (m - p) / 2;
    Json w{{"bound", fb.bound}, {"required", required}};
    bool ok = fb.bound >= required;
    if (!(closed == ini)) {
      ok = false;
      w["closed_form"] = closed.to_string();
      w["oracle"] = ini.to_string();
    }
    if (p == 1) {
      // Each component is generated by a subsequence of the regular sequence.
      Json mismatch = Json::array();
      for (const auto& comp : ini.components) {
        if (comp.is_zero()) continue;
        const std::size_t k = comp.generators().size();
        const std::size_t exact = sdepth_of_ideal(comp).sdepth;
        if (exact != n - k / 2) {
          ok = false;
          mismatch.push_back({{"component", comp.to_string()}, {"sdepth", exact}, {"expected", n - k / 2}});
        }
      }
      if (!mismatch.empty()) w["component_sdepth_mismatch"] = mismatch;
    }
    r.pass = ok;
    r.witness = w;
    out.push_back(std::move(r));
  }
  return out;
}

// ---- sqfree-stde -----------------------------------------------------------

std::vector<Report> check_sqfree_stde(const Instance& inst, std::size_t trial) {
  const std::size_t n = inst.ideal.n();
  std::vector<std::uint64_t> filter = inst.filter ? *inst.filter : order_filter(inst.ideal);
  Report r = base("sqfree-stde", inst, trial);
  auto part = squarefree_partition(n, filter);
  auto check = check_filter_partition(n, filter, part.intervals);
  const std::size_t bound = sqfree_lower_bound(n);
  Json w{{"value", part.value}, {"bound", bound}, {"intervals", part.intervals.size()}};
  bool ok = check.ok;
  if (!check.ok) w["partition_error"] = check.reason;
  if (!filter.empty()) {
    ok = ok && part.value >= bound;
    if (n <= 5) {
      std::size_t exact;
      if (filter.front() == 0) {
        exact = n;
      } else {
        exact = sdepth_of_ideal(ideal_of_filter(n, filter)).sdepth;
      }
      w["exact_sdepth"] = exact;
      ok = ok && exact >= part.value;
    }
  }
  r.pass = ok;
  r.witness = w;
  return {r};
}

// ---- squarefree ------------------------------------------------------------

std::vector<Report> check_squarefree(const Instance& inst, std::size_t trial) {
  const std::size_t n = inst.ideal.n();
  const MonomialIdeal mi = inst.ideal.minimal();
  const std::size_t d = static_cast<std::size_t>(mi.min_generator_degree()) - 1;
  const SyzygyPair rs = resolutions(mi);
  std::vector<Report> out;
  for (std::size_t p = 1; p <= n; ++p) {
    Report r = base("squarefree", inst, trial);
    r.p = p;
    if (n + 1 < d + p + 1) {
      r.witness = {{"skipped", "n + 1 - d - p < 1"}};
    } else if (auto why = trivial_syzygy(rs.minimal, p)) {
      r.witness = {{"skipped", *why}};
    } else {
      const std::size_t required = syzygy_sqfree_bound(n, d, p);
      r.witness = {{"d", d}, {"required", required}};
      for (const auto* c : {&rs.minimal, &rs.raw}) {
        InitialModule ini = oracle_initial_module(*c, p);
        const bool sq = is_squarefree_module(ini, c->basis(p));
        auto fb = filtration_lower_bound(ini);
        r.pass = r.pass && sq && fb.bound >= required;
        Json w{{"squarefree", sq}, {"bound", fb.bound}};
        if (!sq) w["initial"] = ini.to_string();
        r.witness[c == &rs.raw ? "taylor" : "minimized"] = w;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---- lemma-groebner --------------------------------------------------------

void check_cone(const std::string& name, const ConeInput& in, const Instance& inst, std::size_t trial,
                std::map<std::size_t, Json>& fails, std::size_t& top) {
  FreeComplex cone = mapping_cone(in.g, in.f, in.phi);
  top = std::max(top, cone.length());
  for (std::size_t i = 1; i <= cone.length(); ++i) {
    auto ds = verify_direct_sum(in, cone, i);
    auto gf = buchberger<Rational>(boundary_generators(in.f, i), MonomialOrder::lex).generators;
    auto gg = buchberger<Rational>(boundary_generators(in.g, i - 1), MonomialOrder::lex).generators;
    auto comp = compose_cone_gb(in, cone, i, gf, gg);
    if (ds.equal && comp.is_groebner && comp.in_kernel && comp.matches_oracle) continue;
    fails[i].push_back({{"cone", name},
                        {"direct_sum", ds.equal},
                        {"cone_initial", ds.cone.to_string()},
                        {"composed_initial", ds.composed.to_string()},
                        {"is_groebner", comp.is_groebner},
                        {"in_kernel", comp.in_kernel},
                        {"matches_oracle", comp.matches_oracle}});
  }
  (void)inst;
  (void)trial;
}

std::vector<Report> check_lemma_groebner(const Instance& inst, std::size_t trial) {
  auto u = gens_of(inst.ideal.minimal());
  std::map<std::size_t, Json> fails;
  std::size_t top = 0;
  check_cone("taylor", taylor_cone_input(u), inst, trial, fails, top);
  MonomialIdeal closure = stable_closure(inst.ideal);
  const std::size_t k = closure.minimal().generators().size();
  if (k >= 2) check_cone("eliahou-kervaire", eliahou_kervaire_step(closure, k - 1), inst, trial, fails, top);
  std::vector<Report> out;
  for (std::size_t i = 1; i <= top; ++i) {
    Report r = base("lemma-groebner", inst, trial);
    r.p = i;
    if (fails.count(i)) {
      r.pass = false;
      r.witness = {{"failures", fails[i]}};
    }
    out.push_back(std::move(r));
  }
  return out;
}

using Checker = std::function<std::vector<Report>(const Instance&, std::size_t)>;

Checker checker_for(const std::string& id) {
  if (id == "theorem-main") return check_theorem_main;
  if (id == "boundary-gb") return check_boundary_gb;
  if (id == "mainsyz") return check_mainsyz;
  if (id == "regular") return check_regular;
  if (id == "sqfree-stde") return check_sqfree_stde;
  if (id == "squarefree") return check_squarefree;
  if (id == "lemma-groebner") return check_lemma_groebner;
  std::string known;
  for (const auto& t : theorem_ids()) known += (known.empty() ? "" : ", ") + t;
  throw InputError("unknown theorem '" + id + "' (known: " + known + ")");
}

Instance generate(const VerifyJob& job, const Caps& caps, std::size_t trial,
                  const std::vector<std::vector<std::uint64_t>>* filters) {
  Instance inst;
  inst.json = Json{{"seed", job.seed}, {"trial", trial}};
  if (filters) {
    const auto& f = (*filters)[trial];
    inst.filter = f;
    inst.ideal = MonomialIdeal(caps.max_n);
    if (!f.empty() && f.front() != 0) inst.ideal = ideal_of_filter(caps.max_n, f);
    inst.json["filter"] = filter_to_json(caps.max_n, f);
    return inst;
  }
  std::mt19937_64 rng(trial_seed(job.seed, trial));
  const std::string& t = job.theorem;
  if (t == "regular") {
    auto u = random_complete_intersection(rng, caps);
    inst.ideal = MonomialIdeal(u.front().size(), u);
  } else if (t == "sqfree-stde" || t == "squarefree") {
    inst.ideal = random_squarefree_ideal(rng, caps);
  } else if (t == "lemma-groebner") {
    inst.ideal = random_ideal(rng, caps, 2);
  } else {
    inst.ideal = random_ideal(rng, caps);
  }
  inst.json["ideal"] = ideal_to_json(inst.ideal);
  return inst;
}

Instance from_json(const VerifyJob& job, std::size_t trial) {
  const Json& j = *job.instance;
  Instance inst;
  inst.json = Json{{"seed", job.seed}, {"trial", trial}};
  if (j.contains("filter")) {
    std::size_t n = 0;
    inst.filter = filter_from_json(j["filter"], n);
    inst.ideal = MonomialIdeal(n);
    if (!inst.filter->empty() && inst.filter->front() != 0) inst.ideal = ideal_of_filter(n, *inst.filter);
    inst.json["filter"] = filter_to_json(n, *inst.filter);
    return inst;
  }
  inst.ideal = ideal_from_json(j.contains("ideal") ? j["ideal"] : j);
  if (inst.ideal.is_zero()) throw InputError("the instance ideal needs at least one generator");
  if (job.theorem == "sqfree-stde" || job.theorem == "squarefree")
    for (const auto& u : inst.ideal.generators())
      if (!is_squarefree(u)) throw InputError("instance is not squarefree: " + u.to_string());
  if (job.theorem == "regular") {
    std::vector<int> owner(inst.ideal.n(), 0);
    for (const auto& u : inst.ideal.generators())
      for (auto v : support(u))
        if (owner[v]++) throw InputError("regular needs generators with pairwise disjoint supports");
  }
  inst.json["ideal"] = ideal_to_json(inst.ideal);
  return inst;
}

}  // namespace

VerifyResult run_verify(const VerifyJob& job) {
  Checker check = checker_for(job.theorem);
  const Caps caps = job.caps ? *job.caps : default_caps(job.theorem);
  check_caps(caps);

  std::vector<std::vector<std::uint64_t>> filters;
  std::size_t count = job.trials;
  if (job.exhaustive) {
    if (job.theorem != "sqfree-stde") throw InputError("exhaustive mode is only available for sqfree-stde");
    filters = all_order_filters(caps.max_n);
    count = filters.size();
  }
  std::vector<std::size_t> indices;
  if (job.only_trial) {
    if (job.exhaustive && *job.only_trial >= count) throw InputError("trial index beyond the enumeration");
    indices.push_back(*job.only_trial);
  } else if (job.instance) {
    indices.push_back(0);
  } else {
    for (std::size_t t = 0; t < count; ++t) indices.push_back(t);
  }

  std::vector<std::vector<Report>> per(indices.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr config_error;
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < indices.size();) {
      const std::size_t trial = indices[k];
      Instance inst;
      try {
        inst = job.instance ? from_json(job, trial) : generate(job, caps, trial, job.exhaustive ? &filters : nullptr);
        per[k] = check(inst, trial);
        if (per[k].empty()) {
          Report r = base(job.theorem, inst, trial);
          r.witness = {{"skipped", "no homological degree in range"}};
          per[k].push_back(std::move(r));
        }
      } catch (const InputError&) {
        std::lock_guard lock(mu);
        if (!config_error) config_error = std::current_exception();
      } catch (const LimitError&) {
        std::lock_guard lock(mu);
        if (!config_error) config_error = std::current_exception();
      } catch (const std::exception& e) {
        Report r = base(job.theorem, inst, trial);
        r.pass = false;
        r.witness = {{"error", e.what()}};
        per[k] = {r};
      }
    }
  };
  std::size_t threads = job.threads ? job.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, indices.size());
  std::vector<std::future<void>> pool;
  for (std::size_t w = 1; w < threads; ++w) pool.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : pool) f.get();
  if (config_error) std::rethrow_exception(config_error);

  VerifyResult res;
  res.trials = indices.size();
  for (auto& reps : per) {
    bool ok = true;
    for (auto& r : reps) {
      ok = ok && r.pass;
      res.reports.push_back(std::move(r));
    }
    if (!ok) ++res.failed_trials;
  }
  return res;
}

}  // namespace syzdepth
