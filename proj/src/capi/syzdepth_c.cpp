#include "syzdepth/syzdepth.h"

#include "errors.hpp"
#include "syzygy_initial.hpp"
#include "verify.hpp"

#include <cstring>
#include <new>

using namespace syzdepth;

struct syzd_ideal {
  MonomialIdeal ideal;
};

struct syzd_complex {
  FreeComplex c;
  std::optional<std::vector<Monomial>> taylor_gens;  // set for the raw Taylor complex
};

namespace {

thread_local std::string last_error;

template <class F>
syzd_status guard(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const InputError& e) {
    last_error = e.what();
    return SYZD_INPUT_ERROR;
  } catch (const LimitError& e) {
    last_error = e.what();
    return SYZD_LIMIT_ERROR;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return SYZD_INPUT_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SYZD_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return SYZD_INTERNAL_ERROR;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw InputError(std::string(what) + " is null");
}

char* dup(const Json& j) {
  std::string s = j.dump(2);
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<Multidegree> box_of(const long* box, std::size_t len) {
  if (!box) return std::nullopt;
  Multidegree g(len);
  for (std::size_t v = 0; v < len; ++v) {
    if (box[v] < 0) throw InputError("box entries must be nonnegative");
    g[v] = static_cast<Multidegree::value_type>(box[v]);
  }
  return g;
}

CharPoset poset_of(const MonomialIdeal& i, int quotient, const long* box, std::size_t len) {
  auto cap = box_of(box, len);
  if (cap && cap->size() != i.n())
    throw InputError("box has " + std::to_string(cap->size()) + " entries, expected " + std::to_string(i.n()));
  if (quotient) return CharPoset(MonomialIdeal::unit(i.n()), i, cap);
  return CharPoset(i, std::nullopt, cap);
}

Json decomposition_json(const std::vector<StanleySpace>& spaces) {
  Json out = Json::array();
  for (const auto& s : spaces) {
    Json z = Json::array();
    for (auto v : s.z) z.push_back(v + 1);
    out.push_back({{"u", to_json(s.u.degree())}, {"Z", z}});
  }
  return out;
}

Multidegree above(const Multidegree& g) {
  Multidegree b = g;
  for (std::size_t v = 0; v < b.size(); ++v) b[v] += 1;
  return b;
}

}  // namespace

extern "C" {

const char* syzd_version(void) { return "0.1.0"; }

const char* syzd_last_error(void) { return last_error.c_str(); }

void syzd_string_free(char* s) { delete[] s; }

syzd_status syzd_ideal_parse(const char* json, syzd_ideal** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    Json j;
    try {
      j = Json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(e.what());
    }
    *out = new syzd_ideal{ideal_from_json(j)};
    return SYZD_OK;
  });
}

syzd_status syzd_ideal_read(const char* path, syzd_ideal** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new syzd_ideal{read_ideal_file(path)};
    return SYZD_OK;
  });
}

void syzd_ideal_free(syzd_ideal* ideal) { delete ideal; }

size_t syzd_ideal_nvars(const syzd_ideal* ideal) { return ideal ? ideal->ideal.n() : 0; }

size_t syzd_ideal_ngens(const syzd_ideal* ideal) { return ideal ? ideal->ideal.generators().size() : 0; }

int syzd_ideal_is_stable(const syzd_ideal* ideal) { return ideal && is_stable(ideal->ideal) ? 1 : 0; }

syzd_status syzd_ideal_to_json(const syzd_ideal* ideal, char** out) {
  return guard([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = dup(ideal_to_json(ideal->ideal));
    return SYZD_OK;
  });
}

syzd_status syzd_resolve(const syzd_ideal* ideal, const char* method, int minimize_flag, syzd_complex** out) {
  return guard([&] {
    require(ideal, "ideal");
    require(method, "method");
    require(out, "out");
    const MonomialIdeal& i = ideal->ideal;
    if (i.is_zero()) throw InputError("the ideal has no generators");
    const std::string m = method;
    auto res = std::make_unique<syzd_complex>();
    if (m == "taylor") {
      res->c = taylor_complex(i.generators());
      res->taylor_gens = i.generators();
    } else if (m == "koszul") {
      res->c = koszul_complex(i.generators());
    } else if (m == "ek") {
      if (auto v = stability_violation(i))
        throw InputError("ek needs a stable ideal: generator " + v->generator.to_string() + " is in I but " +
                         v->missing.to_string() + " is not");
      res->c = eliahou_kervaire(i);
    } else {
      throw InputError("unknown method '" + m + "' (taylor, koszul, ek)");
    }
    if (minimize_flag) {
      res->c = minimize(res->c);
      res->taylor_gens.reset();
    }
    *out = res.release();
    return SYZD_OK;
  });
}

void syzd_complex_free(syzd_complex* c) { delete c; }

size_t syzd_complex_length(const syzd_complex* c) { return c ? c->c.length() : 0; }

size_t syzd_complex_rank(const syzd_complex* c, size_t p) {
  if (!c || p > c->c.length()) return 0;
  return c->c.rank(p);
}

syzd_status syzd_complex_to_json(const syzd_complex* c, char** out) {
  return guard([&] {
    require(c, "complex");
    require(out, "out");
    *out = dup(complex_to_json(c->c));
    return SYZD_OK;
  });
}

syzd_status syzd_complex_check(const syzd_complex* c, const syzd_ideal* ideal, char** report) {
  return guard([&] {
    require(c, "complex");
    require(ideal, "ideal");
    require(report, "report");
    auto cc = check_complex(c->c);
    auto ex = check_resolution(c->c, ideal->ideal);
    Json failures = Json::array();
    for (const auto& f : ex.failures)
      failures.push_back({{"p", f.p}, {"degree", to_json(f.degree)}, {"reason", f.reason}});
    Json j{{"d_squared_zero", cc.ok},
           {"message", cc.message},
           {"box", to_json(ex.box_upper)},
           {"degrees_checked", ex.degrees_checked},
           {"exact", ex.ok()},
           {"failures", failures}};
    *report = dup(j);
    return cc.ok && ex.ok() ? SYZD_OK : SYZD_DISAGREEMENT;
  });
}

syzd_status syzd_initial(const syzd_complex* c, size_t p, const char* basis, int oracle, char** out) {
  return guard([&] {
    require(c, "complex");
    require(basis, "basis");
    require(out, "out");
    const std::string b = basis;
    std::optional<std::span<const Monomial>> gens;
    FreeComplex used;
    if (b == "boundary") {
      used = c->c;
      if (c->taylor_gens) gens = std::span<const Monomial>(*c->taylor_gens);
    } else if (b == "lex") {
      used = c->c.lex_refined();
    } else {
      throw InputError("unknown basis '" + b + "' (lex, boundary)");
    }
    Json j{{"p", p}, {"basis", b}};
    bool agree = true;
    if (p > used.length()) {
      j["components"] = Json::array();
    } else {
      auto rep = verify_boundary_gb(used, p, gens);
      const OrderedBasis& ob = used.basis(p);
      j["components"] = initial_module_to_json(rep.boundary, ob);
      if (oracle) {
        j["oracle"] = initial_module_to_json(rep.oracle, ob);
        if (rep.closed_form) j["closed_form"] = initial_module_to_json(*rep.closed_form, ob);
        j["equal"] = rep.equal;
        agree = rep.equal;
      }
    }
    *out = dup(j);
    return agree ? SYZD_OK : SYZD_DISAGREEMENT;
  });
}

syzd_status syzd_sdepth_exact(const syzd_ideal* ideal, int quotient, const long* box, size_t box_len, char** out) {
  return guard([&] {
    require(ideal, "ideal");
    require(out, "out");
    CharPoset poset = poset_of(ideal->ideal, quotient, box, box_len);
    SdepthResult r = exact_sdepth(poset);
    auto spaces = partition_to_decomposition(poset, r.partition);
    auto check = verify_decomposition(spaces, poset, above(poset.cap()));
    Json j{{"mode", "exact"}, {"module", quotient ? "S/I" : "I"}, {"sdepth", r.sdepth}};
    j["certificate"] = certificate_to_json(r);
    j["decomposition"] = decomposition_json(spaces);
    j["decomposition_verified"] = check.ok;
    if (!check.ok) j["decomposition_error"] = check.reason;
    *out = dup(j);
    return check.ok ? SYZD_OK : SYZD_DISAGREEMENT;
  });
}

syzd_status syzd_sdepth_filtration(const syzd_complex* c, size_t p, char** out) {
  return guard([&] {
    require(c, "complex");
    require(out, "out");
    FreeComplex lex = c->c.lex_refined();
    Json j{{"mode", "filtration-bound"}, {"p", p}};
    if (p > lex.length() || lex.rank(p) == 0) {
      j["bound"] = lex.n();
      j["all_zero"] = true;
      j["components"] = Json::array();
    } else {
      InitialModule ini = oracle_initial_module(lex, p);
      FiltrationBound fb = filtration_lower_bound(ini);
      Json comps = Json::array();
      const OrderedBasis& ob = lex.basis(p);
      Json listed = initial_module_to_json(ini, ob);
      for (std::size_t k = 0; k < ini.rank(); ++k) {
        Json e = listed[k];
        e["sdepth"] = fb.component_sdepth[k] ? Json(*fb.component_sdepth[k]) : Json(nullptr);
        comps.push_back(e);
      }
      j["bound"] = fb.bound;
      j["all_zero"] = fb.all_zero;
      j["components"] = comps;
    }
    *out = dup(j);
    return SYZD_OK;
  });
}

syzd_status syzd_sdepth_sqfree(const syzd_ideal* ideal, char** out) {
  return guard([&] {
    require(ideal, "ideal");
    require(out, "out");
    const std::size_t n = ideal->ideal.n();
    auto filter = order_filter(ideal->ideal);
    SqfreePartition part = squarefree_partition(n, filter);
    auto check = check_filter_partition(n, filter, part.intervals);
    Json j{{"mode", "sqfree-construct"}, {"value", part.value}, {"bound", sqfree_lower_bound(n)}};
    j["partition"] = sqfree_partition_to_json(part);
    j["partition_verified"] = check.ok;
    if (!check.ok) j["partition_error"] = check.reason;
    *out = dup(j);
    return check.ok ? SYZD_OK : SYZD_DISAGREEMENT;
  });
}

syzd_status syzd_partition(const syzd_ideal* ideal, int quotient, size_t d, const long* box, size_t box_len,
                           char** out) {
  return guard([&] {
    require(ideal, "ideal");
    require(out, "out");
    CharPoset poset = poset_of(ideal->ideal, quotient, box, box_len);
    auto part = partition_with_value(poset, d);
    Json j{{"module", quotient ? "S/I" : "I"}, {"d", d}, {"g", to_json(poset.cap())}};
    if (!part) {
      j["exists"] = false;
      *out = dup(j);
      return SYZD_OK;
    }
    auto check = verify_partition(poset, *part);
    j["exists"] = true;
    j["intervals"] = intervals_to_json(*part);
    j["verified"] = check.ok;
    if (!check.ok) j["error"] = check.reason;
    *out = dup(j);
    return check.ok ? SYZD_OK : SYZD_DISAGREEMENT;
  });
}

syzd_status syzd_block_structure(size_t n, const size_t* a, size_t a_len, long num, long den, char** out) {
  return guard([&] {
    require(out, "out");
    if (a_len) require(a, "a");
    if (den <= 0) throw InputError("density denominator must be positive");
    Subset s(a, a + a_len);
    std::sort(s.begin(), s.end());
    Rational delta(num, den);
    delta.canonicalize();
    BlockStructure bs = block_structure(n, s, delta);
    Json j = block_structure_to_json(bs);
    j["n"] = n;
    j["f_delta"] = f_delta(n, s, delta);
    auto bad = block_axiom_violation(bs);
    j["axioms_hold"] = !bad;
    if (bad) j["violation"] = *bad;
    *out = dup(j);
    return bad ? SYZD_DISAGREEMENT : SYZD_OK;
  });
}

syzd_status syzd_verify(const char* job_text, char** out) {
  return guard([&] {
    require(job_text, "job");
    require(out, "out");
    Json j;
    try {
      j = Json::parse(job_text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(e.what());
    }
    if (!j.is_object() || !j.contains("theorem")) throw InputError("verify job needs \"theorem\"");
    VerifyJob job;
    job.theorem = j["theorem"].get<std::string>();
    job.trials = j.value("trials", std::size_t{100});
    job.seed = j.value("seed", std::uint64_t{0});
    job.exhaustive = j.value("exhaustive", false);
    job.threads = j.value("threads", std::size_t{0});
    if (j.contains("caps")) {
      Caps caps = default_caps(job.theorem);
      const Json& c = j["caps"];
      caps.max_n = c.value("n", caps.max_n);
      caps.max_m = c.value("m", caps.max_m);
      caps.max_exp = c.value("exp", caps.max_exp);
      job.caps = caps;
    }
    if (j.contains("trial") && !j["trial"].is_null()) job.only_trial = j["trial"].get<std::size_t>();
    if (j.contains("instance") && !j["instance"].is_null()) job.instance = j["instance"];
    VerifyResult r = run_verify(job);
    std::string text;
    for (const auto& rep : r.reports) text += report_to_json(rep).dump() + "\n";
    *out = dup(text);
    return r.all_pass() ? SYZD_OK : SYZD_DISAGREEMENT;
  });
}

}  // extern "C"
