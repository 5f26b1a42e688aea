// syzdepth: resolutions, initial modules of syzygies and Stanley depth of
// monomial ideals, plus a seeded verification harness.
//
// Exit codes: 0 success, 1 a check or oracle disagreed, 2 input or
// configuration error.

#include "syzdepth/syzdepth.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

struct IdealDeleter {
  void operator()(syzd_ideal* i) const { syzd_ideal_free(i); }
};
struct ComplexDeleter {
  void operator()(syzd_complex* c) const { syzd_complex_free(c); }
};
using IdealPtr = std::unique_ptr<syzd_ideal, IdealDeleter>;
using ComplexPtr = std::unique_ptr<syzd_complex, ComplexDeleter>;

// Carries a library status out of a command.
struct Failure {
  syzd_status status;
};

int exit_code(syzd_status s) {
  switch (s) {
    case SYZD_OK: return 0;
    case SYZD_INPUT_ERROR:
    case SYZD_LIMIT_ERROR: return 2;
    default: return 1;
  }
}

const char* kind(syzd_status s) {
  switch (s) {
    case SYZD_INPUT_ERROR: return "input error";
    case SYZD_LIMIT_ERROR: return "size limit";
    case SYZD_INTERNAL_ERROR: return "internal error";
    default: return "error";
  }
}

// Errors throw; DISAGREEMENT is returned so the output still gets written.
syzd_status check(syzd_status s) {
  if (s == SYZD_OK || s == SYZD_DISAGREEMENT) return s;
  std::cerr << "syzdepth: " << kind(s) << ": " << syzd_last_error() << "\n";
  throw Failure{s};
}

std::string take(char* text) {
  std::string s = text ? text : "";
  syzd_string_free(text);
  return s;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "syzdepth: cannot write " << path << "\n";
    throw Failure{SYZD_INPUT_ERROR};
  }
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
}

IdealPtr load(const std::string& path) {
  syzd_ideal* i = nullptr;
  check(syzd_ideal_read(path.c_str(), &i));
  return IdealPtr(i);
}

ComplexPtr resolve(const syzd_ideal* i, const std::string& method, bool minimize) {
  syzd_complex* c = nullptr;
  check(syzd_resolve(i, method.c_str(), minimize ? 1 : 0, &c));
  return ComplexPtr(c);
}

Json ranks(const syzd_complex* c) {
  Json r = Json::array();
  for (std::size_t p = 0; p <= syzd_complex_length(c); ++p) r.push_back(syzd_complex_rank(c, p));
  return r;
}

std::vector<std::size_t> parse_set(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string tok = text.substr(pos, end - pos);
    try {
      std::size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      std::cerr << "syzdepth: input error: bad set element '" << tok << "'\n";
      throw Failure{SYZD_INPUT_ERROR};
    }
    pos = end + 1;
  }
  return out;
}

std::pair<long, long> parse_fraction(const std::string& text) {
  try {
    std::size_t slash = text.find('/'), used = 0;
    long num = std::stol(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) throw std::invalid_argument(text);
    long den = 1;
    if (slash != std::string::npos) {
      const std::string d = text.substr(slash + 1);
      den = std::stol(d, &used);
      if (used != d.size()) throw std::invalid_argument(text);
    }
    return {num, den};
  } catch (const std::exception&) {
    std::cerr << "syzdepth: input error: bad density '" << text << "'\n";
    throw Failure{SYZD_INPUT_ERROR};
  }
}

struct Options {
  std::string input, output;
  std::string method = "taylor";
  bool minimize = false;
  bool check_exact = false;
  std::size_t p = 0;
  std::string basis = "boundary";
  bool oracle = false;
  std::string mode = "exact";
  bool quotient = false;
  std::vector<long> box;
  std::string partition_kind = "poset";
  std::optional<std::size_t> d;
  std::size_t n = 0;
  std::string set, delta = "1";
  std::string theorem;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::optional<std::size_t> trial, max_n, max_m, max_exp;
  std::size_t threads = 0;
};

const long* box_ptr(const Options& o) { return o.box.empty() ? nullptr : o.box.data(); }

int run_resolve(const Options& o) {
  IdealPtr ideal = load(o.input);
  ComplexPtr c = resolve(ideal.get(), o.method, o.minimize);
  char* text = nullptr;
  check(syzd_complex_to_json(c.get(), &text));
  Json j = Json::parse(take(text));
  if (o.minimize) {
    ComplexPtr raw = resolve(ideal.get(), o.method, false);
    j["rank_table"] = {{"unminimized", ranks(raw.get())}, {"minimized", ranks(c.get())}};
  }
  syzd_status st = SYZD_OK;
  if (o.check_exact) {
    char* report = nullptr;
    st = check(syzd_complex_check(c.get(), ideal.get(), &report));
    j["check"] = Json::parse(take(report));
  }
  emit(j.dump(2), o.output);
  return exit_code(st);
}

int run_initial(const Options& o) {
  IdealPtr ideal = load(o.input);
  ComplexPtr c = resolve(ideal.get(), o.method, o.minimize);
  char* text = nullptr;
  syzd_status st = check(syzd_initial(c.get(), o.p, o.basis.c_str(), o.oracle ? 1 : 0, &text));
  emit(take(text), o.output);
  if (st == SYZD_DISAGREEMENT) std::cerr << "syzdepth: boundary leading terms disagree with the oracle\n";
  return exit_code(st);
}

int run_sdepth(const Options& o) {
  IdealPtr ideal = load(o.input);
  char* text = nullptr;
  syzd_status st;
  if (o.mode == "exact") {
    st = check(syzd_sdepth_exact(ideal.get(), o.quotient ? 1 : 0, box_ptr(o), o.box.size(), &text));
  } else if (o.mode == "filtration-bound") {
    ComplexPtr c = resolve(ideal.get(), o.method, o.minimize);
    st = check(syzd_sdepth_filtration(c.get(), o.p, &text));
  } else {
    st = check(syzd_sdepth_sqfree(ideal.get(), &text));
  }
  emit(take(text), o.output);
  return exit_code(st);
}

int run_partition(const Options& o) {
  char* text = nullptr;
  syzd_status st;
  if (o.partition_kind == "blocks") {
    auto a = parse_set(o.set);
    auto [num, den] = parse_fraction(o.delta);
    st = check(syzd_block_structure(o.n, a.data(), a.size(), num, den, &text));
  } else {
    if (o.input.empty()) {
      std::cerr << "syzdepth: input error: --input is required\n";
      return 2;
    }
    IdealPtr ideal = load(o.input);
    if (o.partition_kind == "sqfree") {
      st = check(syzd_sdepth_sqfree(ideal.get(), &text));
    } else {
      std::size_t d = 0;
      if (o.d) {
        d = *o.d;
      } else {
        char* exact = nullptr;
        check(syzd_sdepth_exact(ideal.get(), o.quotient ? 1 : 0, box_ptr(o), o.box.size(), &exact));
        d = Json::parse(take(exact))["sdepth"].get<std::size_t>();
      }
      st = check(syzd_partition(ideal.get(), o.quotient ? 1 : 0, d, box_ptr(o), o.box.size(), &text));
    }
  }
  emit(take(text), o.output);
  return exit_code(st);
}

int run_verify(const Options& o) {
  Json job{{"theorem", o.theorem}, {"trials", o.trials}, {"seed", o.seed}, {"exhaustive", o.exhaustive},
           {"threads", o.threads}};
  if (o.max_n || o.max_m || o.max_exp) {
    Json caps = Json::object();
    if (o.max_n) caps["n"] = *o.max_n;
    if (o.max_m) caps["m"] = *o.max_m;
    if (o.max_exp) caps["exp"] = *o.max_exp;
    job["caps"] = caps;
  }
  if (o.trial) job["trial"] = *o.trial;
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) {
      std::cerr << "syzdepth: input error: cannot open " << o.input << "\n";
      return 2;
    }
    try {
      Json inst = Json::parse(in);
      // A full report line is accepted as well as a bare instance.
      if (inst.contains("instance")) inst = inst["instance"];
      if (inst.contains("seed") && !inst.contains("n")) job["seed"] = inst["seed"];
      if (inst.contains("trial") && !o.trial) job["trial"] = inst["trial"];
      job["instance"] = inst;
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "syzdepth: input error: " << o.input << ": " << e.what() << "\n";
      return 2;
    }
  }
  char* text = nullptr;
  syzd_status st = check(syzd_verify(job.dump().c_str(), &text));
  const std::string lines = take(text);
  emit(lines, o.output);
  std::size_t pass = 0, fail = 0;
  std::size_t start = 0;
  while (start < lines.size()) {
    std::size_t end = lines.find('\n', start);
    Json r = Json::parse(lines.substr(start, end - start));
    (r["status"] == "PASS" ? pass : fail)++;
    start = end + 1;
  }
  std::cerr << o.theorem << ": " << pass << " PASS, " << fail << " FAIL\n";
  return exit_code(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syzygies and Stanley depth of monomial ideals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", syzd_version());
  Options o;

  auto add_io = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("--input,-i", o.input, "IdealFile JSON");
    if (input_required) in->required();
    sub->add_option("--output,-o", o.output, "write the result here instead of stdout");
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "resolution")->check(CLI::IsMember({"taylor", "koszul", "ek"}));
    sub->add_flag("--minimize", o.minimize, "minimize the resolution first");
  };

  auto* resolve_cmd = app.add_subcommand("resolve", "free resolution of S/I as JSON");
  add_io(resolve_cmd, true);
  add_method(resolve_cmd);
  resolve_cmd->add_flag("--check", o.check_exact, "verify d^2 = 0 and exactness on the test box");

  auto* initial_cmd = app.add_subcommand("initial", "initial module of the p-th syzygy module");
  add_io(initial_cmd, true);
  add_method(initial_cmd);
  initial_cmd->add_option("--p,-p", o.p, "homological degree")->required();
  initial_cmd->add_option("--basis", o.basis, "basis order")->check(CLI::IsMember({"boundary", "lex"}));
  initial_cmd->add_flag("--oracle", o.oracle, "compare with Buchberger");

  auto* sdepth_cmd = app.add_subcommand("sdepth", "Stanley depth: exact, filtration bound or block construction");
  add_io(sdepth_cmd, true);
  add_method(sdepth_cmd);
  sdepth_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"exact", "filtration-bound", "sqfree-construct"}));
  sdepth_cmd->add_flag("--quotient", o.quotient, "use S/I instead of I");
  sdepth_cmd->add_option("--p,-p", o.p, "syzygy module for the filtration bound");
  sdepth_cmd->add_option("--box", o.box, "cap g of the characteristic poset")->delimiter(',');

  auto* partition_cmd = app.add_subcommand("partition", "interval partitions and block structures");
  add_io(partition_cmd, false);
  partition_cmd->add_option("--kind", o.partition_kind)->check(CLI::IsMember({"poset", "sqfree", "blocks"}));
  partition_cmd->add_flag("--quotient", o.quotient, "use S/I instead of I");
  partition_cmd->add_option("--d", o.d, "required interval value (default: the exact sdepth)");
  partition_cmd->add_option("--box", o.box, "cap g of the characteristic poset")->delimiter(',');
  partition_cmd->add_option("--n", o.n, "circle size for --kind blocks");
  partition_cmd->add_option("--set", o.set, "anchor set A, e.g. 1,4");
  partition_cmd->add_option("--delta", o.delta, "density, e.g. 3/2");

  auto* verify_cmd = app.add_subcommand("verify", "seeded verification harness");
  verify_cmd->add_option("--theorem", o.theorem)
      ->required()
      ->check(CLI::IsMember({"theorem-main", "boundary-gb", "mainsyz", "regular", "sqfree-stde", "squarefree",
                             "lemma-groebner"}));
  verify_cmd->add_option("--trials", o.trials);
  verify_cmd->add_option("--seed", o.seed);
  verify_cmd->add_flag("--exhaustive", o.exhaustive, "sqfree-stde: every order filter of [max-n]");
  verify_cmd->add_option("--trial", o.trial, "run a single trial index");
  verify_cmd->add_option("--max-n", o.max_n);
  verify_cmd->add_option("--max-m", o.max_m);
  verify_cmd->add_option("--max-exp", o.max_exp);
  verify_cmd->add_option("--threads", o.threads, "0: hardware concurrency");
  verify_cmd->add_option("--input,-i", o.input, "replay this instance (or report line)");
  verify_cmd->add_option("--output,-o", o.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*resolve_cmd) return run_resolve(o);
    if (*initial_cmd) return run_initial(o);
    if (*sdepth_cmd) return run_sdepth(o);
    if (*partition_cmd) return run_partition(o);
    return run_verify(o);
  } catch (const Failure& f) {
    return exit_code(f.status);
  }
}
