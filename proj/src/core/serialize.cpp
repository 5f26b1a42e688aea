#include "serialize.hpp"

#include "errors.hpp"

#include <fstream>

namespace syzdepth {

Json to_json(const Multidegree& d) { return Json(d.to_vector()); }

Multidegree multidegree_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) throw InputError("expected an exponent array, got " + j.dump());
  if (j.size() != n)
    throw InputError("exponent vector " + j.dump() + " has length " + std::to_string(j.size()) + ", expected " +
                     std::to_string(n));
  Multidegree d(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!j[v].is_number_integer()) throw InputError("non-integer exponent in " + j.dump());
    auto e = j[v].get<long long>();
    if (e < INT32_MIN || e > INT32_MAX) throw InputError("exponent out of range in " + j.dump());
    d[v] = static_cast<Multidegree::value_type>(e);
  }
  return d;
}

MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
    throw InputError("ideal file needs \"n\" and \"generators\"");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) throw InputError("\"n\" must be a positive integer");
  const auto n = j["n"].get<std::size_t>();
  if (!j["generators"].is_array()) throw InputError("\"generators\" must be an array");
  std::vector<Monomial> gens;
  for (const auto& g : j["generators"]) {
    Multidegree d = multidegree_from_json(g, n);
    if (!d.is_nonnegative()) throw InputError("negative exponent in generator " + g.dump());
    if (d.is_zero()) throw InputError("the zero exponent vector (the unit monomial) is not allowed as a generator");
    gens.emplace_back(d);
  }
  return MonomialIdeal(n, std::move(gens));
}

Json ideal_to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& u : ideal.generators()) gens.push_back(to_json(u.degree()));
  return Json{{"n", ideal.n()}, {"generators", gens}};
}

MonomialIdeal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return ideal_from_json(j);
}

Json complex_to_json(const FreeComplex& c) {
  Json ranks = Json::array(), degrees = Json::array(), labels = Json::array(), diffs = Json::array();
  for (std::size_t p = 0; p <= c.length(); ++p) {
    ranks.push_back(c.rank(p));
    Json deg = Json::array(), lab = Json::array();
    for (const auto& e : c.basis(p).elements()) {
      deg.push_back(to_json(e.degree));
      lab.push_back(e.label);
    }
    degrees.push_back(deg);
    labels.push_back(lab);
  }
  for (std::size_t p = 1; p <= c.length(); ++p) {
    const ScalarMatrix& d = c.differential(p);
    Json cols = Json::array();
    for (std::size_t col = 0; col < d.cols(); ++col) {
      Json terms = Json::array();
      for (const auto& [row, coeff] : d.column(col))
        terms.push_back({{"row", row},
                         {"coeff", to_string(coeff)},
                         {"monomial", to_json(c.basis(p).degree(col) - c.basis(p - 1).degree(row))}});
      cols.push_back(terms);
    }
    diffs.push_back(cols);
  }
  return Json{{"n", c.n()},         {"kind", c.kind()},     {"minimal", c.flagged_minimal()},
              {"ranks", ranks},     {"degrees", degrees},   {"labels", labels},
              {"differentials", diffs}, {"notes", c.notes()}};
}

FreeComplex complex_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const Json& degrees = j.at("degrees");
    std::vector<OrderedBasis> bases;
    for (std::size_t p = 0; p < degrees.size(); ++p) {
      std::vector<BasisElement> elems;
      for (std::size_t k = 0; k < degrees[p].size(); ++k) {
        std::string label = j.contains("labels") ? j["labels"][p][k].get<std::string>() : std::to_string(k + 1);
        elems.push_back({multidegree_from_json(degrees[p][k], n), label});
      }
      bases.emplace_back(n, std::move(elems));
    }
    std::vector<ScalarMatrix> diffs;
    const Json& dj = j.at("differentials");
    if (dj.size() + 1 != bases.size() && !(bases.empty() && dj.empty()))
      throw InputError("complex needs one differential per positive homological degree");
    for (std::size_t p = 1; p < bases.size(); ++p) {
      ScalarMatrix m(bases[p - 1].size(), bases[p].size());
      const Json& cols = dj[p - 1];
      if (cols.size() != bases[p].size()) throw InputError("differential d_" + std::to_string(p) + " has wrong width");
      for (std::size_t col = 0; col < cols.size(); ++col)
        for (const auto& t : cols[col]) {
          auto row = t.at("row").get<std::size_t>();
          if (row >= bases[p - 1].size()) throw InputError("row index out of range in d_" + std::to_string(p));
          Multidegree mono = multidegree_from_json(t.at("monomial"), n);
          if (!(mono == bases[p].degree(col) - bases[p - 1].degree(row)))
            throw InputError("entry of d_" + std::to_string(p) + " is not multihomogeneous");
          m.add(row, col, parse_rational(t.at("coeff").get<std::string>()));
        }
      diffs.push_back(std::move(m));
    }
    FreeComplex c(n, std::move(bases), std::move(diffs), j.value("kind", std::string("complex")));
    c.set_flagged_minimal(j.value("minimal", false));
    if (j.contains("notes"))
      for (const auto& note : j["notes"]) c.add_note(note.get<std::string>());
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed complex JSON: ") + e.what());
  }
}

Json initial_module_to_json(const InitialModule& ini, const OrderedBasis& basis) {
  if (basis.size() != ini.rank()) throw InputError("basis does not match the initial module");
  Json out = Json::array();
  for (std::size_t j = 0; j < ini.rank(); ++j) {
    Json gens = Json::array();
    for (const auto& u : ini.components[j].generators()) gens.push_back(to_json(u.degree()));
    out.push_back({{"position", j + 1},
                   {"label", basis[j].label},
                   {"degree", to_json(basis.degree(j))},
                   {"generators", gens}});
  }
  return out;
}

Json intervals_to_json(const std::vector<Interval>& iv) {
  Json out = Json::array();
  for (const auto& x : iv) out.push_back({{"a", to_json(x.a)}, {"b", to_json(x.b)}});
  return out;
}

std::vector<Interval> intervals_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) throw InputError("intervals must be an array");
  std::vector<Interval> out;
  for (const auto& x : j) {
    if (!x.is_object() || !x.contains("a") || !x.contains("b")) throw InputError("interval needs \"a\" and \"b\"");
    out.push_back({multidegree_from_json(x["a"], n), multidegree_from_json(x["b"], n)});
  }
  return out;
}

Json certificate_to_json(const SdepthResult& r) {
  Json out{{"sdepth", r.sdepth}, {"g", to_json(r.cap)}, {"intervals", intervals_to_json(r.partition)}};
  out["value_rule"] = "number of coordinates j with b_j = g_j";
  if (r.free_variables) out["free_variables"] = r.free_variables;
  if (r.empty_module) out["empty_module"] = true;
  return out;
}

Json block_structure_to_json(const BlockStructure& s) {
  Json blocks = Json::array();
  for (const auto& b : s.blocks) blocks.push_back({{"B", b.b}, {"G", b.g}});
  return Json{{"A", s.a}, {"delta", to_string(s.delta)}, {"blocks", blocks}};
}

Json sqfree_partition_to_json(const SqfreePartition& p) {
  return Json{{"n", p.n},
              {"s", p.s},
              {"r", p.r},
              {"value", p.value},
              {"g", Json(std::vector<int>(p.n, 1))},
              {"intervals", intervals_to_json(to_intervals(p.n, p.intervals))}};
}

Json report_to_json(const Report& r) {
  return Json{{"theorem", r.theorem}, {"instance", r.instance}, {"trial", r.trial},
              {"p", r.p},             {"status", r.pass ? "PASS" : "FAIL"}, {"witness", r.witness}};
}

}  // namespace syzdepth
