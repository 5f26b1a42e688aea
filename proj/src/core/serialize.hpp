#pragma once

#include "blocks.hpp"
#include "complex.hpp"
#include "groebner.hpp"
#include "ideal.hpp"
#include "stanley.hpp"

#include <json.hpp>

#include <string>

namespace syzdepth {

using Json = nlohmann::ordered_json;

Json to_json(const Multidegree& d);
Multidegree multidegree_from_json(const Json& j, std::size_t n);

// {"n": 3, "generators": [[1,1,0], ...]}. Rejects wrong lengths, negative
// entries and the zero vector.
MonomialIdeal ideal_from_json(const Json& j);
Json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal read_ideal_file(const std::string& path);

// {"n", "kind", "minimal", "ranks", "degrees", "labels", "differentials",
// "notes"}; differentials[p-1][c] lists the terms of d_p(e_c) as
// {"row", "coeff", "monomial"} with the coefficient as an exact "p/q" string.
Json complex_to_json(const FreeComplex& c);
FreeComplex complex_from_json(const Json& j);

// [{"position", "label", "degree", "generators"}], one entry per basis element.
Json initial_module_to_json(const InitialModule& ini, const OrderedBasis& basis);

Json certificate_to_json(const SdepthResult& r);
Json intervals_to_json(const std::vector<Interval>& iv);
std::vector<Interval> intervals_from_json(const Json& j, std::size_t n);

Json block_structure_to_json(const BlockStructure& s);
Json sqfree_partition_to_json(const SqfreePartition& p);

struct Report {
  std::string theorem;
  Json instance;
  std::size_t trial = 0;
  Json p;  // integer or null
  bool pass = true;
  Json witness;
};

Json report_to_json(const Report& r);

}  // namespace syzdepth
