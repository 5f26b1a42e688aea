#include "syzygy_initial.hpp"

#include <algorithm>

namespace syzdepth {

MonomialIdeal taylor_initial_component(std::span<const Monomial> u, std::span<const std::size_t> subset) {
  if (subset.empty()) throw InputError("taylor_initial_component needs a nonempty subset");
  if (u.empty()) throw InputError("no generators");
  const std::size_t n = u.front().size();
  Monomial uf(n);
  for (auto i : subset) {
    if (i < 1 || i > u.size()) throw InputError("subset element out of range");
    uf = lcm(uf, u[i - 1]);
  }
  const std::size_t lo = *std::min_element(subset.begin(), subset.end());
  std::vector<Monomial> gens;
  for (std::size_t i = 1; i < lo; ++i) gens.push_back(*divide(lcm(uf, u[i - 1]), uf));
  return MonomialIdeal(n, minimalize(std::move(gens)));
}

InitialModule taylor_initial_module(std::span<const Monomial> u, std::size_t p) {
  if (u.empty()) throw InputError("no generators");
  InitialModule ini;
  ini.n = u.front().size();
  if (p == 0) {
    ini.components.push_back(MonomialIdeal(ini.n, std::vector<Monomial>(u.begin(), u.end())).minimal());
    return ini;
  }
  for (const auto& f : taylor_subsets(u.size(), p)) ini.components.push_back(taylor_initial_component(u, f));
  return ini;
}

InitialModule oracle_initial_module(const FreeComplex& c, std::size_t p, bool cross_check) {
  return initial_module(boundary_generators(c, p), c.rank(p), c.n(), MonomialOrder::lex, cross_check);
}

BoundaryGBReport verify_boundary_gb(const FreeComplex& c, std::size_t p,
                                    std::optional<std::span<const Monomial>> taylor_gens) {
  BoundaryGBReport rep;
  rep.p = p;
  auto gens = boundary_generators(c, p);
  rep.boundary = leading_term_module<Rational>(gens, c.rank(p), c.n(), MonomialOrder::lex);
  rep.oracle = initial_module(gens, c.rank(p), c.n());
  rep.equal = rep.boundary == rep.oracle;
  if (taylor_gens) {
    if (c.rank(1) != taylor_gens->size())
      throw InputError("complex does not look like the Taylor complex on the given generators");
    rep.closed_form = taylor_initial_module(*taylor_gens, p);
    if (rep.closed_form->rank() != c.rank(p)) throw InputError("Taylor rank mismatch at p=" + std::to_string(p));
    rep.equal = rep.equal && *rep.closed_form == rep.oracle;
  }
  return rep;
}

namespace {

// Cycles of d_i, i >= 1, or the resolved module for i = 0.
std::vector<ModuleVector<Rational>> cycles(const FreeComplex& c, std::size_t i) { return boundary_generators(c, i); }

}  // namespace

ComposedGB compose_cone_gb(const ConeInput& in, const FreeComplex& cone, std::size_t i,
                           std::span<const ModuleVector<Rational>> gb_f,
                           std::span<const ModuleVector<Rational>> gb_g) {
  if (i < 1) throw InputError("compose_cone_gb needs i >= 1");
  const std::size_t r = in.g.rank(i - 1);
  ComposedGB out;
  for (const auto& gamma : gb_g) {
    if (gamma.is_zero()) continue;
    auto deg = multidegree_of(gamma, in.g.basis(i - 1));
    if (!deg.degree) throw InputError("G Groebner basis element is not multihomogeneous");
    ModuleVector<Rational> target = -apply_map(in.phi.components.at(i - 1), in.g.basis(i - 1), in.f.basis(i - 1), gamma);
    ModuleVector<Rational> f;
    if (!target.is_zero()) {
      if (i > in.f.length())
        throw InputError("cannot lift " + gamma.to_string() + ": F ends before degree " + std::to_string(i));
      auto pre = preimage(in.f.differential(i), in.f.basis(i), in.f.basis(i - 1), target, *deg.degree);
      if (!pre) throw InputError("cannot lift " + gamma.to_string() + " through the cone: input not exact");
      f = *pre;
    }
    std::vector<Term<Rational>> terms(gamma.terms().begin(), gamma.terms().end());
    for (auto t : f.terms()) {
      t.position += r;
      terms.push_back(std::move(t));
    }
    out.generators.emplace_back(std::move(terms));
    ++out.lifted;
  }
  for (const auto& v : gb_f)
    if (!v.is_zero()) out.generators.push_back(v.shifted_positions(r));

  out.is_groebner = is_groebner_basis<Rational>(out.generators, MonomialOrder::lex);
  out.in_kernel = true;
  if (i <= cone.length())
    for (const auto& v : out.generators)
      if (!cone.apply(i, v).is_zero()) out.in_kernel = false;
  out.initial = leading_term_module<Rational>(out.generators, cone.rank(i), cone.n(), MonomialOrder::lex);
  out.matches_oracle = out.initial == initial_module(cycles(cone, i), cone.rank(i), cone.n());
  return out;
}

DirectSumReport verify_direct_sum(const ConeInput& in, const FreeComplex& cone, std::size_t i) {
  if (i < 1) throw InputError("the direct-sum identity is stated for i >= 1");
  DirectSumReport rep;
  rep.i = i;
  rep.cone = oracle_initial_module(cone, i);
  InitialModule g = oracle_initial_module(in.g, i - 1);
  InitialModule f = oracle_initial_module(in.f, i);
  rep.composed.n = cone.n();
  rep.composed.components = g.components;
  rep.composed.components.insert(rep.composed.components.end(), f.components.begin(), f.components.end());
  rep.equal = rep.cone == rep.composed;
  return rep;
}

std::vector<std::string> generators_using_first_variables(const InitialModule& ini, const OrderedBasis& basis,
                                                          std::size_t k) {
  std::vector<std::string> bad;
  for (std::size_t j = 0; j < ini.rank(); ++j)
    for (const auto& u : ini.components[j].generators())
      for (std::size_t v = 0; v < k && v < u.size(); ++v)
        if (u[v] > 0) {
          bad.push_back(u.to_string() + "*e" + std::to_string(j + 1) + " (" + basis[j].label + ")");
          break;
        }
  return bad;
}

TheoremReport verify_theorem_main(const FreeComplex& c, std::size_t p) {
  if (p > c.n()) throw InputError("p must lie in 0..n");
  TheoremReport rep;
  rep.p = p;
  FreeComplex sorted = c.lex_refined();
  rep.initial = oracle_initial_module(sorted, p);
  rep.violations = generators_using_first_variables(rep.initial, sorted.basis(p), p);
  rep.pass = rep.violations.empty();
  if (p == 0) rep.note = "p = 0 is vacuous; Z_0 is taken to be the resolved module";
  return rep;
}

GunnarReport verify_gunnar_step(const ScalarMatrix& phi, const OrderedBasis& source, const OrderedBasis& target,
                                std::size_t p) {
  if (phi.rows() != target.size() || phi.cols() != source.size()) throw InputError("map does not fit the bases");
  const std::size_t n = source.empty() ? target.n() : source.n();
  auto src = sort_lex_refined(source);
  auto dst = sort_lex_refined(target);
  ScalarMatrix m = phi.permuted(dst.new_of_old, src.new_of_old);

  std::vector<ModuleVector<Rational>> columns;
  for (std::size_t j = 0; j < src.basis.size(); ++j)
    columns.push_back(apply_map(m, src.basis, dst.basis, ModuleVector<Rational>::basis_vector(n, j)));

  GunnarReport rep;
  rep.p = p;
  rep.image = initial_module(columns, dst.basis.size(), n);
  if (p >= 1) {
    auto bad = generators_using_first_variables(rep.image, dst.basis, p - 1);
    if (!bad.empty()) throw InputError("ini of the image uses x_1..x_" + std::to_string(p - 1) + ": " + bad.front());
  }
  auto ker = kernel_groebner_basis<Rational>(columns, dst.basis.size(), n, MonomialOrder::lex);
  rep.kernel = leading_term_module<Rational>(ker, src.basis.size(), n, MonomialOrder::lex);
  rep.violations = generators_using_first_variables(rep.kernel, src.basis, p);
  rep.pass = rep.violations.empty();
  return rep;
}

}  // namespace syzdepth
