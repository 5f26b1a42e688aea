#pragma once

#include "complex.hpp"
#include "groebner.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace syzdepth {

// I_F = (u_{F+i} / u_F : i < min F), minimalized. F is 1-based and nonempty.
MonomialIdeal taylor_initial_component(std::span<const Monomial> u, std::span<const std::size_t> subset);

// (+)_F I_F over the Taylor basis of F_p in Taylor order. For p = 0 the
// single component is the ideal (u_1..u_m) itself.
InitialModule taylor_initial_module(std::span<const Monomial> u, std::size_t p);

// Z_p = image of d_{p+1} (Z_0 is the resolved module).
InitialModule oracle_initial_module(const FreeComplex& c, std::size_t p, bool cross_check = false);

struct BoundaryGBReport {
  std::size_t p = 0;
  InitialModule boundary;                   // generated by leading terms of d_{p+1}(basis)
  InitialModule oracle;                     // Buchberger on the same generators
  std::optional<InitialModule> closed_form;  // Taylor complexes only
  bool equal = false;                       // all available modules agree
};

// Leading terms of the boundaries against the oracle, in the complex's own
// basis order. Pass the generators when c is the raw Taylor complex on them.
BoundaryGBReport verify_boundary_gb(const FreeComplex& c, std::size_t p,
                                    std::optional<std::span<const Monomial>> taylor_gens = std::nullopt);

struct ComposedGB {
  std::vector<ModuleVector<Rational>> generators;  // in C_i = G_{i-1} (+) F_i
  std::size_t lifted = 0;                          // number of lifted G elements (placed first)
  bool is_groebner = false;
  bool in_kernel = false;
  bool matches_oracle = false;
  InitialModule initial;
};

// Groebner basis of Z_i(C) from Groebner bases of Z_i(F) and Z_{i-1}(G),
// lifting each G element through the cone differential. i >= 1.
ComposedGB compose_cone_gb(const ConeInput& in, const FreeComplex& cone, std::size_t i,
                           std::span<const ModuleVector<Rational>> gb_f,
                           std::span<const ModuleVector<Rational>> gb_g);

struct DirectSumReport {
  std::size_t i = 0;
  InitialModule cone;
  InitialModule composed;  // ini Z_{i-1}(G) (+) ini Z_i(F)
  bool equal = false;
};

// ini Z_i(C) = ini Z_{i-1}(G) (+) ini Z_i(F) with the composed basis order.
DirectSumReport verify_direct_sum(const ConeInput& in, const FreeComplex& cone, std::size_t i);

// Minimal generators of ini that involve one of x_1..x_k.
std::vector<std::string> generators_using_first_variables(const InitialModule& ini, const OrderedBasis& basis,
                                                          std::size_t k);

struct TheoremReport {
  std::size_t p = 0;
  bool pass = true;
  InitialModule initial;
  std::vector<std::string> violations;
  std::string note;
};

// Re-sorts every basis lex-refined and checks that each minimal generator of
// ini(Z_p) avoids x_1..x_p.
TheoremReport verify_theorem_main(const FreeComplex& c, std::size_t p);

struct GunnarReport {
  std::size_t p = 0;
  bool pass = true;
  InitialModule image;
  InitialModule kernel;
  std::vector<std::string> violations;
};

// phi : F -> G given by its matrix and both bases. Requires ini(Im phi) to
// avoid x_1..x_{p-1} under the lex-refined G basis and checks that ini(Ker phi)
// avoids x_1..x_p under the lex-refined F basis.
GunnarReport verify_gunnar_step(const ScalarMatrix& phi, const OrderedBasis& source, const OrderedBasis& target,
                                std::size_t p);

}  // namespace syzdepth
