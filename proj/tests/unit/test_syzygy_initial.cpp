#include <doctest.h>

#include "syzygy_initial.hpp"

#include <algorithm>
#include <random>

using namespace syzdepth;

namespace {

std::vector<Monomial> mons(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Monomial> out;
  for (auto r : rows) {
    std::vector<Multidegree::value_type> e(r.begin(), r.end());
    out.emplace_back(Multidegree(std::span<const Multidegree::value_type>(e)));
  }
  return out;
}

MonomialIdeal ideal(std::size_t n, std::vector<Monomial> g) { return MonomialIdeal(n, std::move(g)); }

std::vector<Monomial> random_gens(std::mt19937_64& rng, std::size_t n, std::size_t m, int cap) {
  std::uniform_int_distribution<int> e(0, cap);
  std::vector<Monomial> g;
  while (g.size() < m) {
    Multidegree d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = e(rng);
    if (!d.is_zero()) g.emplace_back(d);
  }
  return minimalize(g);
}

}  // namespace

TEST_CASE("closed form for Taylor initial components") {
  auto u = mons({{2, 0}, {1, 1}, {0, 2}});
  std::vector<std::size_t> f1{1, 3}, f3{3};
  CHECK(taylor_initial_component(u, f1).is_zero());
  CHECK(taylor_initial_component(u, f3) == ideal(2, mons({{1, 0}})));
  auto reg = mons({{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 1}});
  std::vector<std::size_t> f{3, 4};
  CHECK(taylor_initial_component(reg, f) == ideal(4, {reg[0], reg[1]}));
  CHECK_THROWS_AS(taylor_initial_component(u, std::vector<std::size_t>{}), InputError);
}

TEST_CASE("boundary Groebner bases") {
  auto u = mons({{2, 0}, {1, 1}, {0, 2}});
  auto t = taylor_complex(u);
  for (std::size_t p = 0; p <= 3; ++p) CHECK(verify_boundary_gb(t, p, std::span<const Monomial>(u)).equal);

  auto lex = t.lex_refined();
  auto rep = verify_boundary_gb(lex, 1);
  CHECK(rep.equal);
  std::vector<std::string> lts;
  for (const auto& v : boundary_generators(lex, 1)) {
    auto lt = v.leading_term();
    lts.push_back(lt.monomial.to_string() + "e" + std::to_string(lt.position + 1));
  }
  std::sort(lts.begin(), lts.end());
  CHECK(lts == std::vector<std::string>{"x2^2e1", "x2e1", "x2e2"});

  auto ek = eliahou_kervaire(ideal(2, u));
  for (std::size_t p = 0; p <= ek.length(); ++p) CHECK(verify_boundary_gb(ek, p).equal);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_gens(rng, 3, 4, 2);
    auto tc = taylor_complex(g);
    for (std::size_t p = 0; p <= tc.length(); ++p) CHECK(verify_boundary_gb(tc, p, std::span<const Monomial>(g)).equal);
  }
}

TEST_CASE("composing Groebner bases along a cone") {
  auto u = mons({{2, 0}, {1, 1}});
  auto in = taylor_cone_input(u);
  auto cone = mapping_cone(in.g, in.f, in.phi);
  auto gb_f = buchberger<Rational>(boundary_generators(in.f, 1), MonomialOrder::lex).generators;
  auto gb_g = buchberger<Rational>(boundary_generators(in.g, 0), MonomialOrder::lex).generators;
  auto comp = compose_cone_gb(in, cone, 1, gb_f, gb_g);
  CHECK(comp.is_groebner);
  CHECK(comp.in_kernel);
  CHECK(comp.matches_oracle);
  auto t = taylor_complex(u);
  CHECK(comp.initial == leading_term_module<Rational>(boundary_generators(t, 1), 2, 2, MonomialOrder::lex));

  // G = 0 in degree i - 1: the composed basis is gbF
  auto u3 = mons({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  auto in3 = taylor_cone_input(u3);
  auto cone3 = mapping_cone(in3.g, in3.f, in3.phi);
  auto f3 = buchberger<Rational>(boundary_generators(in3.f, 2), MonomialOrder::lex).generators;
  auto c3 = compose_cone_gb(in3, cone3, 3, f3, std::vector<ModuleVector<Rational>>{});
  CHECK(c3.generators.size() == f3.size());

  for (std::size_t i = 1; i <= cone3.length(); ++i) {
    auto ds = verify_direct_sum(in3, cone3, i);
    CHECK(ds.equal);
    auto gf = buchberger<Rational>(boundary_generators(in3.f, i), MonomialOrder::lex).generators;
    auto gg = buchberger<Rational>(boundary_generators(in3.g, i - 1), MonomialOrder::lex).generators;
    auto c = compose_cone_gb(in3, cone3, i, gf, gg);
    CHECK(c.is_groebner);
    CHECK(c.in_kernel);
    CHECK(c.matches_oracle);
    CHECK(c.initial == ds.composed);
  }
}

TEST_CASE("theorem on initial modules of syzygies") {
  auto k = koszul_complex(mons({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  auto r1 = verify_theorem_main(k, 1);
  CHECK(r1.pass);
  CHECK(r1.initial.components[0] == ideal(3, mons({{0, 1, 0}, {0, 0, 1}})));
  auto t = taylor_complex(mons({{2, 0}, {1, 1}, {0, 2}}));
  auto r2 = verify_theorem_main(t, 1);
  CHECK(r2.pass);
  CHECK(r2.initial.components[0] == ideal(2, mons({{0, 1}})));
  CHECK(r2.initial.components[1] == ideal(2, mons({{0, 1}})));
  auto r0 = verify_theorem_main(t, 0);
  CHECK(r0.pass);
  CHECK_FALSE(r0.note.empty());
  CHECK(verify_theorem_main(t, 2).pass);
  CHECK_THROWS_AS(verify_theorem_main(t, 3), InputError);
}

TEST_CASE("kernel step") {
  auto k = koszul_complex(mons({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  auto r = verify_gunnar_step(k.differential(1), k.basis(1), k.basis(0), 1);
  CHECK(r.pass);
  CHECK_FALSE(r.kernel.is_zero());

  ScalarMatrix id = ScalarMatrix::identity(2);
  OrderedBasis b(2, {{Multidegree{1, 0}, "a"}, {Multidegree{0, 1}, "b"}});
  auto inj = verify_gunnar_step(id, b, b, 1);
  CHECK(inj.pass);
  CHECK(inj.kernel.is_zero());

  auto t = taylor_complex(mons({{2, 0}, {1, 1}, {0, 2}}));
  auto rt = verify_gunnar_step(t.differential(1), t.basis(1), t.basis(0), 1);
  CHECK(rt.pass);
  CHECK_THROWS_AS(verify_gunnar_step(t.differential(1), t.basis(1), t.basis(0), 2), InputError);
}
