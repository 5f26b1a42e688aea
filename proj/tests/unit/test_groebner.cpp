#include <doctest.h>

#include "complex.hpp"
#include "groebner.hpp"

#include <random>

using namespace syzdepth;

namespace {

using V = ModuleVector<Rational>;
using T = Term<Rational>;

std::vector<Monomial> mons(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Monomial> out;
  for (auto r : rows) {
    std::vector<Multidegree::value_type> e(r.begin(), r.end());
    out.emplace_back(Multidegree(std::span<const Multidegree::value_type>(e)));
  }
  return out;
}

MonomialIdeal ideal(std::size_t n, std::vector<Monomial> g) { return MonomialIdeal(n, std::move(g)); }

V random_homogeneous(std::mt19937_64& rng, const OrderedBasis& b, const Multidegree& a) {
  std::uniform_int_distribution<int> coin(-2, 2);
  std::vector<T> terms;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b.degree(j).leq(a)) {
      int c = coin(rng);
      if (c != 0) terms.push_back(T{c, Monomial(a - b.degree(j)), j});
    }
  return V(std::move(terms));
}

}  // namespace

TEST_CASE("monomial generators are their own reduced basis") {
  std::vector<V> g{V({T{3, Monomial{2, 0}, 0}}), V({T{1, Monomial{1, 1}, 0}}), V({T{1, Monomial{2, 1}, 0}}),
                   V({T{-1, Monomial{0, 1}, 1}})};
  auto gb = buchberger<Rational>(g, MonomialOrder::lex);
  REQUIRE(gb.generators.size() == 3);
  CHECK(gb.generators[0] == V({T{1, Monomial{2, 0}, 0}}));
  CHECK(gb.generators[2] == V({T{1, Monomial{0, 1}, 1}}));
  auto single = buchberger<Rational>(std::vector<V>{V({T{2, Monomial{1, 0}, 0}, T{4, Monomial{0, 1}, 1}})},
                                     MonomialOrder::lex);
  REQUIRE(single.generators.size() == 1);
  CHECK(single.generators[0].leading_term().coefficient == 1);
  CHECK(single.generators[0].terms()[1].coefficient == 2);
}

TEST_CASE("coprime leading terms do not make a module S-vector redundant") {
  // f = x e1 + e2, g = y e1: the S-vector y e2 is irreducible.
  std::vector<V> g{V({T{1, Monomial{1, 0}, 0}, T{1, Monomial{0, 0}, 1}}), V({T{1, Monomial{0, 1}, 0}})};
  auto gb = buchberger<Rational>(g, MonomialOrder::lex);
  auto ini = leading_term_module<Rational>(gb.generators, 2, 2, MonomialOrder::lex);
  CHECK(ini.contains(Monomial{0, 1}, 1));
  CHECK(is_groebner_basis<Rational>(gb.generators, MonomialOrder::lex));
  CHECK_FALSE(is_groebner_basis<Rational>(g, MonomialOrder::lex));
}

TEST_CASE("initial module of Koszul syzygies") {
  auto k = koszul_complex(mons({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).lex_refined();
  REQUIRE(k.basis(1).degree(0) == Multidegree{1, 0, 0});
  auto z1 = syzygy_generators(k, 1);
  auto gb = buchberger<Rational>(z1, MonomialOrder::lex);
  auto ini = leading_term_module<Rational>(gb.generators, 3, 3, MonomialOrder::lex);
  CHECK(ini.components[0] == ideal(3, mons({{0, 1, 0}, {0, 0, 1}})));
  CHECK(ini.components[1] == ideal(3, mons({{0, 0, 1}})));
  CHECK(ini.components[2].is_zero());
  CHECK(initial_module(z1, 3, 3, MonomialOrder::lex, true) == ini);

  Multidegree box{2, 2, 2};
  CHECK(hilbert_slice_check(z1, ini, k.basis(1), box).ok);
  auto broken = ini;
  broken.components[1] = MonomialIdeal(3);
  auto bad = hilbert_slice_check(z1, broken, k.basis(1), box);
  CHECK_FALSE(bad.ok);
  CHECK(bad.first_failure == Multidegree{0, 1, 1});
  CHECK(is_squarefree_module(ini, k.basis(1)));
}

TEST_CASE("initial module of Taylor syzygies in Taylor order") {
  auto t = taylor_complex(mons({{2, 0}, {1, 1}, {0, 2}}));
  auto ini = initial_module(syzygy_generators(t, 1), 3, 2);
  CHECK(ini.components[0] == ideal(2, mons({{1, 0}})));  // e3
  CHECK(ini.components[1] == ideal(2, mons({{1, 0}})));  // e2
  CHECK(ini.components[2].is_zero());                    // e1
}

TEST_CASE("zero and squarefree edge cases") {
  OrderedBasis b(2, {{Multidegree{0, 0}, "e"}});
  InitialModule zero{2, {MonomialIdeal(2)}};
  CHECK(hilbert_slice_check(std::vector<V>{}, zero, b, Multidegree{1, 1}).ok);
  CHECK(is_squarefree_module(zero, b));
  InitialModule sq{2, {ideal(2, mons({{2, 0}}))}};
  CHECK_FALSE(is_squarefree_module(sq, b));
  CHECK(initial_module(std::vector<V>{}, 1, 2).is_zero());
}

TEST_CASE("random multihomogeneous modules") {
  std::mt19937_64 rng(5);
  OrderedBasis b(3, {{Multidegree{1, 0, 0}, "a"}, {Multidegree{0, 1, 0}, "b"}, {Multidegree{0, 0, 1}, "c"},
                     {Multidegree{1, 1, 0}, "d"}});
  std::uniform_int_distribution<int> e(0, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<V> gens;
    for (int k = 0; k < 4; ++k) {
      Multidegree a{1 + e(rng), 1 + e(rng), e(rng)};
      gens.push_back(random_homogeneous(rng, b, a));
    }
    BuchbergerStats st;
    auto gb = buchberger<Rational>(gens, MonomialOrder::lex, &st);
    CHECK(is_groebner_basis<Rational>(gb.generators, MonomialOrder::lex));
    for (const auto& g : gens) CHECK(reduce<Rational>(g, gb.generators).is_zero());
    auto ini = leading_term_module<Rational>(gb.generators, 4, 3, MonomialOrder::lex);
    auto gb2 = buchberger<Rational>(gens, MonomialOrder::degrevlex);
    CHECK(leading_term_module<Rational>(gb2.generators, 4, 3, MonomialOrder::degrevlex) == ini);
    CHECK(hilbert_slice_check(gens, ini, b, Multidegree{3, 3, 3}).ok);

    // same leading terms over the prime field
    std::vector<ModuleVector<Mersenne31>> modp;
    for (const auto& g : gens) modp.push_back(convert_coefficients<Rational, Mersenne31>(g));
    auto gbp = buchberger<Mersenne31>(modp, MonomialOrder::lex);
    CHECK(leading_term_module<Mersenne31>(gbp.generators, 4, 3, MonomialOrder::lex) == ini);
  }
}

TEST_CASE("kernels through the graph module") {
  // columns x1, x2, x3 of S -> S: kernel is the Koszul syzygy module
  std::vector<V> cols{V({T{1, Monomial{1, 0, 0}, 0}}), V({T{1, Monomial{0, 1, 0}, 0}}),
                      V({T{1, Monomial{0, 0, 1}, 0}})};
  auto ker = kernel_groebner_basis<Rational>(cols, 1, 3, MonomialOrder::lex);
  auto ini = leading_term_module<Rational>(ker, 3, 3, MonomialOrder::lex);
  CHECK(ini.components[0] == ideal(3, mons({{0, 1, 0}, {0, 0, 1}})));
  CHECK(ini.components[1] == ideal(3, mons({{0, 0, 1}})));
  CHECK(is_groebner_basis<Rational>(ker, MonomialOrder::lex));
  // injective map: kernel zero
  std::vector<V> inj{V({T{1, Monomial{1, 0, 0}, 0}}), V({T{1, Monomial{0, 1, 0}, 1}})};
  CHECK(kernel_groebner_basis<Rational>(inj, 2, 3, MonomialOrder::lex).empty());
}
