#include <doctest.h>

#include "complex.hpp"

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

std::size_t label_index(const FreeComplex& c, std::size_t p, const std::string& label) {
  for (std::size_t i = 0; i < c.rank(p); ++i)
    if (c.basis(p)[i].label == label) return i;
  FAIL("missing label " << label);
  return 0;
}

void check_resolves(const FreeComplex& c, const MonomialIdeal& i) {
  auto ok = check_complex(c);
  INFO(ok.message);
  CHECK(ok.ok);
  auto rep = check_resolution(c, i);
  CHECK(rep.ok());
}

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

TEST_CASE("taylor subsets come in cone order") {
  auto s = taylor_subsets(3, 2);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == std::vector<std::size_t>{2, 3});
  CHECK(s[1] == std::vector<std::size_t>{1, 3});
  CHECK(s[2] == std::vector<std::size_t>{1, 2});
  CHECK(taylor_subsets(3, 1).front() == std::vector<std::size_t>{3});
  CHECK(taylor_subsets(4, 0).size() == 1);
  CHECK(taylor_subsets(2, 3).empty());
}

TEST_CASE("taylor complex") {
  auto one = mons({{2, 0}});
  auto t1 = taylor_complex(one);
  CHECK(t1.ranks() == std::vector<std::size_t>{1, 1});
  CHECK(t1.basis(1).degree(0) == Multidegree{2, 0});
  CHECK(t1.differential(1).at(0, 0) == 1);
  CHECK(t1.boundary(1, 0).leading_term().monomial == Monomial{2, 0});

  auto reg = mons({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto t = taylor_complex(reg);
  CHECK(t.ranks() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK_FALSE(t.has_unit_entries());
  auto k = koszul_complex(reg);
  CHECK(k.flagged_minimal());
  CHECK(k.notes().empty());
  for (std::size_t p = 1; p <= 3; ++p) CHECK(k.differential(p) == t.differential(p));

  auto tri = mons({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  auto tt = taylor_complex(tri);
  CHECK(tt.differential(3).at(label_index(tt, 2, "{1,2}"), 0) == 1);
  CHECK(tt.has_unit_entries());
  check_resolves(tt, ideal(3, tri));

  CHECK_THROWS_AS(taylor_complex(mons({{1, 0}, {0, 0}})), InputError);
  CHECK_THROWS_AS(taylor_complex(std::vector<Monomial>{}), InputError);
}

TEST_CASE("koszul complex") {
  auto k = koszul_complex(mons({{1, 0}, {0, 1}}));
  // d_2(e12) = x1 e2 - x2 e1, e2 is position 0
  auto b = k.boundary(2, 0);
  REQUIRE(b.size() == 2);
  CHECK(b.terms()[0].position == label_index(k, 1, "{2}"));
  CHECK(b.terms()[0].monomial == Monomial{1, 0});
  CHECK(b.terms()[0].coefficient == 1);
  CHECK(b.terms()[1].monomial == Monomial{0, 1});
  CHECK(b.terms()[1].coefficient == -1);

  auto k4 = koszul_complex(mons({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(k4.ranks() == std::vector<std::size_t>{1, 4, 6, 4, 1});

  auto sq = koszul_complex(mons({{2, 0}, {0, 3}}));
  CHECK(sq.flagged_minimal());
  CHECK_FALSE(sq.has_unit_entries());

  auto bad = koszul_complex(mons({{1, 1}, {0, 1}}));
  CHECK_FALSE(bad.flagged_minimal());
  CHECK(bad.notes().size() == 1);

  auto kx = koszul_complex(mons({{1, 0}, {0, 1}}));
  auto rep = check_exactness_on_box(kx, ideal_as_vectors(ideal(2, mons({{1, 0}, {0, 1}}))), Multidegree{2, 2});
  CHECK(rep.ok());
  CHECK(rep.degrees_checked == 9);
}

TEST_CASE("mapping cone") {
  auto f = FreeComplex(2, {OrderedBasis(2, {{Multidegree{0, 0}, "1"}})}, {});
  auto g = FreeComplex(2, {OrderedBasis(2, {{Multidegree{1, 1}, "u"}})}, {});
  ChainMap phi{{ScalarMatrix::identity(1)}};
  auto c = mapping_cone(g, f, phi);
  CHECK(c.ranks() == std::vector<std::size_t>{1, 1});
  CHECK(c.basis(1)[0].label == "G:u");
  CHECK(c.boundary(1, 0).leading_term().monomial == Monomial{1, 1});
  check_resolves(c, ideal(2, mons({{1, 1}})));

  ChainMap wrong{{ScalarMatrix(1, 1)}};
  wrong.components[0].set(0, 0, Rational(1));
  auto g2 = taylor_complex(mons({{1, 0}})).shifted(Multidegree{0, 1});
  ChainMap bad{{ScalarMatrix::identity(1), ScalarMatrix(0, 1)}};
  // phi_0 d_G != 0 while phi_1 = 0 maps into F_1 = 0
  CHECK_THROWS_WITH_AS(mapping_cone(g2, f, bad), doctest::Contains("does not commute"), InputError);
}

TEST_CASE("cone of the canonical Taylor comparison map reproduces the Taylor complex") {
  std::vector<std::vector<Monomial>> cases{mons({{2, 0}, {1, 1}}), mons({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}),
                                           mons({{2, 0, 1}, {0, 3, 0}, {1, 1, 1}, {0, 0, 2}})};
  for (const auto& u : cases) {
    auto in = taylor_cone_input(u);
    auto cone = mapping_cone(in.g, in.f, in.phi);
    auto t = taylor_complex(u);
    REQUIRE(cone.ranks() == t.ranks());
    // G-part elements of C_i carry the sign (-1)^(i-1); otherwise identical.
    auto sign = [&](std::size_t i, std::size_t k) {
      return (i >= 1 && k < in.g.rank(i - 1) && (i - 1) % 2 == 1) ? -1 : 1;
    };
    for (std::size_t i = 1; i <= t.length(); ++i) {
      CHECK(cone.basis(i).elements().size() == t.rank(i));
      for (std::size_t c = 0; c < t.rank(i); ++c) {
        CHECK(cone.basis(i).degree(c) == t.basis(i).degree(c));
        for (std::size_t r = 0; r < t.rank(i - 1); ++r)
          CHECK(cone.differential(i).at(r, c) * sign(i, c) * sign(i - 1, r) == t.differential(i).at(r, c));
      }
    }
  }
}

TEST_CASE("linear quotients") {
  auto lq = linear_quotients(mons({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(lq.ok);
  CHECK(lq.variables == std::vector<std::vector<std::size_t>>{{0}, {0, 1}});
  auto two = linear_quotients(mons({{1, 1, 0}, {0, 1, 1}}));
  CHECK(two.ok);
  CHECK(two.variables.front() == std::vector<std::size_t>{0});
  auto fail = linear_quotients(mons({{1, 1, 0, 0}, {0, 0, 1, 1}}));
  CHECK_FALSE(fail.ok);
  CHECK(fail.failure_index == 1);
  CHECK_THROWS_AS(linear_quotients(mons({{2, 0}, {1, 0}})), InputError);
}

TEST_CASE("stable ideals") {
  auto i = ideal(2, mons({{0, 2}, {1, 1}, {2, 0}}));
  CHECK(is_stable(i));
  CHECK(stable_order(i) == mons({{2, 0}, {1, 1}, {0, 2}}));
  auto v = stability_violation(ideal(2, mons({{0, 1}})));
  REQUIRE(v);
  CHECK(v->missing == Monomial{1, 0});
  CHECK(is_stable(ideal(2, mons({{1, 0}}))));
  auto cl = stable_closure(ideal(3, mons({{0, 1, 1}})));
  CHECK(is_stable(cl));
  CHECK(cl.contains(Monomial{2, 0, 0}));
  CHECK(cl.contains(Monomial{0, 1, 1}));
}

TEST_CASE("eliahou-kervaire") {
  auto e1 = eliahou_kervaire(ideal(2, mons({{1, 0}})));
  CHECK(e1.ranks() == std::vector<std::size_t>{1, 1});

  auto i = ideal(2, mons({{2, 0}, {1, 1}, {0, 2}}));
  auto ek = eliahou_kervaire(i);
  CHECK(ek.ranks() == std::vector<std::size_t>{1, 3, 2});
  CHECK(ek.flagged_minimal());
  check_resolves(ek, i);

  auto m3 = MonomialIdeal::maximal(3);
  auto ekm = eliahou_kervaire(m3);
  CHECK(ekm.ranks() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(ekm.flagged_minimal());
  check_resolves(ekm, m3);

  CHECK_THROWS_WITH_AS(eliahou_kervaire(ideal(2, mons({{0, 1}}))), doctest::Contains("not stable"), InputError);
  auto step = eliahou_kervaire_step(i, 2);
  CHECK(step.g.ranks() == std::vector<std::size_t>{1, 1});
  CHECK(step.f.ranks() == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("eliahou-kervaire on random stable closures") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 2 + trial % 3;
    auto i = stable_closure(MonomialIdeal(n, random_gens(rng, n, 3, 2)));
    auto ek = eliahou_kervaire(i);
    CHECK(ek.flagged_minimal());
    auto lq = linear_quotients(stable_order(i));
    REQUIRE(lq.ok);
    std::size_t total = 1 + 1;
    for (const auto& l : lq.variables) total += std::size_t{1} << l.size();
    std::size_t sum = 0;
    for (auto r : ek.ranks()) sum += r;
    CHECK(sum == total);
    check_resolves(ek, i);
  }
}

TEST_CASE("syzygy generators") {
  auto k = koszul_complex(mons({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  auto z1 = syzygy_generators(k, 1);
  CHECK(z1.size() == 3);
  auto t = taylor_complex(mons({{2, 0}, {1, 1}, {0, 2}}));
  auto tz = syzygy_generators(t, 1);
  REQUIRE(tz.size() == 3);
  // d_2 e_{23} = x1 e3 - x2 e2 in Taylor order e3 > e2 > e1
  CHECK(tz[0].leading_term().monomial == Monomial{1, 0});
  CHECK(tz[0].leading_term().position == 0);
  CHECK(syzygy_generators(t, 3).empty());
  CHECK_THROWS_AS(syzygy_generators(t, 0), InputError);
  CHECK(boundary_generators(t, 0).size() == 3);
}

TEST_CASE("minimize") {
  auto reg = taylor_complex(mons({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  auto mreg = minimize(reg);
  CHECK(mreg.ranks() == reg.ranks());
  for (std::size_t p = 0; p <= 3; ++p) CHECK(mreg.basis(p).is_lex_refined());

  auto tri = mons({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  auto mt = minimize(taylor_complex(tri));
  CHECK(mt.ranks() == std::vector<std::size_t>{1, 3, 2});
  CHECK_FALSE(mt.has_unit_entries());
  check_resolves(mt, ideal(3, tri));

  auto again = minimize(mt);
  CHECK(again.ranks() == mt.ranks());
  for (std::size_t p = 1; p <= mt.length(); ++p) CHECK(again.differential(p) == mt.differential(p));
}

TEST_CASE("exactness checks") {
  auto dup = mons({{1, 1}, {1, 1}, {0, 2}});
  check_resolves(taylor_complex(dup), ideal(2, dup));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_gens(rng, 3, 3, 2);
    auto i = MonomialIdeal(3, g);
    auto t = taylor_complex(g);
    check_resolves(t, i);
    check_resolves(minimize(t), i);
  }

  // corrupt one sign in d_2 of a Koszul complex
  auto u = mons({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto k = koszul_complex(u);
  std::vector<OrderedBasis> bases;
  std::vector<ScalarMatrix> diffs;
  for (std::size_t p = 0; p <= k.length(); ++p) bases.push_back(k.basis(p));
  for (std::size_t p = 1; p <= k.length(); ++p) diffs.push_back(k.differential(p));
  diffs[1].set(0, 0, -diffs[1].at(0, 0));
  FreeComplex broken(3, bases, diffs);
  CHECK_FALSE(check_complex(broken).ok);
  auto rep = check_resolution(broken, ideal(3, u));
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.failures.front().degree.total() == 2);
}
