#include "groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace syzdepth {

namespace {

template <class K>
struct Reducer {
  std::span<const ModuleVector<K>> basis;
  std::map<std::size_t, std::vector<std::size_t>> by_position;

  explicit Reducer(std::span<const ModuleVector<K>> b) : basis(b) {
    for (std::size_t i = 0; i < b.size(); ++i)
      if (!b[i].is_zero()) by_position[b[i].leading_term().position].push_back(i);
  }

  std::optional<std::size_t> divisor(const Term<K>& t) const {
    auto it = by_position.find(t.position);
    if (it == by_position.end()) return std::nullopt;
    for (auto i : it->second)
      if (divides(basis[i].leading_term().monomial, t.monomial)) return i;
    return std::nullopt;
  }

  ModuleVector<K> normal_form(ModuleVector<K> p) const {
    ModuleVector<K> r(p.order());
    while (!p.is_zero()) {
      const Term<K>& t = p.leading_term();
      if (auto i = divisor(t)) {
        const auto& g = basis[*i];
        const auto& lt = g.leading_term();
        K c = t.coefficient / lt.coefficient;
        p.add_multiple(-c, *divide(t.monomial, lt.monomial), g);
      } else {
        r.append_smaller(p.take_leading());
      }
    }
    return r;
  }
};

template <class K>
ModuleVector<K> s_vector(const ModuleVector<K>& f, const ModuleVector<K>& g) {
  const auto& a = f.leading_term();
  const auto& b = g.leading_term();
  Monomial l = lcm(a.monomial, b.monomial);
  ModuleVector<K> s = f.scaled(K(1) / a.coefficient, *divide(l, a.monomial));
  s.add_multiple(K(-1) / b.coefficient, *divide(l, b.monomial), g);
  return s;
}

struct PairKey {
  std::int64_t total;
  Multidegree lcm;
  std::size_t i, j;

  bool operator<(const PairKey& o) const {
    if (total != o.total) return total < o.total;
    auto c = lex_compare(lcm, o.lcm);
    if (c != 0) return c < 0;
    return std::tie(j, i) < std::tie(o.j, o.i);
  }
};

}  // namespace

template <class K>
ModuleVector<K> reduce(const ModuleVector<K>& v, std::span<const ModuleVector<K>> basis) {
  Reducer<K> r(basis);
  return r.normal_form(v);
}

template <class K>
GroebnerBasis<K> buchberger(std::span<const ModuleVector<K>> input, MonomialOrder order,
                            BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  std::vector<ModuleVector<K>> g;
  g.reserve(input.size() * 2);
  std::set<PairKey> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_ids;

  auto pair_key = [&](std::size_t i, std::size_t j) {
    Monomial l = lcm(g[i].leading_term().monomial, g[j].leading_term().monomial);
    return PairKey{l.total_degree(), l.degree(), i, j};
  };
  auto insert = [&](ModuleVector<K> v) {
    v = reduce<K>(v, g);
    if (v.is_zero()) {
      ++st.zero_reductions;
      return;
    }
    g.push_back(v.monic());
    const std::size_t k = g.size() - 1;
    for (std::size_t i = 0; i < k; ++i)
      if (g[i].leading_term().position == g[k].leading_term().position) {
        pending.insert(pair_key(i, k));
        pending_ids.insert({i, k});
      }
  };

  for (const auto& v : input) {
    if (v.is_zero()) continue;
    insert(v.with_order(order));
  }

  while (!pending.empty()) {
    PairKey key = *pending.begin();
    pending.erase(pending.begin());
    pending_ids.erase({key.i, key.j});
    ++st.pairs_considered;

    // Chain criterion: some h with lm(h) | lcm whose pairs with i and j are
    // both already treated makes this pair redundant.
    const auto& ti = g[key.i].leading_term();
    Monomial l(key.lcm);
    bool skip = false;
    for (std::size_t h = 0; h < g.size() && !skip; ++h) {
      if (h == key.i || h == key.j) continue;
      const auto& th = g[h].leading_term();
      if (th.position != ti.position || !divides(th.monomial, l)) continue;
      auto id = [](std::size_t a, std::size_t b) { return std::pair{std::min(a, b), std::max(a, b)}; };
      if (!pending_ids.count(id(h, key.i)) && !pending_ids.count(id(h, key.j))) skip = true;
    }
    if (skip) {
      ++st.pairs_skipped;
      continue;
    }
    insert(s_vector(g[key.i], g[key.j]));
  }

  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<ModuleVector<K>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& ti = g[i].leading_term();
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& tj = g[j].leading_term();
      if (tj.position != ti.position || !divides(tj.monomial, ti.monomial)) continue;
      if (!(tj.monomial == ti.monomial) || j < i) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // Tail-reduce each element against the others.
  std::vector<ModuleVector<K>> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    ModuleVector<K> v = minimal[i];
    Term<K> lead = v.take_leading();
    std::vector<ModuleVector<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    ModuleVector<K> tail = reduce<K>(v, others);
    std::vector<Term<K>> terms{lead};
    terms.insert(terms.end(), tail.terms().begin(), tail.terms().end());
    out.push_back(ModuleVector<K>(std::move(terms), order).monic());
  }
  std::sort(out.begin(), out.end(), [&](const ModuleVector<K>& a, const ModuleVector<K>& b) {
    const auto& x = a.leading_term();
    const auto& y = b.leading_term();
    return compare_pot(order, x.monomial, x.position, y.monomial, y.position) > 0;
  });
  return GroebnerBasis<K>{std::move(out), order, true};
}

template <class K>
bool is_groebner_basis(std::span<const ModuleVector<K>> gens, MonomialOrder order) {
  std::vector<ModuleVector<K>> g;
  for (const auto& v : gens)
    if (!v.is_zero()) g.push_back(v.with_order(order));
  Reducer<K> r(g);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[i].leading_term().position != g[j].leading_term().position) continue;
      if (!r.normal_form(s_vector(g[i], g[j])).is_zero()) return false;
    }
  return true;
}

template <class K>
std::vector<ModuleVector<K>> kernel_groebner_basis(std::span<const ModuleVector<K>> columns,
                                                   std::size_t target_rank, std::size_t n,
                                                   MonomialOrder order) {
  std::vector<ModuleVector<K>> graph;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    std::vector<Term<K>> terms(columns[j].terms().begin(), columns[j].terms().end());
    for (const auto& t : terms)
      if (t.position >= target_rank) throw InputError("column has a term outside the target module");
    terms.push_back(Term<K>{K(1), Monomial(n), target_rank + j});
    graph.emplace_back(std::move(terms), order);
  }
  auto gb = buchberger<K>(graph, order);
  std::vector<ModuleVector<K>> kernel;
  for (const auto& v : gb.generators)
    if (v.leading_term().position >= target_rank) {
      std::vector<Term<K>> terms(v.terms().begin(), v.terms().end());
      for (auto& t : terms) t.position -= target_rank;
      kernel.emplace_back(std::move(terms), order);
    }
  return kernel;
}

template <class K>
InitialModule leading_term_module(std::span<const ModuleVector<K>> gens, std::size_t rank, std::size_t n,
                                  MonomialOrder order) {
  std::vector<std::vector<Monomial>> comp(rank);
  for (const auto& v : gens) {
    if (v.is_zero()) continue;
    auto t = leading_term(v, order);
    if (t.position >= rank) throw InputError("leading term outside the declared rank");
    comp[t.position].push_back(t.monomial);
  }
  InitialModule ini;
  ini.n = n;
  for (auto& c : comp) ini.components.emplace_back(n, minimalize(std::move(c)));
  return ini;
}

bool InitialModule::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const MonomialIdeal& i) { return i.is_zero(); });
}

bool InitialModule::contains(const Monomial& u, std::size_t position) const {
  return position < components.size() && components[position].contains(u);
}

bool operator==(const InitialModule& a, const InitialModule& b) {
  if (a.components.size() != b.components.size()) return false;
  for (std::size_t j = 0; j < a.components.size(); ++j)
    if (!(a.components[j] == b.components[j])) return false;
  return true;
}

std::string InitialModule::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < components.size(); ++j) {
    if (j) s += " + ";
    s += components[j].to_string() + "*e" + std::to_string(j + 1);
  }
  return s.empty() ? "0" : s;
}

InitialModule initial_module(std::span<const ModuleVector<Rational>> gens, std::size_t rank, std::size_t n,
                             MonomialOrder order, bool cross_check) {
  auto gb = buchberger<Rational>(gens, order);
  auto ini = leading_term_module<Rational>(gb.generators, rank, n, order);
  if (cross_check) {
    auto other = order == MonomialOrder::lex ? MonomialOrder::degrevlex : MonomialOrder::lex;
    auto gb2 = buchberger<Rational>(gens, other);
    if (!(leading_term_module<Rational>(gb2.generators, rank, n, other) == ini))
      throw InternalError("initial module depends on the scalar order for multihomogeneous input");
  }
  return ini;
}

SliceCheck hilbert_slice_check(std::span<const ModuleVector<Rational>> gens, const InitialModule& ini,
                               const OrderedBasis& basis, const Multidegree& box_upper) {
  if (ini.rank() != basis.size()) throw InputError("initial module rank differs from the basis size");
  for (const auto& a : box_points(box_upper)) {
    std::size_t dm = graded_piece<Rational>(gens, a, basis, box_upper).size();
    std::size_t di = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (!basis.degree(j).leq(a)) continue;
      if (ini.components[j].contains(Monomial(a - basis.degree(j)))) ++di;
    }
    if (dm != di) return {false, a, dm, di};
  }
  return {};
}

bool is_squarefree_module(const InitialModule& ini, const OrderedBasis& basis) {
  if (ini.rank() != basis.size()) throw InputError("initial module rank differs from the basis size");
  for (std::size_t j = 0; j < ini.rank(); ++j)
    for (const auto& u : ini.components[j].generators()) {
      Multidegree d = u.degree() + basis.degree(j);
      for (auto x : d)
        if (x < 0 || x > 1) return false;
    }
  return true;
}

#define SYZDEPTH_INSTANTIATE(K)                                                                         \
  template GroebnerBasis<K> buchberger<K>(std::span<const ModuleVector<K>>, MonomialOrder,              \
                                          BuchbergerStats*);                                            \
  template ModuleVector<K> reduce<K>(const ModuleVector<K>&, std::span<const ModuleVector<K>>);         \
  template bool is_groebner_basis<K>(std::span<const ModuleVector<K>>, MonomialOrder);                  \
  template std::vector<ModuleVector<K>> kernel_groebner_basis<K>(std::span<const ModuleVector<K>>,      \
                                                                 std::size_t, std::size_t,             \
                                                                 MonomialOrder);                       \
  template InitialModule leading_term_module<K>(std::span<const ModuleVector<K>>, std::size_t,          \
                                                std::size_t, MonomialOrder);

SYZDEPTH_INSTANTIATE(Rational)
SYZDEPTH_INSTANTIATE(Mersenne31)

#undef SYZDEPTH_INSTANTIATE

}  // namespace syzdepth
