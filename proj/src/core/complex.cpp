#include "complex.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace syzdepth {

// ---------------------------------------------------------------- ScalarMatrix

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

Rational ScalarMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = col.find(r);
  return it == col.end() ? Rational(0) : it->second;
}

void ScalarMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw InternalError("matrix index out of range");
  if (sgn(value) == 0) {
    columns_[c].erase(r);
  } else {
    columns_[c][r] = value;
  }
}

void ScalarMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw InternalError("matrix index out of range");
  auto& col = columns_[c];
  auto [it, inserted] = col.try_emplace(r, value);
  if (!inserted) it->second += value;
  if (sgn(it->second) == 0) col.erase(it);
}

bool ScalarMatrix::is_zero() const noexcept {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InternalError("matrix product dimension mismatch");
  ScalarMatrix out(rows_, rhs.cols_);
  for (std::size_t c = 0; c < rhs.cols_; ++c)
    for (const auto& [k, v] : rhs.columns_[c])
      for (const auto& [r, w] : columns_[k]) out.add(r, c, w * v);
  return out;
}

ScalarMatrix ScalarMatrix::operator-() const {
  ScalarMatrix out = *this;
  for (auto& col : out.columns_)
    for (auto& [r, v] : col) v = -v;
  return out;
}

ScalarMatrix ScalarMatrix::permuted(std::span<const std::size_t> row_new_of_old,
                                    std::span<const std::size_t> col_new_of_old) const {
  if (row_new_of_old.size() != rows_ || col_new_of_old.size() != cols_)
    throw InternalError("permutation size mismatch");
  ScalarMatrix out(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c]) out.set(row_new_of_old[r], col_new_of_old[c], v);
  return out;
}

// ----------------------------------------------------------------- FreeComplex

FreeComplex::FreeComplex(std::size_t n, std::vector<OrderedBasis> bases,
                         std::vector<ScalarMatrix> differentials, std::string kind)
    : n_(n), bases_(std::move(bases)), diffs_(std::move(differentials)), empty_(n, {}),
      kind_(std::move(kind)) {
  if (bases_.empty()) throw InputError("a complex needs at least F_0");
  if (diffs_.size() + 1 != bases_.size())
    throw InputError("a complex of length L needs exactly L differentials");
  for (const auto& b : bases_)
    if (b.n() != n_ && !b.empty()) throw InputError("mismatched variable count in complex basis");
  for (std::size_t p = 1; p < bases_.size(); ++p) {
    const auto& d = diffs_[p - 1];
    if (d.rows() != bases_[p - 1].size() || d.cols() != bases_[p].size())
      throw InputError("differential d_" + std::to_string(p) + " has the wrong shape");
  }
}

const OrderedBasis& FreeComplex::basis(std::size_t p) const {
  return p < bases_.size() ? bases_[p] : empty_;
}

std::vector<std::size_t> FreeComplex::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& b : bases_) r.push_back(b.size());
  return r;
}

const ScalarMatrix& FreeComplex::differential(std::size_t p) const {
  if (p == 0 || p > diffs_.size())
    throw InputError("no differential d_" + std::to_string(p) + " in a complex of length " +
                     std::to_string(length()));
  return diffs_[p - 1];
}

ModuleVector<Rational> FreeComplex::boundary(std::size_t p, std::size_t j) const {
  const auto& d = differential(p);
  const auto& src = basis(p);
  const auto& dst = basis(p - 1);
  std::vector<Term<Rational>> terms;
  for (const auto& [r, v] : d.column(j))
    terms.push_back(Term<Rational>{v, Monomial(src.degree(j) - dst.degree(r)), r});
  return ModuleVector<Rational>(std::move(terms));
}

ModuleVector<Rational> FreeComplex::apply(std::size_t p, const ModuleVector<Rational>& v) const {
  ModuleVector<Rational> out(v.order());
  for (const auto& t : v.terms()) out.add_multiple(t.coefficient, t.monomial, boundary(p, t.position).with_order(v.order()));
  return out;
}

FreeComplex FreeComplex::shifted(const Multidegree& a) const {
  require_same_size(n_, a.size(), "complex shift");
  std::vector<OrderedBasis> bases;
  for (const auto& b : bases_) {
    auto elems = b.elements();
    for (auto& e : elems) e.degree += a;
    bases.emplace_back(n_, std::move(elems));
  }
  FreeComplex out(n_, std::move(bases), diffs_, kind_);
  out.flagged_minimal_ = flagged_minimal_;
  out.notes_ = notes_;
  return out;
}

FreeComplex FreeComplex::reordered(std::size_t p, std::span<const std::size_t> new_of_old) const {
  if (p > length()) throw InputError("reordering beyond the complex length");
  FreeComplex out = *this;
  out.bases_[p] = bases_[p].permuted(new_of_old);
  std::vector<std::size_t> id;
  if (p >= 1) {
    id.resize(bases_[p - 1].size());
    std::iota(id.begin(), id.end(), std::size_t{0});
    out.diffs_[p - 1] = diffs_[p - 1].permuted(id, new_of_old);
  }
  if (p < length()) {
    id.resize(bases_[p + 1].size());
    std::iota(id.begin(), id.end(), std::size_t{0});
    out.diffs_[p] = diffs_[p].permuted(new_of_old, id);
  }
  return out;
}

FreeComplex FreeComplex::lex_refined() const {
  FreeComplex out = *this;
  for (std::size_t p = 0; p <= length(); ++p) {
    auto ref = sort_lex_refined(out.bases_[p]);
    out = out.reordered(p, ref.new_of_old);
  }
  return out;
}

FreeComplex FreeComplex::with_labels(std::size_t p, std::vector<std::string> labels) const {
  if (p > length() || labels.size() != bases_[p].size()) throw InputError("label count mismatch");
  FreeComplex out = *this;
  auto elems = bases_[p].elements();
  for (std::size_t i = 0; i < elems.size(); ++i) elems[i].label = std::move(labels[i]);
  out.bases_[p] = OrderedBasis(n_, std::move(elems));
  return out;
}

bool FreeComplex::has_unit_entries() const {
  for (std::size_t p = 1; p <= length(); ++p) {
    const auto& d = diffs_[p - 1];
    for (std::size_t c = 0; c < d.cols(); ++c)
      for (const auto& [r, v] : d.column(c))
        if (bases_[p - 1].degree(r) == bases_[p].degree(c)) return true;
  }
  return false;
}

namespace {

ScalarMatrix differential_or_zero(const FreeComplex& c, std::size_t p) {
  if (p >= 1 && p <= c.length()) return c.differential(p);
  return ScalarMatrix(c.rank(p == 0 ? 0 : p - 1), c.rank(p));
}

// Taylor complex without the unit-generator check; G-complexes of the cone
// construction may contain the generator 1.
FreeComplex taylor_unchecked(std::span<const Monomial> u, std::size_t n) {
  const std::size_t m = u.size();
  std::vector<OrderedBasis> bases;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(m + 1);
  std::vector<std::vector<std::vector<std::size_t>>> subsets(m + 1);
  for (std::size_t p = 0; p <= m; ++p) {
    subsets[p] = taylor_subsets(m, p);
    std::vector<BasisElement> elems;
    for (std::size_t k = 0; k < subsets[p].size(); ++k) {
      Monomial l(n);
      for (auto i : subsets[p][k]) l = lcm(l, u[i - 1]);
      elems.push_back({l.degree(), subset_label(subsets[p][k])});
      index[p][subsets[p][k]] = k;
    }
    bases.emplace_back(n, std::move(elems));
  }
  std::vector<ScalarMatrix> diffs;
  for (std::size_t p = 1; p <= m; ++p) {
    ScalarMatrix d(bases[p - 1].size(), bases[p].size());
    for (std::size_t k = 0; k < subsets[p].size(); ++k) {
      const auto& f = subsets[p][k];
      for (std::size_t j = 0; j < f.size(); ++j) {
        std::vector<std::size_t> face = f;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
        d.set(index[p - 1].at(face), k, Rational(j % 2 == 0 ? 1 : -1));
      }
    }
    diffs.push_back(std::move(d));
  }
  FreeComplex c(n, std::move(bases), std::move(diffs), "taylor");
  c.set_flagged_minimal(!c.has_unit_entries());
  return c;
}

std::size_t variable_count(std::span<const Monomial> u) {
  if (u.empty()) throw InputError("at least one generator is required");
  for (const auto& x : u) require_same_size(u[0].size(), x.size(), "generator list");
  return u[0].size();
}

std::string variable_set_label(const std::vector<std::size_t>& vars) {
  std::vector<std::size_t> one_based;
  for (auto v : vars) one_based.push_back(v + 1);
  return subset_label(one_based);
}

}  // namespace

// --------------------------------------------------------------- constructions

std::vector<std::vector<std::size_t>> taylor_subsets(std::size_t m, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  if (p > m) return out;
  std::vector<std::size_t> cur(p);
  std::iota(cur.begin(), cur.end(), std::size_t{1});
  while (true) {
    out.push_back(cur);
    std::size_t i = p;
    while (i > 0 && cur[i - 1] == m - p + i) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t k = i; k < p; ++k) cur[k] = cur[k - 1] + 1;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(b.rbegin(), b.rend(), a.rbegin(), a.rend());
  });
  return out;
}

std::string subset_label(std::span<const std::size_t> subset) {
  std::string s = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(subset[i]);
  }
  return s + "}";
}

FreeComplex taylor_complex(std::span<const Monomial> u) {
  const std::size_t n = variable_count(u);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i].is_one()) throw InputError("generator u" + std::to_string(i + 1) + " = 1: unit ideal");
  return taylor_unchecked(u, n);
}

FreeComplex koszul_complex(std::span<const Monomial> u) {
  FreeComplex c = taylor_complex(u);
  c.set_kind("koszul");
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (!gcd(u[i], u[j]).is_one()) {
        c.add_note("sequence is not regular: u" + std::to_string(i + 1) + " and u" +
                   std::to_string(j + 1) + " share a variable; returned the Taylor complex");
        c.set_flagged_minimal(false);
        return c;
      }
  c.set_flagged_minimal(true);
  return c;
}

FreeComplex mapping_cone(const FreeComplex& g, const FreeComplex& f, const ChainMap& phi,
                         bool tag_labels) {
  const std::size_t n = f.n();
  if (g.n() != n) throw InputError("mismatched variable count in mapping cone");
  if (phi.components.size() != g.length() + 1)
    throw InputError("chain map needs one component per homological degree of the source");
  for (std::size_t i = 0; i <= g.length(); ++i) {
    const auto& c = phi.components[i];
    if (c.rows() != f.rank(i) || c.cols() != g.rank(i))
      throw InputError("chain map component " + std::to_string(i) + " has the wrong shape");
    for (std::size_t col = 0; col < c.cols(); ++col)
      for (const auto& [r, v] : c.column(col))
        if (!f.basis(i).degree(r).leq(g.basis(i).degree(col)))
          throw InputError("chain map is not multidegree-preserving at (i=" + std::to_string(i) +
                           ", " + g.basis(i)[col].label + ")");
  }
  for (std::size_t i = 1; i <= g.length(); ++i) {
    ScalarMatrix lhs = differential_or_zero(f, i) * phi.components[i];
    ScalarMatrix rhs = phi.components[i - 1] * g.differential(i);
    for (std::size_t col = 0; col < lhs.cols(); ++col)
      if (lhs.column(col) != rhs.column(col))
        throw InputError("chain map does not commute with the differentials at (i=" +
                         std::to_string(i) + ", " + g.basis(i)[col].label + ")");
  }

  const std::size_t len = std::max(f.length(), g.length() + 1);
  auto g_rank = [&](std::size_t i) -> std::size_t { return i == 0 ? 0 : g.rank(i - 1); };
  std::vector<OrderedBasis> bases;
  for (std::size_t i = 0; i <= len; ++i) {
    std::vector<BasisElement> elems;
    if (i >= 1)
      for (const auto& e : g.basis(i - 1).elements())
        elems.push_back({e.degree, tag_labels ? "G:" + e.label : e.label});
    for (const auto& e : f.basis(i).elements())
      elems.push_back({e.degree, tag_labels ? "F:" + e.label : e.label});
    bases.emplace_back(n, std::move(elems));
  }
  std::vector<ScalarMatrix> diffs;
  for (std::size_t i = 1; i <= len; ++i) {
    const std::size_t r_in = g_rank(i), r_out = g_rank(i - 1);
    ScalarMatrix d(bases[i - 1].size(), bases[i].size());
    if (i >= 2 && i - 1 <= g.length()) {
      const auto& dg = g.differential(i - 1);
      for (std::size_t c = 0; c < dg.cols(); ++c)
        for (const auto& [r, v] : dg.column(c)) d.set(r, c, -v);
    }
    if (i - 1 <= g.length()) {
      const auto& ph = phi.components[i - 1];
      for (std::size_t c = 0; c < ph.cols(); ++c)
        for (const auto& [r, v] : ph.column(c)) d.set(r_out + r, c, v);
    }
    if (i <= f.length()) {
      const auto& df = f.differential(i);
      for (std::size_t c = 0; c < df.cols(); ++c)
        for (const auto& [r, v] : df.column(c)) d.set(r_out + r, r_in + c, v);
    }
    diffs.push_back(std::move(d));
  }
  FreeComplex out(n, std::move(bases), std::move(diffs), "cone");
  out.set_flagged_minimal(!out.has_unit_entries());
  return out;
}

ConeInput taylor_cone_input(std::span<const Monomial> u) {
  const std::size_t n = variable_count(u);
  if (u.size() < 2) throw InputError("the Taylor cone step needs at least two generators");
  const std::size_t m = u.size();
  const Monomial& last = u[m - 1];
  std::vector<Monomial> v;
  for (std::size_t i = 0; i + 1 < m; ++i) v.push_back(*divide(u[i], gcd(u[i], last)));
  ConeInput in;
  in.f = taylor_complex(u.first(m - 1));
  in.g = taylor_unchecked(v, n).shifted(last.degree());
  for (std::size_t p = 0; p <= in.g.length(); ++p)
    in.phi.components.push_back(ScalarMatrix::identity(in.g.rank(p)));
  return in;
}

ChainMap lift_chain_map(const FreeComplex& g, const FreeComplex& f, ScalarMatrix phi0,
                        std::vector<std::string>* notes) {
  if (phi0.rows() != f.rank(0) || phi0.cols() != g.rank(0))
    throw InputError("phi_0 has the wrong shape");
  ChainMap phi;
  phi.components.push_back(std::move(phi0));
  for (std::size_t k = 1; k <= g.length(); ++k) {
    const OrderedBasis& fk = f.basis(k);
    ScalarMatrix comp(fk.size(), g.rank(k));
    ScalarMatrix target = phi.components[k - 1] * g.differential(k);
    const ScalarMatrix* df = k <= f.length() ? &f.differential(k) : nullptr;
    std::vector<std::size_t> lead(fk.size(), SIZE_MAX);
    for (std::size_t e = 0; df && e < fk.size(); ++e)
      if (!df->column(e).empty()) lead[e] = df->column(e).begin()->first;

    for (std::size_t j = 0; j < g.rank(k); ++j) {
      const Multidegree& a = g.basis(k).degree(j);
      std::map<std::size_t, Rational> v = target.column(j);
      while (!v.empty()) {
        const std::size_t i = v.begin()->first;
        std::size_t e = 0;
        while (e < fk.size() && !(lead[e] == i && fk.degree(e).leq(a))) ++e;
        if (e == fk.size()) break;
        Rational c = v.begin()->second / df->column(e).at(i);
        comp.add(e, j, c);
        for (const auto& [r, w] : df->column(e)) {
          auto [it, ins] = v.try_emplace(r, -c * w);
          if (!ins) it->second -= c * w;
          if (sgn(it->second) == 0) v.erase(it);
        }
      }
      if (v.empty()) continue;

      // Greedy division got stuck; solve in degree a.
      if (!df)
        throw InputError("comparison map cannot be lifted at (k=" + std::to_string(k) + ", " +
                         g.basis(k)[j].label + "): target complex ends before degree k");
      auto rows = slice_positions(f.basis(k - 1), a);
      auto cols = slice_positions(fk, a);
      DenseRows<Rational> columns;
      for (auto e : cols) {
        std::vector<Rational> col(rows.size(), Rational(0));
        for (const auto& [r, w] : df->column(e)) {
          auto it = std::lower_bound(rows.begin(), rows.end(), r);
          col[static_cast<std::size_t>(it - rows.begin())] = w;
        }
        columns.push_back(std::move(col));
      }
      std::vector<Rational> b(rows.size(), Rational(0));
      for (const auto& [r, w] : v) {
        auto it = std::lower_bound(rows.begin(), rows.end(), r);
        if (it == rows.end() || *it != r) throw InternalError("comparison target leaves its degree");
        b[static_cast<std::size_t>(it - rows.begin())] = w;
      }
      auto x = solve_columns(columns, b);
      if (!x)
        throw InputError("comparison map cannot be lifted at (k=" + std::to_string(k) + ", " +
                         g.basis(k)[j].label + "): target complex is not exact there");
      for (std::size_t q = 0; q < cols.size(); ++q)
        if (sgn((*x)[q]) != 0) comp.add(cols[q], j, (*x)[q]);
      if (notes)
        notes->push_back("comparison map lifted by linear solve at (k=" + std::to_string(k) + ", " +
                         g.basis(k)[j].label + ")");
    }
    phi.components.push_back(std::move(comp));
  }
  return phi;
}

LinearQuotients linear_quotients(std::span<const Monomial> u) {
  LinearQuotients out;
  if (u.empty()) return out;
  const std::size_t n = variable_count(u);
  for (std::size_t j = 1; j < u.size(); ++j)
    if (u[j].total_degree() < u[j - 1].total_degree())
      throw InputError("generators must be ordered by nondecreasing total degree (u" +
                       std::to_string(j + 1) + " has smaller degree than u" + std::to_string(j) + ")");
  for (std::size_t j = 1; j < u.size(); ++j) {
    MonomialIdeal prefix(n, std::vector<Monomial>(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(j)));
    auto colon = prefix.colon(u[j]).minimal();
    std::vector<std::size_t> vars;
    for (const auto& w : colon.generators()) {
      if (w.total_degree() != 1) {
        out.ok = false;
        out.failure_index = j;
        return out;
      }
      vars.push_back(support(w).front());
    }
    std::sort(vars.begin(), vars.end());
    out.variables.push_back(std::move(vars));
  }
  return out;
}

namespace {

std::optional<std::size_t> last_variable(const Monomial& u) {
  for (std::size_t i = u.size(); i > 0; --i)
    if (u[i - 1] > 0) return i - 1;
  return std::nullopt;
}

Monomial exchange(const Monomial& u, std::size_t from, std::size_t to) {
  Multidegree d = u.degree();
  d[from] -= 1;
  d[to] += 1;
  return Monomial(d);
}

}  // namespace

std::optional<StabilityViolation> stability_violation(const MonomialIdeal& ideal) {
  auto gens = ideal.minimal();
  for (const auto& u : gens.generators()) {
    auto m = last_variable(u);
    if (!m) continue;
    for (std::size_t j = 0; j < *m; ++j) {
      Monomial w = exchange(u, *m, j);
      if (!gens.contains(w)) return StabilityViolation{u, w};
    }
  }
  return std::nullopt;
}

bool is_stable(const MonomialIdeal& ideal) { return !stability_violation(ideal); }

std::vector<Monomial> stable_order(const MonomialIdeal& ideal) { return ideal.minimal().generators(); }

MonomialIdeal stable_closure(const MonomialIdeal& ideal) {
  MonomialIdeal cur = ideal.minimal();
  while (true) {
    std::vector<Monomial> added;
    for (const auto& u : cur.generators()) {
      auto m = last_variable(u);
      if (!m) continue;
      for (std::size_t j = 0; j < *m; ++j) {
        Monomial w = exchange(u, *m, j);
        if (!cur.contains(w)) added.push_back(w);
      }
    }
    if (added.empty()) return cur;
    auto gens = cur.generators();
    gens.insert(gens.end(), added.begin(), added.end());
    cur = MonomialIdeal(ideal.n(), std::move(gens)).minimal();
  }
}

namespace {

struct EkState {
  std::vector<Monomial> u;
  FreeComplex f;
};

EkState ek_start(const MonomialIdeal& ideal) {
  if (auto v = stability_violation(ideal))
    throw InputError("ideal is not stable: generator " + v->generator.to_string() + " needs " +
                     v->missing.to_string());
  EkState st;
  st.u = stable_order(ideal);
  if (st.u.empty()) throw InputError("the zero ideal has no Eliahou-Kervaire construction");
  if (st.u.front().is_one()) throw InputError("unit ideal");
  st.f = taylor_complex(std::span<const Monomial>(st.u).first(1)).with_labels(1, {"u1;{}"});
  return st;
}

ConeInput ek_cone(const EkState& st, std::size_t j, std::vector<std::string>* notes) {
  const std::size_t n = st.u.front().size();
  MonomialIdeal prefix(n, std::vector<Monomial>(st.u.begin(), st.u.begin() + static_cast<std::ptrdiff_t>(j)));
  auto colon = prefix.colon(st.u[j]).minimal();
  std::vector<std::size_t> vars;
  for (const auto& w : colon.generators()) {
    if (w.total_degree() != 1)
      throw InternalError("stable ideal without linear quotients at j=" + std::to_string(j));
    vars.push_back(support(w).front());
  }
  std::sort(vars.begin(), vars.end());
  std::vector<Monomial> xs;
  for (auto v : vars) xs.push_back(Monomial::variable(n, v));

  ConeInput in;
  in.f = st.f;
  in.g = koszul_complex(xs).shifted(st.u[j].degree());
  const std::string tag = "u" + std::to_string(j + 1) + ";";
  for (std::size_t p = 0; p <= in.g.length(); ++p) {
    std::vector<std::string> labels;
    for (const auto& subset : taylor_subsets(vars.size(), p)) {
      std::vector<std::size_t> chosen;
      for (auto s : subset) chosen.push_back(vars[s - 1]);
      labels.push_back(tag + variable_set_label(chosen));
    }
    in.g = in.g.with_labels(p, std::move(labels));
  }
  ScalarMatrix phi0(1, 1);
  phi0.set(0, 0, Rational(1));
  in.phi = lift_chain_map(in.g, in.f, std::move(phi0), notes);
  return in;
}

}  // namespace

FreeComplex eliahou_kervaire(const MonomialIdeal& ideal) {
  EkState st = ek_start(ideal);
  std::vector<std::string> notes;
  for (std::size_t j = 1; j < st.u.size(); ++j) {
    ConeInput in = ek_cone(st, j, &notes);
    st.f = mapping_cone(in.g, in.f, in.phi, false);
  }
  FreeComplex out = std::move(st.f);
  out.set_kind("eliahou-kervaire");
  for (auto& note : notes) out.add_note(std::move(note));
  bool minimal = !out.has_unit_entries();
  out.set_flagged_minimal(minimal);
  if (!minimal) out.add_note("minimality check failed: some differential entry is a unit");
  return out;
}

ConeInput eliahou_kervaire_step(const MonomialIdeal& ideal, std::size_t j) {
  EkState st = ek_start(ideal);
  if (j < 1 || j >= st.u.size())
    throw InputError("cone step index out of range 1.." + std::to_string(st.u.size() - 1));
  for (std::size_t k = 1; k < j; ++k) {
    ConeInput in = ek_cone(st, k, nullptr);
    st.f = mapping_cone(in.g, in.f, in.phi, false);
  }
  return ek_cone(st, j, nullptr);
}

// ------------------------------------------------------------- syzygies, minimize

std::vector<ModuleVector<Rational>> boundary_generators(const FreeComplex& c, std::size_t p) {
  std::vector<ModuleVector<Rational>> out;
  if (p + 1 > c.length()) return out;
  for (std::size_t j = 0; j < c.rank(p + 1); ++j) out.push_back(c.boundary(p + 1, j));
  return out;
}

std::vector<ModuleVector<Rational>> syzygy_generators(const FreeComplex& c, int p) {
  if (p < 1) throw InputError("syzygy index p must be at least 1 (Z_0 is the resolved module)");
  return boundary_generators(c, static_cast<std::size_t>(p));
}

FreeComplex minimize(const FreeComplex& c) {
  const std::size_t len = c.length();
  std::vector<std::vector<bool>> alive(len + 1);
  for (std::size_t p = 0; p <= len; ++p) alive[p].assign(c.rank(p), true);
  std::vector<DenseRows<Rational>> d(len + 1);
  for (std::size_t p = 1; p <= len; ++p) {
    d[p].assign(c.rank(p - 1), std::vector<Rational>(c.rank(p), Rational(0)));
    const auto& m = c.differential(p);
    for (std::size_t col = 0; col < m.cols(); ++col)
      for (const auto& [r, v] : m.column(col)) d[p][r][col] = v;
  }

  for (std::size_t p = 1; p <= len; ++p) {
    auto& dp = d[p];
    while (true) {
      std::size_t ur = SIZE_MAX, uc = SIZE_MAX;
      for (std::size_t col = 0; col < c.rank(p) && ur == SIZE_MAX; ++col) {
        if (!alive[p][col]) continue;
        for (std::size_t r = 0; r < c.rank(p - 1); ++r)
          if (alive[p - 1][r] && sgn(dp[r][col]) != 0 &&
              c.basis(p - 1).degree(r) == c.basis(p).degree(col)) {
            ur = r;
            uc = col;
            break;
          }
      }
      if (ur == SIZE_MAX) break;
      const Rational pivot = dp[ur][uc];
      for (std::size_t i = 0; i < c.rank(p - 1); ++i) {
        if (i == ur || !alive[p - 1][i] || sgn(dp[i][uc]) == 0) continue;
        const Rational f = dp[i][uc] / pivot;
        for (std::size_t j = 0; j < c.rank(p); ++j)
          if (j != uc && alive[p][j] && sgn(dp[ur][j]) != 0) dp[i][j] -= f * dp[ur][j];
      }
      alive[p - 1][ur] = false;
      alive[p][uc] = false;
    }
  }

  std::vector<std::vector<std::size_t>> keep(len + 1);
  for (std::size_t p = 0; p <= len; ++p)
    for (std::size_t i = 0; i < c.rank(p); ++i)
      if (alive[p][i]) keep[p].push_back(i);
  std::size_t new_len = len;
  while (new_len > 0 && keep[new_len].empty()) --new_len;

  std::vector<OrderedBasis> bases;
  for (std::size_t p = 0; p <= new_len; ++p) {
    std::vector<BasisElement> elems;
    for (auto i : keep[p]) elems.push_back(c.basis(p)[i]);
    bases.emplace_back(c.n(), std::move(elems));
  }
  std::vector<ScalarMatrix> diffs;
  for (std::size_t p = 1; p <= new_len; ++p) {
    ScalarMatrix m(keep[p - 1].size(), keep[p].size());
    for (std::size_t a = 0; a < keep[p - 1].size(); ++a)
      for (std::size_t b = 0; b < keep[p].size(); ++b) m.set(a, b, d[p][keep[p - 1][a]][keep[p][b]]);
    diffs.push_back(std::move(m));
  }
  FreeComplex out(c.n(), std::move(bases), std::move(diffs), c.kind() + "+minimized");
  for (const auto& note : c.notes()) out.add_note(note);
  out = out.lex_refined();
  if (out.has_unit_entries()) throw InternalError("minimization left a unit entry");
  out.set_flagged_minimal(true);
  return out;
}

// ------------------------------------------------------------------ checks

ComplexCheck check_complex(const FreeComplex& c) {
  for (std::size_t p = 1; p <= c.length(); ++p) {
    const auto& d = c.differential(p);
    for (std::size_t col = 0; col < d.cols(); ++col)
      for (const auto& [r, v] : d.column(col))
        if (!c.basis(p - 1).degree(r).leq(c.basis(p).degree(col)))
          return {false, "d_" + std::to_string(p) + " entry (" + c.basis(p - 1)[r].label + ", " +
                             c.basis(p)[col].label + ") is not multidegree-preserving"};
  }
  for (std::size_t p = 1; p < c.length(); ++p) {
    ScalarMatrix dd = c.differential(p) * c.differential(p + 1);
    for (std::size_t col = 0; col < dd.cols(); ++col)
      if (!dd.column(col).empty())
        return {false, "d_" + std::to_string(p) + " o d_" + std::to_string(p + 1) +
                           " is nonzero on " + c.basis(p + 1)[col].label};
  }
  return {};
}

namespace {

DenseRows<Rational> slice_matrix(const ScalarMatrix& d, std::span<const std::size_t> rows,
                                 std::span<const std::size_t> cols) {
  DenseRows<Rational> out(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
  for (std::size_t b = 0; b < cols.size(); ++b)
    for (const auto& [r, v] : d.column(cols[b])) {
      auto it = std::lower_bound(rows.begin(), rows.end(), r);
      if (it != rows.end() && *it == r) out[static_cast<std::size_t>(it - rows.begin())][b] = v;
    }
  return out;
}

}  // namespace

ExactnessReport check_exactness_on_box(const FreeComplex& c,
                                       std::span<const ModuleVector<Rational>> module_gens,
                                       const Multidegree& box_upper) {
  require_same_size(c.n(), box_upper.size(), "exactness box");
  if (!box_upper.is_nonnegative()) throw InputError("exactness box must be nonnegative");
  ExactnessReport rep;
  rep.box_upper = box_upper;
  const std::size_t len = c.length();
  std::vector<std::unordered_map<std::string, std::size_t>> memo(len + 2);

  // Rank counts only mean something where d o d = 0; report those degrees first.
  for (std::size_t p = 1; p < len; ++p) {
    ScalarMatrix dd = c.differential(p) * c.differential(p + 1);
    for (std::size_t col = 0; col < dd.cols(); ++col) {
      const Multidegree& a = c.basis(p + 1).degree(col);
      if (!dd.column(col).empty() && a.is_nonnegative() && a.leq(box_upper))
        rep.failures.push_back({p, a, "d_" + std::to_string(p) + " o d_" + std::to_string(p + 1) +
                                          " != 0 on " + c.basis(p + 1)[col].label});
    }
  }

  for (const auto& a : box_points(box_upper)) {
    ++rep.degrees_checked;
    std::vector<std::vector<std::size_t>> pos(len + 2);
    std::vector<std::string> key(len + 2);
    for (std::size_t p = 0; p <= len; ++p) {
      pos[p] = slice_positions(c.basis(p), a);
      key[p].assign(c.rank(p), '0');
      for (auto i : pos[p]) key[p][i] = '1';
    }
    std::vector<std::size_t> rk(len + 2, 0);
    for (std::size_t p = 1; p <= len; ++p) {
      const std::string k = key[p - 1] + "|" + key[p];
      auto it = memo[p].find(k);
      if (it == memo[p].end()) {
        it = memo[p].emplace(k, rank(slice_matrix(c.differential(p), pos[p - 1], pos[p]), pos[p].size())).first;
      }
      rk[p] = it->second;
    }
    for (std::size_t p = 1; p <= len; ++p) {
      const std::size_t kernel = pos[p].size() - rk[p];
      if (kernel != rk[p + 1])
        rep.failures.push_back({p, a, "H_" + std::to_string(p) + " != 0: dim ker = " +
                                          std::to_string(kernel) + ", dim im = " + std::to_string(rk[p + 1])});
    }
    auto piece = graded_piece<Rational>(module_gens, a, c.basis(0), box_upper);
    DenseRows<Rational> stacked;
    if (len >= 1) {
      auto m = slice_matrix(c.differential(1), pos[0], pos[1]);
      for (std::size_t col = 0; col < pos[1].size(); ++col) {
        std::vector<Rational> row(pos[0].size());
        for (std::size_t r = 0; r < pos[0].size(); ++r) row[r] = m[r][col];
        stacked.push_back(std::move(row));
      }
    }
    for (const auto& v : piece) stacked.push_back(slice_coordinates(v, pos[0]));
    const std::size_t joint = rank(std::move(stacked), pos[0].size());
    if (rk[1] != piece.size() || joint != piece.size())
      rep.failures.push_back({0, a, "image of d_1 has dimension " + std::to_string(rk[1]) +
                                        ", module has " + std::to_string(piece.size()) +
                                        ", joint span " + std::to_string(joint)});
  }
  std::stable_sort(rep.failures.begin(), rep.failures.end(),
                   [](const ExactnessFailure& x, const ExactnessFailure& y) {
                     if (x.degree.total() != y.degree.total()) return x.degree.total() < y.degree.total();
                     auto o = lex_compare(x.degree, y.degree);
                     if (o != 0) return o < 0;
                     return x.p < y.p;
                   });
  return rep;
}

Multidegree default_box(const MonomialIdeal& ideal) {
  Multidegree g = ideal.lcm_exponent();
  for (std::size_t i = 0; i < g.size(); ++i) g[i] += 1;
  return g;
}

ModuleVector<Rational> apply_map(const ScalarMatrix& m, const OrderedBasis& src, const OrderedBasis& dst,
                                 const ModuleVector<Rational>& v) {
  if (m.rows() != dst.size() || m.cols() != src.size()) throw InputError("map does not fit the bases");
  std::vector<Term<Rational>> terms;
  for (const auto& t : v.terms()) {
    if (t.position >= src.size()) throw InputError("term position outside the source basis");
    for (const auto& [r, w] : m.column(t.position))
      terms.push_back(Term<Rational>{t.coefficient * w,
                                     t.monomial * Monomial(src.degree(t.position) - dst.degree(r)), r});
  }
  return ModuleVector<Rational>(std::move(terms), v.order());
}

std::optional<ModuleVector<Rational>> preimage(const ScalarMatrix& m, const OrderedBasis& src,
                                               const OrderedBasis& dst, const ModuleVector<Rational>& target,
                                               const Multidegree& a) {
  auto rows = slice_positions(dst, a);
  auto cols = slice_positions(src, a);
  auto mat = slice_matrix(m, rows, cols);
  DenseRows<Rational> columns(cols.size(), std::vector<Rational>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) columns[c][r] = mat[r][c];
  auto x = solve_columns(columns, slice_coordinates(target, rows));
  if (!x) return std::nullopt;
  return from_slice_coordinates(*x, cols, src, a, target.order());
}

std::vector<ModuleVector<Rational>> ideal_as_vectors(const MonomialIdeal& ideal) {
  std::vector<ModuleVector<Rational>> out;
  for (const auto& u : ideal.generators())
    out.push_back(ModuleVector<Rational>({Term<Rational>{Rational(1), u, 0}}));
  return out;
}

ExactnessReport check_resolution(const FreeComplex& c, const MonomialIdeal& ideal,
                                 std::optional<Multidegree> box_upper) {
  if (c.rank(0) != 1 || !c.basis(0).degree(0).is_zero())
    throw InputError("a resolution of S/I needs F_0 = S in degree 0");
  auto gens = ideal_as_vectors(ideal);
  return check_exactness_on_box(c, gens, box_upper ? *box_upper : default_box(ideal));
}

}  // namespace syzdepth
