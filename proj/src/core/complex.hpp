#pragma once

#include "field.hpp"
#include "free_module.hpp"
#include "ideal.hpp"
#include "monomial.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace syzdepth {

// Matrix of a multidegree-preserving map between free modules with
// multihomogeneous bases. Only scalars are stored: a nonzero entry (r, c)
// stands for coeff * x^(deg source_c - deg target_r).
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  static ScalarMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add(std::size_t r, std::size_t c, const Rational& value);
  const std::map<std::size_t, Rational>& column(std::size_t c) const { return columns_.at(c); }
  bool is_zero() const noexcept;

  // Composition: (*this) after rhs.
  ScalarMatrix operator*(const ScalarMatrix& rhs) const;
  ScalarMatrix operator-() const;
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
  }

  ScalarMatrix permuted(std::span<const std::size_t> row_new_of_old,
                        std::span<const std::size_t> col_new_of_old) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::map<std::size_t, Rational>> columns_;
};

// Multigraded free complex F_0 <- F_1 <- ... <- F_L with ordered bases.
// The complexes built here resolve S/I (or S/L(-a)) with F_0 free of rank one.
class FreeComplex {
 public:
  FreeComplex() = default;
  FreeComplex(std::size_t n, std::vector<OrderedBasis> bases, std::vector<ScalarMatrix> differentials,
              std::string kind = "complex");

  std::size_t n() const noexcept { return n_; }
  // Largest homological degree with a stored module.
  std::size_t length() const noexcept { return bases_.empty() ? 0 : bases_.size() - 1; }
  const OrderedBasis& basis(std::size_t p) const;
  std::size_t rank(std::size_t p) const { return basis(p).size(); }
  std::vector<std::size_t> ranks() const;
  // d_p : F_p -> F_{p-1}, 1 <= p <= length().
  const ScalarMatrix& differential(std::size_t p) const;

  ModuleVector<Rational> boundary(std::size_t p, std::size_t j) const;
  ModuleVector<Rational> apply(std::size_t p, const ModuleVector<Rational>& v) const;

  FreeComplex shifted(const Multidegree& a) const;
  FreeComplex reordered(std::size_t p, std::span<const std::size_t> new_of_old) const;
  // Every F_p re-sorted into a lex-refined basis (stable).
  FreeComplex lex_refined() const;
  FreeComplex with_labels(std::size_t p, std::vector<std::string> labels) const;

  bool has_unit_entries() const;

  const std::string& kind() const noexcept { return kind_; }
  void set_kind(std::string k) { kind_ = std::move(k); }
  bool flagged_minimal() const noexcept { return flagged_minimal_; }
  void set_flagged_minimal(bool v) { flagged_minimal_ = v; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }
  void add_note(std::string note) { notes_.push_back(std::move(note)); }

 private:
  std::size_t n_ = 0;
  std::vector<OrderedBasis> bases_;
  std::vector<ScalarMatrix> diffs_;  // diffs_[p - 1] = d_p
  OrderedBasis empty_;
  std::string kind_ = "complex";
  bool flagged_minimal_ = false;
  std::vector<std::string> notes_;
};

// components[i] : G_i -> F_i, one for every i in 0..G.length().
struct ChainMap {
  std::vector<ScalarMatrix> components;
};

// p-subsets of [m] (1-based, increasing) in the iterated mapping-cone order:
// compare from the largest element down, the larger element comes first.
std::vector<std::vector<std::size_t>> taylor_subsets(std::size_t m, std::size_t p);
std::string subset_label(std::span<const std::size_t> subset);

FreeComplex taylor_complex(std::span<const Monomial> u);
// Identical to the Taylor complex; flagged minimal when the supports are
// pairwise disjoint, otherwise a note records that the sequence is not regular.
FreeComplex koszul_complex(std::span<const Monomial> u);

// C_i = G_{i-1} (+) F_i with basis g_1..g_r, f_1..f_s and differential
// (g, f) -> (-d_G g, phi(g) + d_F f). Throws InputError naming (i, basis
// element) when phi does not commute with the differentials.
FreeComplex mapping_cone(const FreeComplex& g, const FreeComplex& f, const ChainMap& phi,
                         bool tag_labels = true);

struct ConeInput {
  FreeComplex g;  // resolves the colon quotient, shifted
  FreeComplex f;  // resolves the previous quotient
  ChainMap phi;
};

// Last step of the Taylor construction on u_1..u_m: F = Taylor(u_1..u_{m-1}),
// G = Taylor(u_i / gcd(u_i, u_m)) shifted by deg u_m, phi the canonical map.
ConeInput taylor_cone_input(std::span<const Monomial> u);

// Extends phi_0 : G_0 -> F_0 to a chain map by dividing each phi(d_G g) by the
// boundaries of F in basis order; falls back to degreewise linear solving.
ChainMap lift_chain_map(const FreeComplex& g, const FreeComplex& f, ScalarMatrix phi0,
                        std::vector<std::string>* notes = nullptr);

struct LinearQuotients {
  bool ok = true;
  std::size_t failure_index = 0;                  // 1-based j of the first non-linear colon
  std::vector<std::vector<std::size_t>> variables;  // variables[j-1] = L_j, zero-based
};

// L_j = (u_1..u_j) : u_{j+1}; requires nondecreasing total degrees.
LinearQuotients linear_quotients(std::span<const Monomial> u);

struct StabilityViolation {
  Monomial generator;
  Monomial missing;  // x_j * u / x_{m(u)} not in I
};

std::optional<StabilityViolation> stability_violation(const MonomialIdeal& ideal);
bool is_stable(const MonomialIdeal& ideal);
// Minimal generators by ascending total degree, then lex descending.
std::vector<Monomial> stable_order(const MonomialIdeal& ideal);
// Smallest stable ideal containing the given one.
MonomialIdeal stable_closure(const MonomialIdeal& ideal);

FreeComplex eliahou_kervaire(const MonomialIdeal& ideal);
// The j-th cone step of the construction above (1 <= j < number of generators).
ConeInput eliahou_kervaire_step(const MonomialIdeal& ideal, std::size_t j);

// Columns d_{p+1}(e) for e in F_{p+1}; these generate Z_p when the complex is
// exact. p = 0 yields the generators of the resolved submodule of F_0.
std::vector<ModuleVector<Rational>> boundary_generators(const FreeComplex& c, std::size_t p);
// Same as boundary_generators but rejects p < 1.
std::vector<ModuleVector<Rational>> syzygy_generators(const FreeComplex& c, int p);

// Cancels unit entries until every entry lies in the maximal ideal, then
// re-sorts every level into a lex-refined basis.
FreeComplex minimize(const FreeComplex& c);

struct ComplexCheck {
  bool ok = true;
  std::string message;
};

// d o d = 0 and every nonzero entry has deg target <= deg source.
ComplexCheck check_complex(const FreeComplex& c);

struct ExactnessFailure {
  std::size_t p;
  Multidegree degree;
  std::string reason;
};

struct ExactnessReport {
  Multidegree box_upper;
  std::size_t degrees_checked = 0;
  std::vector<ExactnessFailure> failures;  // ordered by total degree, then lex
  bool ok() const noexcept { return failures.empty(); }
};

// Checks, degree by degree on [0, box_upper], that H_p = 0 for p >= 1 and that
// the image of d_1 equals the submodule of F_0 generated by module_gens.
ExactnessReport check_exactness_on_box(const FreeComplex& c,
                                       std::span<const ModuleVector<Rational>> module_gens,
                                       const Multidegree& box_upper);

// Exactness check for a resolution of S/I; default box is [0, g+1]^n with g
// the lcm exponent of the generators.
ExactnessReport check_resolution(const FreeComplex& c, const MonomialIdeal& ideal,
                                 std::optional<Multidegree> box_upper = std::nullopt);

Multidegree default_box(const MonomialIdeal& ideal);

// Image of v under the degree-preserving map m : span(src) -> span(dst).
ModuleVector<Rational> apply_map(const ScalarMatrix& m, const OrderedBasis& src, const OrderedBasis& dst,
                                 const ModuleVector<Rational>& v);

// Some x with m(x) = target, where target is multihomogeneous of degree a;
// none when target is not in the image.
std::optional<ModuleVector<Rational>> preimage(const ScalarMatrix& m, const OrderedBasis& src,
                                               const OrderedBasis& dst, const ModuleVector<Rational>& target,
                                               const Multidegree& a);

// Ideal generators as vectors in the rank-one module F_0 = S.
std::vector<ModuleVector<Rational>> ideal_as_vectors(const MonomialIdeal& ideal);

}  // namespace syzdepth
