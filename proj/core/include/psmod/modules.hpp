#pragma once

#include "psmod/domain.hpp"
#include "psmod/ideals.hpp"
#include "psmod/lattice.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace psmod {

/// A module element: one coordinate per ambient summand.
using Vector = std::vector<Element>;

/// Finitely generated submodule of A^n for A = Z or Z[w], stored as the
/// Z-lattice of its coordinates (n*deg integers per vector) in HNF and closed
/// under the w-action. Over Q[x] only rank 1 is supported; the module is then
/// the ideal generated by the gcd of the generators.
class FgModule {
 public:
  static FgModule from_generators(const Domain& domain, size_t rank, std::vector<Vector> gens);
  /// A^n with its standard basis.
  static FgModule free(const Domain& domain, size_t rank);

  const Domain& domain() const { return domain_; }
  size_t ambient_rank() const { return rank_; }
  const std::vector<Vector>& generators() const { return gens_; }
  /// HNF basis over Z. Empty for Q[x] modules.
  const lattice::Rows& lattice() const { return lattice_; }
  /// Rank as an A-module.
  size_t rank() const;
  bool is_zero() const;

  bool contains(const Vector& v) const;
  /// Z-basis elements of the lattice, as vectors.
  std::vector<Vector> basis_vectors() const;

  lattice::Vec coords(const Vector& v) const;
  Vector from_coords(const lattice::Vec& c) const;

  friend bool operator==(const FgModule& a, const FgModule& b);

 private:
  FgModule(Domain d) : domain_(std::move(d)) {}

  Domain domain_;
  size_t rank_ = 0;
  std::vector<Vector> gens_;
  lattice::Rows lattice_;
  RatPoly qgen_;
};

/// M_S = M (x) A_S for an FgModule M over A, regarded as an A-module. Elements
/// are vectors of S-fractions. Every decision is reduced to a saturation in
/// the base: v/sigma lies in b*M_S iff s^k*v lies in b*M for some k.
class LocModuleView {
 public:
  LocModuleView(FgModule base, std::vector<OrderElement> s_generators);

  const FgModule& base() const { return base_; }
  /// A_S, the domain of the vector entries.
  const Domain& localized() const { return loc_; }
  const std::vector<OrderElement>& s_generators() const { return loc_.s_generators(); }
  size_t ambient_rank() const { return base_.ambient_rank(); }

  /// (X, sigma) with v = X / sigma, sigma the least common denominator.
  std::pair<std::vector<OrderElement>, std::vector<unsigned>> numerator_form(const Vector& v) const;

  friend bool operator==(const LocModuleView& a, const LocModuleView& b) {
    return a.base_ == b.base_ && a.loc_ == b.loc_;
  }

 private:
  FgModule base_;
  Domain loc_;
};

using Module = std::variant<FgModule, LocModuleView>;

/// Domain of the vector entries (A for FgModule, A_S for LocModuleView).
const Domain& element_domain(const Module& m);
/// The ring of scalars A the module is regarded over.
const Domain& scalar_domain(const Module& m);
size_t ambient_rank(const Module& m);
/// Converts a scalar (from A, or from A_S for a LocModuleView) to the
/// element domain.
Element to_element_domain(const Module& m, const Element& a);

Vector scale(const Module& m, const Element& a, const Vector& v);
bool vectors_equal(const Module& m, const Vector& v, const Vector& w);
bool is_zero_vector(const Module& m, const Vector& v);
/// "(e1, e2, ...)" in the element grammar.
std::string format_vector(const Domain& d, const Vector& v);
/// Throws RankMismatch or DomainMismatch unless v is a vector of the ambient
/// space of m.
void check_vector(const Module& m, const Vector& v);

bool module_membership(const Vector& v, const Module& m);
/// z in M with v = a*z, when it exists. `a` is a scalar of A or, for a
/// LocModuleView, of A_S. Throws InvalidDivisor for a == 0.
std::optional<Vector> divide_in_module(const Element& a, const Vector& v, const Module& m);

/// { t in A : t*x in a*M } as an ideal of the base order. Throws
/// InvalidArgument for a == 0 or x == 0 and Unsupported over Q[x].
OIdeal colon_ideal(const Element& a, const Vector& x, const Module& m);

/// M/Ax torsion-free, i.e. Kx meets M exactly in Ax. For a LocModuleView with
/// nonempty S this is always false: x/s lies in M_S but not in Ax.
bool is_primitive(const Vector& x, const Module& m);
/// Only units among the scalars a with x/a in M. False for a LocModuleView
/// with nonempty S, since every s in S divides x there.
bool is_irreducible_element(const Vector& x, const Module& m);

/// Block-diagonal direct sum. Both summands must share the domain (and S).
Module direct_sum(const Module& a, const Module& b);
FgModule direct_sum(const FgModule& a, const FgModule& b);

}  // namespace psmod
