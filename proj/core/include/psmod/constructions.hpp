#pragma once

#include "psmod/domain.hpp"
#include "psmod/ideals.hpp"
#include "psmod/modules.hpp"

#include <optional>
#include <vector>

namespace psmod {

struct MultiplicativeSet {
  Domain base;
  std::vector<OrderElement> generators;
  /// Whether S stands for its saturation (all divisors of its elements).
  bool saturated = false;
};

struct AtomVerdict {
  OrderElement atom;
  bool prime = false;
};

struct NonprimeAtomReport {
  MultiplicativeSet set;
  /// Every atom of norm <= bound with its primality verdict.
  std::vector<AtomVerdict> atoms;
};

/// Atoms of norm <= bound that are not prime, in candidate order. Z and
/// Z[w] only.
NonprimeAtomReport nonprime_atom_set(const Domain& d, const Integer& norm_bound);

struct SplitVerdict {
  OrderElement p;
  bool pass = false;
  /// saturation((p), s) for s the product of the generators.
  OIdeal saturated;
};

/// For each p: does saturation((p), s) equal (p)?
std::vector<SplitVerdict> splitting_check(const MultiplicativeSet& s,
                                          const std::vector<OrderElement>& primes);

/// Polynomial over Z or Z[w], coefficients in ascending degree.
using OPoly = std::vector<OrderElement>;

OPoly poly_mul(const Order& o, const OPoly& f, const OPoly& g);

struct Content {
  OPoly polynomial;
  OIdeal content_ideal;
};

Content content(const Order& o, const OPoly& f);

struct DedekindMertens {
  unsigned m = 0;
  /// c(f)^m c(fg) and c(f)^(m+1) c(g), equal by construction.
  OIdeal lhs;
  OIdeal rhs;
  /// m - 1 was tested and fails (only meaningful for m >= 2).
  bool predecessor_fails = false;
};

/// Least m >= 1 with c(f)^m c(fg) = c(f)^(m+1) c(g), searched up to deg(g)+1.
/// Throws InvalidArgument for zero input and Internal when the search bound
/// is exceeded or minimality does not re-check.
DedekindMertens dedekind_mertens_exponent(const Order& o, const OPoly& f, const OPoly& g);

/// A finitely generated A-submodule N of an ambient module M (plain or
/// localized). Represented as (1/den) * L with L an f.g. module over A.
class Submodule {
 public:
  /// Throws InvalidArgument when a generator lies outside `ambient`.
  Submodule(Module ambient, std::vector<Vector> generators);

  const Module& ambient() const { return ambient_; }
  const std::vector<Vector>& generators() const { return gens_; }
  const FgModule& numerators() const { return *numerators_; }
  const OrderElement& denominator() const { return den_; }

  bool contains(const Vector& v) const;
  bool contains(const Submodule& other) const;
  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.contains(b) && b.contains(a);
  }

 private:
  Module ambient_;
  std::vector<Vector> gens_;
  OrderElement den_;
  std::optional<FgModule> numerators_;
};

struct EnvelopeBounds {
  /// a and b range over nonunits with norm <= norm_bound.
  Integer norm_bound = 0;
  /// Combination coefficients u + v*w of the generators with |u|, |v| <= height.
  long height = 0;
  unsigned max_iterations = 8;
};

struct Adjoined {
  Element a;
  Element b;
  Vector x;
  /// x / a, the vector added to N.
  Vector quotient;
};

struct EnvelopeStep {
  Submodule module;
  std::vector<Adjoined> adjoined;
  /// False when the bounds leave nothing to search.
  bool searched = false;
};

/// One application of the prime operation: adjoins x/a for every bounded
/// combination x of the generators and every coprime pair (a, b) of
/// nonunits within the norm bound with b*x in a*N and x/a in M.
EnvelopeStep ps_envelope_step(const Submodule& n, const EnvelopeBounds& bounds);

struct Envelope {
  Submodule module;
  bool stabilized = false;
  unsigned iterations = 0;
};

/// Iterates ps_envelope_step until a step adjoins nothing (stabilized) or
/// the iteration bound is reached. An empty search reports stabilized = false.
Envelope ps_envelope(const Submodule& n, const EnvelopeBounds& bounds);

enum class Verdict { HoldsOnSample, Refuted, Vacuous };
std::string_view to_string(Verdict v);

struct SampleWitness {
  Vector element;
  Vector atom;
  Element cofactor;
  bool atom_primitive = false;
};

struct ClassifyReport {
  Verdict atomic = Verdict::Vacuous;
  Verdict factorable = Verdict::Vacuous;
  size_t sampled = 0;
  std::vector<SampleWitness> witnesses;
};

/// Samples up to `budget` nonzero elements of M (small integer combinations
/// of its Z-basis), extracts an atom divisor of each by repeated scalar
/// division, and checks that atom for primitivity in M.
ClassifyReport classify_module_sample(const FgModule& m, size_t budget);

}  // namespace psmod
