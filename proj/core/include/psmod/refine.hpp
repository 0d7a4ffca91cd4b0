#pragma once

#include "psmod/domain.hpp"
#include "psmod/modules.hpp"

#include <optional>
#include <string>
#include <vector>

namespace psmod {

/// a*x = b*y with a, b nonzero scalars and x, y nonzero module elements.
/// `scalars` is the ring the equation is read over: the module's scalar
/// domain A, or A_S when the module is a LocModuleView.
struct Instance {
  Domain scalars;
  Module module;
  Element a;
  Element b;
  Vector x;
  Vector y;
};

/// Validates and builds an instance. Throws InvalidArgument when an entry is
/// zero or a*x != b*y, DomainMismatch when the scalars do not fit the module.
Instance make_instance(const Domain& scalars, Module module, Element a, Element b, Vector x,
                       Vector y);
/// The same equation read over the module's own scalars.
Instance make_instance(Module module, Element a, Element b, Vector x, Vector y);

/// a = c*e, b = c*d, x = d*z, y = e*z.
struct Refinement {
  Element c;
  Element d;
  Element e;
  Vector z;
};

bool verify(const Instance& inst, const Refinement& r);

enum class Outcome { Found, NotRefinable, Unknown };
std::string_view to_string(Outcome o);

/// One candidate common divisor t of (a, b) with the result of testing t*x in b*M.
struct CandidateRecord {
  Element t;
  bool accepted = false;
  std::string reason;
};

struct Reduction {
  enum class Kind { CommonAB, CommonXY, CommonAY, CommonBX };
  Kind kind;
  Element t;
};
std::string_view to_string(Reduction::Kind k);

struct Certificate {
  Outcome outcome = Outcome::Unknown;
  std::optional<Refinement> refinement;
  std::vector<CandidateRecord> candidates;
  std::string bounds;
  std::vector<Reduction> reductions;
};

struct ReduceOptions {
  /// Also cancel common factors of (a, y) and of (b, x).
  bool cross_cancel = false;
};

struct Reduced {
  Instance instance;
  std::vector<Reduction> log;
};

/// Cancels nonunit common divisors of (a, b) and scalars t with x, y in t*M
/// until none is left (plus the cross pairs when requested).
Reduced reduce_instance(const Instance& inst, const ReduceOptions& opts = {});
/// Turns a refinement of the reduced instance into one of the original.
Refinement lift(const Domain& scalars, const Module& m, const std::vector<Reduction>& log,
                Refinement r);

struct FindOptions {
  /// Run the decision on the reduced instance first, lifting a Found result.
  /// NotRefinable on the reduced instance falls back to the original, since
  /// cancellation is only sound in the lifting direction.
  bool reduce = false;
  ReduceOptions reduce_options;
  /// Try candidates from the largest down.
  bool descending = false;
};

/// A refinement exists iff some common divisor t of a and b has t*x in b*M;
/// it is then (t, b/t, a/t, t*x/b). Candidates are tried in candidate order.
/// Domains without divisor enumeration give Unknown.
Certificate find_refinement(const Instance& inst, const FindOptions& opts = {});

/// Prime-by-prime allocation over a UFD: each prime of a goes to c while it
/// still divides what is left of b, otherwise to e. Throws Unsupported unless
/// the scalar domain is a UFD.
Certificate ufd_fast_path(const Instance& inst);

/// The same instance over A_S, with module M_S.
Instance localize(const Instance& inst, const std::vector<OrderElement>& s_generators);

/// Converts a refinement of localize(inst, S) into a refinement over A by
/// clearing denominators and splitting them along the table. Throws NotPrimal
/// naming the element and pair when a split does not exist.
Refinement nagata_lift(const Refinement& over_as, const Instance& inst,
                       const std::vector<OrderElement>& s_generators);

/// ab/c for the c found on the product instance a*(x/a) = b*(x/b), where x
/// collects the given common multiples. Throws InvalidArgument when an entry
/// is not a common multiple or all entries are zero.
Element lcm_via_product_refinement(const Domain& d, const Element& a, const Element& b,
                                   const std::vector<Element>& multiples);

/// Two-stage search on M (+) N: c with (b/c) | x_1 in M, then c' dividing
/// a/c and b/c with (b/(cc')) | x_2 in N. Every first-stage c is tried.
Certificate direct_sum_refinement(const Instance& inst, const Module& first,
                                  const Module& second);

}  // namespace psmod
