#pragma once

// Independent reference arithmetic for the test suites. Everything here uses
// machine integers and its own lattice reduction; nothing calls into the
// library, so agreement with the library is meaningful.

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

using i64 = long long;

/// u + v*w with w^2 = -m; m = 0 models Z (v stays 0).
struct Q {
  i64 u = 0;
  i64 v = 0;
  friend bool operator==(const Q& a, const Q& b) { return a.u == b.u && a.v == b.v; }
};

using QVec = std::vector<Q>;
using Row = std::vector<i64>;
using Rows = std::vector<Row>;

/// Echelon form with positive pivots and reduced entries above them; zero
/// rows dropped. Canonical for a given lattice. Throws on i64 overflow.
Rows hnf(Rows rows);
bool in_lattice(const Rows& hnf_rows, Row v);

class Ring {
 public:
  explicit Ring(i64 m) : m_(m) {}
  i64 m() const { return m_; }
  bool is_z() const { return m_ == 0; }

  Q add(Q a, Q b) const { return {a.u + b.u, a.v + b.v}; }
  Q mul(Q a, Q b) const;
  i64 norm(Q a) const { return a.u * a.u + m_ * a.v * a.v; }
  bool is_unit(Q a) const { return norm(a) == 1; }
  /// b / a when it lies in the ring.
  std::optional<Q> div(Q b, Q a) const;
  /// Every element c (all associates) with N(c) dividing n > 0.
  std::vector<Q> elements_with_norm_dividing(i64 n) const;

  /// Z-coordinates of a vector: (u1, v1, u2, v2, ...), or (u1, u2, ...) over Z.
  Row coords(const QVec& x) const;
  /// Z-basis lattice of the A-module generated by `gens`.
  Rows module_lattice(const std::vector<QVec>& gens) const;
  /// Z-basis lattice of the ideal generated by `gens`.
  Rows ideal_lattice(const std::vector<Q>& gens) const;
  Rows ideal_product(const Rows& i, const Rows& j) const;

  /// A/(p) enumerated and searched for zero divisors.
  bool is_prime_by_residues(Q p) const;

 private:
  i64 m_;
};

struct Table {
  Q c, d, e;
  QVec z;
};

/// Searches every common divisor c of a and b, sets d = b/c, e = a/c and
/// solves z = x/d entrywise; accepts when y = e*z and z lies in M.
std::optional<Table> brute_refinement(const Ring& r, Q a, Q b, const QVec& x, const QVec& y,
                                      const std::vector<QVec>& module_gens);

}  // namespace oracle
