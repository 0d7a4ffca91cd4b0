#pragma once

#include "psmod/integer.hpp"

#include <optional>
#include <span>
#include <vector>

/// Integer lattices given by row generators. Every ideal and module in the
/// library is stored as one of these, reduced to Hermite normal form.
namespace psmod::lattice {

using Vec = std::vector<Integer>;
using Rows = std::vector<Vec>;

/// Row Hermite normal form of the lattice spanned by `gens` in Z^ncols.
/// Rows are returned in increasing pivot column, pivots positive, and entries
/// above each pivot reduced into [0, pivot). Zero rows are dropped, so the
/// result is the canonical basis: equal lattices give identical output.
Rows hnf(Rows gens, size_t ncols);

/// Pivot column of each row of an HNF basis.
std::vector<size_t> pivots(const Rows& basis);

/// Coordinates of `v` with respect to an HNF basis, or nullopt when `v` is
/// not in the lattice.
std::optional<Vec> solve(const Rows& basis, const Vec& v);

bool contains(const Rows& basis, const Vec& v);

/// True iff every row of `sub` lies in the lattice of `basis`.
bool contains_all(const Rows& basis, const Rows& sub);

/// Basis (HNF) of all integer relations c with sum c_i * rows_i = 0.
Rows kernel(const Rows& rows, size_t ncols);

Rows intersection(const Rows& a, const Rows& b, size_t ncols);

/// { lambda in Z^k : sum lambda_i * images_i in L }, as an HNF basis in Z^k.
Rows preimage(const Rows& images, const Rows& target, size_t ncols);

/// Product of the pivots. Equals the index [Z^n : L] when L has full rank.
Integer pivot_product(const Rows& basis);

Vec scaled(const Vec& v, const Integer& k);
Vec add(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

}  // namespace psmod::lattice
