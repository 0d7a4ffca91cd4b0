#include "psmod/lattice.hpp"

#include "psmod/error.hpp"

#include <utility>

namespace psmod::lattice {

Rows hnf(Rows m, size_t ncols) {
  for (auto& row : m)
    if (row.size() != ncols) throw Error(ErrorKind::Internal, "hnf: ragged generator rows");

  size_t r = 0;
  for (size_t c = 0; c < ncols && r < m.size(); ++c) {
    for (size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      if (m[r][c] == 0) {
        std::swap(m[r], m[i]);
        continue;
      }
      // unimodular 2x2 step [s t; -b/g a/g] zeroes m[i][c]
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[r][c].get_mpz_t(),
                 m[i][c].get_mpz_t());
      const Integer ra = m[r][c] / g;
      const Integer rb = m[i][c] / g;
      for (size_t k = c; k < ncols; ++k) {
        Integer top = s * m[r][k] + t * m[i][k];
        Integer bot = ra * m[i][k] - rb * m[r][k];
        m[r][k] = std::move(top);
        m[i][k] = std::move(bot);
      }
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (size_t k = c; k < ncols; ++k) m[r][k] = -m[r][k];
    for (size_t i = 0; i < r; ++i) {
      if (m[i][c] == 0) continue;
      const Integer q = floor_div(m[i][c], m[r][c]);
      for (size_t k = c; k < ncols; ++k) m[i][k] -= q * m[r][k];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

std::vector<size_t> pivots(const Rows& basis) {
  std::vector<size_t> out;
  out.reserve(basis.size());
  for (const auto& row : basis) {
    size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    out.push_back(c);
  }
  return out;
}

std::optional<Vec> solve(const Rows& basis, const Vec& v) {
  Vec rest = v;
  Vec coef(basis.size());
  const auto piv = pivots(basis);
  for (size_t i = 0; i < basis.size(); ++i) {
    const size_t p = piv[i];
    const size_t prev = i == 0 ? 0 : piv[i - 1] + 1;
    for (size_t c = prev; c < p; ++c)
      if (rest[c] != 0) return std::nullopt;
    if (!mpz_divisible_p(rest[p].get_mpz_t(), basis[i][p].get_mpz_t())) return std::nullopt;
    coef[i] = rest[p] / basis[i][p];
    if (coef[i] != 0)
      for (size_t c = p; c < rest.size(); ++c) rest[c] -= coef[i] * basis[i][c];
  }
  if (!is_zero(rest)) return std::nullopt;
  return coef;
}

bool contains(const Rows& basis, const Vec& v) { return solve(basis, v).has_value(); }

bool contains_all(const Rows& basis, const Rows& sub) {
  for (const auto& row : sub)
    if (!contains(basis, row)) return false;
  return true;
}

Rows kernel(const Rows& rows, size_t ncols) {
  const size_t k = rows.size();
  Rows aug;
  aug.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    Vec row(ncols + k);
    for (size_t c = 0; c < ncols; ++c) row[c] = rows[i][c];
    row[ncols + i] = 1;
    aug.push_back(std::move(row));
  }
  Rows h = hnf(std::move(aug), ncols + k);
  Rows ker;
  for (const auto& row : h) {
    bool head_zero = true;
    for (size_t c = 0; c < ncols; ++c)
      if (row[c] != 0) {
        head_zero = false;
        break;
      }
    if (head_zero) ker.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(ncols), row.end());
  }
  return hnf(std::move(ker), k);
}

Rows intersection(const Rows& a, const Rows& b, size_t ncols) {
  if (a.empty() || b.empty()) return {};
  Rows stacked = a;
  for (const auto& row : b) stacked.push_back(scaled(row, -1));
  Rows rel = kernel(stacked, ncols);
  Rows out;
  for (const auto& c : rel) {
    Vec v(ncols);
    for (size_t i = 0; i < a.size(); ++i)
      if (c[i] != 0)
        for (size_t j = 0; j < ncols; ++j) v[j] += c[i] * a[i][j];
    out.push_back(std::move(v));
  }
  return hnf(std::move(out), ncols);
}

Rows preimage(const Rows& images, const Rows& target, size_t ncols) {
  const size_t k = images.size();
  Rows stacked = images;
  for (const auto& row : target) stacked.push_back(row);
  Rows rel = kernel(stacked, ncols);
  Rows out;
  for (const auto& c : rel) out.emplace_back(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
  return hnf(std::move(out), k);
}

Integer pivot_product(const Rows& basis) {
  Integer p = 1;
  const auto piv = pivots(basis);
  for (size_t i = 0; i < basis.size(); ++i) p *= basis[i][piv[i]];
  return p;
}

Vec scaled(const Vec& v, const Integer& k) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * k;
  return out;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace psmod::lattice
