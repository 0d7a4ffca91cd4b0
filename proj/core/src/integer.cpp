#include "psmod/integer.hpp"

#include "psmod/error.hpp"

#include <algorithm>

namespace psmod {

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "isqrt of negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n, Integer* root) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cannot factor zero");
  Integer rest = abs(n);
  std::vector<std::pair<Integer, unsigned>> out;
  for (Integer p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (rest > 1) out.emplace_back(rest, 1);
  return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  auto f = factor_integer(n);
  return f.size() == 1 && f[0].second == 1;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  for (const auto& pe : factor_integer(n))
    if (pe.second > 1) return false;
  return true;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace psmod
