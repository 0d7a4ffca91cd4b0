#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace psmod {

using Integer = mpz_class;
using Rational = mpq_class;

/// Floor of the square root of a nonnegative integer.
Integer isqrt(const Integer& n);

/// True iff n >= 0 is a perfect square; `root` receives the root when it is.
bool is_square(const Integer& n, Integer* root = nullptr);

/// Trial-division factorization of |n| (n != 0) into (prime, exponent) pairs,
/// primes ascending.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// All positive divisors of |n| (n != 0), ascending.
std::vector<Integer> positive_divisors(const Integer& n);

bool is_prime(const Integer& n);

bool is_squarefree(const Integer& n);

Integer floor_div(const Integer& a, const Integer& b);

inline std::string to_string(const Integer& n) { return n.get_str(); }

}  // namespace psmod
