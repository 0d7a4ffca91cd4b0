#pragma once

#include "psmod/domain.hpp"

#include <optional>
#include <vector>

/// Divisibility theory in the test-bed domains. Order domains delegate to
/// psmod::Order; localized domains decide divisibility through ideal
/// saturation in the base order.
namespace psmod {

/// u^2 + m v^2. Only defined for ImagQuadOrder; DomainMismatch otherwise.
Integer norm(const Domain& d, const Element& e);

/// True iff b = a*q for some q. Throws InvalidDivisor for a == 0.
bool divides(const Domain& d, const Element& a, const Element& b);
/// The q with b = a*q, when it exists.
std::optional<Element> exact_div(const Domain& d, const Element& a, const Element& b);
/// b / a, throwing InvalidArgument when a does not divide b.
Element quotient(const Domain& d, const Element& b, const Element& a);

bool associates(const Domain& d, const Element& a, const Element& b);

/// Highest power of the S-product tried when listing divisors in A_S.
inline constexpr unsigned kLocalizedDivisorDepth = 3;

/// One representative per associate class of divisors of a, in candidate
/// order. Z and Z[w]: lattice points of norm dividing norm(a). A_S: classes
/// of base divisors of num(a)*s^k, k increasing until the class set is stable
/// (UnsupportedEnumeration if it is still growing at kLocalizedDivisorDepth).
/// Q[x]: UnsupportedEnumeration.
std::vector<Element> divisors_up_to_units(const Domain& d, const Element& a);
std::vector<Element> common_divisors(const Domain& d, const Element& a, const Element& b);
bool is_coprime(const Domain& d, const Element& a, const Element& b);
/// Maximal common divisor, extracting the smallest nonunit common divisor
/// until the cofactors are coprime. The postcondition is re-checked.
Element mcd(const Domain& d, const Element& a, const Element& b);

bool is_atom(const Domain& d, const Element& a);
bool is_prime_element(const Domain& d, const Element& a);
/// Atoms whose product is an associate of a, in candidate order.
std::vector<Element> factor_into_atoms(const Domain& d, const Element& a);

}  // namespace psmod
