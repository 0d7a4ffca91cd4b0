#pragma once

#include "psmod/constructions.hpp"
#include "psmod/domain.hpp"
#include "psmod/ideals.hpp"
#include "psmod/modules.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

/// Text forms shared by the CLI and certificates. Whitespace is ignored;
/// errors are ParseError with a 1-based line and column.
///
///   domain   Z | Z[w,-m] | Q[x] | loc(<domain>; [g1, g2, ...])
///   element  integers, w (the square root of -m), x (over Q[x]), + - * / ^,
///            parentheses and implicit products such as 3w or 2x^2.
///            a/b is exact division in the domain, e.g. (1+w)/2^3 in A_S.
///   vector   (e1, ..., en), or a bare element for rank 1
///   ideal    [g1, ..., gk]
///   module   [module over <domain>] rank n gens [v1, ...] [loc by [s1, ...]]
///            (rank-1 generators may be bare elements)
///   poly     polynomial in X with coefficients in Z or Z[w], e.g. 2+(1+w)X
namespace psmod {

Domain parse_domain(std::string_view text);
Element parse_element(const Domain& d, std::string_view text);
Vector parse_vector(const Domain& d, std::string_view text);
std::vector<Element> parse_element_list(const Domain& d, std::string_view text);
OIdeal parse_ideal(const Domain& d, std::string_view text);
/// `scalars` supplies the domain when the literal has no "module over"
/// prefix. A localized `scalars` domain makes the result a LocModuleView over
/// its base.
Module parse_module(std::string_view text, const std::optional<Domain>& scalars = std::nullopt);
OPoly parse_opoly(const Domain& d, std::string_view text);

std::string format_module(const Module& m);
std::string format_ideal(const OIdeal& ideal);
std::string format_opoly(const Order& o, const OPoly& f);

}  // namespace psmod
