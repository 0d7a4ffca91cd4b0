#pragma once

#include <psmod/psmod.hpp>

#include <gtest/gtest.h>

#include <string_view>

namespace tu {

using namespace psmod;

inline Domain z() { return Domain::integers(); }
inline Domain quad(long m) { return Domain::imag_quad(m); }
inline Element el(const Domain& d, std::string_view s) { return parse_element(d, s); }
inline OrderElement oe(const Domain& d, std::string_view s) { return parse_element(d, s).order_element(); }
inline Vector vec(const Domain& d, std::string_view s) { return parse_vector(d, s); }
inline OIdeal ideal(const Domain& d, std::string_view s) { return parse_ideal(d, s); }
inline Module mod(const Domain& d, std::string_view s) { return parse_module(s, d); }

inline std::vector<std::string> formatted(const Domain& d, const std::vector<Element>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.push_back(d.format(e));
  return out;
}

}  // namespace tu

/// Expects `stmt` to throw psmod::Error of the given kind.
#define EXPECT_ERROR_KIND(stmt, k)                                      \
  do {                                                                  \
    try {                                                               \
      (void)(stmt);                                                     \
      ADD_FAILURE() << "no exception from " #stmt;                      \
    } catch (const psmod::Error& err_) {                                \
      EXPECT_EQ(err_.kind(), (k)) << err_.what();                       \
    }                                                                   \
  } while (0)
