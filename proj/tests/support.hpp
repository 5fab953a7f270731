#pragma once

#include <gtest/gtest.h>

#include <array>
#include <string>
#include <vector>

#include "toricfil/error.hpp"
#include "toricfil/rational.hpp"
#include "toricfil/region.hpp"

namespace toricfil::testing {

inline Rational q(const std::string& s) { return parse_rational(s); }

inline Vec qv(std::initializer_list<const char*> xs) {
  Vec v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

// Region on the smooth rank-2 orthant from (a, b, c) triples meaning a x + b y >= c.
inline CoboundedRegion smooth_region(std::initializer_list<std::array<const char*, 3>> hs) {
  std::vector<Halfspace> out;
  for (const auto& h : hs) out.push_back(Halfspace::make(qv({h[0], h[1]}), parse_rational(h[2])));
  return CoboundedRegion::make(Cone::orthant(2), out);
}

// The two weighted regions {x + y/2 >= 1} and {x/2 + y >= 1}.
inline CoboundedRegion v0_region() { return smooth_region({{"1", "1/2", "1"}}); }
inline CoboundedRegion v1_region() { return smooth_region({{"1/2", "1", "1"}}); }

#define EXPECT_ERROR_KIND(stmt, kind_value)                                   \
  do {                                                                        \
    try {                                                                     \
      stmt;                                                                   \
      ADD_FAILURE() << "no error raised";                                     \
    } catch (const ::toricfil::Error& e) {                                    \
      EXPECT_EQ(e.kind(), kind_value) << e.what();                            \
    }                                                                         \
  } while (0)

}  // namespace toricfil::testing
