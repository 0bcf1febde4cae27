#pragma once

#include <cmath>
#include <vector>

#include "doctest.h"

#include "hlab/error.hpp"
#include "hlab/metric_core.hpp"

namespace test {

inline hlab::PointSpace line(const std::vector<double>& xs) {
  std::vector<std::vector<double>> pts;
  for (double x : xs) pts.push_back({x});
  return hlab::PointSpace::from_coordinates(pts);
}

inline const double kCantorAlpha = std::log(2.0) / std::log(3.0);

}  // namespace test

#define CHECK_CODE(expr, expected)                                        \
  do {                                                                    \
    bool thrown_ = false;                                                 \
    try {                                                                 \
      (void)(expr);                                                       \
    } catch (const hlab::Error& e_) {                                     \
      thrown_ = true;                                                     \
      CHECK_MESSAGE(e_.code() == (expected), hlab::to_string(e_.code())); \
    }                                                                     \
    CHECK_MESSAGE(thrown_, "expected an hlab::Error");                    \
  } while (false)
