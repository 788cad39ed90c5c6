#pragma once

#include <cstdio>
#include <string>

namespace gsp::detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace gsp::detail
