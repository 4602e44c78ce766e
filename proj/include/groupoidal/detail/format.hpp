#pragma once

#include <cstdio>
#include <string>

namespace groupoidal::detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace groupoidal::detail
