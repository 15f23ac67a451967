#include "teichflow/dd.hpp"

#include <cstdio>

namespace teich {

std::string to_string(const dd& x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17g", x.hi, x.lo);
  return buf;
}

} // namespace teich
