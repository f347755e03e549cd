#pragma once

#include <string>
#include <stdexcept>
#include <string_view>

#include "quivernc/quiver.hpp"

namespace quivernc::testing {

inline Quiver quiver_named(std::string_view name) {
  if (name == "A1") return parse_quiver("vertices 1");
  if (name == "A2") return parse_quiver("vertices 2\narrow 2 1");
  if (name == "A3") return parse_quiver("vertices 3\narrow 2 1\narrow 2 3");
  if (name == "A4") return parse_quiver("vertices 4\narrow 1 2\narrow 2 3\narrow 3 4");
  if (name == "D4") return parse_quiver("vertices 4\narrow 1 4\narrow 2 4\narrow 3 4");
  if (name == "kronecker") return parse_quiver("vertices 2\narrow 1 2\narrow 1 2");
  if (name == "triple") return parse_quiver("vertices 2\narrow 1 2\narrow 1 2\narrow 1 2");
  if (name == "affineA2") return parse_quiver("vertices 3\narrow 1 2\narrow 2 3\narrow 1 3");
  throw std::invalid_argument(std::string(name));
}

inline Root root(std::string_view digits) {
  Root r(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) r[i] = digits[i] - '0';
  return r;
}

}  // namespace quivernc::testing
