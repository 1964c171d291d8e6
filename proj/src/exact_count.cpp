#include "statecount/exact_count.hpp"

#include <ostream>
#include <stdexcept>

namespace statecount {

ExactCount ExactCount::from_rep(Rep v) {
  if (v < 0) throw std::domain_error("ExactCount cannot hold a negative value");
  ExactCount c;
  c.value_ = std::move(v);
  return c;
}

ExactCount ExactCount::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  for (char ch : text) {
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("not a canonical decimal string: " + std::string(text));
  }
  if (text.size() > 1 && text.front() == '0')
    throw std::invalid_argument("leading zero in decimal string: " + std::string(text));
  ExactCount c;
  c.value_ = Rep(std::string(text));
  return c;
}

std::string ExactCount::to_string() const { return value_.str(); }

std::ostream& operator<<(std::ostream& os, const ExactCount& c) { return os << c.to_string(); }

}  // namespace statecount
