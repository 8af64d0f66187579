#include "gjps/rational.hpp"

#include <stdexcept>

namespace gjps {

Rational rational_from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

}  // namespace gjps
