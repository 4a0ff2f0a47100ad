#include "homlie/errors.hpp"

namespace homlie {

namespace {

std::string triple_text(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

}  // namespace

SkewViolation::SkewViolation(Triple w)
    : MathError("SkewViolation at " + triple_text(w)), where(w) {}

JacobiViolation::JacobiViolation(Triple w)
    : MathError("JacobiViolation at " + triple_text(w)), where(w) {}

RepresentationViolation::RepresentationViolation(std::size_t a, std::size_t b)
    : MathError("RepresentationViolation on pair (" + std::to_string(a) + "," + std::to_string(b) + ")"),
      i(a),
      j(b) {}

}  // namespace homlie
