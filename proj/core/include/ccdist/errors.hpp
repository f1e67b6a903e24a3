#pragma once

#include <stdexcept>
#include <string>

namespace ccdist {

/// Requested feature is outside the supported parameter set (e.g. an even
/// Student index, or a zeta argument we have no closed form for). Callers
/// that can fall back to a brute-force route should catch this.
class unsupported_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A tolerance could not be met within the iteration cap. Carries the
/// bracket that *was* achievable so callers can decide whether to accept it.
class resource_error : public std::runtime_error {
 public:
  resource_error(const std::string& what, double achievable_bracket)
      : std::runtime_error(what), achievable_(achievable_bracket) {}

  double achievable_bracket() const noexcept { return achievable_; }

 private:
  double achievable_;
};

}  // namespace ccdist
