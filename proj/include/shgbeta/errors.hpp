#pragma once

#include <stdexcept>
#include <string>

namespace shgbeta {

/// Invalid input data or violated operation precondition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An effectively undamped energy denominator fell on an exact resonance.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(const std::string& what, int level, int multiple)
      : std::runtime_error(what), level_(level), multiple_(multiple) {}

  int level() const noexcept { return level_; }
  int multiple() const noexcept { return multiple_; }

 private:
  int level_;
  int multiple_;
};

}  // namespace shgbeta
