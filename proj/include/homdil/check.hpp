#pragma once

#include <string>
#include <utility>

namespace homdil {

/// Outcome of a validation pass: ok, or the first violated condition.
struct Check {
  bool ok = true;
  std::string message;

  static Check pass() { return {}; }
  static Check fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace homdil
