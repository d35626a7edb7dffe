#pragma once

#include <stdexcept>

namespace nevgcd {

/// A mathematical hypothesis does not hold for the given input
/// (non-coprime pair, common zero, dependent arguments, ...).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nevgcd
