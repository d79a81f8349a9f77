#pragma once

#include <stdexcept>

namespace carpet {

// H = aC0 + bf fails very ampleness (a >= 1 and b >= ae+1).
struct NotVeryAmple : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The query is outside every rule's validity range. Callers may fall back
// to a coarser bound; the engine never guesses.
struct NoRuleApplies : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a = 1 (scroll carpets): no estimator rules exist for this case.
struct UnsupportedA : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A checked hypothesis of an estimator did not hold.
struct PreconditionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidQuery : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace carpet
