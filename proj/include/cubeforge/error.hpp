#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubeforge {

/// Malformed input or a violated precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is well formed but has no realization (e.g. a daisy cube whose
/// tau-graph contains a cycle handed to the resonance synthesizer).
class NotRealizableError : public InputError {
 public:
  using InputError::InputError;
};

/// An enumeration or search cap was exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural guarantee failed to hold. Always a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InternalError(what);
}

/// Enumeration caps. Defaults can be overridden with the CUBE_FORGE_BUDGET
/// environment variable, a comma separated list of key=value pairs, e.g.
/// `CUBE_FORGE_BUDGET=census_classes=4,matchings=5000`.
struct Budget {
  int census_classes = 5;
  int hypercube_dimension = 20;
  std::size_t matchings = 1'000'000;
  std::size_t cliques = std::size_t{1} << 20;
  int iso_vertices = 300;

  static Budget parse(const std::string& spec);
};

/// Process-wide budget, read once from the environment.
const Budget& default_budget();

}  // namespace cubeforge
