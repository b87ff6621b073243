#pragma once

#include <stdexcept>

namespace e2z {

// Newton or bisection ran out of iterations.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A sign change that the strip bounds guarantee failed to materialize.
struct bracket_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A refined zero violated the certified bound it must satisfy.
struct certification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace e2z
