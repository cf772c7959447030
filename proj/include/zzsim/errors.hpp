#pragma once

#include <stdexcept>
#include <string>

namespace zzsim {

// Configuration / input validation problems (CLI exit code 2).
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct grid_error : config_error {
  using config_error::config_error;
};

// Numerical failures inside a computation (CLI exit code 3).
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct pole_error : numeric_error {
  using numeric_error::numeric_error;
};

struct frame_error : numeric_error {
  using numeric_error::numeric_error;
};

struct branch_error : numeric_error {
  using numeric_error::numeric_error;
};

struct step_size_error : numeric_error {
  using numeric_error::numeric_error;
};

struct calibration_error : numeric_error {
  using numeric_error::numeric_error;
};

// Filesystem problems when writing results (CLI exit code 4).
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zzsim
