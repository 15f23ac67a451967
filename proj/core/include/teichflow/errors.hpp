#pragma once

// Error taxonomy mirrored by CLI exit codes: schema/config problems (2),
// numerical failures -- tolerance or invariant violations, solver
// breakdown, non-convergent enumeration (3), and semantic property-check
// failures reported by verification commands (4).

#include <stdexcept>
#include <string>

namespace teich {

struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& m) : std::runtime_error(m) {}
};

struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& m) : std::runtime_error(m) {}
};

// A short curve transverse to the pants decomposition entered the active
// set: the chart cannot steer it and the caller must re-chart.
struct ChartViolation : NumericalError {
  explicit ChartViolation(const std::string& m) : NumericalError(m) {}
};

struct PropertyError : std::runtime_error {
  explicit PropertyError(const std::string& m) : std::runtime_error(m) {}
};

enum ExitCode : int {
  EXIT_OK = 0,
  EXIT_SCHEMA = 2,
  EXIT_NUMERICAL = 3,
  EXIT_PROPERTY = 4,
};

} // namespace teich
