#pragma once

#include <stdexcept>
#include <string>

namespace scarlab {

// Base for all recoverable errors thrown by the library.  The CLI maps each
// concrete type to a machine-readable error code.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct NoConvergence : Error {
  NoConvergence(int iterations, double best_residual, const std::string& what)
      : Error("NoConvergence", what),
        iterations(iterations),
        best_residual(best_residual) {}
  int iterations;
  double best_residual;
};

struct StepUnderflow : Error {
  explicit StepUnderflow(const std::string& what) : Error("StepUnderflow", what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch", what) {}
};

struct SizeTooLarge : Error {
  explicit SizeTooLarge(const std::string& what) : Error("SizeTooLarge", what) {}
};

struct DegenerateWeight : Error {
  explicit DegenerateWeight(const std::string& what) : Error("DegenerateWeight", what) {}
};

struct ZeroDenominator : Error {
  explicit ZeroDenominator(const std::string& what) : Error("ZeroDenominator", what) {}
};

struct ConstraintViolated : Error {
  explicit ConstraintViolated(const std::string& what) : Error("ConstraintViolated", what) {}
};

struct PoleAtK : Error {
  explicit PoleAtK(const std::string& what) : Error("PoleAtK", what) {}
};

struct InvalidCase : Error {
  explicit InvalidCase(const std::string& what) : Error("InvalidCase", what) {}
};

struct OutOfRange : Error {
  explicit OutOfRange(const std::string& what) : Error("OutOfRange", what) {}
};

struct OddL : Error {
  explicit OddL(const std::string& what) : Error("OddL", what) {}
};

struct AllTrajectoriesAnnihilated : Error {
  explicit AllTrajectoriesAnnihilated(const std::string& what)
      : Error("AllTrajectoriesAnnihilated", what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error("ConfigError", what) {}
};

}  // namespace scarlab
