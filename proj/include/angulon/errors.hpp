#pragma once

#include <stdexcept>
#include <string>

namespace angulon {

// Error categories map one-to-one onto the machine-parsable reasons the CLI
// prints: "invalid-argument", "degenerate-nodes", "convergence-failure",
// "evaluation-error", "degenerate-sample".
class AngulonError : public std::runtime_error {
 public:
  AngulonError(std::string category, const std::string& detail)
      : std::runtime_error(category + ": " + detail),
        category_(std::move(category)) {}
  const std::string& category() const { return category_; }

 private:
  std::string category_;
};

class InvalidArgumentError : public AngulonError {
 public:
  explicit InvalidArgumentError(const std::string& detail)
      : AngulonError("invalid-argument", detail) {}
};

class DegenerateNodesError : public AngulonError {
 public:
  explicit DegenerateNodesError(const std::string& detail)
      : AngulonError("degenerate-nodes", detail) {}
};

class ConvergenceFailure : public AngulonError {
 public:
  ConvergenceFailure(const std::string& detail, double best_residual,
                     int iterations)
      : AngulonError("convergence-failure", detail),
        best_residual_(best_residual),
        iterations_(iterations) {}
  double best_residual() const { return best_residual_; }
  int iterations() const { return iterations_; }

 private:
  double best_residual_;
  int iterations_;
};

class EvaluationError : public AngulonError {
 public:
  explicit EvaluationError(const std::string& detail)
      : AngulonError("evaluation-error", detail) {}
};

class DegenerateSampleError : public AngulonError {
 public:
  explicit DegenerateSampleError(const std::string& detail)
      : AngulonError("degenerate-sample", detail) {}
};

}  // namespace angulon
