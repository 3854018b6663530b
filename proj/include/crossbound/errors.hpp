#pragma once
// Error taxonomy shared across the library. The CLI maps these to exit codes.

#include <stdexcept>
#include <string>

namespace crossbound {

// A computed certificate failed its own internal validation. This always
// signals an implementation or precision fault, never a mathematical fact.
class CertificateViolation : public std::logic_error {
 public:
  explicit CertificateViolation(const std::string& what) : std::logic_error(what) {}
};

// An enumeration was requested whose size exceeds the caller-supplied cap.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::string offending_size)
      : std::runtime_error(what + " (size " + offending_size + ")"),
        size(std::move(offending_size)) {}
  std::string size;
};

// A bracketed solver could not certify convergence; carries the bracket state.
class ConvergenceFailure : public std::runtime_error {
 public:
  explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

// A bound was requested from a plan whose validity conditions do not hold.
class InfeasiblePlan : public std::runtime_error {
 public:
  explicit InfeasiblePlan(const std::string& what) : std::runtime_error(what) {}
};

// The parameter chain produced a structurally impossible value (e.g. q < 2,
// or k outside [1, q]); reported rather than silently clamped.
class PlanStructureError : public std::runtime_error {
 public:
  explicit PlanStructureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crossbound
