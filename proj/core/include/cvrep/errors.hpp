#pragma once

#include <stdexcept>
#include <string>

namespace cvrep {

// A Gaussian decay exponent went non-positive, so a beta-integral diverges.
class ParameterRegimeError : public std::domain_error {
public:
  explicit ParameterRegimeError(const std::string& what)
      : std::domain_error(what) {}
};

// Fock-space cutoff too small for the requested state.
class CutoffError : public std::runtime_error {
public:
  CutoffError(const std::string& what, int suggested)
      : std::runtime_error(what), suggested_n_max(suggested) {}

  int suggested_n_max;
};

}  // namespace cvrep
