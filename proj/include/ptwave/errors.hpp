#pragma once

#include <stdexcept>
#include <string>

namespace ptwave {

// Strain fell strictly between the branch endpoints, where the stress
// response is destabilizing and no wave speed exists.
class spinodal_domain_error : public std::domain_error {
 public:
  explicit spinodal_domain_error(const std::string& what) : std::domain_error(what) {}
};

// Root bracketing failed: the supplied interval does not straddle a sign change.
class no_sign_change_error : public std::runtime_error {
 public:
  explicit no_sign_change_error(const std::string& what) : std::runtime_error(what) {}
};

// An iterative scheme ran out of its iteration budget before meeting tolerance.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// A solver was invoked with an impact speed outside the regime it handles.
class out_of_regime_error : public std::runtime_error {
 public:
  explicit out_of_regime_error(const std::string& what) : std::runtime_error(what) {}
};

// The requested kinetic rule is not available for this material case.
class incompatible_kinetics_error : public std::runtime_error {
 public:
  explicit incompatible_kinetics_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ptwave
