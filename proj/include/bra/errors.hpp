#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bra {

// Two strategies score the same total payoff against some profile, so the
// best response is undefined. Carries the offending profile entries.
class TieError : public std::runtime_error {
 public:
  TieError(std::string msg, std::vector<int> profile)
      : std::runtime_error(std::move(msg)), profile_(std::move(profile)) {}
  const std::vector<int>& profile() const { return profile_; }

 private:
  std::vector<int> profile_;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PatternError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by census() when the requested rule space exceeds the configured
// enumeration bound.
class RuleSpaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bra
