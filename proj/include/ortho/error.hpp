#pragma once

#include <stdexcept>
#include <string>

namespace ortho {

/// An exhaustive search was asked to run on a group above its configured bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural statement that the library machine-checks turned out false.
/// `statement()` names the check (e.g. "THM1", "TAB1-ROW3").
class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(std::string statement, const std::string& detail)
      : std::runtime_error(statement + ": " + detail), statement_(std::move(statement)) {}

  const std::string& statement() const noexcept { return statement_; }

 private:
  std::string statement_;
};

}  // namespace ortho
