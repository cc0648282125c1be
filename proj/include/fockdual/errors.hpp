#pragma once

#include <stdexcept>
#include <string>

namespace fockdual {

// Domain-level failure with a stable name ("CongruentExponents", ...).
// The CLI renders the name; tests match on it.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

}  // namespace fockdual
