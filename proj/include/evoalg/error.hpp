#pragma once

#include <stdexcept>
#include <string>

namespace evoalg {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (scalar literals, field headers, algebra files).
class ParseError : public Error {
public:
  using Error::Error;
};

/// A mathematical precondition does not hold: division by zero, mixing
/// fields, a non-simple algebra handed to the classifier, and so on.
class DomainError : public Error {
public:
  using Error::Error;
};

} // namespace evoalg
