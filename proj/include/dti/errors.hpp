#pragma once

#include <stdexcept>
#include <string>

namespace dti {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotPrimeError : public Error {
public:
  explicit NotPrimeError(const std::string& what) : Error(what) {}
};

class DividesDegreeError : public Error {
public:
  explicit DividesDegreeError(const std::string& what) : Error(what) {}
};

class TooFewVariablesError : public Error {
public:
  explicit TooFewVariablesError(const std::string& what) : Error(what) {}
};

class DegreeTooSmallError : public Error {
public:
  explicit DegreeTooSmallError(const std::string& what) : Error(what) {}
};

class PartsSumMismatchError : public Error {
public:
  explicit PartsSumMismatchError(const std::string& what) : Error(what) {}
};

class NotArtinianError : public Error {
public:
  explicit NotArtinianError(const std::string& what) : Error(what) {}
};

/// A computation exceeded its configured step or pair budget.
class ResourceLimitError : public Error {
public:
  explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

/// Two routes that must agree disagreed, or a certified fact was
/// contradicted. Always indicates a bug, never bad input.
class InternalInconsistencyError : public Error {
public:
  explicit InternalInconsistencyError(const std::string& what) : Error(what) {}
};

class InvalidTestElementError : public Error {
public:
  explicit InvalidTestElementError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace dti
