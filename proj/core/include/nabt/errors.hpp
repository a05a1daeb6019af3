#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nabt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group grew past a configured size bound (the element-table bound
/// unless `which` says otherwise).
class BoundExceeded : public Error {
 public:
  explicit BoundExceeded(std::size_t bound, const std::string& which = "element bound")
      : Error(which + " exceeded (" + std::to_string(bound) + ")"), bound_(bound) {}
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

/// Coset enumeration ran out of resources. Says nothing about finiteness.
class LimitExceeded : public Error {
 public:
  explicit LimitExceeded(std::size_t cosets_defined)
      : Error("coset limit exceeded after " + std::to_string(cosets_defined) + " definitions"),
        cosets_defined_(cosets_defined) {}
  std::size_t cosets_defined() const noexcept { return cosets_defined_; }

 private:
  std::size_t cosets_defined_;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class NotCentral : public Error {
 public:
  using Error::Error;
};

class NotAHomomorphism : public Error {
 public:
  using Error::Error;
};

class IncompleteTable : public Error {
 public:
  IncompleteTable() : Error("coset table is incomplete") {}
};

class InvalidAction : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An internal consistency audit failed. Always a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace nabt
