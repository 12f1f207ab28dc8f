#pragma once

#include <stdexcept>
#include <string>

namespace bqroot {

// Base for every error thrown by the library. The C API maps each subclass
// onto a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the operation's domain (n < 1, non-finite component, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A 4x4 matrix that is not the image of any biquaternion.
class NotAQMatrix : public Error {
 public:
  using Error::Error;
};

// All of a2^2+a3^2, a1^2+a3^2, a1^2+a2^2 vanish although the vector part is
// nonzero. Impossible in exact arithmetic; means input and tol disagree.
class DegenerateSubcase : public Error {
 public:
  using Error::Error;
};

// A solution set whose root/family counts break the per-case contract.
class CountMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace bqroot
