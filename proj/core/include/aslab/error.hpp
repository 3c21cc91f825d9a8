// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace aslab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input supplied by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different fields and no embedding was supplied.
class FieldMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DivisionByZero : public InvalidArgument {
 public:
  DivisionByZero() : InvalidArgument("division by zero") {}
};

/// A structurally invalid certificate or hypercube document.
class MalformedInput : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// An enumeration or size bound would be exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A constructive identity that must hold by theory failed at runtime.
/// Seeing one of these means a bug in the arithmetic or in the theory.
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

namespace detail {

[[noreturn]] void throw_lemma_violation(const std::string& what);

inline void require(bool condition, const char* message) {
  if (!condition) throw InvalidArgument(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw_lemma_violation(message);
}

}  // namespace detail
}  // namespace aslab
