// Copyright 2026 The dgz Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace dgz {

enum class Errc {
  NonPrime,
  DegreeTooLarge,
  FieldMismatch,
  NonDivisor,
  RemainderNonzero,
  SingularMatrix,
  IdenticalPoints,
  FieldTooLarge,
  ScaleExceeded,
  UnknownName,
  PointNotOnCurve,
  ClassificationMismatch,
  TangentConeNotPower,
  InvalidQ,
  UnknownSuite,
  IoFailure,
  SingularCurve,
  DivisionFailure,
  ZeroInverse,
  BadLiteral,
};

/// All library failures throw this; `code` identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace dgz
