// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#pragma once

#include <stdexcept>
#include <string>

namespace zicr {

// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Principal submatrix is not positive definite, so the entropy is -inf.
class DegenerateEntropyError : public DomainError {
  public:
    using DomainError::DomainError;
};

// Genie parameters cannot be built from the given certificate.
class GenieDegenerateError : public DomainError {
  public:
    using DomainError::DomainError;
};

// A postcondition that should hold by construction did not.
class InternalConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace zicr
