// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace framepath {

// Violations of an operation's domain contract: unknown names, composability
// breaks, refused exports, exceeded size guards.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input: graph documents, path/basic/sequence literals.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace framepath
