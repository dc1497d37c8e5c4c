//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef NLC_ERROR_HPP_
#define NLC_ERROR_HPP_

#include <stdexcept>

namespace nlc {

/// Invalid arguments to an operation: unknown nodes, overlapping node sets,
/// bad replacement order, exceeded caps.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A value that violates a structural invariant (bad label symbol, occurrence
/// that does not match its pattern, rule with a nonterminal-labelled node).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed document text: JSON syntax errors or schema violations.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nlc

#endif  // NLC_ERROR_HPP_
