#pragma once

#include <stdexcept>

namespace aggtree {

// Malformed input text (syntax level); the message carries position info
// when the underlying parser provides it.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a model invariant.
struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The exact-search oracle refuses instances beyond its configured caps
// rather than answering heuristically.
struct CapsExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace aggtree
