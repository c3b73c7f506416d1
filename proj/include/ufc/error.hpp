#pragma once

#include <stdexcept>
#include <string>

namespace ufc {

/// Root of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Alphabet is out of order, has duplicates, or a letter is foreign.
class alphabet_error : public error {
 public:
  using error::error;
};

/// A value does not satisfy an operation's precondition
/// (non-minimal input, incomplete DFA, out-of-range parameter, ...).
class precondition_error : public error {
 public:
  using error::error;
};

/// Subset construction or closure would exceed a hard representation limit.
class capacity_error : public error {
 public:
  using error::error;
};

/// Transformations of different degrees were combined.
class degree_mismatch : public error {
 public:
  using error::error;
};

/// Malformed text input: cycle notation, dialects, interchange files.
class parse_error : public error {
 public:
  using error::error;
};

/// A union survives elimination because no star dominates it.
class not_eliminable : public error {
 public:
  using error::error;
};

}  // namespace ufc
