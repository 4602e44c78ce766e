#pragma once

#include <stdexcept>
#include <string>

namespace groupoidal {

/// Malformed input file or table (unparseable JSON, missing field, unknown id
/// in a place where no validation report is produced).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element used with a structure it is not defined on.
class CarrierMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bracket was requested for points that admit no connecting arrow.
class BracketError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The bispace or its Haar data is inconsistent: a bracket is not unique, or
/// a quantity that must not depend on a fiber representative does.
class BrokenEquivalenceError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace groupoidal
