#ifndef NILORB_ERROR_HPP
#define NILORB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nilorb {

/// Malformed or out-of-range input (bad J, bad partition, rank mismatch).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation is not defined for the requested Lie family.
class UnsupportedFamilyError : public InputError {
 public:
  using InputError::InputError;
};

/// A configured enumeration bound would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Embedded data or an internal identity turned out inconsistent.
class DataIntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nilorb

#endif  // NILORB_ERROR_HPP
