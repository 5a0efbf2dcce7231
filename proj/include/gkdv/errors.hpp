/*
  Error types shared across the gkdv library.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace gkdv {

// Field contains non-finite samples where finite data is required.
class invalid_field_error : public std::runtime_error {
 public:
  explicit invalid_field_error(const std::string& what) : std::runtime_error(what) {}
};

// A weight/scale evaluation was requested without the inputs it needs.
class configuration_error : public std::runtime_error {
 public:
  explicit configuration_error(const std::string& what) : std::runtime_error(what) {}
};

// GN2 exponent alpha = (1/2 - 1/q)/s falls outside (0, 1].
class exponent_incompatibility_error : public std::domain_error {
 public:
  explicit exponent_incompatibility_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace gkdv
