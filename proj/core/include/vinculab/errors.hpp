#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vinculab {

/// Base class for all toolkit errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a query asks for an enumeration above a configured cap.
class enumeration_cap_error : public error {
 public:
  enumeration_cap_error(int requested, int cap, const std::string& which_cap)
      : error("n=" + std::to_string(requested) + " exceeds the " + which_cap +
              " enumeration cap of " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}
  int requested() const noexcept { return requested_; }
  int cap() const noexcept { return cap_; }

 private:
  int requested_;
  int cap_;
};

/// Pattern text could not be parsed; position is a 0-based index into the input.
class pattern_parse_error : public error {
 public:
  pattern_parse_error(const std::string& what, std::size_t position)
      : error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A class query whose containment requirement contradicts its avoidance set.
class unsatisfiable_query_error : public error {
 public:
  using error::error;
};

/// A recurrence evaluator was asked for a parameter combination it does not support.
class unsupported_parameter_error : public error {
 public:
  using error::error;
};

/// The requested family has no direct recurrence; use fit_structure instead.
class routed_to_fit_error : public error {
 public:
  using error::error;
};

/// Precondition violation in formal series algebra.
class series_domain_error : public error {
 public:
  using error::error;
};

/// A coefficient that should normalize to an integer count did not.
class non_integral_error : public error {
 public:
  non_integral_error(std::size_t index, const std::string& coefficient)
      : error("non-integral count at index " + std::to_string(index) + ": " +
              coefficient),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// fit_structure found data inconsistent with the claimed shape.
class shape_violation_error : public error {
 public:
  using error::error;
};

/// fit_structure cannot gather enough sample points under the working cap.
class fit_capacity_error : public error {
 public:
  using error::error;
};

/// A closed form was evaluated below its validity floor.
class formula_floor_error : public error {
 public:
  using error::error;
};

}  // namespace vinculab
