#pragma once

#include <stdexcept>
#include <string>

namespace twotemp {

/// Bad or missing input data (species files, parameter values).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside its admissible range.
class RangeError : public InputError {
public:
    RangeError(std::string field, double value, std::string bound)
        : InputError(field + "=" + format_value(value) + " outside " + bound),
          field_(std::move(field)), bound_(std::move(bound)), value_(value) {}

    const std::string& field() const noexcept { return field_; }
    const std::string& bound() const noexcept { return bound_; }
    double value() const noexcept { return value_; }

private:
    static std::string format_value(double v);
    std::string field_;
    std::string bound_;
    double value_;
};

/// A solver could not produce a result (singular system, missing root, ...).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown for states outside the domain of a formula.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace twotemp
