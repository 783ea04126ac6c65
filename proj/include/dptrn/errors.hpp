#pragma once

#include <stdexcept>
#include <string>

namespace dptrn {

// Bad configuration or usage; maps to CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data; maps to CLI exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shape mismatch between operands.
class DimensionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numeric kernel produced NaN/Inf.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Training diverged; maps to CLI exit code 3.
class DivergenceError : public NumericError {
public:
    using NumericError::NumericError;
};

} // namespace dptrn
