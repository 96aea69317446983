#pragma once

#include <stdexcept>
#include <string>

namespace pinsync {

// Invalid configuration or violated call contract. Maps to CLI exit code 1.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numerical failure during a run (non-finite states etc.). Maps to CLI exit code 2.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pinsync
