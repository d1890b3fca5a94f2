#pragma once

#include <stdexcept>

namespace snb {

// Violated precondition, malformed input, or bad configuration. Exit code 1.
class contract_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Instance exceeds an enumeration or solver budget. Exit code 2.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace snb
