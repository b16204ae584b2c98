#pragma once

#include <stdexcept>
#include <string>

namespace icx {

/// Malformed or contract-violating input. The CLI maps it to exit code 2.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size or search cap was exceeded. The CLI maps it to exit code 3.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace icx
