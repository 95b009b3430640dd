#pragma once

#include <stdexcept>
#include <string>

namespace provsum {

// Input that is well-formed but semantically unusable (unknown ids, no roots).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or unsupported PROV-JSON / summary JSON.
class ParseError : public InputError {
public:
    using InputError::InputError;
};

// The interned-term table grew past its configured cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace provsum
