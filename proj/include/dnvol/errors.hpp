#pragma once

#include <stdexcept>
#include <string>

namespace dnvol {

// Exit-code mapping used by the CLI: InputError -> 1, ConfigError -> 2,
// DegenerateSampleError -> 3.

struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateSampleError : std::runtime_error {
    explicit DegenerateSampleError(const std::string& what) : std::runtime_error(what) {}
};

struct TooShortError : InputError {
    explicit TooShortError(const std::string& what) : InputError(what) {}
};

struct DomainError : InputError {
    explicit DomainError(const std::string& what) : InputError(what) {}
};

}  // namespace dnvol
