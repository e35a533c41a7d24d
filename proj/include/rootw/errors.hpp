#pragma once

#include <stdexcept>
#include <string>

namespace rootw {

struct WildRamificationError : std::runtime_error {
    explicit WildRamificationError(const std::string& what) : std::runtime_error(what) {}
};

struct PrecisionExhaustedError : std::runtime_error {
    explicit PrecisionExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

struct NotSquarefreeError : std::runtime_error {
    explicit NotSquarefreeError(const std::string& what) : std::runtime_error(what) {}
};

struct ToricAtEvenResidueError : std::runtime_error {
    explicit ToricAtEvenResidueError(const std::string& what) : std::runtime_error(what) {}
};

struct RamifiedAtEvenResidueError : std::runtime_error {
    explicit RamifiedAtEvenResidueError(const std::string& what) : std::runtime_error(what) {}
};

struct BucketMismatchError : std::logic_error {
    explicit BucketMismatchError(const std::string& what) : std::logic_error(what) {}
};

struct Unknown2AdicPlaceError : std::runtime_error {
    explicit Unknown2AdicPlaceError(const std::string& what) : std::runtime_error(what) {}
};

struct FactorizationError : std::runtime_error {
    explicit FactorizationError(const std::string& what) : std::runtime_error(what) {}
};

struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rootw
