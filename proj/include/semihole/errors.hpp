#pragma once

#include <stdexcept>
#include <string>

namespace semihole {

struct NotPointedError : std::runtime_error {
    explicit NotPointedError(const std::string& m = "cone is not pointed") : std::runtime_error(m) {}
};

struct InfiniteHolesError : std::runtime_error {
    explicit InfiniteHolesError(const std::string& m = "hole set is infinite") : std::runtime_error(m) {}
};

struct NotInSemigroupError : std::runtime_error {
    explicit NotInSemigroupError(const std::string& m = "point is not in the semigroup") : std::runtime_error(m) {}
};

struct GcdNotOneError : std::runtime_error {
    explicit GcdNotOneError(const std::string& m = "entries are not coprime") : std::runtime_error(m) {}
};

struct UnsupportedSystemError : std::runtime_error {
    explicit UnsupportedSystemError(const std::string& m) : std::runtime_error(m) {}
};

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace semihole
