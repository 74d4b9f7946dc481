#pragma once

#include <stdexcept>
#include <string>

namespace isacot {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Coincident points, nonpositive distances and similar geometric corner cases.
class DegenerateGeometry : public Error {
public:
    using Error::Error;
};

/// Invalid or inconsistent configuration / solution structure.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// The box constraints and the power budget cannot be met simultaneously.
class InfeasibleBudget : public Error {
public:
    using Error::Error;
};

/// Exhaustive search request exceeds the combination limit.
class OracleTooLarge : public Error {
public:
    using Error::Error;
};

}  // namespace isacot
