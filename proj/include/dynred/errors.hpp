#pragma once

#include <stdexcept>
#include <string>

namespace dynred {

// Malformed arguments: wrong coefficient counts, empty inputs, bad flags.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Mathematically invalid input: singular matrix, non-morphism, value not
// integral at p.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input lies outside a configured enumeration or size budget. Raised instead
// of returning an answer that might be wrong.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dynred
