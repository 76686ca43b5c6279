#ifndef BERNMAT_ERRORS_HPP
#define BERNMAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bernmat {

/// Base class for every error this library reports.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Division by zero, with the offending operands in the message.
class DivideByZeroError : public Error {
public:
  explicit DivideByZeroError(const std::string& what) : Error(what) {}
};

/// A lookup past the end of a memoized table.
class TableError : public Error {
public:
  explicit TableError(const std::string& what) : Error(what) {}
};

/// A structural claim failed where silent repair is forbidden
/// (zero diagonal during inversion, mixed signs in an inverse row, ...).
class StructureError : public Error {
public:
  explicit StructureError(const std::string& what) : Error(what) {}
};

/// The BERNMAT_MAX_BITS safety valve tripped.
class BudgetError : public Error {
public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

} // namespace bernmat

#endif // BERNMAT_ERRORS_HPP
