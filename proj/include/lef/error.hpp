#pragma once

#include <stdexcept>
#include <string>

namespace lef {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    explicit Error(std::string const& msg) : std::runtime_error(msg) {}
  };

  //! A document failed validation; `where()` is a JSON pointer.
  class SchemaError : public Error {
   public:
    SchemaError(std::string where, std::string const& msg)
        : Error(where + ": " + msg), _where(std::move(where)) {}

    std::string const& where() const noexcept {
      return _where;
    }

   private:
    std::string _where;
  };

  class StepLimitExceeded : public Error {
   public:
    using Error::Error;
  };

}  // namespace lef
