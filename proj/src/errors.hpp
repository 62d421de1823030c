#pragma once

#include <stdexcept>
#include <string>

namespace ordif {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (CSV ingestion, shape mismatches).
class IngestError : public Error {
 public:
  using Error::Error;
};

// Non-finite intermediates or degenerate numerical states.
class NumericError : public Error {
 public:
  using Error::Error;
};

// A caller violated an API precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace ordif
