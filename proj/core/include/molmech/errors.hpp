//
// Project molmech - Copyright 2026 molmech developers.
// SPDX-License-Identifier: Apache-2.0
//
#ifndef MOLMECH_ERRORS_HPP
#define MOLMECH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace molmech {

// Exception hierarchy used outside the SMILES data path (that path reports
// typed, non-throwing parse errors; see smiles/token.hpp). The CLI maps these
// onto its exit codes: ConfigError -> 2, DataError -> 3, NumericError -> 4.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public DataError {
 public:
  using DataError::DataError;
};

class VersionMismatch : public DataError {
 public:
  using DataError::DataError;
};

class CorruptFile : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace molmech

#endif
