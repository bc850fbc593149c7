#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pinwords {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated a precondition or supplied an unusable configuration.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Input bytes do not decode under the declared encoding.
class EncodingError : public Error {
 public:
  EncodingError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A data file (lexicon, mapping config, cached model) breaks an invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A character or digit falls outside a mapping's domain.
class UnmappableError : public Error {
 public:
  using Error::Error;
};

}  // namespace pinwords
