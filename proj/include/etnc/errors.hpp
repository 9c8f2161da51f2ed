#pragma once

#include <stdexcept>
#include <string>

namespace etnc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

class NotInSubfield : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public Error {
 public:
  using Error::Error;
};

class NonIntegral : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Rank data that admits no permutation-module decomposition.
class NotPermutationShape : public Error {
 public:
  NotPermutationShape(int level, const std::string& what)
      : Error("not a permutation shape at level " + std::to_string(level) + ": " + what),
        level_(level) {}
  int level() const noexcept { return level_; }

 private:
  int level_;
};

class RegulatorDegenerate : public Error {
 public:
  RegulatorDegenerate(int character, const std::string& what)
      : Error("regulator degenerate at character " + std::to_string(character) + ": " + what),
        character_(character) {}
  int character() const noexcept { return character_; }

 private:
  int character_;
};

class InvalidPhi : public Error {
 public:
  using Error::Error;
};

class GaloisIncompatible : public Error {
 public:
  using Error::Error;
};

class MissingData : public Error {
 public:
  using Error::Error;
};

/// Problem-file violation; `path()` names the offending field (e.g. "analytic.ratios[3].re").
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class NetworkError : public Error {
 public:
  using Error::Error;
};

}  // namespace etnc
