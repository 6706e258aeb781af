#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frds {

enum class ErrorKind : int {
  config = 1,
  computation = 2,
  diverged = 3,
  format = 4,
  io = 5,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class ConfigError : public Error {
public:
  explicit ConfigError(std::string msg) : Error(ErrorKind::config, std::move(msg)) {}
};

class ComputationError : public Error {
public:
  explicit ComputationError(std::string msg) : Error(ErrorKind::computation, std::move(msg)) {}
};

// Raised when a trajectory blows up; carries the offending step index.
class DivergedError : public Error {
public:
  DivergedError(std::string msg, std::int64_t step)
      : Error(ErrorKind::diverged, std::move(msg)), step_(step) {}
  std::int64_t step() const noexcept { return step_; }

private:
  std::int64_t step_;
};

class FormatError : public Error {
public:
  explicit FormatError(std::string msg) : Error(ErrorKind::format, std::move(msg)) {}
};

class IoError : public Error {
public:
  explicit IoError(std::string msg) : Error(ErrorKind::io, std::move(msg)) {}
};

}  // namespace frds
