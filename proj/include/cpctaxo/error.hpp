#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpctaxo {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidCode : public Error {
 public:
  using Error::Error;
};

// A line of a title-list or prediction file could not be parsed.
class MalformedLine : public Error {
 public:
  MalformedLine(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class SectionMismatch : public Error {
 public:
  SectionMismatch(std::size_t line, char expected, char found)
      : Error("line " + std::to_string(line) + ": code from section '" +
              std::string(1, found) + "' in a section '" +
              std::string(1, expected) + "' file"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class OrphanRecord : public Error {
 public:
  explicit OrphanRecord(const std::string& code)
      : Error("no parent for record " + code), code_(code) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class MissingSectionHeader : public Error {
 public:
  using Error::Error;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

class FormatVersionMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class MalformedPredictionFile : public MalformedLine {
 public:
  using MalformedLine::MalformedLine;
};

}  // namespace cpctaxo
