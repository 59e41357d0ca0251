#pragma once

#include <stdexcept>
#include <string>

namespace aec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejection of malformed graph input (self-loop, duplicate edge, bad endpoint).
class GraphError : public Error {
 public:
  using Error::Error;
};

// Properness violation or misuse of a coloring operation.
class ColoringError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

}  // namespace aec
