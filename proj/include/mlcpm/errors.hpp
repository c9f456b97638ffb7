#ifndef MLCPM_ERRORS_HPP
#define MLCPM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlcpm {

enum class Errc {
    invalid_argument = 1,
    parse = 2,
    capacity = 3,
    io = 4,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

class InvalidArgument : public Error {
  public:
    explicit InvalidArgument(const std::string& what) : Error(Errc::invalid_argument, what) {}
};

/// Input rejected while reading a document. `line` and `column` are 1-based;
/// column 0 means the whole line.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(Errc::parse, "line " + std::to_string(line) +
                                 (column > 0 ? ", column " + std::to_string(column) : "") + ": " +
                                 what),
          line(line), column(column) {}

    std::size_t line;
    std::size_t column;
};

/// A hard size bound was exceeded (oracle practicality bounds, layer width
/// limit, per-seed community caps).
class CapacityError : public Error {
  public:
    explicit CapacityError(const std::string& what) : Error(Errc::capacity, what) {}
};

class IoError : public Error {
  public:
    explicit IoError(const std::string& what) : Error(Errc::io, what) {}
};

} // namespace mlcpm

#endif
