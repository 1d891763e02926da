#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coursewise {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. line is 1-based; 0 when the source has no line structure.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Records that parse individually but contradict each other.
class DataError : public Error {
public:
    using Error::Error;
};

class UnknownStudentError : public Error {
public:
    explicit UnknownStudentError(const std::string& student_id)
        : Error("unknown student '" + student_id + "'"), student_id_(student_id) {}

    const std::string& student_id() const noexcept { return student_id_; }

private:
    std::string student_id_;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace coursewise
