#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polypack {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

class UnknownId : public Error {
public:
    explicit UnknownId(int id)
        : Error("unknown polygon id " + std::to_string(id)), id_(id) {}
    int id() const { return id_; }

private:
    int id_;
};

class CapacityNegative : public Error {
public:
    CapacityNegative() : Error("knapsack capacity is negative") {}
};

class RectTooBig : public Error {
public:
    explicit RectTooBig(int id)
        : Error("rectangle " + std::to_string(id) + " exceeds the target region"), id_(id) {}
    int id() const { return id_; }

private:
    int id_;
};

class EmptyPlacementSet : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class GenerationFailed : public Error {
public:
    using Error::Error;
};

// Errors carrying a 1-based input line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class InvalidPolygon : public ParseError {
public:
    InvalidPolygon(std::size_t line, std::size_t vertex, const std::string& what)
        : ParseError(line, "vertex " + std::to_string(vertex) + ": " + what), vertex_(vertex) {}
    std::size_t vertex() const { return vertex_; }

private:
    std::size_t vertex_;
};

class InvalidWeight : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace polypack
