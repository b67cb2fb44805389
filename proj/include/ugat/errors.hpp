#ifndef UGAT_ERRORS_HPP
#define UGAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ugat {

// Parameters outside the convergence region of the normalizing series.
class DivergentParameters : public std::domain_error {
public:
    explicit DivergentParameters(const std::string& what) : std::domain_error(what) {}
};

// A certified truncation could not reach the requested tolerance within
// the term budget.
class NonConvergent : public std::runtime_error {
public:
    explicit NonConvergent(const std::string& what) : std::runtime_error(what) {}
};

class IndexOutOfRange : public std::out_of_range {
public:
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class BoxTooLarge : public std::length_error {
public:
    explicit BoxTooLarge(const std::string& what) : std::length_error(what) {}
};

class OutOfTabulatedRange : public std::out_of_range {
public:
    explicit OutOfTabulatedRange(const std::string& what) : std::out_of_range(what) {}
};

// A data coordinate is identically zero; the caller should drop it.
class DegenerateData : public std::invalid_argument {
public:
    explicit DegenerateData(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed CSV content; the message carries the offending line number.
class CsvFormatError : public std::runtime_error {
public:
    explicit CsvFormatError(const std::string& what) : std::runtime_error(what) {}
};

// A file could not be opened, read, or written.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ugat

#endif  // UGAT_ERRORS_HPP
