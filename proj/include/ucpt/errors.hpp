#pragma once

#include <stdexcept>
#include <string>

namespace ucpt {

struct DivideByZero : std::domain_error {
    DivideByZero() : std::domain_error("division by zero") {}
};

struct NotDivisible : std::domain_error {
    explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotHermitian : std::invalid_argument {
    explicit NotHermitian(const std::string& what) : std::invalid_argument(what) {}
};

struct NotUnitary : std::invalid_argument {
    explicit NotUnitary(const std::string& what) : std::invalid_argument(what) {}
};

struct BadDimension : std::invalid_argument {
    explicit BadDimension(const std::string& what) : std::invalid_argument(what) {}
};

struct BadParameters : std::invalid_argument {
    explicit BadParameters(const std::string& what) : std::invalid_argument(what) {}
};

struct BadIndices : std::invalid_argument {
    explicit BadIndices(const std::string& what) : std::invalid_argument(what) {}
};

struct BadCase : std::invalid_argument {
    explicit BadCase(const std::string& what) : std::invalid_argument(what) {}
};

struct BadDistribution : std::invalid_argument {
    explicit BadDistribution(const std::string& what) : std::invalid_argument(what) {}
};

struct PreconditionFailed : std::invalid_argument {
    explicit PreconditionFailed(const std::string& what) : std::invalid_argument(what) {}
};

struct ExplicitTooLarge : std::invalid_argument {
    explicit ExplicitTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ucpt
