#pragma once

#include <stdexcept>
#include <string>

namespace univoque {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& msg) : Error(msg) {}
};

struct NotIsolating : Error {
    explicit NotIsolating(const std::string& msg) : Error(msg) {}
};

struct UnsupportedBase : Error {
    explicit UnsupportedBase(const std::string& msg) : Error(msg) {}
};

struct DigitOutOfRange : Error {
    explicit DigitOutOfRange(const std::string& msg) : Error(msg) {}
};

struct LastDigitAtBound : Error {
    explicit LastDigitAtBound(const std::string& msg) : Error(msg) {}
};

struct OutOfJq : Error {
    explicit OutOfJq(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

struct InadmissibleSeed : Error {
    explicit InadmissibleSeed(const std::string& msg) : Error(msg) {}
};

struct Inadmissible : Error {
    explicit Inadmissible(const std::string& msg) : Error(msg) {}
};

struct PeriodBoundExceeded : Error {
    explicit PeriodBoundExceeded(const std::string& msg) : Error(msg) {}
};

struct NotFiniteGreedy : Error {
    explicit NotFiniteGreedy(const std::string& msg) : Error(msg) {}
};

struct NotUnivoquePoint : Error {
    explicit NotUnivoquePoint(const std::string& msg) : Error(msg) {}
};

struct BaseTooLarge : Error {
    explicit BaseTooLarge(const std::string& msg) : Error(msg) {}
};

struct NotInteger : Error {
    explicit NotInteger(const std::string& msg) : Error(msg) {}
};

struct NotInVMinusU : Error {
    explicit NotInVMinusU(const std::string& msg) : Error(msg) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace univoque
