#pragma once

#include <stdexcept>
#include <string>

namespace dbx {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

struct UnboundIdentifier : Error {
    explicit UnboundIdentifier(const std::string& name)
        : Error("unbound identifier '" + name + "'"), identifier(name) {}
    std::string identifier;
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("zero denominator") {}
    explicit ZeroDenominator(const std::string& what) : Error(what) {}
};

struct DegreeError : Error {
    using Error::Error;
};

struct UnverifiedCertificate : Error {
    using Error::Error;
};

struct MissingDenominatorCertificate : Error {
    using Error::Error;
};

struct UnverifiedDenominator : Error {
    using Error::Error;
};

struct ZeroDenominatorPolynomial : Error {
    using Error::Error;
};

struct ConditionViolated : Error {
    using Error::Error;
};

struct IrrationalRadical : Error {
    using Error::Error;
};

struct MatchFailed : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct Divergence : Error {
    Divergence(double t, double norm)
        : Error("state norm " + std::to_string(norm) + " exceeded divergence guard at t = " +
                std::to_string(t)),
          time(t) {}
    double time;
};

struct StepUnderflow : Error {
    explicit StepUnderflow(double t)
        : Error("step size underflow at t = " + std::to_string(t)), time(t) {}
    double time;
};

struct DenominatorVanished : Error {
    explicit DenominatorVanished(double t)
        : Error("denominator vanished along trajectory at t = " + std::to_string(t)), time(t) {}
    double time;
};

struct SystemFileError : Error {
    SystemFileError(const std::string& what, int line_number)
        : Error(what + " (line " + std::to_string(line_number) + ")"), line(line_number) {}
    int line;
};

}  // namespace dbx
