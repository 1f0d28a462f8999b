#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace socdyn {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A share vector that is not a point of the simplex.
class InvalidStateError : public Error {
public:
    using Error::Error;
};

/// Parameters that fail the positivity or non-dominance restrictions.
class InvalidParamsError : public Error {
public:
    using Error::Error;
};

/// Some classifying quantity sits on an equality boundary. The regime there is
/// not robust and is never assigned a label.
class DegenerateError : public Error {
public:
    explicit DegenerateError(std::vector<std::string> quantities);

    const std::vector<std::string>& quantities() const noexcept { return quantities_; }

private:
    std::vector<std::string> quantities_;
};

/// The Lotka-Volterra chart does not cover the face x1 = 0.
class ChartError : public Error {
public:
    using Error::Error;
};

class NonStationaryError : public Error {
public:
    using Error::Error;
};

class IntegrationError : public Error {
public:
    using Error::Error;
};

/// A welfare inequality that must hold for every classified parameter set
/// failed. Indicates a bug, not a property of the input.
class OrderingViolation : public Error {
public:
    using Error::Error;
};

}  // namespace socdyn

namespace socdyn {

/// An equal-payoff solve landed outside the open face it was meant for.
class InfeasibleLocationError : public Error {
public:
    using Error::Error;
};

}  // namespace socdyn
