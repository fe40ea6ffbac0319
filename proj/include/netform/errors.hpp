#pragma once

#include <stdexcept>
#include <string>

namespace netform {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidGameState : Error {
    using Error::Error;
};

struct TargetImmunized : Error {
    using Error::Error;
};

struct NotMixedComponent : Error {
    using Error::Error;
};

struct InstanceTooLarge : Error {
    using Error::Error;
};

struct InfeasibleParameters : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace netform
