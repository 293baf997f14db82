#ifndef LISSAJOUS_ERRORS_HPP
#define LISSAJOUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lissajous {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IncompatibleExponents : Error {
    using Error::Error;
};

struct IncompatibleVariables : Error {
    using Error::Error;
};

struct NotProportional : Error {
    using Error::Error;
};

struct PoleAtPoint : Error {
    using Error::Error;
};

struct ZeroDenominator : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct InvalidModel : Error {
    using Error::Error;
};

struct OutOfLadder : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace lissajous

#endif
