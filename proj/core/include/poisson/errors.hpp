#ifndef POISSON_ERRORS_HPP
#define POISSON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace poisson {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotIdempotent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotSkew : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPoisson : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownEntry : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace poisson

#endif
