#ifndef HEIGHTCENSUS_ERRORS_HPP
#define HEIGHTCENSUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hc {

/* Malformed or out-of-domain input (exit code 2 at the CLI). */
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* Working precision reached the configured cap without a certified answer. */
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* A desk-scale cap (degree, search bound) was exceeded. */
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Enumeration box larger than the candidate cap. */
struct BoxRefused : std::runtime_error {
    double estimate;
    BoxRefused(std::string const& what, double est)
        : std::runtime_error(what), estimate(est) {}
};

} // namespace hc

#endif
