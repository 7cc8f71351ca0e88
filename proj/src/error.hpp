#pragma once

#include <stdexcept>
#include <string>

namespace genaug {

enum class Errc {
    io,
    dataset_empty,
    decode,
    invalid_strength,
    policy_arity,
    parse,
    insufficient_samples,
    shape_mismatch,
    correlation_undefined,
    model_load,
    model_shape,
    extract,
    selection_underflow,
    invalid_config,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace genaug
