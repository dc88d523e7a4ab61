#pragma once

#include <stdexcept>
#include <string>

namespace spechtstab {

// Error taxonomy shared by the library and the CLI. The CLI maps categories
// to process exit codes: usage/domain errors -> 2, resource limits -> 3.
enum class ErrorCode {
    bad_input,
    level_too_small,
    size_mismatch,
    characteristic_mismatch,
    below_threshold,
    not_a_relation,
    p_singular_input,
    p_regular_input,
    range_too_small,
    not_certified_irreducible,
    size_limit,
    chop_limit,
    internal_limit,
    decomposition_unavailable,
    cache_io,
};

const char* error_code_name(ErrorCode c);

// 2 = usage error, 3 = resource-limit error
int exit_code_for(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
          code_(code),
          detail_(detail) {}

    ErrorCode code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
    throw Error(code, detail);
}

} // namespace spechtstab
