#include "spechtstab/errors.hpp"

namespace spechtstab {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::bad_input: return "bad-input";
        case ErrorCode::level_too_small: return "level-too-small";
        case ErrorCode::size_mismatch: return "size-mismatch";
        case ErrorCode::characteristic_mismatch: return "characteristic-mismatch";
        case ErrorCode::below_threshold: return "below-threshold";
        case ErrorCode::not_a_relation: return "not-a-relation";
        case ErrorCode::p_singular_input: return "p-singular-input";
        case ErrorCode::p_regular_input: return "p-regular-input";
        case ErrorCode::range_too_small: return "range-too-small";
        case ErrorCode::not_certified_irreducible: return "not-certified-irreducible";
        case ErrorCode::size_limit: return "size-limit";
        case ErrorCode::chop_limit: return "chop-limit";
        case ErrorCode::internal_limit: return "internal-limit";
        case ErrorCode::decomposition_unavailable: return "decomposition-matrix-unavailable";
        case ErrorCode::cache_io: return "cache-io";
    }
    return "unknown";
}

int exit_code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::size_limit:
        case ErrorCode::chop_limit:
        case ErrorCode::internal_limit:
        case ErrorCode::decomposition_unavailable:
        case ErrorCode::cache_io:
            return 3;
        default:
            return 2;
    }
}

} // namespace spechtstab
