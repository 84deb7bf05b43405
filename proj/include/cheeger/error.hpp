#pragma once

#include <stdexcept>
#include <string>

namespace cheeger {

enum class errc {
    invalid_parameters,
    generation_exhausted,
    not_connected,
    too_large,
    no_convergence,
    degenerate_spectrum,
    invalid_spectrum,
    rank_deficient,
    arity_mismatch,
    invalid_dims,
    non_finite_parameter,
    empty_split,
    divergence,
    empty_list,
    missing_size,
    io_failure,
};

inline const char* to_string(errc c) {
    switch (c) {
        case errc::invalid_parameters: return "invalid-parameters";
        case errc::generation_exhausted: return "generation-exhausted";
        case errc::not_connected: return "not-connected";
        case errc::too_large: return "too-large";
        case errc::no_convergence: return "no-convergence";
        case errc::degenerate_spectrum: return "degenerate-spectrum";
        case errc::invalid_spectrum: return "invalid-spectrum";
        case errc::rank_deficient: return "rank-deficient";
        case errc::arity_mismatch: return "arity-mismatch";
        case errc::invalid_dims: return "invalid-dims";
        case errc::non_finite_parameter: return "non-finite-parameter";
        case errc::empty_split: return "empty-split";
        case errc::divergence: return "divergence";
        case errc::empty_list: return "empty-list";
        case errc::missing_size: return "missing-size";
        case errc::io_failure: return "io-failure";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

}  // namespace cheeger
