#pragma once

#include <stdexcept>
#include <string>

namespace sag {

enum class errc {
    // numfield
    not_monic,
    not_irreducible,
    not_totally_real,
    not_totally_positive,
    not_integral,
    not_a_unit,
    bad_prime,
    unsupported_ideal_factorization,
    // hypgeom
    identity_element,
    not_hyperbolic,
    coincident_points,
    non_positive_unit,
    non_positive_input,
    placement_failure,
    parabolic_factor,
    all_elliptic,
    // grouptheory
    not_a_homomorphism,
    not_surjective,
    infinite_index,
    pattern_mismatch,
    dedup_inconclusive,
    // semiarith
    integrality_failure,
    totally_real_failure,
    budget_too_small,
    no_hyperbolic_found,
    // congruence
    not_p_integral,
    cap_exceeded,
    no_kernel_element_found,
    // quaternion
    zero_parameter,
    not_norm_one,
    unsupported_ideal,
    empty_sample,
    // generic
    invalid_argument,
    internal,
};

const char* errc_name(errc c);

/// All library failures are reported through this exception. `code()` gives
/// the machine-readable class, `what()` a human-readable message.
class error : public std::runtime_error {
  public:
    error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
    errc code() const { return code_; }

    /// true for errors caused by malformed input rather than failed computation
    bool is_validation() const {
        switch (code_) {
        case errc::not_monic:
        case errc::not_irreducible:
        case errc::not_totally_real:
        case errc::invalid_argument:
        case errc::zero_parameter:
            return true;
        default:
            return false;
        }
    }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

} // namespace sag
