#include "sag/error.hpp"

namespace sag {

const char* errc_name(errc c) {
    switch (c) {
    case errc::not_monic: return "NotMonic";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::not_totally_real: return "NotTotallyReal";
    case errc::not_totally_positive: return "NotTotallyPositive";
    case errc::not_integral: return "NotIntegral";
    case errc::not_a_unit: return "NotAUnit";
    case errc::bad_prime: return "BadPrime";
    case errc::unsupported_ideal_factorization: return "UnsupportedIdealFactorization";
    case errc::identity_element: return "IdentityElement";
    case errc::not_hyperbolic: return "NotHyperbolic";
    case errc::coincident_points: return "CoincidentPoints";
    case errc::non_positive_unit: return "NonPositiveUnit";
    case errc::non_positive_input: return "NonPositiveInput";
    case errc::placement_failure: return "PlacementFailure";
    case errc::parabolic_factor: return "ParabolicFactor";
    case errc::all_elliptic: return "AllElliptic";
    case errc::not_a_homomorphism: return "NotAHomomorphism";
    case errc::not_surjective: return "NotSurjective";
    case errc::infinite_index: return "InfiniteIndex";
    case errc::pattern_mismatch: return "PatternMismatch";
    case errc::dedup_inconclusive: return "DedupInconclusive";
    case errc::integrality_failure: return "IntegralityFailure";
    case errc::totally_real_failure: return "TotallyRealFailure";
    case errc::budget_too_small: return "BudgetTooSmall";
    case errc::no_hyperbolic_found: return "NoHyperbolicFound";
    case errc::not_p_integral: return "NotPIntegral";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::no_kernel_element_found: return "NoKernelElementFound";
    case errc::zero_parameter: return "ZeroParameter";
    case errc::not_norm_one: return "NotNormOne";
    case errc::unsupported_ideal: return "UnsupportedIdeal";
    case errc::empty_sample: return "EmptySample";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::internal: return "Internal";
    }
    return "Unknown";
}

} // namespace sag
