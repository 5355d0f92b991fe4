// duality_matcher.hpp
//
// Bulk -> boundary dictionary for the z = 4 solution: the bulk charge is
// identified with the boundary field (Q = H) and the two independent
// powers of Q in the holographic susceptibility fix N and beta^2/q. The
// charge q itself is not separately determined.
#ifndef LIFSHITZ_DUALITY_MATCHER_HPP
#define LIFSHITZ_DUALITY_MATCHER_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "boundary_qm.hpp"
#include "bulk_geometry.hpp"
#include "errors.hpp"
#include "volume_engine.hpp"

namespace lifshitz {

inline constexpr const char* kFlagNegativeN = "negative-N";
inline constexpr const char* kFlagNegativeBeta2OverQ = "negative-beta2/q";
inline constexpr const char* kFlagXiNegative = "xi-negative";

template <typename Scalar = double>
struct MatchedParameters {
    Scalar N;
    Scalar beta2_over_q;
};

/// N = -16 sqrt(5) L^2 r+^2 / (48 pi G L^3 sqrt(-xi)),  beta^2/q = 3 / (8 L^2 xi).
template <typename Scalar>
MatchedParameters<Scalar> match_parameters(const BulkParams<Scalar>& p) {
    constexpr const char* op = "match_parameters";
    p.validate(op);
    if (!(p.xi < 0)) detail::fail<DomainError>(op, "the dictionary requires xi < 0");
    const Scalar L = p.L;
    const Scalar N = -Scalar(16) * std::sqrt(Scalar(5)) * L * L * p.r_plus * p.r_plus /
                     (Scalar(48) * std::numbers::pi_v<Scalar> * p.G * L * L * L * std::sqrt(-p.xi));
    return {N, Scalar(3) / (Scalar(8) * L * L * p.xi)};
}

template <typename Scalar = double>
struct DualityReport {
    MatchedParameters<Scalar> matched;
    Scalar xi_f_bulk;
    Scalar xi_f_boundary;
    Scalar residual;  ///< |bulk - boundary| / max(|bulk|, |boundary|), >= 0
    std::vector<std::string> flags;
    BulkParams<Scalar> inputs;
};

/// Sign diagnostics. Strict inequalities: a zero N is not flagged.
template <typename Scalar>
std::vector<std::string> consistency_flags(const DualityReport<Scalar>& report) {
    std::vector<std::string> flags;
    if (report.matched.N < 0) flags.emplace_back(kFlagNegativeN);
    if (report.matched.beta2_over_q < 0) flags.emplace_back(kFlagNegativeBeta2OverQ);
    if (report.inputs.xi < 0) flags.emplace_back(kFlagXiNegative);
    return flags;
}

/// Compares the holographic susceptibility with the boundary formula
/// evaluated on the supplied (possibly perturbed) dictionary at H = Q.
template <typename Scalar>
DualityReport<Scalar> compare_with_boundary(const BulkParams<Scalar>& p, const MatchedParameters<Scalar>& matched) {
    DualityReport<Scalar> report{matched, xi_f_holo_z4(p), Scalar(0), Scalar(0), {}, p};
    report.xi_f_boundary = xi_f_analytic_reduced(matched.N, matched.beta2_over_q, p.Q);
    const Scalar scale = std::max(std::abs(report.xi_f_bulk), std::abs(report.xi_f_boundary));
    report.residual = scale > 0 ? std::abs(report.xi_f_bulk - report.xi_f_boundary) / scale : Scalar(0);
    report.flags = consistency_flags(report);
    return report;
}

template <typename Scalar>
DualityReport<Scalar> verify_duality(const BulkParams<Scalar>& p) {
    if (!(p.Q > 0)) detail::fail<DomainError>("verify_duality", "Q = H must be positive");
    return compare_with_boundary(p, match_parameters(p));
}

}  // namespace lifshitz

#endif  // LIFSHITZ_DUALITY_MATCHER_HPP
