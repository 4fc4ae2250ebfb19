#pragma once

#include "nilgeom/metric_forge.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nilgeom {

// Exact connection and curvature data of a germ at one point.
struct PointFrameData {
    std::vector<Q> point;
    QMatrix g, g_inv;
    // Gamma[i](k, j) = Gamma^k_{ij}: the matrix of D_{d_i} on coordinate fields
    std::vector<QMatrix> Gamma;
    // dGamma[l][i] = d_l Gamma[i]
    std::vector<std::vector<QMatrix>> dGamma;
    // R[i][j] = R(d_i, d_j) = [D_i, D_j] as an endomorphism
    std::vector<std::vector<QMatrix>> R;
    // DkR[k] lists (D^k R)(d_{c_1}, ..., d_{c_k}; d_i, d_j) for all index
    // tuples, flattened in row-major order (c_1, ..., c_k, i, j)
    std::vector<std::vector<QMatrix>> DkR;
    int order = 0;

    // ric(a, b) = tr(X -> R(a, X) b)
    QMatrix ricci() const;
};

// curvature_order: -1 computes Gamma only; k >= 0 computes D^m R for m <= k.
PointFrameData frame_at(const MetricGerm& germ, const std::vector<Q>& point, int curvature_order = 0);

// Floating-point Christoffel symbols by central differences (sanity layer).
std::vector<std::vector<std::vector<double>>> gamma_finite_difference(const MetricGerm& germ,
                                                                      const std::vector<double>& point,
                                                                      double step = 1e-4);

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness; // first failure, empty on pass
};

struct HolonomyResult {
    int dim = 0;
    std::vector<int> dims_by_order; // span dimension using D^m R, m <= k
    bool contained_in_commutant = true;
    int commutant_dim = 0;
    int stabilized_at = 0; // first order after which the span stopped growing
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::vector<std::vector<Q>> points;
    std::uint64_t seed = 0;
    int degree_bound = 0;
    int holonomy_order = 0;
    std::optional<HolonomyResult> holonomy;

    bool all_passed() const;
    const CheckResult* find(const std::string& name) const;
};

// Deterministic small-denominator points in a box around the base point.
std::vector<std::vector<Q>> random_points(const MetricGerm& germ, int count, std::uint64_t seed);

bool parallel_check(const MetricGerm& germ, const std::string& structure, const std::vector<std::vector<Q>>& points,
                    std::string* witness = nullptr);
bool parallel_check(const MetricGerm& germ, const QMatrix& S, const std::vector<std::vector<Q>>& points,
                    std::string* witness = nullptr);
VerificationReport identity_checks(const MetricGerm& germ, const std::vector<std::vector<Q>>& points);
HolonomyResult holonomy_span(const MetricGerm& germ, const std::vector<Q>& point, int order);

// Full verification: parallelism of every declared structure, curvature
// identities and the holonomy span at the first sample point.
VerificationReport verify(const MetricGerm& germ, int npoints, int holonomy_order, std::uint64_t seed);

} // namespace nilgeom
