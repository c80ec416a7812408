#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwalk/lattice_state.hpp"
#include "qwalk/step_policy.hpp"

namespace qwalk {

/// How the off-diagonal B of the reduced coin density matrix is formed.
/// paper_magnitude sums per-site magnitude products sum_x |a(x)||b(x)|;
/// standard_hermitian takes |sum_x a(x) conj(b(x))|, the off-diagonal of
/// the partial trace over position.
enum class DensityMode {
    paper_magnitude,
    standard_hermitian,
};

/// Provenance attached to a distribution snapshot.
struct SnapshotMeta {
    Scheme scheme = Scheme::fixed;
    double p = 0.0;
    double q = 0.5;
    int fixed_l = 1;
    std::uint64_t seed = 0;
    long long trajectory_index = -1;  // -1 for ensemble means
    int configs = 1;
    std::string source = "trajectory";  // "trajectory" or "ensemble-mean"
};

/// P(x,t) over a contiguous site range [x_lo, x_lo + probs.size() - 1].
struct DistributionSnapshot {
    int t = 0;
    int x_lo = 0;
    std::vector<double> probs;
    SnapshotMeta meta;

    int x_hi() const { return x_lo + static_cast<int>(probs.size()) - 1; }
    double prob(int x) const {
        return (x < x_lo || x > x_hi()) ? 0.0 : probs[static_cast<std::size_t>(x - x_lo)];
    }
    double total() const;
};

struct MomentPoint {
    int t = 0;
    double m1 = 0.0;  // <x>
    double m2 = 0.0;  // <x^2>
};

/// Reduced coin density matrix entries, [[A, B], [B, C]] with A + C = 1.
struct CoinDensity {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
};

struct EntropyPoint {
    int t = 0;
    double A = 0.0, B = 0.0, C = 0.0;
    double v1 = 0.0, v2 = 0.0;  // eigenvalues, v1 >= v2, v1 + v2 = 1
    double entropy = 0.0;       // von Neumann entropy in bits, in [0,1]
};

/// Everything the ensemble runner records per step, measured in one pass
/// over the active window. B_overlap is the complex position sum
/// sum_x a(x) conj(b(x)); its magnitude is the standard_hermitian B.
struct StepObservables {
    double total = 0.0;  // A + C, must be 1
    double m1 = 0.0;
    double m2 = 0.0;
    double A = 0.0;
    double C = 0.0;
    double B_paper = 0.0;
    amplitude B_overlap{};
};

StepObservables measure(const WalkState& state);

DistributionSnapshot snapshot(const WalkState& state, SnapshotMeta meta = {});

/// First and second moments of a distribution. The snapshot must be
/// normalized within 1e-6 or a numeric_contract_error is thrown.
MomentPoint moments(const DistributionSnapshot& snap);

CoinDensity reduced_density(const WalkState& state, DensityMode mode);

/// Eigenvalues v = 1/2 +- sqrt((A - 1/2)^2 + B^2) and the entropy
/// -(v1 log2 v1 + v2 log2 v2) with the 0 log 0 = 0 convention.
/// Requires A + C = 1 within 1e-10 and both eigenvalues inside
/// [-1e-10, 1 + 1e-10]; values are clamped to [0,1] within that tolerance.
EntropyPoint entanglement_entropy(double A, double B, double C);

}  // namespace qwalk
