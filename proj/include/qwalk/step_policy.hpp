#pragma once

#include <cstdint>
#include <vector>

namespace qwalk {

enum class Scheme {
    scheme1,  // persistent with probability p, otherwise strictly the other length
    scheme2,  // persistent with probability p, otherwise fresh draw: 1 w.p. q, 2 w.p. 1-q
    fixed,    // constant length, no randomness
};

/// Parameters of the step-length policy. scheme1 ignores q; fixed ignores
/// p and q entirely.
struct StepPolicy {
    Scheme scheme = Scheme::fixed;
    double p = 0.0;
    double q = 0.5;
    int fixed_l = 1;
};

/// Throws std::invalid_argument unless p, q lie in [0,1] and fixed_l in {1,2}.
void validate(const StepPolicy& policy);

/// Deterministic counter-based random stream (SplitMix64): the state is a
/// counter advanced by the golden-ratio increment and every output is a
/// fixed 64-bit mix of it, so a given seed yields the same draw sequence on
/// every platform. One stream per trajectory, derived by child(); streams
/// for distinct indices never share a counter sequence in practice.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    /// Stream for trajectory `index` under ensemble seed `master`.
    static RngStream child(std::uint64_t master, std::uint64_t index);

    std::uint64_t next_u64();

    /// Uniform on [0,1) with 53 random bits.
    double next_double();

    std::uint64_t state() const { return state_; }

  private:
    std::uint64_t state_;
};

/// Draw for t=0: lengths 1 and 2 with equal probability. One draw consumed.
int initial_length(RngStream& rng);

/// Scheme I rule: repeat prev with probability p, otherwise 3-prev.
/// Exactly one draw consumed. prev must be 1 or 2.
int next_length_scheme1(int prev, double p, RngStream& rng);

/// Scheme II rule: repeat prev with probability p; otherwise draw fresh,
/// 1 with probability q and 2 with probability 1-q. One draw for the
/// branch, a second only on the fresh-draw branch. prev must be 1 or 2.
int next_length_scheme2(int prev, double p, double q, RngStream& rng);

/// Probability that the emitted length equals the previous one under
/// Scheme II, per previous length and marginalized over prev uniformly.
struct EffectivePersistence {
    double given_prev1;  // p + q(1-p)
    double given_prev2;  // p + (1-q)(1-p)
    double mean;         // p + (1-p)/2
};

/// Scheme II only; throws std::domain_error for other schemes.
EffectivePersistence effective_persistence(const StepPolicy& policy);

/// Length sequence l(0..T-1): element 0 from initial_length, the rest from
/// the scheme rule, all drawn from `rng` in fixed order. A fixed policy
/// consumes no draws.
std::vector<int> generate_sequence(const StepPolicy& policy, int steps, RngStream& rng);

/// Convenience overload seeding a fresh stream; a pure function of its
/// arguments.
std::vector<int> generate_sequence(const StepPolicy& policy, int steps, std::uint64_t seed);

}  // namespace qwalk
