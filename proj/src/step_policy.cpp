#include "qwalk/step_policy.hpp"

#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void check_prev(int prev, const char* where) {
    if (prev != 1 && prev != 2) {
        throw std::domain_error(std::string(where) + ": previous length must be 1 or 2, got " +
                                std::to_string(prev));
    }
}

}  // namespace

void validate(const StepPolicy& policy) {
    if (policy.p < 0.0 || policy.p > 1.0) {
        throw std::invalid_argument("StepPolicy: p must lie in [0,1]");
    }
    if (policy.q < 0.0 || policy.q > 1.0) {
        throw std::invalid_argument("StepPolicy: q must lie in [0,1]");
    }
    if (policy.scheme == Scheme::fixed && policy.fixed_l != 1 && policy.fixed_l != 2) {
        throw std::invalid_argument("StepPolicy: fixed_l must be 1 or 2");
    }
}

RngStream RngStream::child(std::uint64_t master, std::uint64_t index) {
    return RngStream(mix64(master + kGolden * (index + 1)));
}

std::uint64_t RngStream::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int initial_length(RngStream& rng) {
    return rng.next_double() < 0.5 ? 1 : 2;
}

int next_length_scheme1(int prev, double p, RngStream& rng) {
    check_prev(prev, "next_length_scheme1");
    return rng.next_double() < p ? prev : 3 - prev;
}

int next_length_scheme2(int prev, double p, double q, RngStream& rng) {
    check_prev(prev, "next_length_scheme2");
    if (rng.next_double() < p) return prev;
    return rng.next_double() < q ? 1 : 2;
}

EffectivePersistence effective_persistence(const StepPolicy& policy) {
    if (policy.scheme != Scheme::scheme2) {
        throw std::domain_error("effective_persistence: defined for Scheme II only");
    }
    const double p = policy.p, q = policy.q;
    return EffectivePersistence{p + q * (1.0 - p), p + (1.0 - q) * (1.0 - p),
                                p + 0.5 * (1.0 - p)};
}

std::vector<int> generate_sequence(const StepPolicy& policy, int steps, RngStream& rng) {
    if (steps < 1) throw std::invalid_argument("generate_sequence: steps must be >= 1");
    validate(policy);
    std::vector<int> lengths(static_cast<std::size_t>(steps));
    if (policy.scheme == Scheme::fixed) {
        for (int t = 0; t < steps; ++t) lengths[t] = policy.fixed_l;
        return lengths;
    }
    lengths[0] = initial_length(rng);
    for (int t = 1; t < steps; ++t) {
        lengths[t] = policy.scheme == Scheme::scheme1
                         ? next_length_scheme1(lengths[t - 1], policy.p, rng)
                         : next_length_scheme2(lengths[t - 1], policy.p, policy.q, rng);
    }
    return lengths;
}

std::vector<int> generate_sequence(const StepPolicy& policy, int steps, std::uint64_t seed) {
    RngStream rng(seed);
    return generate_sequence(policy, steps, rng);
}

}  // namespace qwalk
