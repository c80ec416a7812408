#pragma once

#include <complex>
#include <vector>

namespace qwalk {

using amplitude = std::complex<double>;

/// 2x2 unitary acting on the coin space. Entries are row-major:
/// (new a) = u00*a + u01*b, (new b) = u10*a + u11*b.
struct CoinOperator {
    amplitude u00, u01, u10, u11;
};

/// Builds a coin operator and verifies U U^dagger = I within 1e-12.
CoinOperator make_coin(amplitude u00, amplitude u01, amplitude u10, amplitude u11);

/// The standard balanced coin, H = [[1,1],[1,-1]]/sqrt(2).
CoinOperator hadamard_coin();

/// Two-component walker wavefunction on the integer lattice [-x_max, x_max].
///
/// Component a rides with the right-moving coin state (shifts by +l),
/// component b with the left-moving one (shifts by -l). Storage is two flat
/// arrays centered on the origin; an active window [window_lo, window_hi]
/// bounds the nonzero support so one step costs O(window), not O(array).
///
/// The caller sizes the lattice: x_max must be at least 2*T for a T-step
/// walk (maximum step length is 2), otherwise a shift eventually throws
/// numeric_contract_error. No renormalization is ever applied; unitarity
/// holds by construction and is asserted by callers, not corrected.
class WalkState {
  public:
    /// Walker localized at the origin with coin amplitudes (a0, b0).
    /// Requires |a0|^2 + |b0|^2 = 1 within 1e-12 and x_max > 0.
    WalkState(amplitude a0, amplitude b0, int x_max);

    /// Adopts full amplitude arrays over [-x_max, x_max] where
    /// x_max = (a.size()-1)/2. Sizes must match and be odd.
    WalkState(std::vector<amplitude> a, std::vector<amplitude> b, int t);

    int time() const { return t_; }
    int x_max() const { return x_max_; }
    int window_lo() const { return lo_; }
    int window_hi() const { return hi_; }

    amplitude a(int x) const { return in_range(x) ? a_[idx(x)] : amplitude{}; }
    amplitude b(int x) const { return in_range(x) ? b_[idx(x)] : amplitude{}; }

    /// P(x,t) = |a(x)|^2 + |b(x)|^2; zero for any x outside the lattice.
    double probability_at(int x) const;

    double total_probability() const;

    /// Coin rotation at every site of the active window. Leaves t unchanged.
    void apply_coin(const CoinOperator& coin);

    /// Conditional translation: a moves right by l, b moves left by l,
    /// l in {1,2}. Throws numeric_contract_error if the widened window
    /// would leave the lattice (mis-sized allocation, fatal).
    void apply_shift(int l);

    /// One walk step: coin rotation followed by the length-l translation;
    /// advances t by one.
    void step(const CoinOperator& coin, int l);

  private:
    int idx(int x) const { return x + x_max_; }
    bool in_range(int x) const { return x >= -x_max_ && x <= x_max_; }

    std::vector<amplitude> a_, b_;
    int x_max_ = 0;
    int t_ = 0;
    int lo_ = 0, hi_ = 0;
};

}  // namespace qwalk
