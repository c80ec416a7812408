#pragma once

#include <vector>

#include "qwalk/lattice_state.hpp"

namespace qwalk {

/// Brute-force reference evolution: at every step the full one-step unitary
/// (shift composed with coin) is built as an explicit dense matrix over the
/// truncated position-coin space and applied to the state vector. Costs
/// O(n^2) per step with n = 2*(4*steps+5), so the length list is capped at
/// 12 steps. Shares no code with WalkState's windowed stepper; exists to
/// check it.
WalkState dense_oracle_evolve(amplitude a0, amplitude b0, const CoinOperator& coin,
                              const std::vector<int>& lengths);

}  // namespace qwalk
