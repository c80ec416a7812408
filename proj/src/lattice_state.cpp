#include "qwalk/lattice_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

double norm2(const amplitude& z) {
    return z.real() * z.real() + z.imag() * z.imag();
}

}  // namespace

CoinOperator make_coin(amplitude u00, amplitude u01, amplitude u10, amplitude u11) {
    // rows of U must be orthonormal
    const double r0 = norm2(u00) + norm2(u01);
    const double r1 = norm2(u10) + norm2(u11);
    const amplitude cross = u00 * std::conj(u10) + u01 * std::conj(u11);
    if (std::abs(r0 - 1.0) > 1e-12 || std::abs(r1 - 1.0) > 1e-12 ||
        std::abs(cross) > 1e-12) {
        throw std::invalid_argument("make_coin: operator is not unitary within 1e-12");
    }
    return CoinOperator{u00, u01, u10, u11};
}

CoinOperator hadamard_coin() {
    const double s = 1.0 / std::sqrt(2.0);
    return CoinOperator{{s, 0.0}, {s, 0.0}, {s, 0.0}, {-s, 0.0}};
}

WalkState::WalkState(amplitude a0, amplitude b0, int x_max) : x_max_(x_max) {
    if (x_max <= 0) throw std::invalid_argument("WalkState: x_max must be positive");
    const double n = norm2(a0) + norm2(b0);
    if (std::abs(n - 1.0) > 1e-12) {
        throw std::invalid_argument(
            "WalkState: initial coin amplitudes not normalized, |a|^2+|b|^2 = " +
            std::to_string(n));
    }
    a_.assign(2 * x_max_ + 1, amplitude{});
    b_.assign(2 * x_max_ + 1, amplitude{});
    a_[idx(0)] = a0;
    b_[idx(0)] = b0;
}

WalkState::WalkState(std::vector<amplitude> a, std::vector<amplitude> b, int t)
    : a_(std::move(a)), b_(std::move(b)), t_(t) {
    if (a_.size() != b_.size() || a_.empty() || a_.size() % 2 == 0) {
        throw std::invalid_argument("WalkState: arrays must be equal-sized and odd-length");
    }
    x_max_ = static_cast<int>(a_.size() / 2);
    lo_ = x_max_;
    hi_ = -x_max_;
    for (int x = -x_max_; x <= x_max_; ++x) {
        if (norm2(a_[idx(x)]) + norm2(b_[idx(x)]) > 0.0) {
            lo_ = std::min(lo_, x);
            hi_ = std::max(hi_, x);
        }
    }
    if (lo_ > hi_) { lo_ = hi_ = 0; }  // all-zero state; window degenerates
}

double WalkState::probability_at(int x) const {
    if (!in_range(x)) return 0.0;
    return norm2(a_[idx(x)]) + norm2(b_[idx(x)]);
}

double WalkState::total_probability() const {
    double s = 0.0;
    for (int x = lo_; x <= hi_; ++x) s += norm2(a_[idx(x)]) + norm2(b_[idx(x)]);
    return s;
}

void WalkState::apply_coin(const CoinOperator& coin) {
    const int i0 = idx(lo_), i1 = idx(hi_);
    for (int i = i0; i <= i1; ++i) {
        const amplitude av = a_[i];
        const amplitude bv = b_[i];
        a_[i] = coin.u00 * av + coin.u01 * bv;
        b_[i] = coin.u10 * av + coin.u11 * bv;
    }
}

void WalkState::apply_shift(int l) {
    if (l != 1 && l != 2) throw std::domain_error("apply_shift: step length must be 1 or 2");
    if (hi_ + l > x_max_ || lo_ - l < -x_max_) {
        throw numeric_contract_error(
            "apply_shift: window [" + std::to_string(lo_ - l) + "," +
            std::to_string(hi_ + l) + "] exceeds lattice bound x_max=" +
            std::to_string(x_max_) + " at t=" + std::to_string(t_));
    }
    // a shifts right, b shifts left; both are plain overlapping moves
    std::copy_backward(a_.begin() + idx(lo_), a_.begin() + idx(hi_) + 1,
                       a_.begin() + idx(hi_ + l) + 1);
    std::fill(a_.begin() + idx(lo_), a_.begin() + idx(lo_ + l), amplitude{});
    std::copy(b_.begin() + idx(lo_), b_.begin() + idx(hi_) + 1, b_.begin() + idx(lo_ - l));
    std::fill(b_.begin() + idx(hi_ - l) + 1, b_.begin() + idx(hi_) + 1, amplitude{});
    lo_ -= l;
    hi_ += l;
}

void WalkState::step(const CoinOperator& coin, int l) {
    apply_coin(coin);
    apply_shift(l);
    ++t_;
}

}  // namespace qwalk
