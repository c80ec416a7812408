#include "qwalk/dense_oracle.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwalk {

WalkState dense_oracle_evolve(amplitude a0, amplitude b0, const CoinOperator& coin,
                              const std::vector<int>& lengths) {
    constexpr std::size_t kMaxSteps = 12;
    if (lengths.size() > kMaxSteps) {
        throw std::length_error("dense_oracle_evolve: more than " +
                                std::to_string(kMaxSteps) +
                                " steps exceeds the dense-matrix budget");
    }
    for (int l : lengths) {
        if (l != 1 && l != 2) {
            throw std::domain_error("dense_oracle_evolve: step length must be 1 or 2");
        }
    }

    const int steps = static_cast<int>(lengths.size());
    const int x_max = 2 * steps + 2;  // support never reaches the margin
    const int sites = 2 * x_max + 1;
    const int dim = 2 * sites;
    // basis index: 2*(x + x_max) + c with c = 0 for a, 1 for b
    auto id = [x_max](int x, int c) { return 2 * (x + x_max) + c; };

    std::vector<amplitude> state(dim, amplitude{});
    state[id(0, 0)] = a0;
    state[id(0, 1)] = b0;

    std::vector<amplitude> matrix(static_cast<std::size_t>(dim) * dim);
    std::vector<amplitude> next(dim);
    for (int s = 0; s < steps; ++s) {
        const int l = lengths[s];
        std::fill(matrix.begin(), matrix.end(), amplitude{});
        for (int x = -x_max; x <= x_max; ++x) {
            if (x + l <= x_max) {
                matrix[static_cast<std::size_t>(id(x + l, 0)) * dim + id(x, 0)] = coin.u00;
                matrix[static_cast<std::size_t>(id(x + l, 0)) * dim + id(x, 1)] = coin.u01;
            }
            if (x - l >= -x_max) {
                matrix[static_cast<std::size_t>(id(x - l, 1)) * dim + id(x, 0)] = coin.u10;
                matrix[static_cast<std::size_t>(id(x - l, 1)) * dim + id(x, 1)] = coin.u11;
            }
        }
        for (int r = 0; r < dim; ++r) {
            amplitude acc{};
            const amplitude* row = matrix.data() + static_cast<std::size_t>(r) * dim;
            for (int c = 0; c < dim; ++c) acc += row[c] * state[c];
            next[r] = acc;
        }
        state.swap(next);
    }

    std::vector<amplitude> a(sites), b(sites);
    for (int x = -x_max; x <= x_max; ++x) {
        a[x + x_max] = state[id(x, 0)];
        b[x + x_max] = state[id(x, 1)];
    }
    return WalkState(std::move(a), std::move(b), steps);
}

}  // namespace qwalk
