#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "pisen/module.hpp"
#include "pisen/phin.hpp"

namespace support {

// Random chain-form (phi, N, weights, twists) data that passes validation:
// within each chain a step either keeps the twist (weight +1, arrow kept)
// or drops it (arbitrary weight step, arrow killed).
inline pisen::PhiNData random_phin(std::mt19937& rng, long long p, long max_dim = 6) {
    std::uniform_int_distribution<long> dim_dist(1, max_dim);
    const long d = dim_dist(rng);
    std::vector<long> blocks;
    for (long left = d; left > 0;) {
        std::uniform_int_distribution<long> bl(1, left);
        const long b = bl(rng);
        blocks.push_back(b);
        left -= b;
    }

    pisen::PhiNData data;
    data.dim = d;
    data.monodromy = pisen::RationalMatrix(d, d);
    data.weights.assign(d, 0);
    data.twists.assign(d, 0);

    std::uniform_int_distribution<int> w0(-2, 2);
    std::uniform_int_distribution<int> coin(0, 99);
    std::uniform_int_distribution<int> wstep(-2, 3);
    std::uniform_int_distribution<int> mdrop(1, 2);
    long start = 0;
    for (long b : blocks) {
        long w = w0(rng);
        long m = 0;
        data.weights[start] = w;
        data.twists[start] = m;
        for (long i = 1; i < b; ++i) {
            data.monodromy.at(start + i, start + i - 1) = 1;
            if (coin(rng) < 60) {
                w += 1; // arrow survives: twist flat, weight consecutive
            } else {
                w += wstep(rng);
                m -= mdrop(rng);
            }
            data.weights[start + i] = w;
            data.twists[start + i] = m;
        }
        start += b;
    }

    const long mn = *std::min_element(data.weights.begin(), data.weights.end());
    for (auto& w : data.weights) w -= mn;

    if (coin(rng) < 50) {
        // diagonal Frobenius compatible with N: within a chain of length b
        // the entries are lambda * p^{b-1}, ..., lambda * p, lambda
        pisen::RationalMatrix phi(d, d);
        std::uniform_int_distribution<int> lam(1, 3);
        long s = 0;
        for (long b : blocks) {
            pisen::BigRational v(lam(rng));
            for (long i = b - 1; i >= 0; --i) {
                phi.at(s + i, s + i) = v;
                v *= p;
            }
            s += b;
        }
        data.frobenius = std::move(phi);
    }
    return data;
}

// Minimal nilpotency index the construction should produce: the longest
// equal-twist run inside a chain.
inline long expected_nilpotency_index(const pisen::PhiNData& data) {
    const auto chains = pisen::chains_of(data.monodromy);
    long best = 1;
    for (const auto& chain : *chains) {
        long run = 1;
        for (size_t i = 1; i < chain.size(); ++i) {
            run = (data.twists[chain[i]] == data.twists[chain[i - 1]]) ? run + 1 : 1;
            best = std::max(best, run);
        }
    }
    return best;
}

inline long weight_span(const pisen::PhiNData& data) {
    const auto [lo, hi] = std::minmax_element(data.weights.begin(), data.weights.end());
    return *hi - *lo;
}

} // namespace support
