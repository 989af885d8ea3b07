// Monte Carlo cross-check of the exact distribution.  Hands are simulated
// straight from the table rules (come-out / point / seven-out), never from
// the compiled chain, so agreement with the exact engine is evidence and
// not tautology.
//
// Reproducibility contract: results are a pure function of (game, trials,
// seed), independent of thread count and platform.  The generator is
// SplitMix64 (Steele-Lea-Burton finalizer, golden-gamma increment); dice
// rolls map one 64-bit draw u to k = floor(u * 36 / 2^64) and the pair
// (k / 6 + 1, k % 6 + 1), rejection-free.  Trials are split into fixed
// million-trial streams (at most 64); stream s runs its own SplitMix64
// seeded with the (s+1)-th output of a SplitMix64 seeded with `seed`.
#pragma once

#include "craps/game.hpp"

#include <cstdint>
#include <vector>

namespace craps {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on {0, ..., n-1} by 128-bit multiply-shift (no rejection;
    // the bias for n = 36 is 2^-59, far below any tolerance used here).
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

private:
    std::uint64_t state_;
};

inline int roll_total(SplitMix64& rng) {
    const std::uint64_t k = rng.next_below(36);
    return static_cast<int>(k / 6 + 1) + static_cast<int>(k % 6 + 1);
}

// One hand from the rules; returns its length L (rolls up to and including
// the seven-out).  `roll` supplies successive dice totals.
template <typename RollFn>
int simulate_hand(const PointGameSpec& game, RollFn&& roll) {
    int length = 0;
    int point = 0;  // 0 = come-out
    for (;;) {
        const int total = roll();
        ++length;
        if (point == 0) {
            // Naturals and craps numbers resolve the bet; the hand rolls on.
            if (game.points.count(total)) point = total;
        } else if (total == point) {
            point = 0;
        } else if (total == game.seven_out) {
            return length;
        }
    }
}

inline int simulate_hand(const PointGameSpec& game, SplitMix64& rng) {
    return simulate_hand(game, [&rng] { return roll_total(rng); });
}

struct TailEstimate {
    double fraction;   // empirical P(L >= n)
    double std_error;  // binomial standard error sqrt(p(1-p)/trials)
};

struct SimulationResult {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned streams = 0;
    int max_length_observed = 0;
    double mean_length = 0.0;
    // length_counts[n] = hands of length exactly n (index 0 unused).
    std::vector<std::uint64_t> length_counts;

    std::uint64_t tail_count(int n) const;  // hands with L >= n
    TailEstimate tail(int n) const;
};

// Runs `trials` hands (threaded, deterministic merge).  Throws
// std::invalid_argument for trials = 0 or an invalid game and
// std::domain_error for a game with no points (hands never end).
SimulationResult estimate_tail(const PointGameSpec& game, std::uint64_t trials,
                               std::uint64_t seed);

}  // namespace craps
