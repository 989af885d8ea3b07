#include "craps/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace craps {

std::uint64_t SimulationResult::tail_count(int n) const {
    if (n < 1) throw std::invalid_argument("hand length index n must be >= 1");
    std::uint64_t count = 0;
    for (std::size_t k = static_cast<std::size_t>(n); k < length_counts.size(); ++k)
        count += length_counts[k];
    return count;
}

TailEstimate SimulationResult::tail(int n) const {
    const double p = static_cast<double>(tail_count(n)) / static_cast<double>(trials);
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    return TailEstimate{p, se};
}

SimulationResult estimate_tail(const PointGameSpec& game, std::uint64_t trials,
                               std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("trials must be >= 1");
    validate_game(game);
    if (game.points.empty())
        throw std::domain_error("game has no points: hands never seven out");

    constexpr std::uint64_t kTrialsPerStream = 1'000'000;
    const unsigned streams = static_cast<unsigned>(
        std::min<std::uint64_t>(64, (trials + kTrialsPerStream - 1) / kTrialsPerStream));

    // Fixed partition and per-stream sub-seeds: the merged counts depend
    // only on (game, trials, seed), not on scheduling.
    std::vector<std::uint64_t> stream_trials(streams, trials / streams);
    for (std::uint64_t s = 0; s < trials % streams; ++s) ++stream_trials[s];
    SplitMix64 seeder(seed);
    std::vector<std::uint64_t> stream_seeds(streams);
    for (auto& s : stream_seeds) s = seeder.next();

    std::vector<std::vector<std::uint64_t>> counts(streams);
    std::vector<std::uint64_t> rolls(streams, 0);
    std::atomic<unsigned> next_stream{0};
    auto worker = [&] {
        for (;;) {
            const unsigned s = next_stream.fetch_add(1);
            if (s >= streams) return;
            SplitMix64 rng(stream_seeds[s]);
            auto& local = counts[s];
            for (std::uint64_t t = 0; t < stream_trials[s]; ++t) {
                const int len = simulate_hand(game, rng);
                if (static_cast<std::size_t>(len) >= local.size())
                    local.resize(static_cast<std::size_t>(len) + 1, 0);
                ++local[static_cast<std::size_t>(len)];
                rolls[s] += static_cast<std::uint64_t>(len);
            }
        }
    };
    const unsigned workers =
        std::min(streams, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    SimulationResult result;
    result.trials = trials;
    result.seed = seed;
    result.streams = streams;
    std::size_t longest = 1;
    for (const auto& local : counts) longest = std::max(longest, local.size());
    result.length_counts.assign(longest, 0);
    std::uint64_t total_rolls = 0;
    for (unsigned s = 0; s < streams; ++s) {
        for (std::size_t k = 0; k < counts[s].size(); ++k)
            result.length_counts[k] += counts[s][k];
        total_rolls += rolls[s];
    }
    result.max_length_observed = static_cast<int>(longest - 1);
    result.mean_length = static_cast<double>(total_rolls) / static_cast<double>(trials);
    return result;
}

}  // namespace craps
