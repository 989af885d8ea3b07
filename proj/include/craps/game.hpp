// Point-game rules and their compiled absorbing Markov chains.
//
// A hand: roll two dice from the come-out.  Naturals and craps numbers
// resolve the bet immediately and the next roll is another come-out; a
// point total moves the shooter to that point, which ends only by making
// the point (back to come-out) or rolling the seven-out (hand over).  The
// hand length L is the number of rolls up to and including the seven-out.
#pragma once

#include "craps/numeric.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace craps {

struct DiceDistribution {
    // prob[s] = probability of rolling total s; indices 0 and 1 unused.
    std::array<Rational, 13> prob{};
    const Rational& operator()(int total) const { return prob.at(total); }
};

// Two fair six-sided dice: P(total s) = (6 - |s - 7|) / 36.
DiceDistribution standard_dice();

struct PointGameSpec {
    std::set<int> naturals;     // come-out winners (7 must be one of them)
    std::set<int> craps_rolls;  // come-out losers; hand continues either way
    std::set<int> points;       // totals that set a point
    int seven_out = 7;          // ends the hand once a point is set
    DiceDistribution dice = standard_dice();
};

PointGameSpec craps_game();     // naturals {7,11}, craps {2,3,12}, points {4,5,6,8,9,10}
PointGameSpec crapless_game();  // naturals {7}, everything else a point

// Throws std::invalid_argument unless naturals/craps/points partition
// {2..12}, 7 is a natural, and the dice distribution sums to 1.
void validate_game(const PointGameSpec& game);

// Points with equal odds of being made (e.g. 4 and 10) behave identically,
// so the chain may merge each such class into one state without changing
// the hand-length distribution.
enum class PointMerging { merged, separate };

struct PointGroup {
    std::vector<int> members;  // point totals, ascending
    Rational mass;             // come-out probability of landing in the group
    Rational make_prob;        // per-roll probability of making the point
    Rational survive_prob;     // per-roll probability of neither making nor sevening out
};

struct ChainSpec {
    PointGameSpec game;
    // States: come-out first, one per point group (make-probability
    // ascending, so diagonal survive probabilities descend), absorbing
    // seven-out last.
    std::vector<std::string> states;
    RationalMatrix transition;  // full row-stochastic matrix
    RationalMatrix transient;   // Q = transient-to-transient block
    std::vector<PointGroup> groups;
    Rational seven_prob;        // dice probability of the seven-out total
};

ChainSpec compile_chain(const PointGameSpec& game,
                        PointMerging merging = PointMerging::merged);

// Game spec JSON: {"naturals": [7,11], "craps": [2,3,12], "points": [...]}.
PointGameSpec parse_game_json(const std::string& json_text);
PointGameSpec load_game_file(const std::string& path);

// "craps" and "crapless" name the built-ins; anything else is a JSON path.
PointGameSpec resolve_game(const std::string& name_or_path);

}  // namespace craps
