#include "craps/game.hpp"

#include <doctest.h>

#include <random>

using namespace craps;

TEST_CASE("standard dice") {
    const DiceDistribution d = standard_dice();
    Rational total = 0;
    for (int s = 2; s <= 12; ++s) total += d(s);
    CHECK(total == 1);
    CHECK(d(7) == Rational(1, 6));
    CHECK(d(2) == Rational(1, 36));
    CHECK(d(6) == Rational(5, 36));
}

TEST_CASE("craps chain layout") {
    const ChainSpec chain = compile_chain(craps_game());
    CHECK(chain.states == std::vector<std::string>{"co", "p4-10", "p5-9", "p6-8", "7o"});
    CHECK(chain.transient.rows() == 4);
    CHECK(chain.seven_prob == Rational(1, 6));

    // Come-out row: 12/36 resolves in place, masses 6/36, 8/36, 10/36.
    CHECK(chain.transient(0, 0) == Rational(1, 3));
    CHECK(chain.transient(0, 1) == Rational(1, 6));
    CHECK(chain.transient(0, 2) == Rational(2, 9));
    CHECK(chain.transient(0, 3) == Rational(5, 18));
    // Point rows: make probability back to come-out, survive on the diagonal.
    CHECK(chain.transient(1, 0) == Rational(1, 12));
    CHECK(chain.transient(2, 0) == Rational(1, 9));
    CHECK(chain.transient(3, 0) == Rational(5, 36));
    CHECK(chain.transient(1, 1) == Rational(3, 4));
    CHECK(chain.transient(2, 2) == Rational(13, 18));
    CHECK(chain.transient(3, 3) == Rational(25, 36));
    // The hand cannot end on a come-out roll.
    CHECK(chain.transition(0, 4) == 0);
    CHECK(chain.transition(1, 4) == Rational(1, 6));
    CHECK(chain.transition(4, 4) == 1);

    for (Eigen::Index i = 0; i < chain.transition.rows(); ++i)
        CHECK(chain.transition.row(i).sum() == Rational(1));

    REQUIRE(chain.groups.size() == 3);
    CHECK(chain.groups[0].members == std::vector<int>{4, 10});
    CHECK(chain.groups[1].members == std::vector<int>{5, 9});
    CHECK(chain.groups[2].members == std::vector<int>{6, 8});
    CHECK(chain.groups[2].survive_prob == Rational(25, 36));
}

TEST_CASE("crapless chain layout") {
    const ChainSpec chain = compile_chain(crapless_game());
    CHECK(chain.states == std::vector<std::string>{"co", "p2-12", "p3-11", "p4-10", "p5-9",
                                                   "p6-8", "7o"});
    CHECK(chain.transient(0, 0) == Rational(1, 6));  // only 7 resolves on the come-out
    CHECK(chain.transient(1, 1) == Rational(29, 36));
    CHECK(chain.transient(5, 5) == Rational(25, 36));
    CHECK(chain.groups[0].mass == Rational(1, 18));
    CHECK(chain.groups[4].mass == Rational(5, 18));
}

TEST_CASE("per-point chains keep one state per point") {
    const ChainSpec chain = compile_chain(craps_game(), PointMerging::separate);
    CHECK(chain.states == std::vector<std::string>{"co", "p4", "p10", "p5", "p9", "p6",
                                                   "p8", "7o"});
    CHECK(chain.transient.rows() == 7);
    CHECK(chain.transient(1, 1) == chain.transient(2, 2));  // 4 and 10 tie
    for (Eigen::Index i = 0; i < chain.transition.rows(); ++i)
        CHECK(chain.transition.row(i).sum() == Rational(1));
}

TEST_CASE("game validation rejects malformed specs") {
    PointGameSpec g = craps_game();
    g.naturals = {11};  // 7 unassigned
    CHECK_THROWS_AS(validate_game(g), std::invalid_argument);

    g = craps_game();
    g.naturals = {7, 11, 4};  // 4 assigned twice
    CHECK_THROWS_AS(validate_game(g), std::invalid_argument);

    g = craps_game();
    g.craps_rolls = {2, 3, 12, 13};  // out of range
    CHECK_THROWS_AS(validate_game(g), std::invalid_argument);

    g = craps_game();
    g.points = {4, 5, 6, 8, 9};  // 10 unassigned
    CHECK_THROWS_AS(validate_game(g), std::invalid_argument);

    g = craps_game();
    g.naturals = {11};
    g.craps_rolls = {2, 3, 7, 12};  // 7 must be a natural
    CHECK_THROWS_AS(validate_game(g), std::invalid_argument);

    CHECK_NOTHROW(validate_game(craps_game()));
    CHECK_NOTHROW(validate_game(crapless_game()));
}

TEST_CASE("JSON game specs") {
    const PointGameSpec g = parse_game_json(
        R"({"naturals": [7, 11], "craps": [2, 3, 12], "points": [4, 5, 6, 8, 9, 10]})");
    CHECK(g.naturals == craps_game().naturals);
    CHECK(g.craps_rolls == craps_game().craps_rolls);
    CHECK(g.points == craps_game().points);

    CHECK_THROWS_WITH_AS(parse_game_json("{"),
                         doctest::Contains("not valid JSON"), std::invalid_argument);
    CHECK_THROWS_AS(parse_game_json(R"({"naturals": [7], "points": [4]})"),
                    std::invalid_argument);  // missing "craps"
    CHECK_THROWS_AS(
        parse_game_json(
            R"({"naturals": [7], "craps": [], "points": [2,3,4,5,6,8,9,10,11,12], "x": 1})"),
        std::invalid_argument);  // unknown key
    CHECK_THROWS_AS(
        parse_game_json(R"({"naturals": [7, "11"], "craps": [2], "points": [3]})"),
        std::invalid_argument);  // non-integer entry
    CHECK_THROWS_AS(parse_game_json("[1, 2]"), std::invalid_argument);
}

TEST_CASE("resolve_game routes names and paths") {
    CHECK(resolve_game("craps").points == craps_game().points);
    CHECK(resolve_game("crapless").naturals == std::set<int>{7});
    CHECK_THROWS_WITH_AS(resolve_game("/no/such/file.json"),
                         doctest::Contains("cannot open"), std::invalid_argument);
}

TEST_CASE("random games compile to exact stochastic chains") {
    std::mt19937 rng(20260825);
    for (int trial = 0; trial < 25; ++trial) {
        PointGameSpec g;
        g.craps_rolls.clear();
        for (int s = 2; s <= 12; ++s) {
            if (s == 7) { g.naturals.insert(7); continue; }
            switch (rng() % 3) {
                case 0: g.naturals.insert(s); break;
                case 1: g.craps_rolls.insert(s); break;
                default: g.points.insert(s); break;
            }
        }
        for (PointMerging merging : {PointMerging::merged, PointMerging::separate}) {
            const ChainSpec chain = compile_chain(g, merging);
            CHECK(chain.states.size() == chain.groups.size() + 2);
            for (Eigen::Index i = 0; i < chain.transition.rows(); ++i)
                CHECK(chain.transition.row(i).sum() == Rational(1));
            // Transient rows are substochastic; point rows strictly so.
            for (Eigen::Index i = 1; i < chain.transient.rows(); ++i)
                CHECK(chain.transient.row(i).sum() == 1 - chain.seven_prob);
        }
    }
}
