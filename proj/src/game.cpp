#include "craps/game.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace craps {

DiceDistribution standard_dice() {
    DiceDistribution d;
    for (int s = 2; s <= 12; ++s) d.prob[s] = Rational(6 - std::abs(s - 7), 36);
    return d;
}

PointGameSpec craps_game() {
    PointGameSpec g;
    g.naturals = {7, 11};
    g.craps_rolls = {2, 3, 12};
    g.points = {4, 5, 6, 8, 9, 10};
    return g;
}

PointGameSpec crapless_game() {
    PointGameSpec g;
    g.naturals = {7};
    g.craps_rolls = {};
    g.points = {2, 3, 4, 5, 6, 8, 9, 10, 11, 12};
    return g;
}

void validate_game(const PointGameSpec& game) {
    if (game.seven_out != 7)
        throw std::invalid_argument("seven_out must be 7 for two-dice games");
    std::map<int, int> seen;
    auto add = [&](const std::set<int>& s, const char* label) {
        for (int v : s) {
            if (v < 2 || v > 12)
                throw std::invalid_argument(std::string(label) + " contains total " +
                                            std::to_string(v) + " outside 2..12");
            if (++seen[v] > 1)
                throw std::invalid_argument("total " + std::to_string(v) +
                                            " assigned to more than one class");
        }
    };
    add(game.naturals, "naturals");
    add(game.craps_rolls, "craps");
    add(game.points, "points");
    for (int s = 2; s <= 12; ++s)
        if (!seen.count(s))
            throw std::invalid_argument("total " + std::to_string(s) +
                                        " not assigned to naturals, craps, or points");
    if (!game.naturals.count(7))
        throw std::invalid_argument("7 must be a natural (it wins every come-out roll)");
    Rational total = 0;
    for (int s = 2; s <= 12; ++s) {
        if (game.dice(s) < 0)
            throw std::invalid_argument("dice probabilities must be nonnegative");
        total += game.dice(s);
    }
    if (total != 1) throw std::invalid_argument("dice probabilities must sum to 1");
    if (game.dice(game.seven_out) == 0)
        throw std::invalid_argument("seven-out total must have positive probability");
}

ChainSpec compile_chain(const PointGameSpec& game, PointMerging merging) {
    validate_game(game);
    ChainSpec chain;
    chain.game = game;
    chain.seven_prob = game.dice(game.seven_out);

    // Group points, either one state per make-probability class or one per
    // point, then order by make probability (ties by smallest member).
    std::vector<PointGroup> groups;
    if (merging == PointMerging::merged) {
        std::map<Rational, PointGroup> by_prob;
        for (int p : game.points) {
            PointGroup& g = by_prob[game.dice(p)];
            g.members.push_back(p);
            g.mass += game.dice(p);
            g.make_prob = game.dice(p);
        }
        for (auto& [prob, g] : by_prob) groups.push_back(std::move(g));
    } else {
        for (int p : game.points)
            groups.push_back(PointGroup{{p}, game.dice(p), game.dice(p), Rational(0)});
        std::sort(groups.begin(), groups.end(), [](const PointGroup& a, const PointGroup& b) {
            return a.make_prob != b.make_prob ? a.make_prob < b.make_prob
                                              : a.members[0] < b.members[0];
        });
    }
    for (PointGroup& g : groups) g.survive_prob = 1 - g.make_prob - chain.seven_prob;
    chain.groups = std::move(groups);

    const Eigen::Index m = static_cast<Eigen::Index>(chain.groups.size());
    chain.states.push_back("co");
    for (const PointGroup& g : chain.groups) {
        std::string label = "p";
        for (std::size_t k = 0; k < g.members.size(); ++k) {
            if (k) label += '-';
            label += std::to_string(g.members[k]);
        }
        chain.states.push_back(label);
    }
    chain.states.push_back("7o");

    // Come-out row: naturals and craps numbers loop, points enter their
    // group, nothing is absorbed.  Point rows: make -> come-out, seven-out
    // -> absorbed, everything else survives in place.
    RationalMatrix p = RationalMatrix::Zero(m + 2, m + 2);
    Rational stay = 0;
    for (int v : game.naturals) stay += game.dice(v);
    for (int v : game.craps_rolls) stay += game.dice(v);
    p(0, 0) = stay;
    for (Eigen::Index i = 0; i < m; ++i) {
        const PointGroup& g = chain.groups[static_cast<std::size_t>(i)];
        p(0, i + 1) = g.mass;
        p(i + 1, 0) = g.make_prob;
        p(i + 1, i + 1) = g.survive_prob;
        p(i + 1, m + 1) = chain.seven_prob;
    }
    p(m + 1, m + 1) = 1;
    chain.transition = p;
    chain.transient = p.topLeftCorner(m + 1, m + 1);
    return chain;
}

PointGameSpec parse_game_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("game spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument("game spec must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "naturals" && key != "craps" && key != "points")
            throw std::invalid_argument("unknown key in game spec: \"" + key + "\"");

    PointGameSpec g;
    g.naturals.clear();
    auto read_set = [&doc](const char* key) {
        if (!doc.contains(key))
            throw std::invalid_argument(std::string("game spec is missing \"") + key + "\"");
        const auto& arr = doc.at(key);
        if (!arr.is_array())
            throw std::invalid_argument(std::string("\"") + key + "\" must be an array of totals");
        std::set<int> out;
        for (const auto& v : arr) {
            if (!v.is_number_integer())
                throw std::invalid_argument(std::string("\"") + key + "\" must contain integers");
            out.insert(v.get<int>());
        }
        return out;
    };
    g.naturals = read_set("naturals");
    g.craps_rolls = read_set("craps");
    g.points = read_set("points");
    validate_game(g);
    return g;
}

PointGameSpec load_game_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open game spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_game_json(buf.str());
}

PointGameSpec resolve_game(const std::string& name_or_path) {
    if (name_or_path == "craps") return craps_game();
    if (name_or_path == "crapless") return crapless_game();
    return load_game_file(name_or_path);
}

}  // namespace craps
