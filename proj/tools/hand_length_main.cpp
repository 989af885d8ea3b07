// hand-length: exact, spectral, and simulated statistics of the length of
// a shooter's hand in craps-style point games.
//
//   hand-length tail     --game craps --n 154 [--digits 9] [--format text]
//   hand-length eigen    --game craps [--digits 18] [--format text]
//   hand-length simulate --game craps --trials 1000000 --seed 42
//   hand-length verify   --game craps
//
// Exit codes: 0 success, 1 usage error, 2 verification/computation failure.
#include "craps/analysis.hpp"
#include "craps/montecarlo.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace craps;
using nlohmann::json;

std::string rational_str(const Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string poly_str(const Polynomial<Integer>& p, const std::string& var) {
    std::ostringstream os;
    for (int k = p.degree(); k >= 0; --k) {
        const Integer& c = p[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (k == p.degree())
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        const Integer a = mp::abs(c);
        if (a != 1 || k == 0) os << a.str();
        if (k > 0) {
            if (a != 1) os << ' ';
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    if (p.is_zero()) os << '0';
    return os.str();
}

// ---------------------------------------------------------------- tables --

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_text(std::ostream& os, const Table& t) {
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            os << (c ? "  " : "");
            os << std::string(width[c] - cells[c].size(), ' ') << cells[c];
        }
        os << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
}

void write_csv(std::ostream& os, const Table& t, const std::string& comment) {
    if (!comment.empty()) os << "# " << comment << '\n';
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << cells[c];
        os << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
}

json rows_json(const Table& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json obj;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::string& name = t.header[c];
            // Counters are genuine integers; everything else stays a decimal
            // string so no reader ever re-rounds a rounded value.
            if (name == "n" || name == "count_ge")
                obj[name] = std::stoull(row[c]);
            else
                obj[name] = row[c];
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

bool same_chain(const ChainSpec& a, const ChainSpec& b) {
    if (a.states != b.states) return false;
    for (Eigen::Index i = 0; i < a.transition.rows(); ++i)
        for (Eigen::Index j = 0; j < a.transition.cols(); ++j)
            if (a.transition(i, j) != b.transition(i, j)) return false;
    return true;
}

bool is_craps(const ChainSpec& c) { return same_chain(c, compile_chain(craps_game())); }
bool is_crapless(const ChainSpec& c) { return same_chain(c, compile_chain(crapless_game())); }

// ------------------------------------------------------------------ tail --

int cmd_tail(const PointGameSpec& game, const std::string& label, int n_max, int digits,
             const std::string& format) {
    const ChainSpec chain = compile_chain(game);
    const Spectrum spectrum = eigenvalues_numeric(chain);
    const GeometricMixture mixture = mixture_coefficients(chain, spectrum);
    const TailTable tails = tail_table(chain, n_max);

    Table t;
    t.header = {"n", "t_exact", "t_closed_form", "leading_bound", "ratio", "one_in"};
    Real lead = mixture.terms[0].coefficient;  // c1 e1^(n-1) at n = 1
    for (int n = 1; n <= n_max; ++n) {
        const Rational& exact = tails.at(n);
        t.rows.push_back({std::to_string(n), format_decimal(exact, digits),
                          format_decimal(tail_closed_form(mixture, n), digits),
                          format_decimal(lead, digits),
                          format_decimal(lead / to_real(exact), digits),
                          format_decimal(1 / exact, digits)});
        lead *= mixture.terms[0].rate;
    }

    if (format == "json") {
        json doc;
        doc["game"] = label;
        doc["digits"] = digits;
        doc["rows"] = rows_json(t);
        std::cout << doc.dump(2) << '\n';
    } else if (format == "csv") {
        write_csv(std::cout, t, "hand-length tail, game = " + label +
                                    "; t decays geometrically, plot y on a log scale");
    } else {
        write_text(std::cout, t);
    }
    return 0;
}

// ----------------------------------------------------------------- eigen --

int cmd_eigen(const PointGameSpec& game, const std::string& label, int digits,
              const std::string& format) {
    const ChainSpec chain = compile_chain(game);
    const Spectrum numeric = eigenvalues_numeric(chain);
    const GeometricMixture mixture = mixture_coefficients(chain, numeric);
    const bool craps_chain = is_craps(chain);
    Spectrum radical;
    if (craps_chain) radical = eigenvalues_radical(chain);
    const StructureReport interlacing = verify_interlacing(chain);
    const StructureReport definite = verify_positive_definite(chain);
    const std::vector<Rational> brackets = interlacing_points(chain.transient);
    const std::size_t terms = numeric.eigenvalues.size();

    if (format == "json") {
        json doc;
        doc["game"] = label;
        doc["states"] = chain.states;
        doc["digits"] = digits;
        json cp = json::array();
        for (const Integer& c : numeric.charpoly.coeffs()) cp.push_back(c.str());
        doc["charpoly_ascending"] = cp;
        json ev = json::array(), co = json::array(), br = json::array();
        for (const Real& e : numeric.eigenvalues) ev.push_back(format_fixed(e, digits));
        for (const MixtureTerm& term : mixture.terms)
            co.push_back(format_fixed(term.coefficient, digits));
        for (const Rational& b : brackets) br.push_back(rational_str(b));
        doc["eigenvalues"] = ev;
        doc["coefficients"] = co;
        doc["brackets"] = br;
        if (craps_chain) {
            json rad = json::array();
            for (const Real& e : radical.eigenvalues) rad.push_back(format_fixed(e, digits));
            doc["eigenvalues_radical"] = rad;
        } else {
            doc["eigenvalues_radical"] = nullptr;
        }
        json checks = json::array();
        for (const auto& [name, ok] : interlacing.verdicts)
            checks.push_back({{"name", "interlacing." + name}, {"passed", ok}});
        for (const auto& [name, ok] : definite.verdicts)
            checks.push_back({{"name", "symmetric_part." + name}, {"passed", ok}});
        doc["checks"] = checks;
        std::cout << doc.dump(2) << '\n';
        return 0;
    }

    if (format == "csv") {
        Table t;
        t.header = {"kind", "label", "value"};
        for (int k = numeric.charpoly.degree(); k >= 0; --k)
            t.rows.push_back({"charpoly_coeff", "z^" + std::to_string(k),
                              numeric.charpoly[static_cast<std::size_t>(k)].str()});
        for (std::size_t i = 0; i < terms; ++i)
            t.rows.push_back({"eigenvalue", "e" + std::to_string(i + 1),
                              format_fixed(numeric.eigenvalues[i], digits)});
        if (craps_chain)
            for (std::size_t i = 0; i < terms; ++i)
                t.rows.push_back({"eigenvalue_radical", "e" + std::to_string(i + 1),
                                  format_fixed(radical.eigenvalues[i], digits)});
        for (std::size_t i = 0; i < terms; ++i)
            t.rows.push_back({"coefficient", "c" + std::to_string(i + 1),
                              format_fixed(mixture.terms[i].coefficient, digits)});
        for (const auto& [name, ok] : interlacing.verdicts)
            t.rows.push_back({"check", "interlacing." + name, ok ? "1" : "0"});
        for (const auto& [name, ok] : definite.verdicts)
            t.rows.push_back({"check", "symmetric_part." + name, ok ? "1" : "0"});
        write_csv(std::cout, t, "hand-length eigen, game = " + label);
        return 0;
    }

    std::cout << "game: " << label << " (" << chain.transient.rows()
              << " transient states)\n";
    std::cout << "characteristic polynomial: " << poly_str(numeric.charpoly, "z") << '\n';
    std::cout << "interlacing brackets: 1";
    for (std::size_t k = 1; k + 1 < brackets.size(); ++k)
        std::cout << " > e" << k << " > " << rational_str(brackets[k]);
    std::cout << " > e" << terms << " > 0\n";
    std::cout << "eigenvalues (numeric, certified):\n";
    for (std::size_t i = 0; i < terms; ++i)
        std::cout << "  e" << i + 1 << " = " << format_fixed(numeric.eigenvalues[i], digits)
                  << '\n';
    if (craps_chain) {
        std::cout << "eigenvalues (radical closed form):\n";
        for (std::size_t i = 0; i < terms; ++i)
            std::cout << "  e" << i + 1 << " = "
                      << format_fixed(radical.eigenvalues[i], digits) << '\n';
    } else {
        std::cout << "radical closed form: not available for this game "
                     "(certified numeric roots only)\n";
    }
    std::cout << "mixture coefficients (" << terms << "-term):\n";
    for (std::size_t i = 0; i < terms; ++i)
        std::cout << "  c" << i + 1 << " = "
                  << format_fixed(mixture.terms[i].coefficient, digits) << '\n';
    std::cout << "structure checks:\n";
    for (const auto& [name, ok] : interlacing.verdicts)
        std::cout << (ok ? "ok   " : "FAIL ") << "interlacing." << name << '\n';
    for (const auto& [name, ok] : definite.verdicts)
        std::cout << (ok ? "ok   " : "FAIL ") << "symmetric_part." << name << '\n';
    if (!interlacing.all_passed() || !definite.all_passed()) return 2;
    return 0;
}

// -------------------------------------------------------------- simulate --

int cmd_simulate(const PointGameSpec& game, const std::string& label, std::uint64_t trials,
                 std::uint64_t seed, const std::string& format) {
    const SimulationResult sim = estimate_tail(game, trials, seed);
    const ChainSpec chain = compile_chain(game);
    const int table_n = std::min(sim.max_length_observed, 50);
    const TailTable exact = tail_table(chain, std::max(table_n, 2));
    const Rational exact_mean = mean_length(chain);

    Table t;
    t.header = {"n", "count_ge", "empirical", "std_error", "exact", "z"};
    for (int n = 1; n <= table_n; ++n) {
        const TailEstimate est = sim.tail(n);
        const double ex = static_cast<double>(to_real(exact.at(n)));
        std::string z;
        if (est.std_error > 0)
            z = format_decimal(Real((est.fraction - ex) / est.std_error), 3);
        t.rows.push_back({std::to_string(n), std::to_string(sim.tail_count(n)),
                          format_decimal(Real(est.fraction), 9),
                          format_decimal(Real(est.std_error), 3),
                          format_decimal(exact.at(n), 9), z});
    }

    const std::string mean_emp = format_decimal(Real(sim.mean_length), 9);
    const std::string mean_ex = format_decimal(exact_mean, 9);
    if (format == "json") {
        json doc;
        doc["game"] = label;
        doc["trials"] = sim.trials;
        doc["seed"] = sim.seed;
        doc["streams"] = sim.streams;
        doc["max_length_observed"] = sim.max_length_observed;
        doc["mean_empirical"] = mean_emp;
        doc["mean_exact"] = mean_ex;
        doc["rows"] = rows_json(t);
        std::cout << doc.dump(2) << '\n';
    } else if (format == "csv") {
        std::ostringstream note;
        note << "hand-length simulate, game = " << label << ", trials = " << sim.trials
             << ", seed = " << sim.seed << ", streams = " << sim.streams
             << ", mean_empirical = " << mean_emp << ", mean_exact = " << mean_ex;
        write_csv(std::cout, t, note.str());
    } else {
        std::cout << "game: " << label << "\ntrials: " << sim.trials
                  << "\nseed: " << sim.seed << "\nstreams: " << sim.streams
                  << "\nmean length: " << mean_emp << " empirical, " << mean_ex
                  << " exact\nmax length observed: " << sim.max_length_observed << '\n';
        write_text(std::cout, t);
    }
    return 0;
}

// ---------------------------------------------------------------- verify --

class Verifier {
public:
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        all_ = all_ && ok;
        std::cout << (ok ? "ok   " : "FAIL ") << name;
        if (!detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << '\n';
    }
    template <typename Fn>
    void guarded(const std::string& name, Fn&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            check(name, false, e.what());
        }
    }
    bool all() const { return all_; }

private:
    bool all_ = true;
};

int cmd_verify(const PointGameSpec& game, const std::string& label) {
    std::cout << "verify: game = " << label << '\n';
    const ChainSpec chain = compile_chain(game);
    Verifier v;

    {
        bool ok = true;
        for (Eigen::Index i = 0; i < chain.transition.rows(); ++i)
            ok = ok && chain.transition.row(i).sum() == 1;
        v.check("chain_row_sums_exactly_one", ok);
    }

    v.guarded("method_equivalence", [&] {
        const TailTable rec = tail_table(chain, 300, TailMethod::recursion);
        const TailTable mat = tail_table(chain, 300, TailMethod::matrix_power);
        bool ok = true;
        for (int n = 1; n <= 300; ++n) ok = ok && rec.at(n) == mat.at(n);
        v.check("method_equivalence", ok, "recursion == matrix power, exact, n = 1..300");
    });

    v.guarded("merge_losslessness", [&] {
        const ChainSpec separate = compile_chain(game, PointMerging::separate);
        const TailTable merged = tail_table(chain, 100);
        const TailTable split = tail_table(separate, 100);
        bool ok = true;
        for (int n = 1; n <= 100; ++n) ok = ok && merged.at(n) == split.at(n);
        v.check("merge_losslessness", ok,
                "per-point chain (" + std::to_string(separate.transient.rows()) +
                    " states) matches merged, n = 1..100");
    });

    Spectrum spectrum;
    bool have_spectrum = false;
    v.guarded("spectrum_certified", [&] {
        spectrum = eigenvalues_numeric(chain);
        have_spectrum = true;
        v.check("spectrum_certified",
                true, std::to_string(spectrum.eigenvalues.size()) +
                          " simple roots in (0,1), residual < 1e-40, gaps > 1e-20");
    });

    const bool craps_chain = is_craps(chain);
    if (craps_chain) {
        v.guarded("radical_matches_numeric", [&] {
            eigenvalues_radical(chain);  // throws unless it matches the numeric route
            v.check("radical_matches_numeric", true, "agreement within 1e-30");
        });
    }

    GeometricMixture mixture;
    bool have_mixture = false;
    if (have_spectrum) {
        v.guarded("mixture_identities", [&] {
            mixture = mixture_coefficients(chain, spectrum);
            have_mixture = true;
            Real sum_c = 0, sum_ce = 0;
            for (const MixtureTerm& term : mixture.terms) {
                sum_c += term.coefficient;
                sum_ce += term.coefficient * term.rate;
            }
            v.check("mixture_identities",
                    abs(sum_c - 1) < kIdentityTol && abs(sum_ce - 1) < kIdentityTol,
                    "|sum(c) - 1| = " + format_decimal(abs(sum_c - 1), 2) +
                        ", |sum(c e) - 1| = " + format_decimal(abs(sum_ce - 1), 2));
            if (craps_chain)
                v.check("coefficient_formula_cross_check", true, "agreement within 1e-40");
        });
    } else {
        v.check("mixture_identities", false, "no certified spectrum");
    }

    if (have_mixture) {
        if (craps_chain || is_crapless(chain)) {
            bool ok = mixture.terms[0].coefficient > 0;
            for (std::size_t i = 1; i < mixture.terms.size(); ++i)
                ok = ok && mixture.terms[i].coefficient < 0;
            v.check("coefficient_sign_pattern", ok,
                    "c1 > 0, all later coefficients negative (" +
                        std::to_string(mixture.terms.size()) + "-term mixture)");
        }

        v.guarded("closed_form_matches_exact", [&] {
            const TailTable tails = tail_table(chain, 500);
            Real worst = 0;
            for (int n = 1; n <= 500; ++n) {
                const Real rel =
                    abs(tail_closed_form(mixture, n) / to_real(tails.at(n)) - 1);
                if (rel > worst) worst = rel;
            }
            v.check("closed_form_matches_exact", worst < Real("1e-12"),
                    "max relative error " + format_decimal(worst, 2) + ", n = 1..500");

            Real lead = mixture.terms[0].coefficient;
            bool strict = true;
            Real prev_ratio = 0;
            bool monotone = true;
            for (int n = 1; n <= 300; ++n) {
                const Real ratio = lead / to_real(tails.at(n));
                strict = strict && ratio > 1;
                if (n > 1) monotone = monotone && ratio < prev_ratio;
                prev_ratio = ratio;
                lead *= mixture.terms[0].rate;
            }
            v.check("leading_bound_strict", strict, "c1 e1^(n-1) > t(n), n = 1..300");
            v.check("leading_ratio_decreasing", monotone, "n = 1..300");
        });

        if (craps_chain) {
            v.guarded("ratio_thresholds", [&] {
                // The paper's sufficiency claims: the bound is within
                // 10^-m of t(n) for every n past the quoted cutoffs.
                const int cutoffs[4][2] = {{3, 19}, {6, 59}, {9, 104}, {12, 150}};
                const TailTable tails = tail_table(chain, 300);
                for (const auto& [m, n_ok] : cutoffs) {
                    const Real threshold = 1 + pow(Real(10), -m);
                    bool holds = true;
                    Real lead = mixture.terms[0].coefficient *
                                pow(mixture.terms[0].rate, n_ok - 1);
                    for (int n = n_ok; n <= 300; ++n) {
                        holds = holds && lead / to_real(tails.at(n)) < threshold;
                        lead *= mixture.terms[0].rate;
                    }
                    const int first = ratio_threshold(chain, mixture, m);
                    v.check("ratio_below_1e-" + std::to_string(m) + "_from_n_" +
                                std::to_string(n_ok),
                            holds, "first crossing at n = " + std::to_string(first));
                }
            });
        }
    }

    if (craps_chain || is_crapless(chain)) {
        v.guarded("headline_tail_t154", [&] {
            const std::string expect = craps_chain ? "1.78882426e-10" : "2.96360068e-11";
            const std::string got = format_decimal(tail_matrix_power(chain, 154), 9);
            v.check("headline_tail_t154", got == expect, "t(154) = " + got);
        });
    }

    v.guarded("mean_length_consistent", [&] {
        const Rational mean = mean_length(chain);
        const TailTable tails = tail_table(chain, 122);
        Rational partial = 0;
        for (int n = 1; n <= 120; ++n) partial += tails.at(n);
        // Two-step geometric remainder: rho2 = max row sum of Q^2 < 1.
        const RationalMatrix q2 = chain.transient * chain.transient;
        Rational rho2 = 0;
        for (Eigen::Index i = 0; i < q2.rows(); ++i)
            rho2 = std::max(rho2, Rational(q2.row(i).sum()));
        const Rational remainder_bound = (tails.at(121) + tails.at(122)) / (1 - rho2);
        v.check("mean_length_consistent",
                partial < mean && mean <= partial + remainder_bound,
                "E[L] = " + rational_str(mean) + " = " + format_decimal(mean, 9) +
                    ", bracketed by partial sums");
    });

    const StructureReport interlacing = verify_interlacing(chain);
    for (const auto& [name, ok] : interlacing.verdicts) v.check("interlacing." + name, ok);
    const StructureReport definite = verify_positive_definite(chain);
    for (const auto& [name, ok] : definite.verdicts) v.check("symmetric_part." + name, ok);

    if (craps_chain && have_spectrum) {
        v.guarded("eigenvector_residuals", [&] {
            eigenvector(chain, Real(1));
            for (const Real& e : spectrum.eigenvalues) eigenvector(chain, e);
            v.check("eigenvector_residuals", true,
                    "||P r - e r||_inf < 1e-30 for the unit and all transient eigenvalues");
        });
    }

    std::cout << (v.all() ? "verify: all checks passed" : "verify: FAILURES above") << '\n';
    return v.all() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and simulated hand-length statistics for craps-style point games"};
    app.require_subcommand(1);

    std::string game_name = "craps";
    std::string format = "text";
    int n_max = 154;
    int tail_digits = 9;
    int eigen_digits = 18;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0;

    const auto add_game = [&](CLI::App* cmd) {
        cmd->add_option("--game", game_name,
                        "built-in game (craps, crapless) or a game spec JSON path")
            ->capture_default_str();
    };
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "csv", "json"}))
            ->capture_default_str();
    };

    CLI::App* tail = app.add_subcommand("tail", "tabulate t(n) = P(L >= n) for n = 1..N");
    add_game(tail);
    add_format(tail);
    tail->add_option("--n", n_max, "largest hand length to tabulate")
        ->capture_default_str();
    tail->add_option("--digits", tail_digits, "significant digits")
        ->check(CLI::Range(1, 50))
        ->capture_default_str();

    CLI::App* eigen = app.add_subcommand(
        "eigen", "characteristic polynomial, certified eigenvalues, mixture coefficients");
    add_game(eigen);
    add_format(eigen);
    eigen->add_option("--digits", eigen_digits, "decimal places")
        ->check(CLI::Range(0, 50))
        ->capture_default_str();

    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo hands compared against exact tails");
    add_game(simulate);
    add_format(simulate);
    simulate->add_option("--trials", trials, "number of hands")->capture_default_str();
    simulate->add_option("--seed", seed, "RNG seed")->capture_default_str();

    CLI::App* verify =
        app.add_subcommand("verify", "run every invariant and cross-method check");
    add_game(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        const PointGameSpec game = resolve_game(game_name);
        if (tail->parsed()) return cmd_tail(game, game_name, n_max, tail_digits, format);
        if (eigen->parsed()) return cmd_eigen(game, game_name, eigen_digits, format);
        if (simulate->parsed()) return cmd_simulate(game, game_name, trials, seed, format);
        return cmd_verify(game, game_name);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
