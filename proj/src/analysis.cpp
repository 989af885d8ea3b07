#include "craps/analysis.hpp"

#include <sstream>
#include <stdexcept>

namespace craps {

namespace {

void add(StructureReport& r, std::string name, bool ok) {
    r.verdicts.emplace_back(std::move(name), ok);
}

std::string rational_str(const Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// Exact signs of p at descending points; empty result if any sign is zero
// or fails to alternate (the note explains which point broke).
std::vector<int> alternating_signs(const Polynomial<Integer>& p,
                                   const std::vector<Rational>& points,
                                   StructureReport& report) {
    std::vector<int> signs;
    for (const Rational& pt : points) {
        const Rational v = p(pt);
        const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) {
            report.notes.push_back("charpoly vanishes at bracket point " + rational_str(pt));
            return {};
        }
        if (!signs.empty() && signs.back() == s) {
            report.notes.push_back("no sign change across bracket ending at " +
                                   rational_str(pt));
            return {};
        }
        signs.push_back(s);
    }
    return signs;
}

StructureReport verify_bracketed_spectrum(const RationalMatrix& m, bool arrowhead_required,
                                          const std::string& arrowhead_name) {
    StructureReport report;
    add(report, arrowhead_name, is_arrowhead(m));
    if (arrowhead_required && !report.verdicts.back().second) {
        report.notes.push_back("matrix is not arrowhead; remaining checks skipped");
        return report;
    }

    Polynomial<Integer> cp;
    try {
        cp = primitive_integer_poly(is_arrowhead(m) ? arrowhead_charpoly(m)
                                                    : leverrier_charpoly(m));
    } catch (const std::exception& e) {
        report.notes.emplace_back(e.what());
        add(report, "brackets_strictly_decreasing", false);
        return report;
    }

    bool brackets_ok = true;
    try {
        report.bracket_points = interlacing_points(m);
    } catch (const std::exception& e) {
        report.notes.emplace_back(e.what());
        brackets_ok = false;
    }
    add(report, "brackets_strictly_decreasing", brackets_ok);
    if (!brackets_ok) return report;

    report.sign_sequence = alternating_signs(cp, report.bracket_points, report);
    const bool signs_ok = !report.sign_sequence.empty();
    add(report, "sign_alternation", signs_ok);
    if (!signs_ok) return report;

    bool certified = true;
    try {
        report.eigenvalues = certified_roots(cp, report.bracket_points);
    } catch (const std::exception& e) {
        report.notes.emplace_back(e.what());
        certified = false;
    }
    add(report, "roots_certified", certified);
    if (!certified) return report;

    for (std::size_t k = 0; k < report.eigenvalues.size(); ++k) {
        const Real lo = Real(report.bracket_points[k + 1]);
        const Real hi = Real(report.bracket_points[k]);
        const Real& e = report.eigenvalues[k];
        add(report,
            "e" + std::to_string(k + 1) + "_in_(" + rational_str(report.bracket_points[k + 1]) +
                "," + rational_str(report.bracket_points[k]) + ")",
            lo < e && e < hi);
    }
    return report;
}

}  // namespace

bool StructureReport::all_passed() const {
    for (const auto& [name, ok] : verdicts)
        if (!ok) return false;
    return !verdicts.empty();
}

bool StructureReport::passed(const std::string& name) const {
    for (const auto& [n, ok] : verdicts)
        if (n == name) return ok;
    throw std::out_of_range("no verdict named " + name);
}

std::string StructureReport::summary() const {
    std::ostringstream os;
    for (const auto& [name, ok] : verdicts)
        os << (ok ? "ok   " : "FAIL ") << name << '\n';
    return os.str();
}

StructureReport verify_interlacing(const RationalMatrix& q) {
    StructureReport report = verify_bracketed_spectrum(q, false, "arrowhead_structure");
    if (!report.eigenvalues.empty()) {
        bool positive = true, below_one = true;
        for (const Real& e : report.eigenvalues) {
            positive = positive && e > 0;
            below_one = below_one && e < 1;
        }
        add(report, "eigenvalues_positive", positive);
        add(report, "spectral_radius_below_one", below_one);
    }
    return report;
}

StructureReport verify_interlacing(const ChainSpec& chain) {
    return verify_interlacing(chain.transient);
}

StructureReport verify_positive_definite(const RationalMatrix& q) {
    if (q.rows() != q.cols() || q.rows() < 1)
        throw std::invalid_argument("positive definiteness needs a nonempty square matrix");
    const RationalMatrix sym = (q + q.transpose()) / Rational(2);
    StructureReport report = verify_bracketed_spectrum(sym, true, "symmetric_part_arrowhead");
    if (!report.eigenvalues.empty()) {
        const bool positive = report.eigenvalues.back() > 0;
        add(report, "smallest_eigenvalue_positive", positive);
        add(report, "positive_definite", report.all_passed());
    }
    return report;
}

StructureReport verify_positive_definite(const ChainSpec& chain) {
    return verify_positive_definite(chain.transient);
}

}  // namespace craps
