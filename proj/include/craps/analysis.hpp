// Certified verification of the structural claims about the transient
// block: the survive probabilities interlace the spectrum, and the
// symmetric part is positive definite.  Verifiers never throw on a failed
// claim; every check lands in the report as a named verdict.
#pragma once

#include "craps/spectral.hpp"

#include <string>
#include <utility>
#include <vector>

namespace craps {

struct StructureReport {
    // Named checks in evaluation order; false means the claim failed or
    // could not be certified.
    std::vector<std::pair<std::string, bool>> verdicts;
    std::vector<std::string> notes;        // failure detail, if any
    std::vector<Rational> bracket_points;  // descending, including 1 and 0
    std::vector<int> sign_sequence;        // exact charpoly signs at the brackets
    std::vector<Real> eigenvalues;         // certified roots, descending

    bool all_passed() const;
    bool passed(const std::string& name) const;  // throws if no such verdict
    std::string summary() const;                 // one "ok/FAIL <name>" line per verdict
};

// Claims: Q is arrowhead; det(zI - Q) alternates in sign exactly at
// [1, d_1, ..., d_m, 0]; each certified eigenvalue lies strictly inside
// its bracket; all eigenvalues are positive and below 1.
StructureReport verify_interlacing(const RationalMatrix& q);
StructureReport verify_interlacing(const ChainSpec& chain);

// Claims: A = (Q + Q^T)/2 interlaces the same diagonal brackets and all
// its eigenvalues are positive, hence x^T A x > 0 for x != 0 (the same
// certified root-finder as the spectral engine does the work).
StructureReport verify_positive_definite(const RationalMatrix& q);
StructureReport verify_positive_definite(const ChainSpec& chain);

}  // namespace craps
