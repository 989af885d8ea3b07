// Exact-rational hand-length distribution: tail probabilities
// t(n) = P(L >= n), the pmf, and the mean, by two independent algorithms.
#pragma once

#include "craps/game.hpp"

#include <vector>

namespace craps {

enum class TailMethod { recursion, matrix_power };

struct TailTable {
    ChainSpec chain;
    TailMethod method = TailMethod::matrix_power;
    std::vector<Rational> values;  // values[k] = t(k + 1), k = 0 .. max_n - 1

    int max_n() const { return static_cast<int>(values.size()); }
    const Rational& at(int n) const;  // t(n), 1 <= n <= max_n
};

// t(n) by conditioning on the first excursion from the come-out roll:
//   t(n) = (1 - M) t(n-1)
//        + sum_g M_g s_g^(n-2)
//        + sum_g M_g m_g sum_{l=2}^{n-1} s_g^(l-2) t(n-l),
// with t(1) = t(2) = 1, where group g has come-out mass M_g, make
// probability m_g, survive probability s_g, and M = sum_g M_g.  Each call
// fills its own memo table: computing t(1..N) costs O(N^2) rational
// operations.
Rational tail_recursion(const ChainSpec& chain, int n);

// t(n) = sum of the first row of Q^(n-1), by exact repeated squaring.
Rational tail_matrix_power(const ChainSpec& chain, int n);

// t(1..max_n) in one pass (row-vector iteration for the matrix-power
// method, shared memo for the recursion).
TailTable tail_table(const ChainSpec& chain, int max_n,
                     TailMethod method = TailMethod::matrix_power);

// P(L = n) = t(n) - t(n+1).
Rational pmf(const ChainSpec& chain, int n);

// E[L] = first-row sum of (I - Q)^(-1).  Throws std::domain_error when
// I - Q is singular (absorption unreachable, infinite mean).
Rational mean_length(const ChainSpec& chain);

}  // namespace craps
