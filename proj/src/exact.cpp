#include "craps/exact.hpp"

#include <stdexcept>

namespace craps {

namespace {

void check_n(int n) {
    if (n < 1) throw std::invalid_argument("hand length index n must be >= 1");
}

// t(n) is an integer multiple of d^-(n-1), d = lcm of the one-roll
// probability denominators (36 for standard dice).  Both table builders
// run the integer-scaled recurrences — no per-operation gcd — and reduce
// to a Rational once per emitted entry.
Integer common_denominator(const RationalMatrix& q) {
    Integer d = 1;
    for (Eigen::Index i = 0; i < q.rows(); ++i)
        for (Eigen::Index j = 0; j < q.cols(); ++j)
            d = mp::lcm(d, denominator(q(i, j)));
    return d;
}

Integer scaled(const Rational& x, const Integer& d) {
    const Rational y = x * d;
    return numerator(y);  // exact: denominator(x) divides d
}

// t(1..max_n) via the come-out excursion recursion.  Survive powers
// s_g^k are extended incrementally; the inner convolution is the paper
// sum taken literally, so this route shares no linear algebra with the
// matrix-power method.
std::vector<Rational> recursion_table(const ChainSpec& chain, int max_n) {
    const Integer d = common_denominator(chain.transient);
    const std::size_t g_count = chain.groups.size();
    Rational total_mass = 0;
    for (const PointGroup& g : chain.groups) total_mass += g.mass;
    const Integer stay = scaled(1 - total_mass, d);
    std::vector<Integer> mass(g_count), make(g_count), survive(g_count);
    for (std::size_t g = 0; g < g_count; ++g) {
        mass[g] = scaled(chain.groups[g].mass, d);
        make[g] = scaled(chain.groups[g].make_prob, d);
        survive[g] = scaled(chain.groups[g].survive_prob, d);
    }

    // T(n) = t(n) d^(n-1); powers[g][k] = survive_g^k.
    std::vector<Integer> big;
    big.reserve(static_cast<std::size_t>(max_n));
    std::vector<std::vector<Integer>> powers(g_count, {Integer(1)});
    for (int n = 1; n <= max_n; ++n) {
        if (n == 1) { big.emplace_back(1); continue; }
        if (n == 2) { big.push_back(d); continue; }
        for (std::size_t g = 0; g < g_count; ++g)
            powers[g].push_back(powers[g].back() * survive[g]);
        Integer value = stay * big[static_cast<std::size_t>(n - 2)];
        for (std::size_t g = 0; g < g_count; ++g) {
            value += mass[g] * powers[g][static_cast<std::size_t>(n - 2)];
            Integer conv = 0;
            for (int l = 2; l <= n - 1; ++l)
                conv += powers[g][static_cast<std::size_t>(l - 2)] *
                        big[static_cast<std::size_t>(n - l - 1)];
            value += mass[g] * make[g] * conv;
        }
        big.push_back(std::move(value));
    }

    std::vector<Rational> t;
    t.reserve(big.size());
    Integer denom = 1;
    for (std::size_t k = 0; k < big.size(); ++k) {
        t.emplace_back(big[k], denom);
        if (k + 1 < big.size()) denom *= d;
    }
    return t;
}

std::vector<Rational> matrix_power_table(const ChainSpec& chain, int max_n) {
    const Integer d = common_denominator(chain.transient);
    MatrixX<Integer> qd(chain.transient.rows(), chain.transient.cols());
    for (Eigen::Index i = 0; i < qd.rows(); ++i)
        for (Eigen::Index j = 0; j < qd.cols(); ++j) qd(i, j) = scaled(chain.transient(i, j), d);

    std::vector<Rational> t;
    t.reserve(static_cast<std::size_t>(max_n));
    VectorX<Integer> row = VectorX<Integer>::Zero(qd.rows());
    row(0) = 1;  // hands start on the come-out
    Integer denom = 1;
    for (int n = 1; n <= max_n; ++n) {
        t.emplace_back(row.sum(), denom);
        if (n < max_n) {
            row = qd.transpose() * row;
            denom *= d;
        }
    }
    return t;
}

}  // namespace

const Rational& TailTable::at(int n) const {
    if (n < 1 || n > max_n())
        throw std::out_of_range("tail table index outside 1..max_n");
    return values[static_cast<std::size_t>(n - 1)];
}

Rational tail_recursion(const ChainSpec& chain, int n) {
    check_n(n);
    return recursion_table(chain, n).back();
}

Rational tail_matrix_power(const ChainSpec& chain, int n) {
    check_n(n);
    // Repeated squaring: one matrix power instead of n-1 vector steps.
    RationalMatrix acc = RationalMatrix::Identity(chain.transient.rows(), chain.transient.cols());
    RationalMatrix base = chain.transient;
    for (unsigned e = static_cast<unsigned>(n - 1); e != 0; e >>= 1) {
        if (e & 1u) acc = acc * base;
        if (e > 1u) base = base * base;
    }
    return acc.row(0).sum();
}

TailTable tail_table(const ChainSpec& chain, int max_n, TailMethod method) {
    check_n(max_n);
    TailTable table;
    table.chain = chain;
    table.method = method;
    table.values = (method == TailMethod::recursion) ? recursion_table(chain, max_n)
                                                     : matrix_power_table(chain, max_n);
    return table;
}

Rational pmf(const ChainSpec& chain, int n) {
    check_n(n);
    const TailTable t = tail_table(chain, n + 1);
    return t.at(n) - t.at(n + 1);
}

Rational mean_length(const ChainSpec& chain) {
    const Eigen::Index k = chain.transient.rows();
    const RationalMatrix fundamental = RationalMatrix::Identity(k, k) - chain.transient;
    Eigen::FullPivLU<RationalMatrix> lu(fundamental);
    if (lu.determinant() == 0)
        throw std::domain_error("I - Q is singular: the hand never ends and E[L] is infinite");
    RationalVector start = RationalVector::Zero(k);
    start(0) = 1;
    // E[L] = e_0^T (I - Q)^(-1) 1: solve the transposed system once.
    const RationalVector visits = lu.transpose().solve(start);
    return visits.sum();
}

}  // namespace craps
