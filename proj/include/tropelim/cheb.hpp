#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tropelim/eliminate.hpp"
#include "tropelim/polynomial.hpp"

namespace tropelim {

// Discrete linear Chebyshev (least maximum absolute deviation) fitting data:
// find theta in [lower, upper] minimizing max_i |sum_j X_ij theta_j - Y_i|.
struct ChebDataset {
    std::vector<std::vector<Rational>> X; // K x N
    std::vector<Rational> Y;              // K
    std::vector<Rational> lower;          // N
    std::vector<Rational> upper;          // N
};

void validate_dataset(const ChebDataset& d);

// Encodes the fitting problem as an exact max-plus problem with M = 2K
// monomials: row i <= K contributes coefficient Y_i with exponents -X_i;
// row i > K contributes coefficient -Y_{i-K} with exponents X_{i-K}. The
// box is carried over unchanged.
Problem to_tropical(const ChebDataset& d);

struct ChebResult {
    Rational error;
    std::vector<Rational> theta;
    std::vector<Interval> intervals;
};

// Decodes a solution of to_tropical(d) back to fitting terms and verifies it:
// the maximum absolute residual of theta, computed in ordinary rational
// arithmetic, must equal the reported error exactly, otherwise a logic error
// is thrown. The solution must be attained (finite data guarantees it).
ChebResult from_tropical(const Solution& sol, const ChebDataset& d);

// Largest |sum_j X_ij theta_j - Y_i| over the rows, in ordinary arithmetic.
Rational max_abs_residual(const ChebDataset& d, const std::vector<Rational>& theta);

// CSV rows hold N rational columns for X then one for Y; '#' starts a
// comment; blank lines are skipped. Entries are "p/q", integer, or decimal
// strings (decimals converted exactly). Bounds arrive separately.
ChebDataset parse_csv(std::istream& in, std::vector<Rational> lower, std::vector<Rational> upper);
ChebDataset load_csv(const std::string& path, std::vector<Rational> lower,
                     std::vector<Rational> upper);

} // namespace tropelim
