#include "tropelim/cheb.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tropelim/errors.hpp"

namespace tropelim {

void validate_dataset(const ChebDataset& d) {
    const std::size_t k = d.X.size();
    if (k == 0) throw ValidationError("dataset.X: at least one observation required");
    const std::size_t n = d.X[0].size();
    if (n == 0) throw ValidationError("dataset.X: at least one parameter column required");
    for (std::size_t i = 0; i < k; ++i) {
        if (d.X[i].size() != n) {
            throw ValidationError("dataset.X[" + std::to_string(i) + "]: expected " +
                                  std::to_string(n) + " columns, got " +
                                  std::to_string(d.X[i].size()));
        }
    }
    if (d.Y.size() != k) {
        throw ValidationError("dataset.Y: expected " + std::to_string(k) + " entries, got " +
                              std::to_string(d.Y.size()));
    }
    if (d.lower.size() != n || d.upper.size() != n) {
        throw ValidationError("dataset.bounds: expected " + std::to_string(n) +
                              " lower and upper entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (d.lower[j] > d.upper[j]) {
            throw ValidationError("dataset.bounds[" + std::to_string(j) +
                                  "]: lower exceeds upper");
        }
    }
}

Problem to_tropical(const ChebDataset& d) {
    validate_dataset(d);
    const std::size_t k = d.X.size();
    const std::size_t n = d.X[0].size();
    Semifield sf(SemifieldTag::MaxPlus, Mode::Exact);

    Polynomial poly{sf, n, {}};
    poly.monomials.reserve(2 * k);
    for (std::size_t i = 0; i < 2 * k; ++i) {
        const std::size_t row = i < k ? i : i - k;
        Monomial m;
        m.coeff = sf.finite(i < k ? d.Y[row] : Rational(-d.Y[row]));
        m.exponents.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            m.exponents.push_back(i < k ? Rational(-d.X[row][j]) : d.X[row][j]);
        }
        poly.monomials.push_back(std::move(m));
    }

    Box box;
    for (std::size_t j = 0; j < n; ++j) {
        box.lower.push_back(sf.finite(d.lower[j]));
        box.upper.push_back(sf.finite(d.upper[j]));
    }
    return Problem{std::move(poly), std::move(box)};
}

Rational max_abs_residual(const ChebDataset& d, const std::vector<Rational>& theta) {
    Rational worst(0);
    for (std::size_t i = 0; i < d.X.size(); ++i) {
        Rational r = -d.Y[i];
        for (std::size_t j = 0; j < theta.size(); ++j) r += d.X[i][j] * theta[j];
        if (r < 0) r = -r;
        if (r > worst) worst = r;
    }
    return worst;
}

ChebResult from_tropical(const Solution& sol, const ChebDataset& d) {
    if (sol.status != SolveStatus::Attained) {
        throw std::logic_error("from_tropical: fitting minimum must be attained");
    }
    ChebResult res;
    res.error = sol.mu.rat();
    res.theta.reserve(sol.point.size());
    for (const Value& v : sol.point) res.theta.push_back(v.rat());
    res.intervals = sol.intervals;

    // End-to-end certificate in ordinary rational arithmetic.
    if (max_abs_residual(d, res.theta) != res.error) {
        throw std::logic_error("from_tropical: residual certificate failed (max residual " +
                               to_string(max_abs_residual(d, res.theta)) + " vs error " +
                               to_string(res.error) + ")");
    }
    return res;
}

ChebDataset parse_csv(std::istream& in, std::vector<Rational> lower, std::vector<Rational> upper) {
    ChebDataset d;
    d.lower = std::move(lower);
    d.upper = std::move(upper);

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Rational> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            const auto first = cell.find_first_not_of(" \t\r");
            if (first == std::string::npos) {
                throw ValidationError("csv line " + std::to_string(lineno) + ": empty cell");
            }
            const auto last = cell.find_last_not_of(" \t\r");
            cells.push_back(parse_rational(cell.substr(first, last - first + 1)));
        }
        if (cells.empty()) continue;
        if (cells.size() < 2) {
            throw ValidationError("csv line " + std::to_string(lineno) +
                                  ": need at least one X column and one Y column");
        }
        d.Y.push_back(std::move(cells.back()));
        cells.pop_back();
        d.X.push_back(std::move(cells));
    }
    validate_dataset(d);
    return d;
}

ChebDataset load_csv(const std::string& path, std::vector<Rational> lower,
                     std::vector<Rational> upper) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open csv file: " + path);
    return parse_csv(in, std::move(lower), std::move(upper));
}

} // namespace tropelim
