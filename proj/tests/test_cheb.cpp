#include <doctest.h>

#include <sstream>

#include "tropelim/cheb.hpp"
#include "tropelim/oracle.hpp"

using namespace tropelim;

namespace {

std::vector<Rational> rats(std::initializer_list<const char*> xs) {
    std::vector<Rational> out;
    for (const char* x : xs) out.push_back(parse_rational(x));
    return out;
}

} // namespace

TEST_CASE("encoding of a two-point one-parameter dataset") {
    ChebDataset d;
    d.X = {{Rational(1)}, {Rational(1)}};
    d.Y = {Rational(0), Rational(2)};
    d.lower = {Rational(-10)};
    d.upper = {Rational(10)};

    Problem prob = to_tropical(d);
    const Semifield& sf = prob.polynomial.semifield;
    REQUIRE(prob.polynomial.monomials.size() == 4);
    // {0 x^-1, 2 x^-1, 0 x^1, -2 x^1}
    CHECK(prob.polynomial.monomials[0].coeff == sf.finite(Rational(0)));
    CHECK(prob.polynomial.monomials[0].exponents[0] == Rational(-1));
    CHECK(prob.polynomial.monomials[1].coeff == sf.finite(Rational(2)));
    CHECK(prob.polynomial.monomials[3].coeff == sf.finite(Rational(-2)));
    CHECK(prob.polynomial.monomials[3].exponents[0] == Rational(1));

    SolveResult result = solve(prob);
    ChebResult fit = from_tropical(result.solution, d);
    CHECK(fit.error == Rational(1)); // equidistant from 0 and 2
    CHECK(fit.theta[0] == Rational(1));
    CHECK(vertex_oracle(prob) == sf.finite(Rational(1)));
}

TEST_CASE("constant zero-residual dataset") {
    ChebDataset d;
    d.X = {{Rational(0)}};
    d.Y = {Rational(0)};
    d.lower = {Rational(-1)};
    d.upper = {Rational(1)};
    Problem prob = to_tropical(d);
    SolveResult result = solve(prob);
    ChebResult fit = from_tropical(result.solution, d);
    CHECK(fit.error == Rational(0));
}

TEST_CASE("negating Y mirrors theta, error unchanged") {
    ChebDataset d;
    d.X = {{Rational(2), Rational(-1)}, {Rational(1), Rational(3)}, {Rational(-1), Rational(1)}};
    d.Y = {Rational(1), Rational(-2), Rational(1, 2)};
    d.lower = rats({"-3", "-3"});
    d.upper = rats({"3", "3"});

    ChebDataset neg = d;
    for (auto& y : neg.Y) y = -y;

    ChebResult a = from_tropical(solve(to_tropical(d)).solution, d);
    // The mirrored dataset has the mirrored optimum; pick=lower on d maps to
    // pick=upper on neg, so compare errors and certify rather than points.
    SolverOptions upper;
    upper.pick = PickStrategy::Upper;
    ChebResult b = from_tropical(solve(to_tropical(neg), upper).solution, neg);
    CHECK(a.error == b.error);
    std::vector<Rational> mirrored;
    for (const auto& t : b.theta) mirrored.push_back(Rational(-t));
    CHECK(max_abs_residual(d, mirrored) == a.error);
}

TEST_CASE("csv parsing") {
    std::istringstream in("# comment line\n"
                          "1, 2, 0.5   # trailing comment\n"
                          "\n"
                          "-1/2, 1, 3\n");
    ChebDataset d = parse_csv(in, rats({"-1", "-1"}), rats({"1", "1"}));
    REQUIRE(d.X.size() == 2);
    CHECK(d.X[0] == rats({"1", "2"}));
    CHECK(d.Y[0] == Rational(1, 2));
    CHECK(d.X[1][0] == Rational(-1, 2));
    CHECK(d.Y[1] == Rational(3));
}

TEST_CASE("csv validation errors") {
    std::istringstream ragged("1, 2, 3\n1, 2\n");
    CHECK_THROWS_AS(parse_csv(ragged, rats({"0", "0"}), rats({"1", "1"})), ValidationError);

    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_csv(empty, rats({"0"}), rats({"1"})), ValidationError);

    std::istringstream ok("1, 2\n");
    CHECK_THROWS_AS(parse_csv(ok, rats({"1"}), rats({"0"})), ValidationError); // lower > upper
}

TEST_CASE("dataset file reproduces the known three-parameter fit") {
    ChebDataset d = load_csv(std::string(TROPELIM_DATA_DIR) + "/example1.csv",
                             rats({"0", "0", "0"}), rats({"1", "1", "1"}));
    REQUIRE(d.X.size() == 4);
    ChebResult fit = from_tropical(solve(to_tropical(d)).solution, d);
    CHECK(fit.error == Rational(3, 7));
    CHECK(fit.theta == rats({"0", "1/7", "1"}));
}

TEST_CASE("residual certificate rejects a tampered solution") {
    ChebDataset d;
    d.X = {{Rational(1)}, {Rational(1)}};
    d.Y = {Rational(0), Rational(2)};
    d.lower = {Rational(-10)};
    d.upper = {Rational(10)};
    Solution sol = solve(to_tropical(d)).solution;
    sol.point[0] = Value(Rational(5)); // residual becomes 5, not mu = 1
    CHECK_THROWS_AS(from_tropical(sol, d), std::logic_error);
}
