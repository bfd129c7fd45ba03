// tropelim: exact minimization of box-constrained tropical Puiseux
// polynomials by variable elimination. Subcommands: solve, cheb, oracle.
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropelim/cheb.hpp"
#include "tropelim/eliminate.hpp"
#include "tropelim/errors.hpp"
#include "tropelim/oracle.hpp"
#include "tropelim/problem_io.hpp"

namespace {

using tropelim::Rational;
using tropelim::Semifield;
using tropelim::Value;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNotAttained = 2;
constexpr int kExitCapacity = 3;

struct OutputOptions {
    bool pretty = false;
    bool as_float = false;
    bool stats = false;
};

std::string render(const Value& v, const Semifield& sf, bool as_float) {
    if (!as_float) return tropelim::value_to_string(v, sf);
    if (v.is_zero()) return tropelim::value_to_string(v, sf);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v.as_double());
    return buf;
}

std::string render(const Rational& q, bool as_float) {
    if (!as_float) return tropelim::to_string(q);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", q.get_d());
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tropelim::ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(tropelim::parse_rational(cell));
    return out;
}

std::size_t default_cap() {
    if (const char* env = std::getenv("TROPELIM_MAX_MONOMIALS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) {
            throw tropelim::ValidationError(
                "TROPELIM_MAX_MONOMIALS: expected a positive integer, got \"" +
                std::string(env) + "\"");
        }
        return static_cast<std::size_t>(v);
    }
    return tropelim::SolverOptions{}.max_monomials;
}

void add_solver_flags(CLI::App* cmd, tropelim::SolverOptions& opts, OutputOptions& out) {
    std::map<std::string, tropelim::PruneLevel> prune_map{
        {"none", tropelim::PruneLevel::None},
        {"basic", tropelim::PruneLevel::Basic},
        {"dominance", tropelim::PruneLevel::Dominance}};
    std::map<std::string, tropelim::PickStrategy> pick_map{
        {"lower", tropelim::PickStrategy::Lower},
        {"midpoint", tropelim::PickStrategy::Midpoint},
        {"upper", tropelim::PickStrategy::Upper}};
    cmd->add_option("--prune", opts.prune, "Prune level (none, basic, dominance)")
        ->transform(CLI::CheckedTransformer(prune_map, CLI::ignore_case));
    cmd->add_option("--pick", opts.pick, "Point pick strategy (lower, midpoint, upper)")
        ->transform(CLI::CheckedTransformer(pick_map, CLI::ignore_case));
    cmd->add_option("--max-monomials", opts.max_monomials, "Stage size cap");
    cmd->add_option("--threads", opts.threads, "Worker threads (0 = all cores)");
    cmd->add_flag("--stats", out.stats, "Emit per-stage counts, prune report, timings");
    cmd->add_flag("--pretty", out.pretty, "Human-readable table instead of JSON");
    cmd->add_flag("--float", out.as_float, "Print values as 17-significant-digit floats");
}

ordered_json stats_json(const std::vector<tropelim::StageStats>& stats) {
    ordered_json arr = ordered_json::array();
    for (const auto& st : stats) {
        ordered_json s;
        s["level"] = st.level;
        s["input"] = st.input_count;
        s["raw"] = st.raw_count;
        s["nonzero"] = st.nonzero_count;
        s["kept"] = st.after_count;
        s["merged"] = st.prune.merged;
        s["dominated"] = st.prune.dominated;
        s["elapsed_ms"] = st.elapsed_ms;
        arr.push_back(std::move(s));
    }
    return arr;
}

ordered_json intervals_json(const std::vector<tropelim::Interval>& intervals,
                            const Semifield& sf, bool as_float) {
    ordered_json arr = ordered_json::array();
    for (const auto& iv : intervals) {
        arr.push_back(ordered_json{{"lower", render(iv.lower, sf, as_float)},
                                   {"upper", render(iv.upper, sf, as_float)}});
    }
    return arr;
}

void emit(const ordered_json& doc, bool pretty_json_indent = true) {
    std::cout << doc.dump(pretty_json_indent ? 2 : -1) << "\n";
}

int emit_solution(const tropelim::SolveResult& result, const Semifield& sf,
                  const OutputOptions& out) {
    const tropelim::Solution& sol = result.solution;
    const bool attained = sol.status == tropelim::SolveStatus::Attained;

    if (out.pretty) {
        std::cout << "status    " << (attained ? "attained" : "infimum-not-attained") << "\n";
        std::cout << "minimum   " << render(sol.mu, sf, out.as_float) << "\n";
        for (std::size_t j = 0; j < sol.point.size(); ++j) {
            std::cout << "x_" << j + 1 << "       " << render(sol.point[j], sf, out.as_float)
                      << "  in  [" << render(sol.intervals[j].lower, sf, out.as_float) << ", "
                      << render(sol.intervals[j].upper, sf, out.as_float) << "]\n";
        }
        if (out.stats) {
            std::cout << "stage  input  raw  nonzero  kept  merged  dominated  ms\n";
            for (const auto& st : result.trace.stats) {
                std::cout << st.level << "  " << st.input_count << "  " << st.raw_count << "  "
                          << st.nonzero_count << "  " << st.after_count << "  " << st.prune.merged
                          << "  " << st.prune.dominated << "  " << st.elapsed_ms << "\n";
            }
        }
    } else {
        ordered_json doc;
        doc["status"] = attained ? "attained" : "infimum-not-attained";
        doc["mu"] = render(sol.mu, sf, out.as_float);
        if (attained) {
            ordered_json point = ordered_json::array();
            for (const Value& v : sol.point) point.push_back(render(v, sf, out.as_float));
            doc["point"] = std::move(point);
            doc["intervals"] = intervals_json(sol.intervals, sf, out.as_float);
        }
        if (out.stats) doc["stats"] = stats_json(result.trace.stats);
        emit(doc);
    }
    return attained ? kExitOk : kExitNotAttained;
}

int cmd_solve(const std::string& file, const tropelim::SolverOptions& opts,
              const OutputOptions& out) {
    tropelim::Problem prob = tropelim::parse_problem(read_file(file));
    tropelim::SolveResult result = tropelim::solve(prob, opts);
    return emit_solution(result, prob.polynomial.semifield, out);
}

int cmd_cheb(const std::string& csv, const std::string& lower, const std::string& upper,
             const tropelim::SolverOptions& opts, const OutputOptions& out) {
    tropelim::ChebDataset data =
        tropelim::load_csv(csv, parse_rational_list(lower), parse_rational_list(upper));
    tropelim::Problem prob = tropelim::to_tropical(data);
    tropelim::SolveResult result = tropelim::solve(prob, opts);
    tropelim::ChebResult fit = tropelim::from_tropical(result.solution, data);
    const Semifield& sf = prob.polynomial.semifield;

    if (out.pretty) {
        std::cout << "error     " << render(fit.error, out.as_float) << "\n";
        for (std::size_t j = 0; j < fit.theta.size(); ++j) {
            std::cout << "theta_" << j + 1 << "   " << render(fit.theta[j], out.as_float)
                      << "  in  [" << render(fit.intervals[j].lower, sf, out.as_float) << ", "
                      << render(fit.intervals[j].upper, sf, out.as_float) << "]\n";
        }
        std::cout << "residual  " << render(tropelim::max_abs_residual(data, fit.theta),
                                            out.as_float)
                  << " (certified)\n";
    } else {
        ordered_json doc;
        doc["status"] = "attained";
        doc["error"] = render(fit.error, out.as_float);
        ordered_json theta = ordered_json::array();
        for (const Rational& t : fit.theta) theta.push_back(render(t, out.as_float));
        doc["theta"] = std::move(theta);
        doc["intervals"] = intervals_json(fit.intervals, sf, out.as_float);
        doc["residual"] = render(tropelim::max_abs_residual(data, fit.theta), out.as_float);
        doc["certified"] = true;
        if (out.stats) doc["stats"] = stats_json(result.trace.stats);
        emit(doc);
    }
    return kExitOk;
}

int cmd_oracle(const std::string& file, const std::string& kind, int resolution, bool compare,
               const tropelim::SolverOptions& opts, const OutputOptions& out) {
    tropelim::Problem prob = tropelim::parse_problem(read_file(file));
    const Semifield& sf = prob.polynomial.semifield;

    Value value;
    if (kind == "grid") {
        value = tropelim::grid_oracle(prob, resolution);
    } else {
        value = tropelim::vertex_oracle(prob);
    }

    ordered_json doc;
    doc["kind"] = kind;
    doc["value"] = render(value, sf, out.as_float);
    std::string verdict;
    if (compare) {
        tropelim::SolveResult result = tropelim::solve(prob, opts);
        doc["mu"] = render(result.solution.mu, sf, out.as_float);
        verdict = sf.eq(value, result.solution.mu) ? "EQUAL" : "UPPER-BOUND";
        doc["verdict"] = verdict;
    }
    if (out.pretty) {
        std::cout << kind << "    " << doc["value"].get<std::string>() << "\n";
        if (compare) {
            std::cout << "mu      " << doc["mu"].get<std::string>() << "\n"
                      << "verdict " << verdict << "\n";
        }
    } else {
        emit(doc);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for box-constrained tropical Puiseux polynomial minimization"};
    app.require_subcommand(1);

    tropelim::SolverOptions opts;
    OutputOptions out;
    try {
        opts.max_monomials = default_cap();
    } catch (const tropelim::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    std::string solve_file;
    CLI::App* solve = app.add_subcommand("solve", "Minimize a problem file");
    solve->add_option("file", solve_file, "Problem JSON file")->required();
    add_solver_flags(solve, opts, out);

    std::string cheb_csv, cheb_lower, cheb_upper;
    CLI::App* cheb = app.add_subcommand("cheb", "Chebyshev (minimax) linear fit from CSV");
    cheb->add_option("csv", cheb_csv, "CSV file: N rational X columns then Y")->required();
    cheb->add_option("--lower", cheb_lower, "Comma-separated parameter lower bounds")->required();
    cheb->add_option("--upper", cheb_upper, "Comma-separated parameter upper bounds")->required();
    add_solver_flags(cheb, opts, out);

    std::string oracle_file, oracle_kind = "vertex";
    int resolution = 5;
    bool compare = false;
    CLI::App* oracle = app.add_subcommand("oracle", "Independent brute-force minimum");
    oracle->add_option("file", oracle_file, "Problem JSON file")->required();
    oracle->add_option("--kind", oracle_kind, "Oracle kind")
        ->check(CLI::IsMember({"grid", "vertex"}));
    oracle->add_option("--resolution", resolution, "Grid points per axis");
    oracle->add_flag("--compare", compare, "Also solve and report a verdict");
    add_solver_flags(oracle, opts, out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_file, opts, out);
        if (cheb->parsed()) return cmd_cheb(cheb_csv, cheb_lower, cheb_upper, opts, out);
        return cmd_oracle(oracle_file, oracle_kind, resolution, compare, opts, out);
    } catch (const tropelim::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const tropelim::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const tropelim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitValidation;
    }
}
