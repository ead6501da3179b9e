// qent -- seeded entropic-inequality reports for qudit states.
//
// Subcommands: sample | check | sweep | minimize | tomogram. Every command
// is deterministic for a fixed (command, flags, seed) triple; the only
// non-reproducible quantity (wall time) goes to stderr, never into the
// report stream.

#include <cstdint>
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qent/density.hpp"
#include "qent/inequalities.hpp"
#include "qent/json_io.hpp"
#include "qent/optimizer.hpp"
#include "qent/rng.hpp"
#include "qent/sampling.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitInputError = 2;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        qent::write_text_file(out_path, content);
}

qent::DensityMatrix load_state(const std::string& path) {
    return qent::validate_density(qent::matrix_from_json_text(qent::read_text_file(path)));
}

// Resolve the working dimension and shape list from the input dimension and
// an optional explicit shape. Without --shape the state is padded to the
// smallest dimension with a two-factor split and every ordered factorization
// is checked.
struct ShapePlan {
    int padded_dim;
    std::vector<qent::BipartitionShape> shapes;
};

ShapePlan plan_shapes(int dim, const std::vector<int>& shape_flag) {
    ShapePlan plan{0, {}};
    if (!shape_flag.empty()) {
        const qent::BipartitionShape s{shape_flag[0], shape_flag[1]};
        if (s.n < 2 || s.m < 2) throw qent::ShapeMismatch("--shape factors must be >= 2");
        if (s.total() < dim) throw qent::ShapeMismatch("--shape is smaller than the input state");
        plan.padded_dim = s.total();
        plan.shapes = {s};
    } else {
        plan.padded_dim = qent::smallest_padded_dim(dim);
        plan.shapes = qent::ordered_factorizations(plan.padded_dim);
    }
    return plan;
}

ordered_json shapes_to_json(const std::vector<qent::BipartitionShape>& shapes) {
    ordered_json a = ordered_json::array();
    for (const qent::BipartitionShape& s : shapes) a.push_back({s.n, s.m});
    return a;
}

struct SuiteOutput {
    ordered_json config;
    std::vector<qent::InequalityReport> reports;
};

int emit_suite(const std::string& command, const SuiteOutput& suite, const std::string& format,
               const std::string& out_path, std::chrono::steady_clock::time_point t0) {
    const qent::SuiteAggregate agg = qent::aggregate(suite.reports);
    if (format == "csv") {
        emit(out_path, qent::reports_to_csv(suite.reports));
    } else {
        ordered_json j;
        j["command"] = command;
        j["config"] = suite.config;
        j["reports"] = ordered_json::array();
        for (const qent::InequalityReport& r : suite.reports)
            j["reports"].push_back(qent::report_to_json(r));
        j["aggregate"] = {{"checks_run", agg.checks_run},
                          {"violations", agg.violations},
                          {"worst_margin", agg.worst_margin}};
        emit(out_path, j.dump(2) + "\n");
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << command << ": " << agg.checks_run << " checks, " << agg.violations
              << " violations, worst margin " << qent::format_double17(agg.worst_margin) << ", "
              << secs << " s\n";
    return agg.violations == 0 ? kExitOk : kExitViolations;
}

void require_q_at_least_one(const std::vector<double>& qs) {
    for (double q : qs)
        if (q < 1.0)
            throw qent::InvalidQ("the checked inequalities hold for q >= 1; got q = " +
                                 qent::format_double17(q));
}

int run_sample(int dim, int rank, std::uint64_t seed, const std::string& out_path) {
    if (rank == 0) rank = dim;
    const qent::ComplexMatrix rho = qent::ginibre_density(dim, rank, seed);
    emit(out_path, qent::matrix_to_json_text(rho) + "\n");
    return kExitOk;
}

int run_check(const std::string& input, const std::vector<int>& shape_flag,
              std::vector<double> qs, int trials, std::uint64_t seed, const std::string& format,
              const std::string& out_path) {
    const auto t0 = std::chrono::steady_clock::now();
    require_q_at_least_one(qs);
    qent::DensityMatrix rho = load_state(input);
    const int input_dim = rho.dim();
    const ShapePlan plan = plan_shapes(input_dim, shape_flag);
    if (plan.padded_dim > input_dim) rho = qent::zero_pad(rho, plan.padded_dim);

    SuiteOutput suite;
    suite.config = {{"input", input},     {"dim", input_dim},
                    {"padded_dim", plan.padded_dim}, {"shapes", shapes_to_json(plan.shapes)},
                    {"q_values", qs},     {"trials", trials},
                    {"seed", seed}};

    std::uint64_t unitary_counter = 0;
    for (const qent::BipartitionShape& shape : plan.shapes) {
        for (double q : qs)
            suite.reports.push_back(qent::check_quantum_subadditivity(rho, shape, q));
        suite.reports.push_back(qent::check_araki_lieb(rho, shape));
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t u_seed = qent::split_seed(seed, unitary_counter++);
            const qent::UnitaryMatrix u = qent::haar_unitary(plan.padded_dim, u_seed);
            for (double q : qs) {
                qent::InequalityReport r = qent::check_tomographic_subadditivity(rho, u, shape, q);
                r.seed = u_seed;
                r.unitary_label = "haar[" + std::to_string(t) + "]";
                suite.reports.push_back(r);
            }
        }
    }
    return emit_suite("check", suite, format, out_path, t0);
}

int run_sweep(int dim, int rank, const std::vector<int>& shape_flag, std::vector<double> qs,
              int trials, std::uint64_t seed, const std::string& format,
              const std::string& out_path) {
    const auto t0 = std::chrono::steady_clock::now();
    require_q_at_least_one(qs);
    if (rank == 0) rank = dim;
    const ShapePlan plan = plan_shapes(dim, shape_flag);

    SuiteOutput suite;
    suite.config = {{"dim", dim},         {"rank", rank},
                    {"padded_dim", plan.padded_dim}, {"shapes", shapes_to_json(plan.shapes)},
                    {"q_values", qs},     {"trials", trials},
                    {"seed", seed}};

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t state_seed = qent::split_seed(seed, 2 * static_cast<std::uint64_t>(t));
        const std::uint64_t u_seed = qent::split_seed(seed, 2 * static_cast<std::uint64_t>(t) + 1);
        qent::DensityMatrix rho =
            qent::validate_density(qent::ginibre_density(dim, rank, state_seed));
        if (plan.padded_dim > dim) rho = qent::zero_pad(rho, plan.padded_dim);
        const qent::UnitaryMatrix u = qent::haar_unitary(plan.padded_dim, u_seed);

        for (const qent::BipartitionShape& shape : plan.shapes) {
            for (double q : qs) {
                qent::InequalityReport r = qent::check_quantum_subadditivity(rho, shape, q);
                r.seed = state_seed;
                suite.reports.push_back(r);
            }
            qent::InequalityReport al = qent::check_araki_lieb(rho, shape);
            al.seed = state_seed;
            suite.reports.push_back(al);

            const qent::InformationValue info = qent::information_I(rho, u, shape);
            const double s_rho = qent::von_neumann_entropy(rho);
            qent::InequalityReport ir = qent::make_report(
                qent::InequalityName::information_nonnegativity, s_rho, s_rho + info.value, 1.0,
                shape);
            ir.seed = state_seed;
            ir.unitary_label = "haar(seed=" + std::to_string(u_seed) + ")";
            suite.reports.push_back(ir);
        }
    }
    return emit_suite("sweep", suite, format, out_path, t0);
}

int run_minimize(const std::string& input, const std::vector<int>& shape_flag, int restarts,
                 int max_iters, double tol, std::uint64_t seed, const std::string& out_path) {
    const auto t0 = std::chrono::steady_clock::now();
    qent::DensityMatrix rho = load_state(input);
    const int input_dim = rho.dim();
    ShapePlan plan = plan_shapes(input_dim, shape_flag);
    if (plan.padded_dim > input_dim) rho = qent::zero_pad(rho, plan.padded_dim);
    const qent::BipartitionShape shape = plan.shapes.front();

    const qent::OptimizerConfig config{restarts, max_iters, tol, seed};
    const qent::OptimizationResult result = qent::minimize_sigma(rho, shape, config);
    const double s_rho = qent::von_neumann_entropy(rho);
    const qent::BipartiteMutualInfo mi = qent::mutual_information_bipartite(rho, shape);

    ordered_json j;
    j["command"] = "minimize";
    j["config"] = {{"input", input},   {"dim", input_dim},      {"padded_dim", plan.padded_dim},
                   {"shape", {shape.n, shape.m}}, {"restarts", restarts},  {"max_iters", max_iters},
                   {"tol", tol},       {"seed", seed}};
    j["result"] = qent::optimization_result_to_json(result);
    j["s_rho"] = s_rho;
    j["i_q"] = mi.info.value;
    j["sigma_minus_i_q"] = result.sigma - mi.info.value;
    emit(out_path, j.dump(2) + "\n");

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "minimize: sigma " << qent::format_double17(result.sigma) << ", information "
              << qent::format_double17(result.information)
              << (result.converged ? "" : " (budget exhausted)") << ", " << secs << " s\n";
    return kExitOk;
}

int run_tomogram(const std::string& input, const std::string& unitary_spec,
                 const std::string& labels_flag, const std::vector<int>& shape_flag,
                 std::vector<double> qs, std::uint64_t seed, const std::string& out_path) {
    const qent::DensityMatrix rho = load_state(input);
    const int dim = rho.dim();

    std::string unitary_label;
    qent::UnitaryMatrix u = qent::UnitaryMatrix::identity(dim);
    if (unitary_spec == "identity") {
        unitary_label = "identity";
    } else if (unitary_spec == "haar") {
        u = qent::haar_unitary(dim, seed);
        unitary_label = "haar(seed=" + std::to_string(seed) + ")";
    } else {
        u = qent::UnitaryMatrix(qent::matrix_from_json_text(qent::read_text_file(unitary_spec)));
        unitary_label = "file:" + unitary_spec;
    }

    const qent::LabelScheme scheme = labels_flag == "spin" ? qent::LabelScheme::spin_projection
                                                           : qent::LabelScheme::linear_index;
    const qent::Tomogram t = qent::extract_tomogram(rho, u, scheme, unitary_label);
    const bool spin4 = scheme == qent::LabelScheme::spin_projection && dim == 4;

    // conditional-entropy columns need a bipartition; default to the first
    // factorization when one exists
    std::vector<qent::BipartitionShape> shapes;
    if (!shape_flag.empty()) {
        shapes = {{shape_flag[0], shape_flag[1]}};
        if (shapes[0].total() != dim)
            throw qent::ShapeMismatch("--shape must factor the input dimension exactly");
    } else {
        shapes = qent::ordered_factorizations(dim);
    }

    ordered_json j;
    j["command"] = "tomogram";
    ordered_json unitary_json;
    unitary_json["label"] = unitary_label;
    unitary_json["matrix"] = nlohmann::ordered_json::parse(qent::matrix_to_json_text(u.matrix()));
    j["tomogram"] = qent::tomogram_to_json(t, unitary_json);

    if (spin4) {
        const auto [omega1, omega2] = qent::qudit32_omegas(t);
        j["omegas"] = {{"omega1", omega1.probs()}, {"omega2", omega2.probs()}};
    }

    ordered_json table = ordered_json::array();
    for (double q : qs) {
        ordered_json row;
        row["q"] = q;
        row["H_q"] = qent::tomographic_q_entropy(t, q);
        if (spin4) {
            const auto [omega1, omega2] = qent::qudit32_omegas(t);
            const double h_b = qent::tsallis_entropy(omega1, q);
            const double cond = qent::qudit32_conditional_q_entropy(t, q);
            row["H_q_B"] = h_b;
            row["H_q_conditional"] = cond;
            row["chain_residual"] = row["H_q"].get<double>() - (cond + h_b);
        } else if (!shapes.empty()) {
            const qent::JointTable joint = qent::reshape_joint(t.probs, shapes.front());
            const double h_b = qent::tsallis_entropy(qent::marginal_B(joint), q);
            const double cond = qent::conditional_entropy_q(joint, q);
            row["H_q_B"] = h_b;
            row["H_q_conditional"] = cond;
            row["chain_residual"] = row["H_q"].get<double>() - (cond + h_b);
        }
        table.push_back(row);
    }
    j["entropy_table"] = table;
    emit(out_path, j.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropic inequality reports for qudit states"};
    app.require_subcommand(1);

    std::string input, out_path, format = "json", unitary_spec, labels_flag = "linear";
    std::vector<int> shape_flag;
    std::vector<double> qs;
    int dim = 0, rank = 0, trials = 0, restarts = 8, max_iters = 5000;
    double tol = 1e-8;
    std::uint64_t seed = 0;

    CLI::App* sample = app.add_subcommand("sample", "write a seeded random density matrix");
    sample->add_option("--dim", dim, "matrix dimension")->required()->check(CLI::Range(2, 64));
    sample->add_option("--rank", rank, "Ginibre rank (default: dim)")->check(CLI::Range(1, 64));
    sample->add_option("--seed", seed, "RNG seed");
    sample->add_option("--out", out_path, "output path (default: stdout)");

    auto add_check_common = [&](CLI::App* cmd) {
        cmd->add_option("--shape", shape_flag, "bipartition n m")->expected(2);
        cmd->add_option("--q", qs, "q values (repeatable; default 1 1.5 2 3)");
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "output path (default: stdout)");
    };

    CLI::App* check = app.add_subcommand("check", "run inequality checks on one state");
    check->add_option("--input", input, "density matrix JSON")->required();
    check->add_option("--trials", trials, "Haar unitaries per shape (default 8)")
        ->check(CLI::PositiveNumber);
    add_check_common(check);

    CLI::App* sweep = app.add_subcommand("sweep", "run checks over a random ensemble");
    sweep->add_option("--dim", dim, "state dimension")->required()->check(CLI::Range(2, 64));
    sweep->add_option("--rank", rank, "Ginibre rank (default: dim)")->check(CLI::Range(1, 64));
    sweep->add_option("--trials", trials, "number of random states (default 100)")
        ->check(CLI::PositiveNumber);
    add_check_common(sweep);

    CLI::App* minimize = app.add_subcommand("minimize", "minimize the marginal entropy sum");
    minimize->add_option("--input", input, "density matrix JSON")->required();
    minimize->add_option("--shape", shape_flag, "bipartition n m")->expected(2);
    minimize->add_option("--restarts", restarts, "optimizer restarts")->check(CLI::PositiveNumber);
    minimize->add_option("--max-iters", max_iters, "iterations per restart")
        ->check(CLI::PositiveNumber);
    minimize->add_option("--tol", tol, "convergence tolerance")->check(CLI::PositiveNumber);
    minimize->add_option("--seed", seed, "RNG seed");
    minimize->add_option("--out", out_path, "output path (default: stdout)");

    CLI::App* tomo = app.add_subcommand("tomogram", "extract a tomogram and entropy table");
    tomo->add_option("--input", input, "density matrix JSON")->required();
    tomo->add_option("--unitary", unitary_spec, "PATH | haar | identity")->required();
    tomo->add_option("--labels", labels_flag, "linear|spin")
        ->check(CLI::IsMember({"linear", "spin"}));
    tomo->add_option("--shape", shape_flag, "bipartition n m")->expected(2);
    tomo->add_option("--q", qs, "q values (repeatable; default 1 1.5 2 3)");
    tomo->add_option("--seed", seed, "RNG seed (for --unitary haar)");
    tomo->add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    if (qs.empty()) qs = {1.0, 1.5, 2.0, 3.0};

    try {
        if (sample->parsed()) return run_sample(dim, rank, seed, out_path);
        if (check->parsed())
            return run_check(input, shape_flag, qs, trials == 0 ? 8 : trials, seed, format,
                             out_path);
        if (sweep->parsed())
            return run_sweep(dim, rank, shape_flag, qs, trials == 0 ? 100 : trials, seed, format,
                             out_path);
        if (minimize->parsed())
            return run_minimize(input, shape_flag, restarts, max_iters, tol, seed, out_path);
        if (tomo->parsed())
            return run_tomogram(input, unitary_spec, labels_flag, shape_flag, qs, seed, out_path);
    } catch (const qent::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
