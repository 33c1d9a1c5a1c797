#include "infcomp/cli.hpp"

#include "infcomp/composer.hpp"
#include "infcomp/convergence.hpp"
#include "infcomp/error.hpp"
#include "infcomp/io.hpp"
#include "infcomp/poincare.hpp"
#include "infcomp/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace infcomp::cli {

namespace {

using io::json;

constexpr int kCertifyTerms = 20;
const char *const kCsvHeader = "re,im,f_re,f_im,error_bound";

std::string number17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::validation:
        return kExitValidation;
    case ErrorKind::certification:
        return kExitCertification;
    case ErrorKind::budget:
    case ErrorKind::overflow:
        return kExitBudget;
    }
    return kExitValidation;
}

Complex pair_or_real(const std::vector<double> &v, const char *flag) {
    if (v.size() == 1) {
        return {v[0], 0.0};
    }
    if (v.size() == 2) {
        return {v[0], v[1]};
    }
    throw ValidationError(std::string(flag) + " takes one or two numbers (re [im])");
}

struct RawOptions {
    std::string family;
    std::string family_json;
    std::string family_file;
    std::vector<double> s;
    int r0 = 2;
    std::optional<double> p;
    std::vector<double> z;
    std::optional<double> base_radius;
    double epsilon = 1e-9;
    std::size_t degree = 16;
    std::size_t max_factors = 1'000'000;
    std::vector<double> grid;
    std::string output = "-";
    std::string format = "json";
};

void add_family_options(CLI::App *cmd, RawOptions &raw) {
    cmd->add_option("--family", raw.family, "Family kind: geometric, power_law or explicit");
    cmd->add_option("--family-json", raw.family_json, "Family description as a JSON document");
    cmd->add_option("--family-file", raw.family_file, "Path to a JSON family description");
    cmd->add_option("--s", raw.s, "Geometric multiplier s as re [im]")->expected(1, 2);
    cmd->add_option("--r0", raw.r0, "Family exponent r0 >= 2");
    cmd->add_option("--p", raw.p, "Power-law exponent p");
    cmd->add_option("--max-factors", raw.max_factors, "Largest number of factors to compose");
}

void add_output_options(CLI::App *cmd, RawOptions &raw) {
    cmd->add_option("--output", raw.output, "Output path, - for standard output");
    cmd->add_option("--format", raw.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

FactorFamily build_family(const RawOptions &raw) {
    if (!raw.family_json.empty() || !raw.family_file.empty()) {
        if (!raw.family_json.empty() && !raw.family_file.empty()) {
            throw ValidationError("give either --family-json or --family-file, not both");
        }
        std::string text = raw.family_json;
        if (!raw.family_file.empty()) {
            std::ifstream in(raw.family_file);
            if (!in) {
                throw ValidationError("cannot read family file '" + raw.family_file + "'");
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error &e) {
            throw ValidationError(std::string("family JSON does not parse: ") + e.what());
        }
        return io::family_from_json(doc);
    }
    if (raw.family.empty()) {
        throw ValidationError("this command needs a family (--family, --family-json or --family-file)");
    }
    if (raw.r0 < 2 || raw.r0 > 64) {
        throw ValidationError("--r0 must be an integer in [2, 64]");
    }
    if (raw.family == "geometric") {
        if (raw.s.empty()) {
            throw ValidationError("geometric family needs --s");
        }
        return FactorFamily::geometric(pair_or_real(raw.s, "--s"), static_cast<unsigned>(raw.r0));
    }
    if (raw.family == "power_law") {
        if (!raw.p) {
            throw ValidationError("power_law family needs --p");
        }
        return FactorFamily::power_law(*raw.p, static_cast<unsigned>(raw.r0));
    }
    if (raw.family == "explicit") {
        throw ValidationError("explicit families are given with --family-json or --family-file");
    }
    throw ValidationError("unknown family kind '" + raw.family + "'");
}

json eval_json(const EvalResult &r, Complex z) {
    return {{"z", io::to_json(z)},
            {"value", io::to_json(r.value)},
            {"error_bound", r.error_bound},
            {"epsilon", r.plan.epsilon},
            {"N_used", r.plan.N},
            {"m1", r.plan.m1},
            {"r1", r.plan.r1},
            {"head_lipschitz", r.plan.head_lipschitz}};
}

std::string certify_doc(const RunConfig &config) {
    const ConvergenceCertificate cert = certify(*config.family);
    json cn = json::array();
    for (int n = 1; n <= kCertifyTerms; ++n) {
        cn.push_back(cert.cn(static_cast<std::size_t>(n)));
    }
    const double radius = cert.safe_radius();
    json doc = {{"command", "certify"},
                {"family", io::family_to_json(*config.family)},
                {"alpha", cert.alpha()},
                {"safe_radius", std::isfinite(radius) ? json(radius) : json(nullptr)},
                {"cn", cn},
                {"tail_formula", cert.tail_formula()}};
    return doc.dump(2);
}

std::string eval_doc(const RunConfig &config) {
    const EvalResult r = eval_certified(*config.family, config.z, config.epsilon, {config.max_factors});
    json doc = eval_json(r, config.z);
    doc["command"] = "eval";
    doc["family"] = io::family_to_json(*config.family);
    return doc.dump(2);
}

std::string series_doc(const RunConfig &config) {
    const LimitSeriesReport r = limit_series_report(*config.family, config.degree, config.epsilon, {config.max_factors});
    json doc = {{"command", "series"},
                {"family", io::family_to_json(*config.family)},
                {"degree", config.degree},
                {"epsilon", config.epsilon},
                {"coefficients", io::series_to_json(r.series)},
                {"N_used", r.factors_used},
                {"last_change", r.last_change},
                {"exact", r.exact}};
    return doc.dump(2);
}

std::string poincare_doc(const RunConfig &config) {
    const PoincareSpec spec(config.s, config.base_radius);
    const PoincareResult r = poincare_eval(spec, config.z, config.epsilon, {config.max_factors});
    json doc = {{"command", "poincare"},
                {"s", io::to_json(spec.s())},
                {"base_radius", spec.base_radius()},
                {"z", io::to_json(config.z)},
                {"value", io::to_json(r.value)},
                {"error_bound", r.error_bound},
                {"epsilon", config.epsilon},
                {"k", r.depth},
                {"N_used", r.base.plan.N},
                {"m1", r.base.plan.m1},
                {"r1", r.base.plan.r1},
                {"head_lipschitz", r.base.plan.head_lipschitz}};
    return doc.dump(2);
}

Outcome verify_doc(const RunConfig &config) {
    const auto results = verify::run_all();
    const bool all = std::all_of(results.begin(), results.end(), [](const auto &r) { return r.passed; });
    Outcome out;
    out.exit_code = all ? kExitOk : kExitVerifyFailed;
    if (config.format == Format::csv) {
        std::string text = "id,name,passed,max_residual,tolerance\n";
        for (const auto &r : results) {
            text += std::to_string(r.id) + "," + r.name + "," + (r.passed ? "true" : "false") + "," +
                    number17(r.max_residual) + "," + number17(r.tolerance) + "\n";
        }
        out.document = text;
        return out;
    }
    json rows = json::array();
    for (const auto &r : results) {
        rows.push_back({{"id", r.id},
                        {"name", r.name},
                        {"passed", r.passed},
                        {"max_residual", r.max_residual},
                        {"tolerance", r.tolerance},
                        {"detail", r.detail}});
    }
    out.document = json{{"command", "verify"}, {"checks", rows}, {"all_passed", all}}.dump(2);
    return out;
}

struct GridCell {
    Complex z;
    std::optional<Complex> value; // empty on overflow
    double error_bound = 0.0;
};

std::vector<GridCell> evaluate_grid(const RunConfig &config) {
    const GridSpec &g = config.grid;
    const std::size_t steps = g.steps;
    auto coord = [steps](double lo, double hi, std::size_t i) {
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    };
    std::vector<Complex> points;
    points.reserve(steps * steps);
    for (std::size_t j = 0; j < steps; ++j) {
        for (std::size_t i = 0; i < steps; ++i) {
            points.emplace_back(coord(g.re_min, g.re_max, i), coord(g.im_min, g.im_max, j));
        }
    }
    double radius = 0.0;
    for (const Complex &z : points) {
        radius = std::max(radius, std::abs(z));
    }

    const FactorFamily &family = *config.family;
    const ConvergenceCertificate cert = certify(family);
    std::vector<GridCell> cells(points.size());
    try {
        // One plan certified for the whole rectangle; the batch runs through the SIMD kernels.
        const EvalPlan plan = plan_evaluation(family, cert, radius, config.epsilon, {config.max_factors});
        const std::vector<Complex> values =
            cert.is_degenerate() ? points : compose_pointwise(family, 1, plan.N, points);
        const double bound = plan.head_lipschitz * plan.tail_error;
        for (std::size_t i = 0; i < points.size(); ++i) {
            cells[i].z = points[i];
            cells[i].error_bound = bound;
            if (std::isfinite(values[i].real()) && std::isfinite(values[i].imag())) {
                cells[i].value = values[i];
            }
        }
        return cells;
    } catch (const OverflowError &) {
        // Head bound overflowed for the rectangle as a whole; certify point by point.
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        cells[i].z = points[i];
        try {
            const EvalResult r = eval_certified(family, points[i], config.epsilon, {config.max_factors});
            cells[i].value = r.value;
            cells[i].error_bound = r.error_bound;
        } catch (const OverflowError &) {
        }
    }
    return cells;
}

std::string grid_doc(const RunConfig &config) {
    const std::vector<GridCell> cells = evaluate_grid(config);
    if (config.format == Format::csv) {
        std::string text = std::string(kCsvHeader) + "\n";
        for (const GridCell &c : cells) {
            text += number17(c.z.real()) + "," + number17(c.z.imag()) + ",";
            if (c.value) {
                text += number17(c.value->real()) + "," + number17(c.value->imag()) + "," + number17(c.error_bound);
            } else {
                text += "overflow,overflow,overflow";
            }
            text += "\n";
        }
        return text;
    }
    json rows = json::array();
    for (const GridCell &c : cells) {
        if (c.value) {
            rows.push_back({c.z.real(), c.z.imag(), c.value->real(), c.value->imag(), c.error_bound});
        } else {
            rows.push_back({c.z.real(), c.z.imag(), "overflow", "overflow", "overflow"});
        }
    }
    json doc = {{"command", "grid"},
                {"family", io::family_to_json(*config.family)},
                {"epsilon", config.epsilon},
                {"steps", config.grid.steps},
                {"columns", {"re", "im", "f_re", "f_im", "error_bound"}},
                {"rows", rows}};
    return doc.dump(2);
}

} // namespace

RunConfig parse_args(const std::vector<std::string> &args) {
    CLI::App app{"Certified evaluation of infinite compositions of entire functions"};
    app.require_subcommand(1);
    RawOptions raw;

    auto *certify_cmd = app.add_subcommand("certify", "Convergence constants and certified radii of a family");
    add_family_options(certify_cmd, raw);
    add_output_options(certify_cmd, raw);

    auto *eval_cmd = app.add_subcommand("eval", "Certified value of the infinite composition at a point");
    add_family_options(eval_cmd, raw);
    add_output_options(eval_cmd, raw);
    eval_cmd->add_option("--z", raw.z, "Point as re im")->expected(2)->required();
    eval_cmd->add_option("--epsilon", raw.epsilon, "Requested error bound");

    auto *series_cmd = app.add_subcommand("series", "Power-series coefficients of the limit function");
    add_family_options(series_cmd, raw);
    add_output_options(series_cmd, raw);
    series_cmd->add_option("--degree", raw.degree, "Jet degree");
    series_cmd->add_option("--epsilon", raw.epsilon, "Per-coefficient stabilization threshold");

    auto *poincare_cmd = app.add_subcommand("poincare", "Poincare function F(sz) = sF(z) + sF(z)^2 at a point");
    add_output_options(poincare_cmd, raw);
    poincare_cmd->add_option("--s", raw.s, "Multiplier s as re [im], |s| > 1")->expected(1, 2)->required();
    poincare_cmd->add_option("--z", raw.z, "Point as re im")->expected(2)->required();
    poincare_cmd->add_option("--epsilon", raw.epsilon, "Requested error bound");
    poincare_cmd->add_option("--base-radius", raw.base_radius, "Direct-evaluation radius");
    poincare_cmd->add_option("--max-factors", raw.max_factors, "Largest number of factors to compose");

    auto *verify_cmd = app.add_subcommand("verify", "Run the identity and bound self-checks");
    add_output_options(verify_cmd, raw);

    auto *grid_cmd = app.add_subcommand("grid", "Certified values on a rectangular grid");
    add_family_options(grid_cmd, raw);
    add_output_options(grid_cmd, raw);
    grid_cmd->add_option("--grid", raw.grid, "re_min re_max im_min im_max steps")->expected(5)->required();
    grid_cmd->add_option("--epsilon", raw.epsilon, "Requested error bound");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        throw;
    } catch (const CLI::ParseError &e) {
        throw ValidationError(e.what());
    }

    RunConfig config;
    if (certify_cmd->parsed()) {
        config.command = Command::certify;
    } else if (eval_cmd->parsed()) {
        config.command = Command::eval;
    } else if (series_cmd->parsed()) {
        config.command = Command::series;
    } else if (poincare_cmd->parsed()) {
        config.command = Command::poincare;
    } else if (verify_cmd->parsed()) {
        config.command = Command::verify;
    } else {
        config.command = Command::grid;
    }

    if (!(raw.epsilon > 0.0) || !std::isfinite(raw.epsilon)) {
        throw ValidationError("--epsilon must be positive");
    }
    if (raw.max_factors < 1) {
        throw ValidationError("--max-factors must be at least 1");
    }
    config.epsilon = raw.epsilon;
    config.degree = raw.degree;
    config.max_factors = raw.max_factors;
    config.output = raw.output;
    config.format = raw.format == "csv" ? Format::csv : Format::json;
    config.base_radius = raw.base_radius;

    switch (config.command) {
    case Command::certify:
    case Command::eval:
    case Command::series:
    case Command::grid:
        config.family = build_family(raw);
        break;
    case Command::poincare:
        config.s = pair_or_real(raw.s, "--s");
        break;
    case Command::verify:
        break;
    }
    if (!raw.z.empty()) {
        config.z = {raw.z[0], raw.z[1]};
        if (!std::isfinite(config.z.real()) || !std::isfinite(config.z.imag())) {
            throw ValidationError("--z must be finite");
        }
    }
    if (config.command == Command::series && config.degree < 1) {
        throw ValidationError("--degree must be at least 1");
    }
    if (config.command == Command::grid) {
        const auto &g = raw.grid;
        if (g[4] < 2 || g[4] != std::floor(g[4]) || g[4] > 4096) {
            throw ValidationError("grid steps must be an integer in [2, 4096]");
        }
        for (int i = 0; i < 4; ++i) {
            if (!std::isfinite(g[i])) {
                throw ValidationError("grid bounds must be finite");
            }
        }
        config.grid = {g[0], g[1], g[2], g[3], static_cast<std::size_t>(g[4])};
    }
    if (config.format == Format::csv && config.command != Command::grid && config.command != Command::verify) {
        throw ValidationError("csv output is available for grid and verify only");
    }
    return config;
}

Outcome run(const RunConfig &config, std::ostream &diagnostics) {
    try {
        switch (config.command) {
        case Command::certify:
            return {kExitOk, certify_doc(config)};
        case Command::eval:
            return {kExitOk, eval_doc(config)};
        case Command::series:
            return {kExitOk, series_doc(config)};
        case Command::poincare:
            return {kExitOk, poincare_doc(config)};
        case Command::verify:
            return verify_doc(config);
        case Command::grid:
            return {kExitOk, grid_doc(config)};
        }
    } catch (const Error &e) {
        diagnostics << "error: " << e.what() << "\n";
        return {exit_code(e.kind()), {}};
    }
    return {kExitValidation, {}};
}

int main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig config;
    try {
        config = parse_args(args);
    } catch (const CLI::CallForHelp &) {
        out << "usage: infcomp {certify|eval|series|poincare|verify|grid} [options]; "
               "pass --help after a command for its options\n";
        return kExitOk;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    }
    Outcome outcome = run(config, err);
    if (outcome.document.empty()) {
        return outcome.exit_code;
    }
    if (outcome.document.back() != '\n') {
        outcome.document += '\n';
    }
    if (config.output == "-") {
        out << outcome.document;
    } else {
        std::ofstream file(config.output, std::ios::binary);
        if (!file || !(file << outcome.document)) {
            err << "error: cannot write '" << config.output << "'\n";
            return kExitValidation;
        }
    }
    return outcome.exit_code;
}

} // namespace infcomp::cli
