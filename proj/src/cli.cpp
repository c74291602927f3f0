// Copyright 2026 The gaussmode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaussmode/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "gaussmode/entanglement.hpp"
#include "gaussmode/json_io.hpp"
#include "gaussmode/optics.hpp"
#include "gaussmode/oracle.hpp"
#include "gaussmode/sampling.hpp"

namespace gaussmode::cli {

namespace {

enum class Format { kJson, kCsv };

struct RunConfig {
    std::string input_path;
    std::string inline_json;
    Format format = Format::kJson;
};

struct SweepSpec {
    std::string param;
    int element = 0;  // 1-based; 0 picks the first element that has the parameter
    double start = 0;
    double stop = 0;
    int steps = 0;
};

struct VerifyOptions {
    std::optional<int> grid_n;
    std::optional<double> grid_l;
    std::optional<double> tol;
    double moment_tol = kDefaultMomentTolerance;
    std::optional<std::uint64_t> seed;
    int count = 1;
};

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::kNonNormalizableResult:
            return kNonPhysicalResult;
        case ErrorCode::kGridTooCoarse:
        case ErrorCode::kInvalidGrid:
        case ErrorCode::kMarginalMismatch:
            return kVerificationFailed;
        default:
            return kInvalidInput;
    }
}

Json error_object(std::string_view name, const std::string &message) {
    Json out = Json::object();
    out["error"] = std::string(name);
    out["message"] = message;
    return out;
}

int report_error(const Error &e, std::ostream &out, std::ostream &err) {
    out << dump_json(error_object(e.name(), e.what())) << '\n';
    err << "gaussmode: " << e.what() << '\n';
    return exit_code_for(e.code());
}

std::string read_all(std::istream &stream) {
    return {std::istreambuf_iterator<char>(stream), std::istreambuf_iterator<char>()};
}

Json load_input(const RunConfig &config, std::istream &in) {
    const bool has_path = !config.input_path.empty();
    const bool has_inline = !config.inline_json.empty();
    if (has_path == has_inline) {
        throw Error(ErrorCode::kInvalidInput, "provide exactly one of --input/-i or --json");
    }
    if (has_inline) return parse_json(config.inline_json);
    if (config.input_path == "-") return parse_json(read_all(in));
    std::ifstream file(config.input_path);
    if (!file) throw Error(ErrorCode::kInvalidInput, "cannot open input file " + config.input_path);
    return parse_json(read_all(file));
}

void add_input_options(CLI::App *cmd, RunConfig &config) {
    cmd->add_option("-i,--input", config.input_path, "JSON input file, or - for stdin");
    cmd->add_option("--json", config.inline_json, "Inline JSON input");
}

void add_format_option(CLI::App *cmd, RunConfig &config) {
    cmd->add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::kJson}, {"csv", Format::kCsv}}));
}

std::string csv_join(const std::vector<std::string> &fields) {
    std::string line;
    for (std::size_t k = 0; k < fields.size(); ++k) {
        if (k) line += ',';
        line += fields[k];
    }
    return line;
}

std::vector<std::string> coefficient_fields(const QuadratureCoefficients &c) {
    return {format_double(c.alpha().real()), format_double(c.alpha().imag()), format_double(c.beta().real()),
            format_double(c.beta().imag()),  format_double(c.gamma().real()), format_double(c.gamma().imag())};
}

std::vector<std::string> report_fields(const StateAnalysis &a) {
    return {format_double(a.simon.e_s),
            a.simon.entangled ? "true" : "false",
            format_double(a.entanglement.omega),
            format_double(a.entanglement.e_f_nats),
            format_double(nats_to_bits(a.entanglement.e_f_nats)),
            format_double(a.entanglement.heisenberg_two_mode)};
}

constexpr const char *kCoefficientHeader = "alpha_re,alpha_im,beta_re,beta_im,gamma_re,gamma_im";
constexpr const char *kReportHeader = "e_s,entangled,omega,e_f_nats,e_f_bits,heisenberg_residual";

void write_analysis(const StateAnalysis &analysis, Format format, std::ostream &out, Json extra = Json::object()) {
    if (format == Format::kCsv) {
        auto fields = coefficient_fields(analysis.coeffs);
        const auto report = report_fields(analysis);
        fields.insert(fields.end(), report.begin(), report.end());
        out << kCoefficientHeader << ',' << kReportHeader << '\n' << csv_join(fields) << '\n';
        return;
    }
    Json doc = std::move(extra);
    const Json report = analysis_to_json(analysis);
    for (const auto &[key, value] : report.items()) doc[key] = value;
    out << dump_json(doc) << '\n';
}

int cmd_analyze(const RunConfig &config, std::istream &in, std::ostream &out) {
    write_analysis(analyze(coefficients_from_json(load_input(config, in))), config.format, out);
    return kSuccess;
}

int cmd_squeezed(double r, double phi, const RunConfig &config, std::ostream &out) {
    const SqueezeParams params = SqueezeParams::make(r, phi);
    Json squeeze = Json::object();
    squeeze["r"] = params.r;
    squeeze["phi"] = params.phi;
    Json extra = Json::object();
    extra["squeeze"] = std::move(squeeze);
    write_analysis(analyze(two_mode_squeezed(params)), config.format, out, std::move(extra));
    return kSuccess;
}

int cmd_circuit(const RunConfig &config, std::istream &in, std::ostream &out, std::ostream &err) {
    const std::vector<OpticalElement> elements = circuit_from_json(load_input(config, in));
    if (elements.empty()) throw Error(ErrorCode::kInvalidInput, "circuit must contain at least one element");

    Json trajectory = Json::array();
    std::vector<std::string> csv_rows;
    std::optional<Error> failure;
    Annihilators conditions = Annihilators::vacuum();
    for (std::size_t step = 0; step < elements.size(); ++step) {
        conditions = conditions.transformed(element_to_bogoliubov(elements[step]));
        try {
            const StateAnalysis analysis = analyze(solve_coefficients(conditions));
            Json row = Json::object();
            row["step"] = static_cast<int>(step + 1);
            row["element"] = element_to_json(elements[step]);
            const Json report_json = analysis_to_json(analysis);
            for (const auto &[key, value] : report_json.items()) row[key] = value;
            trajectory.push_back(std::move(row));

            auto fields = coefficient_fields(analysis.coeffs);
            const auto report = report_fields(analysis);
            fields.insert(fields.begin(), {std::to_string(step + 1), std::string(element_tag(elements[step]))});
            fields.insert(fields.end(), report.begin(), report.end());
            csv_rows.push_back(csv_join(fields));
        } catch (const Error &e) {
            failure = e;
            break;
        }
    }

    if (config.format == Format::kCsv) {
        out << "step,kind," << kCoefficientHeader << ',' << kReportHeader << '\n';
        for (const auto &row : csv_rows) out << row << '\n';
    } else {
        Json doc = Json::object();
        doc["trajectory"] = std::move(trajectory);
        if (failure) doc["error"] = error_object(failure->name(), failure->what());
        out << dump_json(doc) << '\n';
    }
    if (failure) {
        err << "gaussmode: " << failure->what() << '\n';
        return exit_code_for(failure->code());
    }
    return kSuccess;
}

bool element_has(const Json &element, const std::string &param) {
    const auto kind = element.value("kind", std::string());
    if (param == "phi") return true;
    if (param == "r") return kind == "tms" || kind == "sms";
    if (param == "theta") return kind == "bs";
    return false;
}

constexpr std::array<const char *, 6> kCoefficientParams = {"alpha_re", "alpha_im", "beta_re",
                                                            "beta_im",  "gamma_re", "gamma_im"};

// Returns a function that writes the swept value into a copy of the input.
std::function<Json(double)> sweep_setter(const Json &doc, const SweepSpec &spec) {
    const bool is_circuit = doc.is_array() || (doc.is_object() && doc.contains("circuit"));
    if (!is_circuit) {
        const auto it = std::find(kCoefficientParams.begin(), kCoefficientParams.end(), spec.param);
        if (it == kCoefficientParams.end()) {
            throw Error(ErrorCode::kInvalidInput, "coefficient sweeps take one of alpha_re, alpha_im, beta_re, "
                                                  "beta_im, gamma_re, gamma_im");
        }
        const Json base = doc.is_object() && doc.contains("coefficients") ? doc.at("coefficients") : doc;
        coefficients_from_json(base);
        const std::string key = spec.param.substr(0, spec.param.find('_'));
        const std::size_t part = spec.param.ends_with("_re") ? 0 : 1;
        return [base, key, part](double value) {
            Json copy = base;
            copy[key][part] = value;
            return copy;
        };
    }

    const Json list = doc.is_array() ? doc : doc.at("circuit");
    if (!list.is_array() || list.empty()) throw Error(ErrorCode::kInvalidInput, "sweep needs a non-empty circuit");
    std::size_t index = list.size();
    if (spec.element > 0) {
        if (static_cast<std::size_t>(spec.element) > list.size() || !element_has(list[spec.element - 1], spec.param)) {
            throw Error(ErrorCode::kInvalidInput, "element " + std::to_string(spec.element) + " has no parameter \"" +
                                                      spec.param + "\"");
        }
        index = static_cast<std::size_t>(spec.element - 1);
    } else {
        for (std::size_t k = 0; k < list.size(); ++k) {
            if (element_has(list[k], spec.param)) {
                index = k;
                break;
            }
        }
        if (index == list.size()) {
            throw Error(ErrorCode::kInvalidInput, "no circuit element has parameter \"" + spec.param + "\"");
        }
    }
    circuit_from_json(list);
    return [list, index, param = spec.param](double value) {
        Json copy = list;
        copy[index][param] = value;
        return copy;
    };
}

int cmd_sweep(const SweepSpec &spec, const RunConfig &config, std::istream &in, std::ostream &out,
              std::ostream &err) {
    if (spec.steps < 2) throw Error(ErrorCode::kInvalidInput, "sweep needs --steps >= 2");
    if (!(spec.start < spec.stop)) throw Error(ErrorCode::kInvalidInput, "sweep needs --start < --stop");

    const Json doc = load_input(config, in);
    const auto setter = sweep_setter(doc, spec);
    const bool is_circuit = doc.is_array() || (doc.is_object() && doc.contains("circuit"));

    const int n = spec.steps;
    std::vector<double> values(n);
    for (int k = 0; k < n; ++k) {
        values[k] = k == n - 1 ? spec.stop : spec.start + (spec.stop - spec.start) * k / (n - 1);
    }
    std::vector<std::optional<StateAnalysis>> results(n);
    std::vector<std::optional<Error>> errors(n);

#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n; ++k) {
        try {
            const Json input = setter(values[k]);
            if (is_circuit) {
                const auto elements = circuit_from_json(input);
                results[k] = analyze(apply_circuit(elements));
            } else {
                results[k] = analyze(coefficients_from_json(input));
            }
        } catch (const Error &e) {
            errors[k] = e;
        }
    }

    for (int k = 0; k < n; ++k) {
        if (errors[k]) {
            Json doc_err = error_object(errors[k]->name(), errors[k]->what());
            doc_err["value"] = values[k];
            out << dump_json(doc_err) << '\n';
            err << "gaussmode: at " << spec.param << "=" << format_double(values[k]) << ": " << errors[k]->what()
                << '\n';
            return exit_code_for(errors[k]->code());
        }
    }

    if (config.format == Format::kCsv) {
        out << "param,value,e_s,omega,e_f_nats\n";
        for (int k = 0; k < n; ++k) {
            const auto &a = *results[k];
            out << csv_join({spec.param, format_double(values[k]), format_double(a.simon.e_s),
                             format_double(a.entanglement.omega), format_double(a.entanglement.e_f_nats)})
                << '\n';
        }
        return kSuccess;
    }
    Json rows = Json::array();
    for (int k = 0; k < n; ++k) {
        const auto &a = *results[k];
        Json row = Json::object();
        row["value"] = values[k];
        row["e_s"] = a.simon.e_s;
        row["omega"] = a.entanglement.omega;
        row["e_f_nats"] = a.entanglement.e_f_nats;
        rows.push_back(std::move(row));
    }
    Json result = Json::object();
    result["param"] = spec.param;
    result["rows"] = std::move(rows);
    out << dump_json(result) << '\n';
    return kSuccess;
}

double default_tolerance() {
    const char *env = std::getenv(kToleranceEnv);
    if (env == nullptr || *env == '\0') return kDefaultEofTolerance;
    char *end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(value > 0.0)) {
        throw Error(ErrorCode::kInvalidInput, std::string(kToleranceEnv) + " must be a positive number");
    }
    return value;
}

int cmd_verify(const VerifyOptions &options, const RunConfig &config, std::istream &in, std::ostream &out) {
    const double tol = options.tol ? *options.tol : default_tolerance();
    if (!(tol > 0.0) || !(options.moment_tol > 0.0)) {
        throw Error(ErrorCode::kInvalidInput, "tolerances must be positive");
    }
    if (options.count < 1) throw Error(ErrorCode::kInvalidInput, "--count must be >= 1");

    std::vector<QuadratureCoefficients> states;
    if (options.seed) {
        if (!config.input_path.empty() || !config.inline_json.empty()) {
            throw Error(ErrorCode::kInvalidInput, "--seed replaces the input; do not combine them");
        }
        Rng rng(*options.seed);
        RandomStateOptions random;
        random.max_omega = 5.0;
        for (int k = 0; k < options.count; ++k) states.push_back(random_coefficients(rng, random));
    } else {
        states.push_back(coefficients_from_json(load_input(config, in)));
    }

    std::vector<VerificationReport> reports;
    bool all_passed = true;
    for (const auto &coeffs : states) {
        GridSpec grid = auto_grid(coeffs, options.grid_n.value_or(kDefaultGridPoints));
        if (options.grid_l) grid.half_width = *options.grid_l;
        reports.push_back(verify_state(coeffs, grid, tol, options.moment_tol));
        all_passed = all_passed && reports.back().passed;
    }

    if (config.format == Format::kCsv) {
        out << "e_f_closed_form,e_f_oracle,abs_diff,L,N,moment_audit_max_abs_diff,passed\n";
        for (const auto &r : reports) {
            out << csv_join({format_double(r.e_f_closed_form), format_double(r.e_f_oracle), format_double(r.abs_diff),
                             format_double(r.grid.half_width), std::to_string(r.grid.points),
                             format_double(r.moment_audit_max_abs_diff), r.passed ? "true" : "false"})
                << '\n';
        }
    } else if (reports.size() == 1) {
        out << dump_json(verification_to_json(reports.front())) << '\n';
    } else {
        Json list = Json::array();
        for (const auto &r : reports) list.push_back(verification_to_json(r));
        Json doc = Json::object();
        doc["reports"] = std::move(list);
        doc["passed"] = all_passed;
        out << dump_json(doc) << '\n';
    }
    return all_passed ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement of pure two-mode Gaussian states", "gaussmode"};
    app.require_subcommand(1);

    RunConfig config;
    double squeeze_r = 0, squeeze_phi = 0;
    SweepSpec sweep;
    VerifyOptions verify;

    auto *analyze_cmd = app.add_subcommand("analyze", "Full entanglement report for a coefficient triple");
    add_input_options(analyze_cmd, config);
    add_format_option(analyze_cmd, config);

    auto *squeezed_cmd = app.add_subcommand("squeezed", "Two-mode squeezed vacuum coefficients and report");
    squeezed_cmd->add_option("--r", squeeze_r, "Squeeze magnitude")->required();
    squeezed_cmd->add_option("--phi", squeeze_phi, "Squeeze phase (radians)");
    add_format_option(squeezed_cmd, config);

    auto *circuit_cmd = app.add_subcommand("circuit", "Entanglement after each element of an optical circuit");
    add_input_options(circuit_cmd, config);
    add_format_option(circuit_cmd, config);

    auto *sweep_cmd = app.add_subcommand("sweep", "Tabulate entanglement over one circuit or coefficient parameter");
    add_input_options(sweep_cmd, config);
    add_format_option(sweep_cmd, config);
    config.format = Format::kJson;
    sweep_cmd->add_option("--param", sweep.param, "r, theta, phi, or alpha_re ... gamma_im")->required();
    sweep_cmd->add_option("--element", sweep.element, "1-based circuit element (default: first with --param)");
    sweep_cmd->add_option("--start", sweep.start)->required();
    sweep_cmd->add_option("--stop", sweep.stop)->required();
    sweep_cmd->add_option("--steps", sweep.steps)->required();

    auto *verify_cmd = app.add_subcommand("verify", "Check closed forms against grid diagonalization and quadrature");
    add_input_options(verify_cmd, config);
    add_format_option(verify_cmd, config);
    verify_cmd->add_option("--grid-n", verify.grid_n, "Grid points per axis (even, >= 16)");
    verify_cmd->add_option("--grid-l", verify.grid_l, "Grid half-width");
    verify_cmd->add_option("--tol", verify.tol, "E_F tolerance (default 1e-6 or $GAUSSMODE_TOL)");
    verify_cmd->add_option("--moment-tol", verify.moment_tol, "Second-moment tolerance");
    verify_cmd->add_option("--seed", verify.seed, "Verify random states drawn from this seed");
    verify_cmd->add_option("--count", verify.count, "Number of random states with --seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        out << dump_json(error_object("invalid_input", e.what())) << '\n';
        err << "gaussmode: " << e.what() << '\n';
        return kInvalidInput;
    }

    // Sweeps default to CSV unless --format says otherwise.
    if (sweep_cmd->parsed() && sweep_cmd->count("--format") == 0) config.format = Format::kCsv;

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(config, in, out);
        if (squeezed_cmd->parsed()) return cmd_squeezed(squeeze_r, squeeze_phi, config, out);
        if (circuit_cmd->parsed()) return cmd_circuit(config, in, out, err);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep, config, in, out, err);
        if (verify_cmd->parsed()) return cmd_verify(verify, config, in, out);
    } catch (const Error &e) {
        return report_error(e, out, err);
    }
    return kInvalidInput;
}

}  // namespace gaussmode::cli
