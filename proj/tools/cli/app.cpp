#include "cli/app.hpp"

#include "cli/table.hpp"

#include "gsr/analysis.hpp"
#include "gsr/error.hpp"
#include "gsr/kernel.hpp"
#include "gsr/model.hpp"
#include "gsr/oracle.hpp"
#include "gsr/solver.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <tuple>
#include <utility>

namespace gsr::cli {
namespace {

constexpr const char* kProgram = "gsr-rl";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string command;
    double theta = 0.0;
    double threshold = 0.0;
    double gamma = 0.0;
    bool has_threshold = false;
    bool has_gamma = false;
    std::vector<double> headstarts{0.0};
    std::string nodes = "256";
    std::vector<std::string> methods{"hat"};
    std::string psi = "gsr";
    std::string format = "csv";
    std::string output;
    std::uint64_t seed = 1;
    std::size_t paths = 100000;
    std::size_t cap = 0;
    std::size_t horizon = 0;
    double epsilon_tail = kDefaultEpsilonTail;
    std::vector<std::size_t> window_start{0};
    std::vector<std::size_t> window_length{1};
    double rel_tol = kDefaultCalibrationTolerance;
    std::size_t probe_points = kDefaultProbePoints;
    std::string dump_matrix;
    std::string histogram;
};

// Which option groups a command accepts. Drives both parser construction and
// the canonical config line.
struct CommandSpec {
    const char* name;
    const char* help;
    bool threshold = true;      // --threshold
    bool gamma = true;          // --gamma (+ --rel-tol)
    bool headstart_list = false;
    bool node_list = false;
    bool method = true;
    bool method_list = false;
    bool matrix_dump = false;
    bool horizon = false;
    bool epsilon = false;
    bool windows = false;
    bool simulation = false;
    bool probes = false;
};

const std::vector<CommandSpec>& commands() {
    static const std::vector<CommandSpec> specs = [] {
        std::vector<CommandSpec> v;
        CommandSpec arl{"arl", "ARL to false alarm at one or more headstarts"};
        arl.headstart_list = true;
        arl.matrix_dump = true;
        v.push_back(arl);

        CommandSpec moments{"moments", "ARL and run-length standard deviation"};
        moments.headstart_list = true;
        moments.matrix_dump = true;
        v.push_back(moments);

        CommandSpec survival{"survival", "survival function rho_k with pmf and geometric reference"};
        survival.matrix_dump = true;
        survival.horizon = true;
        survival.epsilon = true;
        v.push_back(survival);

        CommandSpec pmf{"pmf", "run-length probability mass function"};
        pmf.matrix_dump = true;
        pmf.horizon = true;
        pmf.epsilon = true;
        v.push_back(pmf);

        CommandSpec pfa{"pfa", "conditional probability of false alarm in windows (k, k+m]"};
        pfa.matrix_dump = true;
        pfa.windows = true;
        v.push_back(pfa);

        CommandSpec calibrate{"calibrate", "threshold A achieving a target ARL"};
        calibrate.threshold = false;
        v.push_back(calibrate);

        CommandSpec converge{"converge", "Richardson convergence table over partition sizes"};
        converge.node_list = true;
        converge.method_list = true;
        converge.probes = true;
        v.push_back(converge);

        CommandSpec compare{"compare", "hat collocation against the midpoint baseline"};
        compare.node_list = true;
        compare.method = false;
        compare.probes = true;
        v.push_back(compare);

        CommandSpec simulate{"simulate", "Monte Carlo estimates under the pre-change measure"};
        simulate.method = false;
        simulate.horizon = true;
        simulate.windows = true;
        simulate.simulation = true;
        v.push_back(simulate);
        return v;
    }();
    return specs;
}

const CommandSpec& spec_for(const std::string& name) {
    for (const auto& s : commands()) {
        if (name == s.name) return s;
    }
    throw UsageError("unknown command " + name);
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) s += sep;
        s += parts[i];
    }
    return s;
}

template <typename T>
std::string join_numbers(const std::vector<T>& values) {
    std::vector<std::string> parts;
    for (const auto& v : values) {
        if constexpr (std::is_floating_point_v<T>) {
            parts.push_back(format_number(v));
        } else {
            parts.push_back(std::to_string(v));
        }
    }
    return join(parts, ",");
}

/// Full argument list reproducing the table (output destinations excluded).
std::vector<std::string> canonical_args(const Options& o) {
    const auto& spec = spec_for(o.command);
    std::vector<std::string> a{o.command, "--theta", format_number(o.theta)};
    if (o.has_threshold) {
        a.insert(a.end(), {"--threshold", format_number(o.threshold)});
    } else {
        a.insert(a.end(), {"--gamma", format_number(o.gamma), "--rel-tol", format_number(o.rel_tol)});
    }
    a.insert(a.end(), {"--headstart", join_numbers(o.headstarts)});
    a.insert(a.end(), {"--nodes", o.nodes});
    if (spec.method) a.insert(a.end(), {"--method", join(o.methods, ",")});
    a.insert(a.end(), {"--psi", o.psi});
    if (spec.horizon) a.insert(a.end(), {"--horizon", std::to_string(o.horizon)});
    if (spec.epsilon) a.insert(a.end(), {"--epsilon-tail", format_number(o.epsilon_tail)});
    if (spec.windows) {
        a.insert(a.end(), {"--window-start", join_numbers(o.window_start), "--window-length",
                           join_numbers(o.window_length)});
    }
    if (spec.simulation) {
        a.insert(a.end(), {"--paths", std::to_string(o.paths), "--seed", std::to_string(o.seed),
                           "--cap", std::to_string(o.cap)});
    }
    if (spec.probes) a.insert(a.end(), {"--probe-points", std::to_string(o.probe_points)});
    a.insert(a.end(), {"--format", o.format});
    return a;
}

Method parse_method(const std::string& m) {
    if (m == "hat") return Method::CollocationHat;
    if (m == "midpoint") return Method::Midpoint;
    throw UsageError("unknown method '" + m + "' (expected hat or midpoint)");
}

const char* method_name(Method m) { return m == Method::CollocationHat ? "hat" : "midpoint"; }

ChangePointModel make_model(const Options& o) {
    if (o.psi == "gsr") return ChangePointModel::gsr(o.theta);
    if (o.psi == "cusum") return ChangePointModel::cusum(o.theta);
    throw UsageError("unknown psi '" + o.psi + "' (expected gsr or cusum)");
}

std::size_t single_size(const Options& o) {
    auto sizes = parse_size_list(o.nodes);
    if (sizes.size() != 1) throw UsageError("--nodes takes a single value for " + o.command);
    return sizes.front();
}

double single_headstart(const Options& o) {
    if (o.headstarts.size() != 1) throw UsageError("--headstart takes a single value for " + o.command);
    return o.headstarts.front();
}

Method single_method(const Options& o) {
    if (o.methods.size() != 1) throw UsageError("--method takes a single value for " + o.command);
    return parse_method(o.methods.front());
}

struct Context {
    Options opts;
    ChangePointModel model;
    double threshold = 0.0;
    std::vector<std::string> comments;
};

/// Resolves the threshold, calibrating first when --gamma was given.
double resolve_threshold(Context& ctx, Method method, std::size_t nodes) {
    const auto& o = ctx.opts;
    if (o.has_threshold) return o.threshold;
    double r = o.headstarts.empty() ? 0.0 : o.headstarts.front();
    auto cal = calibrate_threshold(ctx.model, o.gamma, r, nodes, o.rel_tol, method);
    ctx.comments.push_back("calibrated_threshold=" + format_number(cal.threshold) +
                           " achieved_arl=" + format_number(cal.achieved));
    return cal.threshold;
}

KernelMatrixPtr build_matrix(Context& ctx, Method method, std::size_t nodes) {
    ctx.threshold = resolve_threshold(ctx, method, nodes);
    auto matrix = assemble(ctx.model, method, nodes, ctx.threshold);
    if (!ctx.opts.dump_matrix.empty()) write_matrix_csv(*matrix, ctx.opts.dump_matrix);
    return matrix;
}

Cell num(double v) { return v; }
Cell integer(std::size_t v) { return static_cast<std::int64_t>(v); }

Table cmd_arl(Context& ctx, bool with_moments) {
    auto matrix = build_matrix(ctx, single_method(ctx.opts), single_size(ctx.opts));
    auto arl = solve_arl(matrix);
    std::optional<RunLengthSolution> mu2;
    if (with_moments) mu2 = solve_second_moment(arl, matrix);
    Table t;
    t.columns = with_moments ? std::vector<std::string>{"r", "arl", "stddev"}
                             : std::vector<std::string>{"r", "arl"};
    for (double r : ctx.opts.headstarts) {
        std::vector<Cell> row{num(r), num(evaluate_iterated(arl, r))};
        if (mu2) row.push_back(num(standard_deviation(arl, *mu2, r)));
        t.rows.push_back(std::move(row));
    }
    return t;
}

SurvivalSeries series_for(Context& ctx, KernelMatrixPtr& matrix, double r, std::size_t horizon,
                          double* arl_out) {
    matrix = build_matrix(ctx, single_method(ctx.opts), single_size(ctx.opts));
    auto arl = solve_arl(matrix);
    double l = evaluate_iterated(arl, r);
    if (arl_out) *arl_out = l;
    std::size_t k_max = horizon > 0 ? horizon : default_survival_horizon(l);
    return survival_series(matrix, r, ctx.opts.epsilon_tail, k_max);
}

Table cmd_survival(Context& ctx) {
    KernelMatrixPtr matrix;
    double l = 0.0;
    double r = single_headstart(ctx.opts);
    auto series = series_for(ctx, matrix, r, ctx.opts.horizon, &l);
    auto p = pmf(series);
    Table t;
    t.columns = {"k", "rho", "pmf", "geom_ref"};
    const double q = 1.0 - 1.0 / l;
    for (std::size_t k = 0; k < series.rho.size(); ++k) {
        t.rows.push_back({integer(k), num(series.rho[k]), num(p[k]),
                          num(std::pow(q, static_cast<double>(k)))});
    }
    return t;
}

Table cmd_pmf(Context& ctx) {
    KernelMatrixPtr matrix;
    auto series = series_for(ctx, matrix, single_headstart(ctx.opts), ctx.opts.horizon, nullptr);
    auto p = pmf(series);
    Table t;
    t.columns = {"k", "pmf"};
    for (std::size_t k = 1; k < p.size(); ++k) t.rows.push_back({integer(k), num(p[k])});
    return t;
}

Table cmd_pfa(Context& ctx) {
    std::size_t horizon = 0;
    for (std::size_t m : ctx.opts.window_length) {
        if (m == 0) throw UsageError("--window-length values must be >= 1");
    }
    for (std::size_t k : ctx.opts.window_start) {
        for (std::size_t m : ctx.opts.window_length) horizon = std::max(horizon, k + m);
    }
    auto matrix = build_matrix(ctx, single_method(ctx.opts), single_size(ctx.opts));
    // the series must reach k + m even when rho drops below the default tail cut
    auto series = survival_series(matrix, single_headstart(ctx.opts),
                                  std::numeric_limits<double>::min(), horizon);
    Table t;
    t.columns = {"k", "m", "pfa"};
    for (std::size_t k : ctx.opts.window_start) {
        for (std::size_t m : ctx.opts.window_length) {
            t.rows.push_back({integer(k), integer(m), num(conditional_pfa(series, k, m))});
        }
    }
    return t;
}

Table cmd_calibrate(Context& ctx) {
    const auto& o = ctx.opts;
    auto cal = calibrate_threshold(ctx.model, o.gamma, single_headstart(o), single_size(o), o.rel_tol,
                                   single_method(o));
    Table t;
    t.columns = {"gamma", "r", "threshold", "arl", "iterations"};
    t.rows.push_back({num(cal.target), num(cal.headstart), num(cal.threshold), num(cal.achieved),
                      integer(cal.iterations)});
    return t;
}

Cell optional_cell(const std::optional<double>& v) {
    if (v) return *v;
    return std::monostate{};
}

Table cmd_converge(Context& ctx) {
    const auto& o = ctx.opts;
    auto sizes = parse_size_list(o.nodes);
    double r = single_headstart(o);
    std::vector<Method> methods;
    for (const auto& m : o.methods) methods.push_back(parse_method(m));
    ctx.threshold = resolve_threshold(ctx, methods.front(), sizes.back());
    Table t;
    t.columns = {"N", "method", "value", "rate", "err_est"};
    for (Method m : methods) {
        auto report = convergence_study(ctx.model, ctx.threshold, r, sizes, m, o.probe_points);
        for (const auto& row : report.rows) {
            t.rows.push_back({integer(row.n), std::string(method_name(m)), num(row.value),
                              optional_cell(row.rate), optional_cell(row.error_estimate)});
        }
    }
    return t;
}

Table cmd_compare(Context& ctx) {
    const auto& o = ctx.opts;
    auto sizes = parse_size_list(o.nodes);
    ctx.threshold = resolve_threshold(ctx, Method::CollocationHat, sizes.back());
    auto cmp = compare_methods(ctx.model, ctx.threshold, single_headstart(o), sizes,
                               Method::CollocationHat, Method::Midpoint, o.probe_points);
    ctx.comments.push_back("reference=" + format_number(cmp.reference));
    Table t;
    t.columns = {"N", "hat", "midpoint", "hat_error", "midpoint_error", "hat_rate", "midpoint_rate"};
    for (std::size_t i = 0; i < cmp.rows.size(); ++i) {
        const auto& row = cmp.rows[i];
        t.rows.push_back({integer(row.n), num(row.first_value), num(row.second_value),
                          num(row.first_error), num(row.second_error),
                          optional_cell(cmp.first.rows[i].rate), optional_cell(cmp.second.rows[i].rate)});
    }
    return t;
}

const char* quantity_name(Quantity q) {
    switch (q) {
        case Quantity::ARL: return "arl";
        case Quantity::StdDev: return "stddev";
        case Quantity::Survival: return "survival";
        case Quantity::PFA: return "pfa";
        case Quantity::MartingaleMean: return "martingale";
    }
    return "?";
}

Table cmd_simulate(Context& ctx) {
    const auto& o = ctx.opts;
    double r = single_headstart(o);
    ctx.threshold = resolve_threshold(ctx, Method::CollocationHat, single_size(o));
    SimulationOptions sim;
    sim.paths = o.paths;
    sim.seed = o.seed;
    sim.cap = o.cap;
    sim.survival_horizon = o.horizon;
    sim.keep_histogram = !o.histogram.empty();
    for (std::size_t k : o.window_start) {
        for (std::size_t m : o.window_length) sim.pfa_windows.emplace_back(k, m);
    }
    auto res = simulate_run_length(ctx.model, ctx.threshold, r, sim);
    ctx.comments.push_back("capped_paths=" + std::to_string(res.capped_paths) +
                           (res.unreliable ? " unreliable=1 (capped paths bias moments low)"
                                           : " unreliable=0"));
    if (!o.histogram.empty()) {
        std::ofstream h(o.histogram);
        if (!h) throw UsageError("cannot open histogram path " + o.histogram);
        h << "run_length,count\n";
        for (std::size_t n = 0; n < res.histogram.size(); ++n) {
            if (res.histogram[n] > 0) h << n << ',' << res.histogram[n] << '\n';
        }
    }
    Table t;
    t.columns = {"quantity", "k", "m", "estimate", "std_error", "paths", "seed", "cap"};
    auto add = [&](const MonteCarloEstimate& e, bool with_k, bool with_m) {
        t.rows.push_back({std::string(quantity_name(e.quantity)),
                          with_k ? integer(e.k) : Cell{}, with_m ? integer(e.m) : Cell{},
                          num(e.estimate), num(e.std_error), integer(e.paths),
                          static_cast<std::int64_t>(e.seed), integer(e.cap)});
    };
    add(res.arl, false, false);
    add(res.stddev, false, false);
    for (const auto& e : res.survival) add(e, true, false);
    for (const auto& e : res.pfa) add(e, true, true);
    return t;
}

void add_common(CLI::App* sub, Options& o, const CommandSpec& spec, CLI::Option*& threshold_opt,
                CLI::Option*& gamma_opt) {
    sub->add_option("--theta", o.theta, "post-change mean shift (> 0)")->required();
    threshold_opt = nullptr;
    gamma_opt = nullptr;
    if (spec.threshold) threshold_opt = sub->add_option("--threshold,-A", o.threshold, "detection threshold A");
    if (spec.gamma) {
        gamma_opt = sub->add_option("--gamma", o.gamma, "target ARL; the threshold is calibrated");
        sub->add_option("--rel-tol", o.rel_tol, "calibration relative tolerance");
    }
    if (threshold_opt && gamma_opt) threshold_opt->excludes(gamma_opt);
    sub->add_option("--headstart,-r", o.headstarts, "initial statistic value(s) R_0 >= -1")
        ->delimiter(',');
    sub->add_option("--nodes,-N", o.nodes,
                    spec.node_list ? "partition sizes, e.g. 2,4,...,4096" : "partition size");
    if (spec.method) {
        auto* m = sub->add_option("--method", o.methods, "hat or midpoint");
        m->delimiter(',');
    }
    sub->add_option("--psi", o.psi, "statistic recursion: gsr or cusum");
    sub->add_option("--format", o.format, "csv or json");
    sub->add_option("--output,-o", o.output, "output file (default stdout)");
    if (spec.matrix_dump) sub->add_option("--dump-matrix", o.dump_matrix, "write the kernel matrix as CSV");
    if (spec.horizon) sub->add_option("--horizon", o.horizon, "largest k (0 = automatic)");
    if (spec.epsilon) sub->add_option("--epsilon-tail", o.epsilon_tail, "stop once rho_k drops below this");
    if (spec.windows) {
        sub->add_option("--window-start,-k", o.window_start, "window start(s) k")->delimiter(',');
        sub->add_option("--window-length,-m", o.window_length, "window length(s) m >= 1")->delimiter(',');
    }
    if (spec.simulation) {
        sub->add_option("--paths", o.paths, "number of simulated paths");
        sub->add_option("--seed", o.seed, "64-bit seed");
        sub->add_option("--cap", o.cap, "per-path step cap (0 = 100 * max(A, 1))");
        sub->add_option("--histogram", o.histogram, "write the run-length histogram as CSV");
    }
    if (spec.probes) sub->add_option("--probe-points", o.probe_points, "sup-norm probe grid size");
}

void write_error_record(std::ostream& err, const std::string& kind, const std::string& module,
                        const std::string& message, int code) {
    nlohmann::json rec;
    rec["error"] = {{"kind", kind}, {"module", module}, {"message", message}, {"exit_code", code}};
    err << rec.dump() << '\n';
}

int execute(Options& o, std::ostream& out) {
    const auto& spec = spec_for(o.command);
    if (o.has_threshold == o.has_gamma) {
        throw UsageError(spec.threshold ? "exactly one of --threshold and --gamma is required"
                                        : "--gamma is required");
    }
    if (o.headstarts.empty()) throw UsageError("--headstart needs at least one value");
    if (o.format != "csv" && o.format != "json") throw UsageError("--format must be csv or json");
    Format format = o.format == "json" ? Format::Json : Format::Csv;

    Context ctx{o, make_model(o), 0.0, {}};
    Table table;
    const std::string& c = o.command;
    if (c == "arl") table = cmd_arl(ctx, false);
    else if (c == "moments") table = cmd_arl(ctx, true);
    else if (c == "survival") table = cmd_survival(ctx);
    else if (c == "pmf") table = cmd_pmf(ctx);
    else if (c == "pfa") table = cmd_pfa(ctx);
    else if (c == "calibrate") table = cmd_calibrate(ctx);
    else if (c == "converge") table = cmd_converge(ctx);
    else if (c == "compare") table = cmd_compare(ctx);
    else if (c == "simulate") table = cmd_simulate(ctx);

    std::string config = std::string(kProgram) + " " + join(canonical_args(o), " ");
    if (o.output.empty()) {
        write_table(out, format, config, ctx.comments, table);
    } else {
        std::ofstream file(o.output, std::ios::binary);
        if (!file) throw UsageError("cannot open output path " + o.output);
        write_table(file, format, config, ctx.comments, table);
    }
    return kExitOk;
}

}  // namespace

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::string> tokens;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        tokens.push_back(tok);
    }
    auto to_size = [](const std::string& s) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (...) {
            throw UsageError("invalid size '" + s + "'");
        }
        if (pos != s.size() || v < 1) throw UsageError("invalid size '" + s + "'");
        return static_cast<std::size_t>(v);
    };
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i] != "...") {
            out.push_back(to_size(tokens[i]));
            continue;
        }
        if (out.size() < 2 || i + 1 >= tokens.size()) {
            throw UsageError("'...' needs two leading terms and an end value");
        }
        std::size_t a = out[out.size() - 2];
        std::size_t b = out.back();
        std::size_t end = to_size(tokens[++i]);
        if (b <= a) throw UsageError("'...' progression must increase");
        auto expand = [&](bool geometric) {
            std::vector<std::size_t> terms;
            std::size_t next = geometric ? b * (b / a) : b + (b - a);
            while (next <= end) {
                terms.push_back(next);
                next = geometric ? next * (b / a) : next + (b - a);
            }
            bool hits = terms.empty() ? end == b : terms.back() == end;
            return std::make_pair(hits, terms);
        };
        // geometric wins when both progressions reach the end value (2,4,...,64)
        auto [hit, terms] = b % a == 0 ? expand(true) : std::make_pair(false, std::vector<std::size_t>{});
        if (!hit) std::tie(hit, terms) = expand(false);
        if (!hit) throw UsageError("'...' end value is not on the progression");
        out.insert(out.end(), terms.begin(), terms.end());
    }
    if (out.empty()) throw UsageError("empty size list");
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pre-change run-length distribution of the generalized Shiryaev-Roberts procedure",
                 kProgram};
    app.require_subcommand(1);
    Options o;
    std::map<std::string, std::pair<CLI::Option*, CLI::Option*>> source_opts;
    for (const auto& spec : commands()) {
        auto* sub = app.add_subcommand(spec.name, spec.help);
        CLI::Option* th = nullptr;
        CLI::Option* ga = nullptr;
        add_common(sub, o, spec, th, ga);
        source_opts[spec.name] = {th, ga};
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        write_error_record(err, "usage", "cli", e.what(), kExitUsage);
        return kExitUsage;
    }

    for (auto* sub : app.get_subcommands()) {
        o.command = sub->get_name();
        auto [th, ga] = source_opts[o.command];
        o.has_threshold = th != nullptr && th->count() > 0;
        o.has_gamma = ga != nullptr && ga->count() > 0;
        if (!spec_for(o.command).method || sub->get_option("--method")->count() == 0) {
            o.methods = {"hat"};
        }
    }

    try {
        return execute(o, out);
    } catch (const UsageError& e) {
        write_error_record(err, "usage", "cli", e.what(), kExitUsage);
        return kExitUsage;
    } catch (const Error& e) {
        bool usage = e.kind() == ErrorKind::Argument || e.kind() == ErrorKind::Domain;
        int code = usage ? kExitUsage : kExitNumeric;
        write_error_record(err, std::string(to_string(e.kind())), e.module(), e.what(), code);
        return code;
    } catch (const std::exception& e) {
        write_error_record(err, "internal", "cli", e.what(), kExitNumeric);
        return kExitNumeric;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace gsr::cli
