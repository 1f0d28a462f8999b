#include "socdyn/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "socdyn/basins.hpp"
#include "socdyn/classify.hpp"
#include "socdyn/dynamics.hpp"
#include "socdyn/portrait.hpp"
#include "socdyn/report.hpp"

namespace socdyn::cli {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    return v;
}

bool is_param_name(std::string_view name) {
    return std::find(kParamNames.begin(), kParamNames.end(), name) != kParamNames.end();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    if (jobs == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += jobs) f(i);
        });
    for (auto& t : pool) t.join();
}

int validation_exit(const ValidationReport& v) {
    if (v.degenerate()) return kDegenerate;
    if (!v.positivity_ok || !v.nondominance_ok) return kInvalidParams;
    return kOk;
}

void print_params(std::ostream& os, const Params& p) {
    os << "params:";
    for (auto name : kParamNames) os << ' ' << name << '=' << param_value(p, name);
    os << '\n';
}

std::ofstream open_output(const std::string& dir, const std::string& file) {
    fs::create_directories(dir);
    std::ofstream f(fs::path(dir) / file);
    if (!f) throw std::runtime_error("cannot write " + (fs::path(dir) / file).string());
    return f;
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

struct Options {
    std::string params_file;
    std::vector<std::string> overrides;
    double tol = kDefaultTol;
    std::uint64_t seed = 42;
    std::string out_dir;
    unsigned jobs = 0;

    std::string x0;
    std::string method = "rk45";
    double t_max = 1e5;
    double step = 1e-2;

    std::vector<std::string> axes;
    long long samples = 2000;
    std::size_t trajectories = 6;
};

Params load_params(const Options& o) {
    std::map<std::string, double> values;
    if (!o.params_file.empty()) {
        std::ifstream f(o.params_file);
        if (!f) throw std::invalid_argument("cannot read params file " + o.params_file);
        std::stringstream buf;
        buf << f.rdbuf();
        values = parse_key_values(buf.str());
    }
    return assemble_params(values, o.overrides);
}

IntegratorConfig integrator_config(const Options& o) {
    IntegratorConfig cfg;
    if (o.method == "rk45")
        cfg.method = Method::Rk45;
    else if (o.method == "rk4")
        cfg.method = Method::Rk4;
    else
        throw std::invalid_argument("unknown method " + o.method + " (rk4 or rk45)");
    cfg.max_time = o.t_max;
    cfg.step = o.step;
    cfg.check();
    return cfg;
}

int cmd_check(const Options& o, std::ostream& out) {
    const Params p = load_params(o);
    const ValidationReport v = validate(p, o.tol);
    print_params(out, p);
    out << "positivity: " << (v.positivity_ok ? "ok" : "fails") << '\n';
    out << "nondominance: " << (v.nondominance_ok ? "ok" : "fails") << '\n';
    out << "branch: " << (v.branch ? std::string(to_string(*v.branch)) : "none") << '\n';
    out << "degenerate: "
        << (v.degenerate_quantities.empty() ? "none" : join(v.degenerate_quantities, ", ")) << '\n';
    for (const auto& m : v.messages) out << "note: " << m << '\n';
    try {
        const NashFlags nash = nash_vertices(p, o.tol);
        std::string letters;
        for (char c : nash.letters()) letters += std::string(letters.empty() ? "" : " ") + c;
        out << "nash vertices: " << (letters.empty() ? "none" : letters) << '\n';
    } catch (const DegenerateError&) {
        out << "nash vertices: undetermined\n";
    }
    const auto dom = dominance_relations(p);
    out << "dominance:";
    if (dom.empty()) out << " none";
    for (const auto& d : dom) out << ' ' << letter(d.dominated) << '<' << letter(d.dominating);
    out << '\n';
    const int code = validation_exit(v);
    out << "status: "
        << (code == kOk           ? "valid"
            : code == kDegenerate ? "degenerate"
                                  : "invalid")
        << '\n';
    return code;
}

int cmd_equilibria(const Options& o, std::ostream& out) {
    const Params p = load_params(o);
    const ValidationReport v = validate(p, o.tol);
    const int code = validation_exit(v);
    Json doc = code == kOk ? to_json(classify_global(p, o.tol))
                           : partial_report(p, v, v.degenerate_quantities);
    const std::string text = canonical_dump(doc);
    out << text;
    if (!o.out_dir.empty()) open_output(o.out_dir, "report.json") << text;
    return code;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
    const Params p = load_params(o);
    const IntegratorConfig cfg = integrator_config(o);
    const auto parts = split(o.x0, ',');
    if (parts.size() != 4) throw std::invalid_argument("--x0 needs four comma-separated shares");
    std::array<double, 4> x{};
    for (int i = 0; i < 4; ++i) x[i] = parse_number(parts[i]);
    const SimplexState x0 = SimplexState::make(x);

    const ValidationReport v = validate(p, o.tol);
    if (const int code = validation_exit(v); code != kOk) {
        err << "parameters do not validate: " << join(v.messages, "; ")
            << join(v.degenerate_quantities, ", ") << '\n';
        return code;
    }
    const RegimeReport regimes = classify_global(p, o.tol);
    const Trajectory traj = integrate(x0, p, cfg);

    const std::string dir = o.out_dir.empty() ? "." : o.out_dir;
    {
        auto f = open_output(dir, "trajectory.csv");
        write_trajectory_csv(f, traj);
    }
    out << "steps: " << traj.states.size() - 1 << '\n';
    out << "final time: " << traj.final_time() << '\n';
    out << "verdict: " << to_string(traj.verdict) << '\n';
    const auto& xf = traj.final_state();
    out << std::setprecision(12) << "final state: " << xf.x1() << ',' << xf.x2() << ',' << xf.x3()
        << ',' << xf.x4() << '\n';
    if (traj.verdict == Verdict::StepFailure) {
        err << "integration failed at t=" << traj.final_time() << '\n';
        out << "attractor: unresolved\n";
        return kIntegrationFailure;
    }
    std::string label = "unresolved";
    for (const auto& a : regimes.global_attractors)
        if (max_abs_diff(a.location, xf) <= kDefaultMatchTol) label = a.label;
    out << "attractor: " << label << '\n';
    return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    std::vector<SweepAxis> axes;
    for (const auto& a : o.axes) axes.push_back(parse_axis(a));
    if (axes.empty() || axes.size() > 2)
        throw std::invalid_argument("sweep takes one or two --axis");
    if (axes.size() == 2 && axes[0].name == axes[1].name)
        throw std::invalid_argument("sweep axes must name different parameters");
    // Swept parameters need no base value.
    std::vector<std::string> overrides = o.overrides;
    for (const auto& a : axes) overrides.push_back(a.name + "=" + std::to_string(a.min));
    Options base = o;
    base.overrides = overrides;
    const Params p = load_params(base);
    const auto rows = run_sweep(p, axes, o.tol, o.jobs);
    std::ostringstream csv;
    write_sweep_csv(csv, axes, rows);
    out << csv.str();
    if (!o.out_dir.empty()) open_output(o.out_dir, "sweep.csv") << csv.str();
    return kOk;
}

int cmd_basins(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.samples < 1) throw std::invalid_argument("-n must be at least 1");
    const Params p = load_params(o);
    const ValidationReport v = validate(p, o.tol);
    if (const int code = validation_exit(v); code != kOk) {
        err << "parameters do not validate\n";
        return code;
    }
    IntegratorConfig cfg = integrator_config(o);
    const BasinReport b = estimate_basins(p, static_cast<std::size_t>(o.samples), o.seed, cfg,
                                          o.jobs, kDefaultMatchTol, o.tol);
    const std::string text = canonical_dump(to_json(b));
    out << text;
    if (!o.out_dir.empty()) {
        open_output(o.out_dir, "basins.json") << text;
        auto f = open_output(o.out_dir, "basins.csv");
        write_basin_csv(f, b);
    }
    return kOk;
}

int cmd_portrait(const Options& o, std::ostream& out, std::ostream& err) {
    const Params p = load_params(o);
    const ValidationReport v = validate(p, o.tol);
    if (const int code = validation_exit(v); code != kOk) {
        err << "parameters do not validate; no drawing written\n";
        return code;
    }
    PortraitOptions opt;
    opt.trajectories_per_face = o.trajectories;
    const Portrait portrait = build_portrait(p, opt, o.tol);
    const std::string dir = o.out_dir.empty() ? "." : o.out_dir;
    open_output(dir, "portrait.svg") << render_svg(portrait);
    {
        auto f = open_output(dir, "portrait_trajectories.csv");
        write_portrait_csv(f, portrait);
    }
    out << "wrote " << (fs::path(dir) / "portrait.svg").string() << " with "
        << portrait.trajectories.size() << " trajectories\n";
    return kOk;
}

}  // namespace

std::map<std::string, double> parse_key_values(std::string_view text) {
    std::map<std::string, double> out;
    std::size_t lineno = 0;
    for (auto line : split(text, '\n')) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key=value");
        const std::string key(trim(line.substr(0, eq)));
        if (!is_param_name(key))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" + key +
                                        "'");
        out[key] = parse_number(line.substr(eq + 1));
    }
    return out;
}

Params assemble_params(const std::map<std::string, double>& file_values,
                       const std::vector<std::string>& overrides) {
    auto values = file_values;
    for (const auto& o : overrides) {
        const auto kv = parse_key_values(o);
        if (kv.empty()) throw std::invalid_argument("empty --set value");
        for (const auto& [k, v] : kv) values[k] = v;
    }
    Params p;
    std::vector<std::string> missing;
    for (auto name : kParamNames) {
        const auto it = values.find(std::string(name));
        if (it == values.end())
            missing.emplace_back(name);
        else
            param_ref(p, name) = it->second;
    }
    if (!missing.empty()) throw std::invalid_argument("missing parameters: " + join(missing, ", "));
    return p;
}

std::vector<double> SweepAxis::values() const {
    std::vector<double> out;
    for (int k = 0; k <= steps; ++k) out.push_back(min + (max - min) * k / steps);
    return out;
}

SweepAxis parse_axis(std::string_view spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 4) throw std::invalid_argument("axis must be NAME:MIN:MAX:STEPS");
    SweepAxis a;
    a.name = std::string(trim(parts[0]));
    if (!is_param_name(a.name)) throw std::invalid_argument("unknown parameter '" + a.name + "'");
    a.min = parse_number(parts[1]);
    a.max = parse_number(parts[2]);
    const auto s = trim(parts[3]);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), a.steps);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("steps must be an integer");
    if (a.steps < 2) throw std::invalid_argument("steps must be at least 2");
    if (!(a.max > a.min)) throw std::invalid_argument("axis needs MIN < MAX");
    return a;
}

std::vector<SweepRow> run_sweep(const Params& base, const std::vector<SweepAxis>& axes, double tol,
                                unsigned jobs) {
    std::vector<std::vector<double>> grid{{}};
    for (const auto& axis : axes) {
        std::vector<std::vector<double>> next;
        for (const auto& prefix : grid)
            for (double v : axis.values()) {
                next.push_back(prefix);
                next.back().push_back(v);
            }
        grid = std::move(next);
    }

    std::vector<SweepRow> rows(grid.size());
    parallel_for(grid.size(), jobs, [&](std::size_t i) {
        Params p = base;
        for (std::size_t k = 0; k < axes.size(); ++k) param_ref(p, axes[k].name) = grid[i][k];
        SweepRow row;
        row.values = grid[i];
        const ValidationReport v = validate(p, tol);
        row.degenerate = v.degenerate();
        row.status = v.ok() ? "ok" : v.degenerate() ? "degenerate" : "invalid";
        if (v.branch) row.branch = std::string(to_string(*v.branch));
        try {
            row.nash = nash_vertices(p, tol).letters();
        } catch (const DegenerateError&) {
            row.nash = "?";
        }
        if (v.ok()) {
            const RegimeReport r = classify_global(p, tol);
            for (std::size_t f = 0; f < 4; ++f) row.figures[f] = r.edges[f].figure;
            row.attractors = r.global_attractors.size();
        } else {
            // A face whose own preconditions hold still has a definite regime.
            for (std::size_t f = 0; f < 4; ++f) {
                try {
                    row.figures[f] = classify_edge(kAllFaces[f], p, tol).figure;
                } catch (const Error&) {
                    row.figures[f] = "-";
                }
            }
        }
        rows[i] = std::move(row);
    });
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepAxis>& axes,
                     const std::vector<SweepRow>& rows) {
    for (const auto& a : axes) os << a.name << ',';
    os << "status,branch,nash,fig_SN,fig_SO,fig_SH,fig_SP,attractors,degenerate\n";
    const auto old = os.precision(10);
    for (const auto& r : rows) {
        for (double v : r.values) os << v << ',';
        os << r.status << ',' << r.branch << ',' << r.nash;
        for (const auto& f : r.figures) os << ',' << f;
        os << ',';
        if (r.attractors) os << *r.attractors;
        os << ',' << (r.degenerate ? 1 : 0) << '\n';
    }
    os.precision(old);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Four-strategy replicator game: classification, simulation, basins", "socdyn"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--params", o.params_file, "key=value parameter file");
        sub->add_option("--set", o.overrides, "override one parameter, KEY=VAL (repeatable)");
        sub->add_option("--tol", o.tol, "classification tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--out", o.out_dir, "output directory");
        sub->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
    };
    auto integration = [&](CLI::App* sub) {
        sub->add_option("--method", o.method, "rk45 (adaptive) or rk4 (fixed step)");
        sub->add_option("--t-max", o.t_max, "integration horizon");
        sub->add_option("--step", o.step, "fixed step (rk4) or initial step (rk45)");
    };

    auto* check = app.add_subcommand("check", "validate parameters, list Nash vertices");
    auto* equilibria = app.add_subcommand("equilibria", "classify regimes, print JSON report");
    auto* simulate = app.add_subcommand("simulate", "integrate one trajectory");
    auto* sweep = app.add_subcommand("sweep", "regime map over one or two parameters");
    auto* basins = app.add_subcommand("basins", "Monte Carlo basin volumes");
    auto* portrait = app.add_subcommand("portrait", "SVG phase portrait on the planar net");
    for (auto* sub : {check, equilibria, simulate, sweep, basins, portrait}) common(sub);
    integration(simulate);
    integration(basins);
    simulate->add_option("--x0", o.x0, "initial shares a,b,c,d")->required();
    sweep->add_option("--axis", o.axes, "NAME:MIN:MAX:STEPS (up to two)")->required();
    basins->add_option("-n,--samples", o.samples, "number of starts");
    portrait->add_option("--trajectories", o.trajectories, "lattice trajectories per face");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (check->parsed()) return cmd_check(o, out);
        if (equilibria->parsed()) return cmd_equilibria(o, out);
        if (simulate->parsed()) return cmd_simulate(o, out, err);
        if (sweep->parsed()) return cmd_sweep(o, out);
        if (basins->parsed()) return cmd_basins(o, out, err);
        if (portrait->parsed()) return cmd_portrait(o, out, err);
    } catch (const DegenerateError& e) {
        err << "degenerate: " << e.what() << '\n';
        return kDegenerate;
    } catch (const InvalidParamsError& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return kInvalidParams;
    } catch (const IntegrationError& e) {
        err << "integration failed: " << e.what() << '\n';
        return kIntegrationFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace socdyn::cli
