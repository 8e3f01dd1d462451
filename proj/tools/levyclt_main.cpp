#include "levyclt/batch_io.hpp"
#include "levyclt/config.hpp"
#include "levyclt/diagnostics.hpp"
#include "levyclt/distances.hpp"
#include "levyclt/errors.hpp"
#include "levyclt/simulate.hpp"
#include "levyclt/special.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

namespace {

using levyclt::ConfigError;
using levyclt::IoError;
using levyclt::NumericError;
using json = nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw IoError("cannot open for writing: " + path);
    os << content;
    if (!os)
        throw IoError("write failed: " + path);
}

// Shared plumbing: config file + flag overrides, seed, threads, out stem.
struct Common {
    std::string config_path;
    std::string out = "out";
    std::uint64_t seed = 0;
    bool seed_given = false;
    int threads = 0;

    std::string family;
    double sigma_shell = 0.0, beta = 0.0, outer_radius = 0.0, kappa = 0.0;
    int dim = 0;
    std::vector<double> gaussian_cov;

    CLI::Option* opt_family = nullptr;
    CLI::Option* opt_sigma = nullptr;
    CLI::Option* opt_beta = nullptr;
    CLI::Option* opt_outer = nullptr;
    CLI::Option* opt_kappa = nullptr;
    CLI::Option* opt_dim = nullptr;
    CLI::Option* opt_cov = nullptr;
    CLI::Option* opt_seed = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "key = value config file");
        cmd->add_option("--out", out, "output stem (files get .csv/.json suffixes)");
        opt_seed = cmd->add_option("--seed", seed, "root seed (auto-generated and echoed if absent)");
        cmd->add_option("--threads", threads, "worker threads (0 = available parallelism)");
        opt_family = cmd->add_option("--family", family, "powerlog | boundedshell | zero");
        opt_sigma = cmd->add_option("--sigma-shell", sigma_shell, "inner radius");
        opt_beta = cmd->add_option("--beta", beta, "log exponent (powerlog)");
        opt_outer = cmd->add_option("--outer-radius", outer_radius, "outer radius (boundedshell)");
        opt_dim = cmd->add_option("--dim", dim, "dimension");
        opt_cov = cmd->add_option("--gaussian-cov", gaussian_cov, "row-major entries, or one scalar");
        opt_kappa = cmd->add_option("--kappa", kappa, "truncation constant (default: auto grid search)");
    }

    std::map<std::string, std::string> resolved_kv() const {
        std::map<std::string, std::string> kv;
        if (!config_path.empty())
            kv = levyclt::load_key_values(config_path);
        if (opt_family->count())
            kv["family"] = family;
        if (opt_sigma->count())
            kv["sigma_shell"] = fmt17(sigma_shell);
        if (opt_beta->count())
            kv["beta"] = fmt17(beta);
        if (opt_outer->count())
            kv["outer_radius"] = fmt17(outer_radius);
        if (opt_dim->count())
            kv["dim"] = std::to_string(dim);
        if (opt_cov->count()) {
            std::string s;
            for (size_t i = 0; i < gaussian_cov.size(); ++i)
                s += (i ? " " : "") + fmt17(gaussian_cov[i]);
            kv["gaussian_cov"] = s;
        }
        if (opt_kappa->count())
            kv["kappa"] = fmt17(kappa);
        return kv;
    }

    int resolved_threads() const {
        if (threads > 0)
            return threads;
        const unsigned hc = std::thread::hardware_concurrency();
        return hc ? static_cast<int>(hc) : 1;
    }

    std::uint64_t resolved_seed() {
        if (!seed_given && opt_seed->count())
            seed_given = true;
        if (!seed_given) {
            std::random_device rd;
            seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
            seed_given = true;
        }
        return seed;
    }
};

struct Resolved {
    levyclt::TripletConfig cfg;
    double kappa = 1.0;
    std::uint64_t seed = 0;
    json echo; // config echo, written next to each output
};

Resolved resolve(Common& common, const std::string& command) {
    Resolved r;
    const auto kv = common.resolved_kv();
    r.cfg = levyclt::triplet_from_key_values(kv);
    r.kappa = r.cfg.kappa ? *r.cfg.kappa : levyclt::choose_kappa(r.cfg.triplet);
    r.seed = common.resolved_seed();
    r.echo["command"] = command;
    for (const auto& [k, v] : kv)
        r.echo[k] = v;
    r.echo["kappa"] = fmt17(r.kappa);
    r.echo["seed"] = r.seed;
    return r;
}

void write_config_echo(const std::string& stem, const json& echo) {
    write_file(stem + ".config.json", echo.dump(2) + "\n");
}

std::vector<double> make_grid(double t_min, double t_max, double ratio,
                              const std::vector<double>& explicit_t) {
    if (!explicit_t.empty()) {
        for (size_t i = 1; i < explicit_t.size(); ++i)
            if (!(explicit_t[i] > explicit_t[i - 1]))
                throw ConfigError("--t list must be strictly increasing");
        return explicit_t;
    }
    return levyclt::geometric_grid(t_min, t_max, ratio);
}

// ---------------------------------------------------------------- scaling

int cmd_scaling(Common& common, double t_min, double t_max, double ratio,
                const std::vector<double>& t_list) {
    Resolved r = resolve(common, "scaling");
    const auto grid = make_grid(t_min, t_max, ratio, t_list);
    if (grid.empty())
        throw ConfigError("empty t grid");
    r.echo["t_min"] = fmt17(grid.front());
    r.echo["t_max"] = fmt17(grid.back());
    r.echo["grid_size"] = grid.size();

    const auto& tri = r.cfg.triplet;
    const int d = tri.dim();
    const bool closed = tri.measure.family == levyclt::MeasureFamily::PowerLog &&
                        tri.measure.beta == 2.0 && tri.gaussian_cov.isZero(0.0);
    const double cd = closed ? levyclt::surface_area(d) : 0.0;

    std::ostringstream csv;
    csv << "t,kappa";
    for (int i = 0; i < d; ++i)
        csv << ",A_" << i;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            csv << ",B_" << i << j;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            csv << ",Delta_" << i << j;
    csv << ",delta_closed_form\n";

    json rows = json::array();
    for (double t : grid) {
        const auto sp = levyclt::scaling_pair(tri, t, r.kappa);
        csv << fmt17(t) << "," << fmt17(r.kappa);
        json row;
        row["t"] = t;
        json a = json::array(), b = json::array(), dl = json::array();
        for (int i = 0; i < d; ++i) {
            csv << "," << fmt17(sp.A(i));
            a.push_back(sp.A(i));
        }
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                csv << "," << fmt17(sp.B(i, j));
                b.push_back(sp.B(i, j));
            }
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                csv << "," << fmt17(sp.delta(i, j));
                dl.push_back(sp.delta(i, j));
            }
        row["A"] = a;
        row["B"] = b;
        row["Delta"] = dl;
        if (closed) {
            const double sig2 = (cd / d) * (1.0 / std::log(tri.measure.sigma_shell) -
                                            1.0 / std::log(r.kappa * std::sqrt(t)));
            const double v = std::sqrt(std::max(sig2, 0.0));
            csv << "," << fmt17(v);
            row["delta_closed_form"] = v;
        } else {
            csv << ",";
        }
        csv << "\n";
        rows.push_back(row);
    }
    json doc;
    doc["kappa"] = r.kappa;
    doc["rows"] = rows;
    write_file(common.out + ".csv", csv.str());
    write_file(common.out + ".json", doc.dump(2) + "\n");
    write_config_echo(common.out, r.echo);
    return 0;
}

// ------------------------------------------------------------------ sweep

levyclt::DistanceClass parse_class(const std::string& name) {
    if (name == "kolmogorov")
        return levyclt::DistanceClass::KolmogorovRays;
    if (name == "halfspaces")
        return levyclt::DistanceClass::HalfSpaces;
    if (name == "balls")
        return levyclt::DistanceClass::CenteredBalls;
    if (name == "w1")
        return levyclt::DistanceClass::Wasserstein1;
    throw ConfigError("unknown distance class: " + name);
}

int cmd_sweep(Common& common, double t_min, double t_max, double ratio,
              const std::vector<double>& t_list, std::uint32_t mc,
              const std::string& mode_name, std::vector<std::string> class_names) {
    Resolved r = resolve(common, "sweep");
    const auto grid = make_grid(t_min, t_max, ratio, t_list);
    if (grid.empty())
        throw ConfigError("empty t grid");
    levyclt::ScalingMode mode;
    if (mode_name == "adaptive")
        mode = levyclt::ScalingMode::AdaptiveBc;
    else if (mode_name == "fixedsqrt")
        mode = levyclt::ScalingMode::FixedSqrtSigma;
    else
        throw ConfigError("mode must be adaptive or fixedsqrt");
    if (class_names.empty())
        class_names = {"kolmogorov"};
    std::vector<levyclt::DistanceClass> classes;
    for (const auto& name : class_names)
        classes.push_back(parse_class(name));

    r.echo["t_min"] = fmt17(grid.front());
    r.echo["t_max"] = fmt17(grid.back());
    r.echo["grid_size"] = grid.size();
    r.echo["mc_size"] = mc;
    r.echo["mode"] = mode_name;
    {
        std::string s;
        for (size_t i = 0; i < class_names.size(); ++i)
            s += (i ? "," : "") + class_names[i];
        r.echo["classes"] = s;
    }

    std::fprintf(stderr, "sweep: %zu grid points, mc=%u\n", grid.size(), mc);
    const auto report = levyclt::sweep(r.cfg.triplet, mode, grid, mc, classes,
                                       r.kappa, r.seed, common.resolved_threads());
    write_file(common.out + ".json", levyclt::sweep_report_json(report));
    write_file(common.out + ".csv", levyclt::sweep_report_csv(report));
    write_config_echo(common.out, r.echo);
    return 0;
}

// ------------------------------------------------------------ demo-circle

int cmd_demo_circle(Common& common, std::vector<std::uint32_t> n_params,
                    std::uint32_t size, std::uint32_t m_ref, int dim) {
    if (dim < 2)
        throw ConfigError("demo-circle requires dim >= 2");
    if (n_params.empty())
        n_params = {2, 10, 50, 100};
    const std::uint64_t seed = common.resolved_seed();

    json echo;
    echo["command"] = "demo-circle";
    echo["dim"] = dim;
    echo["size"] = size;
    echo["m_ref"] = m_ref;
    echo["seed"] = seed;
    {
        std::string s;
        for (size_t i = 0; i < n_params.size(); ++i)
            s += (i ? "," : "") + std::to_string(n_params[i]);
        echo["n_params"] = s;
    }

    // Reference: uniform law on the unit circle (radius-2 sample halved).
    levyclt::SampleBatch ref =
        levyclt::sample_circle(1, m_ref, dim, levyclt::mix64(seed ^ 0xC1BCu));
    for (double& v : ref.values)
        v *= 0.5;

    const levyclt::Cdf radial_cdf = [](double x) { return x >= 1.0 ? 1.0 : 0.0; };
    const Eigen::VectorXd center = Eigen::VectorXd::Zero(dim);

    std::ostringstream csv;
    csv << "n_param,ball_class,dk_two_sample,dk_ci,dk_exact\n";
    for (std::uint32_t np : n_params) {
        const auto batch = levyclt::sample_circle(np, size, dim, seed);
        const auto ball = levyclt::ball_class_distance(batch, radial_cdf, center);
        const auto dk = levyclt::dk_two_sample(batch, ref);
        csv << np << "," << fmt17(ball.value) << "," << fmt17(dk.value) << ","
            << fmt17(dk.ci) << "," << (dk.exact ? 1 : 0) << "\n";
    }
    write_file(common.out + ".csv", csv.str());
    write_config_echo(common.out, echo);
    return 0;
}

// --------------------------------------------------------------- asmussen

int cmd_asmussen(Common& common, int p, std::vector<std::uint32_t> n_list,
                 std::uint32_t mc) {
    Resolved r = resolve(common, "asmussen");
    if (p < 1 || p > 3)
        throw ConfigError("moment exponent p must be 1, 2 or 3");
    if (n_list.empty())
        n_list = {64, 256, 1024, 4096};
    r.echo["p"] = p;
    r.echo["mc_size"] = mc;

    const auto rows = levyclt::asmussen_small_time(r.cfg.triplet, p, n_list, mc,
                                                   r.seed, common.resolved_threads());
    std::ostringstream csv;
    csv << "n,estimate,ci,target\n";
    for (const auto& row : rows)
        csv << fmt17(row.n) << "," << fmt17(row.estimate) << "," << fmt17(row.ci)
            << "," << fmt17(row.target) << "\n";
    write_file(common.out + ".csv", csv.str());
    write_config_echo(common.out, r.echo);
    return 0;
}

// ------------------------------------------------------------ wasserstein

int cmd_wasserstein(Common& common, double t_min, double t_max, double ratio,
                    const std::vector<double>& t_list, std::uint32_t mc) {
    Resolved r = resolve(common, "wasserstein");
    if (r.cfg.triplet.dim() != 1)
        throw ConfigError("wasserstein table is one-dimensional; set dim = 1");
    const auto grid = make_grid(t_min, t_max, ratio, t_list);
    if (grid.empty())
        throw ConfigError("empty t grid");
    r.echo["t_min"] = fmt17(grid.front());
    r.echo["t_max"] = fmt17(grid.back());
    r.echo["grid_size"] = grid.size();
    r.echo["mc_size"] = mc;

    const levyclt::Cdf cdf = [](double x) { return levyclt::normal_cdf(x); };
    const levyclt::Cdf quantile = [](double p) { return levyclt::normal_quantile(p); };

    std::ostringstream csv;
    csv << "t,dk,w1,ratio\n";
    std::optional<levyclt::RadialSampler> sampler;
    if (r.cfg.triplet.measure.family != levyclt::MeasureFamily::Zero)
        sampler.emplace(r.cfg.triplet.measure);
    for (size_t gi = 0; gi < grid.size(); ++gi) {
        const double t = grid[gi];
        const auto sp = levyclt::scaling_pair(r.cfg.triplet, t, r.kappa);
        auto batch = levyclt::sample_increment(r.cfg.triplet, t, mc, r.seed, gi,
                                               common.resolved_threads(),
                                               sampler ? &*sampler : nullptr);
        std::vector<double> z(batch.n);
        const double a = sp.A(0), b = sp.B(0, 0);
        for (std::uint32_t i = 0; i < batch.n; ++i)
            z[i] = (batch.values[i] - a) / b;
        std::sort(z.begin(), z.end());
        const auto dk = levyclt::ks_1d_one_sample(z, cdf);
        const auto w1 = levyclt::w1_1d(z, cdf, quantile);
        const double ratio_col = w1.value > 0.0 ? dk.value / std::sqrt(w1.value) : 0.0;
        csv << fmt17(t) << "," << fmt17(dk.value) << "," << fmt17(w1.value) << ","
            << fmt17(ratio_col) << "\n";
    }
    write_file(common.out + ".csv", csv.str());
    write_config_echo(common.out, r.echo);
    return 0;
}

// ------------------------------------------------------------ extract-seq

int cmd_extract_seq(Common& common, const std::string& input) {
    if (input.empty())
        throw ConfigError("extract-seq requires --input");
    std::ifstream is(input);
    if (!is)
        throw IoError("cannot open input: " + input);
    std::vector<double> t, g;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty())
            continue;
        for (char& c : line)
            if (c == ',')
                c = ' ';
        std::istringstream ls(line);
        double tv, gv;
        if (!(ls >> tv >> gv)) {
            if (lineno == 1)
                continue; // header
            throw ConfigError("input line " + std::to_string(lineno) +
                              ": expected 't,g'");
        }
        t.push_back(tv);
        g.push_back(gv);
    }
    const auto res = levyclt::extract_vanishing_sequence(t, g);
    json echo;
    echo["command"] = "extract-seq";
    echo["input"] = input;
    echo["points"] = t.size();

    std::ostringstream csv;
    csv << "n,t,g,m\n";
    for (size_t i = 0; i < res.t.size(); ++i)
        csv << (i + 1) << "," << fmt17(res.t[i]) << "," << fmt17(res.g[i]) << ","
            << res.m[i] << "\n";
    write_file(common.out + ".csv", csv.str());
    write_config_echo(common.out, echo);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Levy-process CLT toolkit: scaling matrices, exact simulation, "
                 "distance estimation, regime diagnostics"};
    app.require_subcommand(1);

    // One option set per subcommand: CLI11 option handles are per-App.
    Common c_scaling, c_sweep, c_circle, c_asm, c_w, c_ex;

    double t_min = 1e2, t_max = 1e6, ratio = std::pow(10.0, 0.25);
    std::vector<double> t_list;
    std::uint32_t mc = 10000;

    auto add_grid = [&](CLI::App* cmd) {
        cmd->add_option("--t-min", t_min, "grid start");
        cmd->add_option("--t-max", t_max, "grid end");
        cmd->add_option("--t-ratio", ratio, "geometric ratio in (1, 10]");
        cmd->add_option("--t", t_list, "explicit increasing t list (overrides grid)");
    };

    auto* scaling = app.add_subcommand("scaling", "A(t), B(t), Delta(t) table");
    c_scaling.attach(scaling);
    add_grid(scaling);

    std::string mode_name = "adaptive";
    std::vector<std::string> class_names;
    auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo distance sweep over t");
    c_sweep.attach(sweep_cmd);
    add_grid(sweep_cmd);
    sweep_cmd->add_option("--mc", mc, "replicates per grid point (>= 1000)");
    sweep_cmd->add_option("--mode", mode_name, "adaptive | fixedsqrt");
    sweep_cmd->add_option("--classes", class_names,
                          "kolmogorov | halfspaces | balls | w1");

    std::vector<std::uint32_t> n_params;
    std::uint32_t circle_size = 4096, m_ref = 10000;
    int circle_dim = 2;
    auto* circle = app.add_subcommand("demo-circle", "concentric-circles separation table");
    c_circle.attach(circle);
    circle->add_option("--n-params", n_params, "circle radius parameters (radius 1 + 1/n)");
    circle->add_option("--size", circle_size, "sample size per circle");
    circle->add_option("--m-ref", m_ref, "reference sample size");
    circle->add_option("--circle-dim", circle_dim, "ambient dimension (>= 2)");

    int p = 3;
    std::vector<std::uint32_t> n_list;
    auto* asm_cmd = app.add_subcommand("asmussen", "small-time moment convergence table");
    c_asm.attach(asm_cmd);
    asm_cmd->add_option("-p,--power", p, "moment exponent (1, 2 or 3)");
    asm_cmd->add_option("--n-list", n_list, "time discretisations n (t = 1/n)");
    asm_cmd->add_option("--mc", mc, "replicates per n");

    auto* w_cmd = app.add_subcommand("wasserstein", "d_K vs W1 table (1-d)");
    c_w.attach(w_cmd);
    add_grid(w_cmd);
    w_cmd->add_option("--mc", mc, "replicates per grid point");

    std::string input;
    auto* ex_cmd = app.add_subcommand("extract-seq", "vanishing-sequence selection from t,g CSV");
    c_ex.attach(ex_cmd);
    ex_cmd->add_option("--input", input, "CSV with columns t,g");

    try {
        app.parse(argc, argv);
        if (scaling->parsed())
            return cmd_scaling(c_scaling, t_min, t_max, ratio, t_list);
        if (sweep_cmd->parsed())
            return cmd_sweep(c_sweep, t_min, t_max, ratio, t_list, mc, mode_name,
                             class_names);
        if (circle->parsed())
            return cmd_demo_circle(c_circle, n_params, circle_size, m_ref, circle_dim);
        if (asm_cmd->parsed())
            return cmd_asmussen(c_asm, p, n_list, mc);
        if (w_cmd->parsed())
            return cmd_wasserstein(c_w, t_min, t_max, ratio, t_list, mc);
        if (ex_cmd->parsed())
            return cmd_extract_seq(c_ex, input);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 4;
    } catch (const NumericError& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return 3;
    }
}
