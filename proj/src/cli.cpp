#include "ddeform/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "ddeform/fock.hpp"
#include "ddeform/output.hpp"
#include "ddeform/quantum_well.hpp"
#include "ddeform/special_functions.hpp"

namespace ddeform {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message)
{
    if (!ok) throw UsageError(message);
}

struct Sink {
    std::string format = "csv";
    std::string out_path;
};

void add_sink_options(CLI::App* cmd, Sink& sink)
{
    cmd->add_option("--format", sink.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", sink.out_path, "output file (default: stdout)");
}

std::filesystem::path resolve_output(const std::string& path)
{
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
            p = std::filesystem::path(dir) / p;
        }
    }
    return p;
}

// Output is rendered fully in memory and moved into place, so a failed run
// never leaves a partial file behind.
void emit(const OutputRecord& record, const Sink& sink, std::ostream& out)
{
    std::ostringstream buffer;
    if (sink.format == "json") {
        write_json(record, buffer);
    } else {
        write_csv(record, buffer);
    }
    if (sink.out_path.empty()) {
        out << buffer.str();
        return;
    }
    const std::filesystem::path target = resolve_output(sink.out_path);
    std::filesystem::path tmp = target;
    tmp += ".partial";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << buffer.str();
        f.close();
        if (!f) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw std::runtime_error("write to " + tmp.string() + " failed");
        }
    }
    std::filesystem::rename(tmp, target);
}

Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& rows, std::size_t width)
{
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(width));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
        }
    }
    return m;
}

std::vector<double> linspace(double lo, double hi, int count)
{
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        v[static_cast<std::size_t>(i)] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
    }
    return v;
}

struct WellEnergiesArgs {
    double d_min = 0.2;
    double d_max = 3.0;
    int steps = 57;
    int levels = 2;
    double tol = 1e-12;
    Sink sink;
};

OutputRecord well_energies(const WellEnergiesArgs& a)
{
    require(std::isfinite(a.d_min) && a.d_min > 0.0, "--d-min must be > 0");
    require(std::isfinite(a.d_max) && a.d_max >= a.d_min, "--d-max must be >= --d-min");
    require(a.steps >= 1, "--steps must be >= 1");
    require(a.levels >= 1, "--levels must be >= 1");
    require(a.tol > 0.0, "--tol must be > 0");

    OutputRecord rec;
    rec.command = "well-energies";
    rec.parameters = {{"d_min", a.d_min}, {"d_max", a.d_max}, {"steps", a.steps}, {"levels", a.levels}, {"tol", a.tol}};
    rec.columns = {"D", "n", "k", "E"};
    std::vector<std::vector<double>> rows;
    for (double dv : linspace(a.d_min, a.d_max, a.steps)) {
        const EnergySpectrum s = well_spectrum(Dimension(dv), a.levels, a.tol);
        for (const WellLevel& l : s.levels) {
            rows.push_back({dv, static_cast<double>(l.n), l.k, l.energy});
        }
    }
    rec.rows = to_matrix(rows, 4);
    return rec;
}

struct WellDensityArgs {
    double d = 1.0;
    int n = 0;
    int points = 201;
    double xi_min_abs = 1e-3;
    double tol = 1e-12;
    Sink sink;
};

OutputRecord well_density_cmd(const WellDensityArgs& a)
{
    require(std::isfinite(a.d) && a.d > 0.0, "--d must be > 0");
    require(a.n >= 0, "--n must be >= 0");
    require(a.points >= 2, "--points must be >= 2");
    require(a.xi_min_abs > 0.0 && a.xi_min_abs < 0.5, "--xi-min-abs must lie in (0, 0.5)");
    require(a.tol > 0.0, "--tol must be > 0");

    const Dimension d(a.d);
    std::vector<double> grid = linspace(-0.5, 0.5, a.points);
    if (a.d < 1.0) {
        // rho diverges at the origin; keep |xi| >= xi_min_abs and sample that radius itself
        std::erase_if(grid, [&](double x) { return std::abs(x) < a.xi_min_abs; });
        grid.push_back(-a.xi_min_abs);
        grid.push_back(a.xi_min_abs);
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    }
    const EnergySpectrum s = well_spectrum(d, a.n + 1, a.tol);
    const GridDensity g = well_density(s, a.n, Eigen::Map<const Eigen::ArrayXd>(grid.data(), static_cast<Eigen::Index>(grid.size())));
    const WellLevel& level = s.levels[static_cast<std::size_t>(a.n)];

    OutputRecord rec;
    rec.command = "well-density";
    rec.parameters = {{"d", a.d}, {"n", a.n}, {"points", a.points}, {"xi_min_abs", a.xi_min_abs}, {"tol", a.tol}};
    rec.metadata = {{"k", level.k},
                    {"E", level.energy},
                    {"parity", level.parity == Parity::even ? "even" : "odd"},
                    {"integral", g.integral},
                    {"normalization_residual", g.normalization_residual()}};
    rec.columns = {"xi", "rho"};
    rec.rows.resize(g.xi.size(), 2);
    rec.rows.col(0) = g.xi.matrix();
    rec.rows.col(1) = g.rho.matrix();
    return rec;
}

struct SpecialArgs {
    std::string fn;
    double d = 1.0;
    double x_min = 0.0;
    double x_max = 1.0;
    int points = 101;
    int n_max = 10;
    Sink sink;
};

OutputRecord special_cmd(const SpecialArgs& a)
{
    require(std::isfinite(a.d) && a.d > 0.0, "--d must be > 0");
    const Dimension d(a.d);
    OutputRecord rec;
    rec.command = "special";
    std::vector<std::vector<double>> rows;
    if (a.fn == "dfact") {
        require(a.n_max >= 0, "--n-max must be >= 0");
        rec.parameters = {{"fn", a.fn}, {"d", a.d}, {"n_max", a.n_max}};
        rec.columns = {"n", "value"};
        for (int n = 0; n <= a.n_max; ++n) {
            rows.push_back({static_cast<double>(n), d_factorial(n, d)});
        }
        rec.rows = to_matrix(rows, 2);
        return rec;
    }
    require(std::isfinite(a.x_min) && std::isfinite(a.x_max) && a.x_max >= a.x_min, "--x-max must be >= --x-min");
    require(a.points >= 1, "--points must be >= 1");
    rec.parameters = {{"fn", a.fn}, {"d", a.d}, {"x_min", a.x_min}, {"x_max", a.x_max}, {"points", a.points}};
    rec.columns = {"x", "value", "bessel_form"};
    std::function<double(double)> series;
    std::function<double(double)> closed;
    if (a.fn == "ed") {
        series = [d](double x) { return deformed_exp(x, d); };
        closed = [d](double x) { return deformed_exp_bessel(x, d); };
    } else if (a.fn == "cosd") {
        series = [d](double x) { return deformed_cos(x, d); };
        closed = [d](double x) { return deformed_cos_bessel(x, d); };
    } else {
        series = [d](double x) { return deformed_sin(x, d); };
        closed = [d](double x) { return deformed_sin_bessel(x, d); };
    }
    for (double x : linspace(a.x_min, a.x_max, a.points)) {
        rows.push_back({x, series(x), closed(x)});
    }
    rec.rows = to_matrix(rows, 3);
    return rec;
}

struct CoherentArgs {
    double d = 1.0;
    double alpha_re = 1.0;
    double alpha_im = 0.0;
    double tol = 1e-12;
    int max_n = 10000;
    Sink sink;
};

OutputRecord coherent_cmd(const CoherentArgs& a)
{
    require(std::isfinite(a.d) && a.d > 0.0, "--d must be > 0");
    require(std::isfinite(a.alpha_re) && std::isfinite(a.alpha_im), "--alpha-re/--alpha-im must be finite");
    require(a.tol > 0.0, "--tol must be > 0");
    require(a.max_n >= 1, "--max-n must be >= 1");

    const double alpha_sq = a.alpha_re * a.alpha_re + a.alpha_im * a.alpha_im;
    const PoissonTable table = deformed_poisson_distribution(alpha_sq, Dimension(a.d), a.tol, a.max_n);
    double total = 0.0;
    std::vector<std::vector<double>> rows;
    for (std::size_t n = 0; n < table.probabilities.size(); ++n) {
        rows.push_back({static_cast<double>(n), table.probabilities[n]});
        total += table.probabilities[n];
    }
    OutputRecord rec;
    rec.command = "coherent";
    rec.parameters = {{"d", a.d}, {"alpha_re", a.alpha_re}, {"alpha_im", a.alpha_im}, {"tol", a.tol}, {"max_n", a.max_n}};
    rec.metadata = {{"alpha_sq", alpha_sq}, {"sum", total}, {"tail_bound", table.tail_bound}};
    rec.columns = {"n", "probability"};
    rec.rows = to_matrix(rows, 2);
    return rec;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"D-deformed quantum mechanics in fractional-dimensional space", "ddeform"};
    app.require_subcommand(1);

    WellEnergiesArgs we;
    auto* cmd_we = app.add_subcommand("well-energies", "quantum-well energies E_n(D) on a dimension grid");
    cmd_we->add_option("--d-min", we.d_min, "smallest dimension");
    cmd_we->add_option("--d-max", we.d_max, "largest dimension");
    cmd_we->add_option("--steps", we.steps, "number of dimension samples");
    cmd_we->add_option("--levels", we.levels, "levels per dimension");
    cmd_we->add_option("--tol", we.tol, "root tolerance on k");
    add_sink_options(cmd_we, we.sink);

    WellDensityArgs wd;
    auto* cmd_wd = app.add_subcommand("well-density", "quantum-well probability density rho_n(xi)");
    cmd_wd->add_option("--d", wd.d, "dimension")->required();
    cmd_wd->add_option("--n", wd.n, "level index (0 = ground state)");
    cmd_wd->add_option("--points", wd.points, "grid points over [-1/2, 1/2]");
    cmd_wd->add_option("--xi-min-abs", wd.xi_min_abs, "smallest |xi| sampled when D < 1");
    cmd_wd->add_option("--tol", wd.tol, "root tolerance on k");
    add_sink_options(cmd_wd, wd.sink);

    SpecialArgs sp;
    auto* cmd_sp = app.add_subcommand("special", "tables of E_D, COS_D, SIN_D or [n]_D!");
    cmd_sp->add_option("--fn", sp.fn, "ed, cosd, sind or dfact")
        ->required()
        ->check(CLI::IsMember({"ed", "cosd", "sind", "dfact"}));
    cmd_sp->add_option("--d", sp.d, "dimension")->required();
    cmd_sp->add_option("--x-min", sp.x_min, "first argument");
    cmd_sp->add_option("--x-max", sp.x_max, "last argument");
    auto* opt_points = cmd_sp->add_option("--points", sp.points, "number of arguments");
    auto* opt_nmax = cmd_sp->add_option("--n-max", sp.n_max, "largest n for dfact");
    opt_points->excludes(opt_nmax);
    add_sink_options(cmd_sp, sp.sink);

    CoherentArgs co;
    auto* cmd_co = app.add_subcommand("coherent", "deformed Poisson distribution of a coherent state");
    cmd_co->add_option("--d", co.d, "dimension")->required();
    cmd_co->add_option("--alpha-re", co.alpha_re, "Re alpha");
    cmd_co->add_option("--alpha-im", co.alpha_im, "Im alpha");
    cmd_co->add_option("--tol", co.tol, "bound on the omitted probability mass");
    cmd_co->add_option("--max-n", co.max_n, "largest n before giving up");
    add_sink_options(cmd_co, co.sink);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            return kExitSuccess;
        }
        return kExitUsage;
    }

    try {
        if (*cmd_we) {
            emit(well_energies(we), we.sink, out);
        } else if (*cmd_wd) {
            emit(well_density_cmd(wd), wd.sink, out);
        } else if (*cmd_sp) {
            emit(special_cmd(sp), sp.sink, out);
        } else if (*cmd_co) {
            emit(coherent_cmd(co), co.sink, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "computation failed: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitSuccess;
}

} // namespace ddeform
