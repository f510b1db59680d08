#include "pqovs/cli.hpp"

#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "pqovs/errors.hpp"
#include "pqovs/lens.hpp"
#include "pqovs/specfun.hpp"
#include "pqovs/state_io.hpp"

namespace pqovs::cli {

namespace {

const std::map<std::string, Family> kFamilies{{"bg", Family::bg}, {"mbg", Family::mbg}};
const std::map<std::string, GridScheme> kSchemes{{"gauss_legendre", GridScheme::gauss_legendre},
                                                 {"bessel_zero", GridScheme::bessel_zero}};
const std::map<std::string, KernelConvention> kConventions{{"unitary", KernelConvention::unitary},
                                                           {"as_printed", KernelConvention::as_printed}};
const std::map<std::string, OutputFormat> kFormats{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

void add_state_source(CLI::App* sub, RunConfig& cfg, bool allow_file) {
    if (allow_file) sub->add_option("--in", cfg.in_path, "Input pqovs-state-v1 file ('-' for stdin)");
    sub->add_option("--family", cfg.family, "Build a state instead of reading one: bg or mbg")
        ->transform(CLI::CheckedTransformer(kFamilies))
        ->option_text("bg|mbg");
    sub->add_option("--q", cfg.q, "Topological charge q (integer, sign allowed)")
        ->check(CLI::Range(-specfun::kMaxOrder, specfun::kMaxOrder));
    sub->add_option("--alpha", cfg.alpha, "Family parameter alpha (dimensionless, > 0)")->check(CLI::NonNegativeNumber);
    sub->add_option("--grid-n", cfg.grid_n, "Radial grid node count (>= 16)")->check(CLI::Range(kMinGridNodes, 1 << 16));
    sub->add_option("--r-max", cfg.r_max, "Grid truncation radius, dimensionless (0 = alpha*sqrt(2)+10)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--grid-scheme", cfg.scheme, "Node placement: gauss_legendre or bessel_zero")
        ->transform(CLI::CheckedTransformer(kSchemes))
        ->option_text("gauss_legendre|bessel_zero");
}

void add_k(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--k", cfg.k, "Propagation constant k [1/length] (> 0)")->check(CLI::PositiveNumber);
}

void add_out(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--out", cfg.out_path, "Output file (default: standard output)");
}

void add_format(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "Table format: csv or json")->transform(CLI::CheckedTransformer(kFormats))->option_text("csv|json");
}

void add_convention(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--convention", cfg.convention, "Kernel prefactor: unitary or as_printed")
        ->transform(CLI::CheckedTransformer(kConventions))
        ->option_text("unitary|as_printed");
}

std::string format17(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

RadialVortexState load_state(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        return io::state_from_json(text);
    }
    return io::state_from_json(io::read_file(path));
}

RadialVortexState build_state(Family family, const RunConfig& cfg) {
    const int hint = cfg.scheme == GridScheme::bessel_zero ? std::abs(cfg.q) : 0;
    auto grid = make_grid(cfg.scheme, cfg.r_max, cfg.grid_n, hint);
    return family == Family::bg ? make_bg(cfg.q, cfg.alpha, std::move(grid))
                                : make_mbg(cfg.q, cfg.alpha, std::move(grid));
}

RadialVortexState source_state(const RunConfig& cfg, std::istream& in) {
    if (cfg.in_path) return load_state(*cfg.in_path, in);
    if (cfg.family) return build_state(*cfg.family, cfg);
    throw InvalidArgument("no input state: pass --in or --family");
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out_path) {
        io::write_file_atomic(*cfg.out_path, text);
    } else {
        out << text;
    }
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"Bessel-Gauss / perfect quantum optical vortex state engine.\n"
                 "All quantities are dimensionless field-strength units except z and k,\n"
                 "which carry reciprocal length units (the transform angle is k*z)."};
    app.require_subcommand(1);

    auto* make = app.add_subcommand("make", "Build a BG or MBG state and write it as JSON");
    add_state_source(make, cfg, false);
    make->get_option("--family")->required();
    add_out(make, cfg);

    auto* prop = app.add_subcommand("propagate", "Propagate a state to plane z");
    add_state_source(prop, cfg, true);
    add_k(prop, cfg);
    prop->add_option("--z", cfg.z, "Propagation distance z [length] (>= 0)")->required()->check(CLI::NonNegativeNumber);
    add_convention(prop, cfg);
    prop->add_flag("!--no-analytic-limits", cfg.analytic_limits,
                   "Fail (exit 3) on singular planes instead of using identity/parity limits");
    add_out(prop, cfg);

    auto* planes = app.add_subcommand("planes", "List Fourier planes z_m = (2m+1) pi / 2k");
    add_k(planes, cfg);
    planes->add_option("--m-max", cfg.m_max, "Largest plane index m (>= 0)")->check(CLI::NonNegativeNumber);

    auto* scan = app.add_subcommand("scan", "Fidelity of propagated state against a target over a z range");
    add_state_source(scan, cfg, true);
    scan->add_option("--target", cfg.target_path, "Target state file (default: MBG with the same q, alpha, grid)");
    add_k(scan, cfg);
    scan->add_option("--z-from", cfg.z_from, "Scan start z [length]")->required()->check(CLI::NonNegativeNumber);
    scan->add_option("--z-to", cfg.z_to, "Scan end z [length]")->required()->check(CLI::NonNegativeNumber);
    scan->add_option("--steps", cfg.steps, "Number of planes (>= 2)")->required()->check(CLI::Range(2, 1 << 20));
    add_convention(scan, cfg);
    add_format(scan, cfg);
    add_out(scan, cfg);

    auto* sq = app.add_subcommand("squeeze", "Equal two-mode squeeze: R'(rho) = R(rho/s)/s");
    add_state_source(sq, cfg, true);
    sq->add_option("--gain", cfg.gain, "Scale factor s (dimensionless, > 0; s < 1 compresses)")
        ->check(CLI::PositiveNumber);
    add_out(sq, cfg);

    auto* lens = app.add_subcommand("lens", "Effective lens: squeeze then propagate to z = pi / 2k");
    add_state_source(lens, cfg, true);
    lens->add_option("--gain", cfg.gain, "Scale factor s (dimensionless, > 0)")->check(CLI::PositiveNumber);
    add_k(lens, cfg);
    add_out(lens, cfg);

    auto* dens = app.add_subcommand("density", "Radial density P(rho) = 2 pi rho |R|^2");
    add_state_source(dens, cfg, true);
    add_format(dens, cfg);
    add_out(dens, cfg);

    auto* fid = app.add_subcommand("fidelity", "Phase-insensitive |<target|in>|^2 of two state files");
    fid->add_option("--in", cfg.in_path, "First state file ('-' for stdin)")->required();
    fid->add_option("--target", cfg.target_path, "Second state file ('-' for stdin)")->required();

    auto* noise = app.add_subcommand("noise", "Radial field-strength noise <rho^2> - <rho>^2");
    add_state_source(noise, cfg, true);

    std::vector<std::string> argv_store{"pqovs"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        throw ParseExit{kExitOk, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw ParseExit{kExitOk, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw ParseExit{kExitUsage, std::string(e.what()) + "\n" + app.help()};
    }

    const std::map<CLI::App*, Command> commands{
        {make, Command::make},       {prop, Command::propagate}, {planes, Command::planes},
        {scan, Command::scan},       {sq, Command::squeeze},     {lens, Command::lens},
        {dens, Command::density},    {fid, Command::fidelity},   {noise, Command::noise}};
    for (const auto& [sub, command] : commands) {
        if (sub->parsed()) cfg.command = command;
    }

    if (cfg.command == Command::scan && !(cfg.z_to > cfg.z_from)) {
        throw ParseExit{kExitUsage, "--z-to must exceed --z-from"};
    }
    if (cfg.in_path && cfg.target_path && *cfg.in_path == "-" && *cfg.target_path == "-") {
        throw ParseExit{kExitUsage, "only one of --in/--target may read standard input"};
    }
    if (cfg.r_max == 0.0) cfg.r_max = default_r_max(cfg.alpha);
    return cfg;
}

void run(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    switch (cfg.command) {
        case Command::make: {
            emit(cfg, out, io::state_to_json(build_state(*cfg.family, cfg)));
            break;
        }
        case Command::propagate: {
            PropagationParams params;
            params.k = cfg.k;
            params.z = cfg.z;
            params.analytic_limits = cfg.analytic_limits;
            emit(cfg, out, io::state_to_json(propagate(source_state(cfg, in), params, cfg.convention)));
            break;
        }
        case Command::planes: {
            const auto list = fourier_planes(cfg.k, cfg.m_max);
            out << io::planes_to_tsv(list);
            break;
        }
        case Command::scan: {
            const auto state = source_state(cfg, in);
            const auto target = cfg.target_path
                                    ? load_state(*cfg.target_path, in)
                                    : make_mbg(state.charge(), state.alpha().value_or(cfg.alpha), state.grid_ptr());
            const auto result = scan_fidelity(state, target, cfg.k, cfg.z_from, cfg.z_to, cfg.steps, cfg.convention);
            emit(cfg, out, cfg.format == OutputFormat::csv ? io::scan_to_csv(result) : io::scan_to_json(result));
            break;
        }
        case Command::squeeze: {
            emit(cfg, out, io::state_to_json(squeeze(source_state(cfg, in), {cfg.gain})));
            break;
        }
        case Command::lens: {
            emit(cfg, out, io::state_to_json(effective_lens(source_state(cfg, in), {cfg.gain}, cfg.k)));
            break;
        }
        case Command::density: {
            const auto profile = density_radial(source_state(cfg, in));
            emit(cfg, out, cfg.format == OutputFormat::csv ? io::density_to_csv(profile) : io::density_to_json(profile));
            break;
        }
        case Command::fidelity: {
            const auto a = load_state(*cfg.in_path, in);
            const auto b = load_state(*cfg.target_path, in);
            out << format17(fidelity(b, a)) << '\n';
            break;
        }
        case Command::noise: {
            out << format17(radial_noise(source_state(cfg, in))) << '\n';
            break;
        }
    }
}

int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const ParseExit& e) {
        (e.code == kExitOk ? out : err) << e.message;
        return e.code;
    }
    try {
        run(cfg, in, out);
    } catch (const InvalidArgument& e) {
        err << "pqovs: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericFailure& e) {
        err << "pqovs: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        err << "pqovs: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitOk;
}

}  // namespace pqovs::cli
