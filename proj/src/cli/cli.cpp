#include "twotemp/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "internal.hpp"
#include "twotemp/errors.hpp"

#ifndef TWOTEMP_VERSION
#define TWOTEMP_VERSION "dev"
#endif

namespace twotemp {

namespace {

using cli::json;

std::string quote(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '"' || c == '\\') o += '\\';
        o += (c == '\n' || c == '\r') ? ' ' : c;
    }
    return o;
}

int fail(std::ostream& err, int code, const std::string& kind, const std::string& message) {
    err << "error code=" << code << " kind=" << kind << " message=\"" << quote(message) << "\"\n";
    return code;
}

/// Replays the argv stored in a manifest, optionally redirecting --out.
std::vector<std::string> manifest_argv(const std::string& path, const std::string& out_override) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot read manifest '" + path + "'");
    json m;
    try {
        m = json::parse(f);
    } catch (const json::exception& e) {
        throw InputError("manifest '" + path + "': " + e.what());
    }
    if (!m.contains("argv") || !m["argv"].is_array())
        throw InputError("manifest '" + path + "' has no argv");
    auto argv = m["argv"].get<std::vector<std::string>>();
    if (!out_override.empty()) {
        bool replaced = false;
        for (std::size_t i = 0; i + 1 < argv.size(); ++i)
            if (argv[i] == "--out" || argv[i] == "-o") {
                argv[i + 1] = out_override;
                replaced = true;
            }
        if (!replaced) {
            argv.push_back("--out");
            argv.push_back(out_override);
        }
    }
    return argv;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-temperature moment model for rarefied polyatomic gases", "twotemp"};
    app.require_subcommand(0, 1);
    app.set_version_flag("--version", std::string("twotemp ") + TWOTEMP_VERSION);

    std::string manifest;
    app.add_option("--from-manifest", manifest, "re-run the invocation recorded in a manifest");

    cli::OutputOptions oo;
    auto add_output = [&oo](CLI::App* sub) {
        sub->add_option("-o,--out", oo.out, "output file (default: stdout); a manifest is written next to it");
        sub->add_option("--format", oo.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };
    std::string manifest_out;
    app.add_option("--out", manifest_out, "with --from-manifest: new output path");

    cli::CoeffsArgs ca;
    auto* coeffs = app.add_subcommand("coeffs", "dump the dimensionless coefficient sets");
    coeffs->add_option("--species", ca.species, "fixture name or species file");
    coeffs->add_option("--model", ca.models, "models (1-4, reduced); default all available")
        ->delimiter(',');
    coeffs->add_option("--kn", ca.kn, "Knudsen number");
    coeffs->add_option("--length", ca.length, "characteristic length [m], sets Kn")
        ->excludes(coeffs->get_option("--kn"));
    coeffs->add_option("--reduced-base", ca.reduced_base, "closure the reduced model starts from");
    add_output(coeffs);

    cli::HCheckArgs ha;
    auto* hcheck = app.add_subcommand("check-h-theorem", "randomized entropy-production checks");
    hcheck->add_option("--samples", ha.samples, "states per model");
    hcheck->add_option("--seed", ha.seed, "random seed");
    add_output(hcheck);

    cli::StabilityArgs sa;
    auto* stab = app.add_subcommand("stability", "temporal and spatial dispersion roots");
    stab->add_option("--species", sa.species, "fixture name or species file");
    stab->add_option("--model", sa.model, "1-4 or reduced");
    stab->add_option("--reduced-base", sa.reduced_base, "closure the reduced model starts from");
    stab->add_option("--kn", sa.kn, "Knudsen number");
    stab->add_option("--k-max", sa.k_max, "largest real wavenumber");
    stab->add_option("--omega-max", sa.omega_max, "largest real frequency");
    stab->add_option("--samples", sa.samples, "grid points per sweep");
    add_output(stab);

    cli::AcousticsArgs aa;
    auto* acou = app.add_subcommand("acoustics", "sound attenuation and phase speed");
    acou->add_option("--species", aa.species, "fixture name or species file");
    acou->add_option("--model", aa.models, "models (1-4, reduced)")->delimiter(',');
    acou->add_option("--reduced-base", aa.reduced_base, "closure the reduced model starts from");
    acou->add_option("--r-min", aa.r_min, "smallest rarefaction parameter p/(mu omega)");
    acou->add_option("--r-max", aa.r_max, "largest rarefaction parameter");
    acou->add_option("--points", aa.points, "log-spaced samples");
    acou->add_flag("--nsf", aa.nsf, "add the one-temperature NSF baseline");
    acou->add_option("--bulk-viscosity", aa.bulk_viscosity,
                     "NSF bulk viscosity over shear viscosity, or 'relaxation'");
    add_output(acou);

    cli::RbsArgs ra;
    auto* rbs = app.add_subcommand("rbs", "spontaneous Rayleigh-Brillouin spectrum");
    rbs->add_option("--species", ra.species, "fixture name or species file");
    rbs->add_option("--model", ra.models, "models (1-4, reduced)")->delimiter(',');
    rbs->add_option("--reduced-base", ra.reduced_base, "closure the reduced model starts from");
    rbs->add_option("--y", ra.y, "uniformity parameter");
    rbs->add_option("--x-max", ra.x_max, "grid half-width in x");
    rbs->add_option("--step", ra.step, "grid step in x");
    rbs->add_flag("--paper-matrix-verbatim", ra.verbatim,
                  "use the alternative printed coefficient matrix");
    rbs->add_flag("--nsf", ra.nsf, "add the NSF spectrum");
    rbs->add_option("--emit-peaks", ra.emit_peaks, "write peak positions to this JSON file");
    add_output(rbs);

    cli::HeatArgs hta;
    auto* heat = app.add_subcommand("heat", "steady conduction between parallel plates");
    heat->add_option("--species", hta.species, "fixture name or species file");
    heat->add_option("--model", hta.model, "1-4 or reduced");
    heat->add_option("--reduced-base", hta.reduced_base, "closure the reduced model starts from");
    heat->add_option("--kn", hta.kn, "Knudsen number");
    heat->add_option("--chi", hta.chi, "accommodation coefficient of both walls (lower wall)");
    heat->add_option("--chi-upper", hta.chi_upper, "accommodation coefficient of the upper wall");
    heat->add_option("--wall-dev", hta.wall_dev, "wall temperature deviation, lower +dev, upper -dev");
    heat->add_flag("--nsf", hta.nsf, "one-temperature NSF solution");
    heat->add_flag("--full-system", hta.full_system, "solve all seven constants");
    heat->add_option("--points", hta.points, "profile samples");
    heat->add_option("--overlay", hta.overlay, "reference profile CSV (y plus field columns) to compare against");
    add_output(heat);

    cli::BcTableArgs ba;
    auto* bc = app.add_subcommand("bc-table", "Onsager wall coefficients");
    bc->add_option("--species", ba.species, "fixture name or species file");
    bc->add_option("--chi", ba.chi, "accommodation coefficients")->delimiter(',');
    add_output(bc);

    cli::ReproduceArgs pa;
    auto* repro = app.add_subcommand("reproduce", "regenerate one figure's data");
    repro->add_option("target", pa.target, "target name");
    repro->add_flag("--list", pa.list, "list targets");
    repro->add_option("--y", pa.y, "panel of fig-rbs-ch4");
    repro->add_option("--species", pa.species, "override the target's gas");
    std::string out_dir;
    repro->add_option("--out-dir", out_dir, "write <out-dir>/<target>.csv and its manifest");
    repro->add_option("--format", oo.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return fail(err, kExitUsage, "usage", e.what());
    }

    if (!manifest.empty()) {
        if (app.get_subcommands().size() > 0)
            return fail(err, kExitUsage, "usage", "--from-manifest takes no subcommand");
        return dispatch(manifest_argv(manifest, manifest_out), out, err);
    }
    if (!manifest_out.empty())
        return fail(err, kExitUsage, "usage", "--out before the subcommand needs --from-manifest");
    if (app.get_subcommands().empty())
        return fail(err, kExitUsage, "usage", "missing subcommand (run with --help)");

    cli::Result r;
    std::vector<std::string> record = args;
    if (coeffs->parsed()) r = cli::cmd_coeffs(ca);
    else if (hcheck->parsed()) r = cli::cmd_check_h_theorem(ha);
    else if (stab->parsed()) r = cli::cmd_stability(sa);
    else if (acou->parsed()) r = cli::cmd_acoustics(aa);
    else if (rbs->parsed()) r = cli::cmd_rbs(ra);
    else if (heat->parsed()) r = cli::cmd_heat(hta);
    else if (bc->parsed()) r = cli::cmd_bc_table(ba);
    else {
        if (pa.list && !pa.target.empty())
            return fail(err, kExitUsage, "usage", "--list takes no target");
        if (!pa.list && pa.target.empty())
            return fail(err, kExitUsage, "usage", "reproduce needs a target or --list");
        if (!out_dir.empty() && !pa.list)
            oo.out = out_dir + "/" + pa.target + (oo.format == "json" ? ".json" : ".csv");
        r = cli::cmd_reproduce(pa);
    }
    out << cli::emit(r, oo, record);
    if (r.failure) return fail(err, kExitNumeric, "check", *r.failure);
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const RangeError& e) {
        return fail(err, kExitInput, "range", e.what());
    } catch (const InputError& e) {
        return fail(err, kExitInput, "input", e.what());
    } catch (const NumericError& e) {
        return fail(err, kExitNumeric, "numeric", e.what());
    } catch (const DomainError& e) {
        return fail(err, kExitInput, "domain", e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(err, kExitInput, "input", e.what());
    } catch (const std::exception& e) {
        return fail(err, kExitNumeric, "internal", e.what());
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace twotemp
