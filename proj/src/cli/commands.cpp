#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <limits>

#include "internal.hpp"
#include "twotemp/acoustics.hpp"
#include "twotemp/dispersion.hpp"
#include "twotemp/errors.hpp"
#include "twotemp/hcheck.hpp"
#include "twotemp/heat.hpp"
#include "twotemp/rbs.hpp"
#include "twotemp/wall.hpp"

namespace twotemp::cli {

GasSpecies load(const std::string& path_or_name) { return resolve_species(path_or_name); }

json species_json(const GasSpecies& s) { return json::parse(species_to_json(s).dump()); }

ModelTag model_arg(const std::string& text) { return parse_model_tag(text); }

namespace {

void require_positive(const char* field, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) throw RangeError(field, v, "(0, inf)");
}

void require_count(const char* field, long v, long lo) {
    if (v < lo) throw RangeError(field, double(v), "[" + std::to_string(lo) + ", inf)");
}

/// NSF conductivity per unit Kn: lambda0/(R mu0) when tabulated, else the closure total.
double nsf_conductivity(const GasSpecies& s, const CoefficientSet& fallback) {
    if (s.thermal_conductivity) return *s.thermal_conductivity / (s.gas_constant * s.shear_viscosity);
    return fallback.total_conductivity() / fallback.kn;
}

json coeff_json(const CoefficientSet& c) {
    json j;
    j["model"] = to_string(c.model_tag);
    j["kn"] = c.kn;
    j["zeta11"] = c.zeta11;
    j["zeta12"] = c.zeta12;
    j["zeta22"] = c.zeta22;
    j["mu"] = c.mu;
    j["c_ex"] = c.c_ex;
    return j;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return out;
}

/// Compares the analytic profile with a digitized reference curve (columns y plus any of
/// rho, theta_tr, theta_in, theta, vartheta).
json overlay_report(const HeatProfile& p, const std::string& path, Result& r) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot read overlay '" + path + "'");
    std::string line;
    std::vector<std::string> cols;
    std::vector<std::vector<double>> rows;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto cells = split_csv(line);
        if (cols.empty()) {
            cols = cells;
            continue;
        }
        if (cells.size() != cols.size())
            throw InputError("overlay '" + path + "': ragged row '" + line + "'");
        std::vector<double> v;
        for (const auto& c : cells) {
            try {
                v.push_back(std::stod(c));
            } catch (const std::exception&) {
                throw InputError("overlay '" + path + "': not a number '" + c + "'");
            }
        }
        rows.push_back(std::move(v));
    }
    const auto yit = std::find(cols.begin(), cols.end(), "y");
    if (yit == cols.end()) throw InputError("overlay '" + path + "' has no y column");
    const std::size_t yi = yit - cols.begin();
    json rep = json::object();
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (j == yi) continue;
        double HeatFields::*field = nullptr;
        if (cols[j] == "rho") field = &HeatFields::rho;
        else if (cols[j] == "theta_tr") field = &HeatFields::theta_tr;
        else if (cols[j] == "theta_in") field = &HeatFields::theta_in;
        else if (cols[j] == "theta") field = &HeatFields::theta;
        else if (cols[j] == "vartheta") field = &HeatFields::vartheta;
        else continue;
        double sum2 = 0.0, worst = 0.0;
        for (const auto& row : rows) {
            if (std::abs(row[yi]) > 0.5) throw RangeError("overlay y", row[yi], "[-0.5, 0.5]");
            const double d = p.at(row[yi]).*field - row[j];
            sum2 += d * d;
            worst = std::max(worst, std::abs(d));
        }
        const double rms = rows.empty() ? 0.0 : std::sqrt(sum2 / double(rows.size()));
        rep[cols[j]] = {{"points", rows.size()}, {"rms", rms}, {"max_abs", worst}};
        r.header.emplace_back("overlay_rms." + cols[j], format_number(rms));
    }
    return rep;
}

} // namespace

Result cmd_coeffs(const CoeffsArgs& a) {
    const GasSpecies s = load(a.species);
    const ModelTag base = model_arg(a.reduced_base);
    const double kn = a.length ? s.knudsen(*a.length) : a.kn;
    require_positive("kn", kn);
    std::vector<ModelTag> tags;
    const bool all = a.models.empty();
    if (all)
        tags = {ModelTag::Model1, ModelTag::Model2, ModelTag::Model3, ModelTag::Model4,
                ModelTag::Reduced};
    for (const auto& m : a.models) tags.push_back(model_arg(m));

    Result r;
    r.subcommand = "coeffs";
    r.species = species_json(s);
    r.parameters["kn"] = kn;
    if (a.length) r.parameters["length"] = *a.length;
    r.parameters["reduced_base"] = to_string(base);
    r.table.columns = {"model", "kn",     "zeta11",       "zeta12", "zeta22",
                       "mu",    "c_ex",   "conductivity", "det",    "psd"};
    json list = json::array();
    std::string skipped;
    for (const ModelTag t : tags) {
        CoefficientSet c;
        try {
            c = coefficients_for(s, t, kn, base);
        } catch (const InputError&) {
            if (!all) throw;
            skipped += (skipped.empty() ? "" : " ") + to_string(t);
            continue;
        }
        if (c.zeta_asymmetry > 1e-12)
            r.header.emplace_back("warning", to_string(t) + " zeta12/zeta21 differ by " +
                                                 format_number(c.zeta_asymmetry) +
                                                 " (relative), symmetrized");
        r.table.rows.push_back({to_string(t), c.kn, c.zeta11, c.zeta12, c.zeta22, c.mu, c.c_ex,
                                c.total_conductivity(), c.zeta_det(),
                                std::string(c.is_psd() ? "1" : "0")});
        list.push_back(coeff_json(c));
    }
    if (!skipped.empty()) r.header.emplace_back("skipped", skipped);
    r.results["coefficients"] = list;
    return r;
}

Result cmd_check_h_theorem(const HCheckArgs& a) {
    require_count("samples", a.samples, 1);
    Result r;
    r.subcommand = "check-h-theorem";
    r.species = nullptr;
    r.parameters["samples"] = a.samples;
    r.parameters["seed"] = a.seed;
    r.table.columns = {"check", "model", "samples", "failures", "worst", "status"};
    long failures = 0;
    for (const auto& c : h_theorem_suite(a.samples, a.seed)) {
        r.table.rows.push_back({c.name, c.model, double(c.samples), double(c.failures), c.worst,
                                std::string(c.passed() ? "PASS" : "FAIL")});
        failures += c.failures;
    }
    r.header.emplace_back("verdict", failures == 0 ? "pass" : "fail");
    r.results["failures"] = failures;
    if (failures) r.failure = std::to_string(failures) + " property violations";
    return r;
}

Result cmd_stability(const StabilityArgs& a) {
    const GasSpecies s = load(a.species);
    const ModelTag tag = model_arg(a.model);
    const ModelTag base = model_arg(a.reduced_base);
    require_positive("kn", a.kn);
    require_positive("k-max", a.k_max);
    require_positive("omega-max", a.omega_max);
    require_count("samples", a.samples, 2);
    const CoefficientSet c = coefficients_for(s, tag, a.kn, base);

    std::vector<double> kg, wg;
    for (int i = 0; i < a.samples; ++i) {
        kg.push_back(a.k_max * i / (a.samples - 1));
        wg.push_back(a.omega_max * (i + 1) / a.samples);
    }
    Result r;
    r.subcommand = "stability";
    r.species = species_json(s);
    r.parameters["model"] = to_string(tag);
    if (tag == ModelTag::Reduced) r.parameters["reduced_base"] = to_string(base);
    r.parameters["kn"] = a.kn;
    r.parameters["k_max"] = a.k_max;
    r.parameters["omega_max"] = a.omega_max;
    r.parameters["samples"] = a.samples;
    r.table.columns = {"kind", "parameter", "branch",         "omega_r",
                       "omega_i", "k_r",    "k_i",            "phase_velocity", "damping"};
    static const char* temporal_names[] = {"acoustic+", "acoustic-", "thermal", "relaxational"};
    const auto tb = temporal_branches(c, s.delta, kg);
    for (std::size_t j = 0; j < tb.size(); ++j)
        for (int b = 0; b < 4; ++b) {
            const ModeRoot& m = tb[j][b];
            r.table.rows.push_back({std::string("temporal"), kg[j], std::string(temporal_names[b]),
                                    m.omega.real(), m.omega.imag(), m.k.real(), m.k.imag(),
                                    m.phase_velocity, m.damping});
        }
    static const char* spatial_names[] = {"acoustic", "thermal", "relaxational"};
    const auto sb = spatial_branches(c, s.delta, wg);
    for (std::size_t j = 0; j < sb.size(); ++j)
        for (int b = 0; b < 3; ++b) {
            const ModeRoot& m = sb[j][b];
            if (std::isnan(m.k.real())) continue;
            r.table.rows.push_back({std::string("spatial"), wg[j], std::string(spatial_names[b]),
                                    m.omega.real(), m.omega.imag(), m.k.real(), m.k.imag(),
                                    m.phase_velocity, m.damping});
        }
    const StabilityReport rep = stability_report(c, s.delta, kg, wg);
    r.header.emplace_back("verdict", rep.stable() ? "stable" : "unstable");
    r.header.emplace_back("worst_omega_i", format_number(rep.worst_temporal));
    r.header.emplace_back("worst_kr_ki", format_number(rep.worst_spatial));
    r.results["verdict"] = rep.stable() ? "stable" : "unstable";
    r.results["temporal_ok"] = rep.temporal_ok;
    r.results["spatial_ok"] = rep.spatial_ok;
    r.results["worst_omega_i"] = rep.worst_temporal;
    r.results["worst_omega_i_at_k"] = rep.worst_temporal_k;
    r.results["worst_kr_ki"] = rep.worst_spatial;
    r.results["worst_kr_ki_at_omega"] = rep.worst_spatial_omega;
    return r;
}

Result cmd_acoustics(const AcousticsArgs& a) {
    const GasSpecies s = load(a.species);
    const ModelTag base = model_arg(a.reduced_base);
    require_positive("r-min", a.r_min);
    if (!(a.r_max > a.r_min)) throw RangeError("r-max", a.r_max, "(r-min, inf)");
    require_count("points", a.points, 2);
    const auto grid = log_grid(a.r_min, a.r_max, a.points);

    Result r;
    r.subcommand = "acoustics";
    r.species = species_json(s);
    json models = json::array();
    for (const auto& m : a.models) models.push_back(to_string(model_arg(m)));
    r.parameters["models"] = models.dump();
    r.parameters["reduced_base"] = to_string(base);
    r.parameters["r_min"] = a.r_min;
    r.parameters["r_max"] = a.r_max;
    r.parameters["points"] = a.points;
    r.parameters["nsf"] = a.nsf;
    r.table.columns = {"r", "atten_factor", "recip_speed", "speed_dev", "model_tag"};
    std::string skipped;
    std::optional<CoefficientSet> first;
    json at_max = json::object();
    for (const auto& m : a.models) {
        const ModelTag t = model_arg(m);
        CoefficientSet c;
        try {
            c = coefficients_for(s, t, 1.0, base);
        } catch (const InputError&) {
            if (!a.skip_missing) throw;
            skipped += (skipped.empty() ? "" : " ") + to_string(t);
            continue;
        }
        if (!first) first = c;
        const auto curve = acoustic_curve(c, s.delta, grid);
        for (const auto& p : curve)
            r.table.rows.push_back({p.rarefaction, p.atten_factor, p.recip_speed, p.speed_dev,
                                    to_string(t)});
        at_max[to_string(t)] = {{"atten_factor", curve.back().atten_factor},
                                {"recip_speed", curve.back().recip_speed}};
    }
    if (a.nsf) {
        NsfAcousticOptions opt;
        if (a.bulk_viscosity == "relaxation") {
            if (!first) throw InputError("--bulk-viscosity relaxation needs a two-temperature model");
            opt.bulk_viscosity = first->equivalent_bulk_viscosity(s.delta);
        } else {
            try {
                opt.bulk_viscosity = std::stod(a.bulk_viscosity);
            } catch (const std::exception&) {
                throw InputError("--bulk-viscosity expects a number or 'relaxation'");
            }
            if (!(opt.bulk_viscosity >= 0.0))
                throw RangeError("bulk-viscosity", opt.bulk_viscosity, "[0, inf)");
        }
        r.parameters["bulk_viscosity"] = opt.bulk_viscosity;
        const double lam = nsf_conductivity(s, first.value_or(coefficients_for(s, ModelTag::Model4, 1.0)));
        const auto curve = nsf_curve(s.delta, lam, grid, opt);
        for (const auto& p : curve)
            r.table.rows.push_back(
                {p.rarefaction, p.atten_factor, p.recip_speed, p.speed_dev, std::string("nsf")});
        at_max["nsf"] = {{"atten_factor", curve.back().atten_factor},
                         {"recip_speed", curve.back().recip_speed}};
    }
    if (!skipped.empty()) r.header.emplace_back("skipped", skipped + " (no constants)");
    r.results["at_r_max"] = at_max;
    return r;
}

Result cmd_rbs(const RbsArgs& a) {
    const GasSpecies s = load(a.species);
    const ModelTag base = model_arg(a.reduced_base);
    require_positive("y", a.y);
    require_positive("x-max", a.x_max);
    require_positive("step", a.step);
    const auto grid = symmetric_grid(a.x_max, a.step);
    RbsOptions opt;
    opt.verbatim = a.verbatim;

    Result r;
    r.subcommand = "rbs";
    r.species = species_json(s);
    json models = json::array();
    for (const auto& m : a.models) models.push_back(to_string(model_arg(m)));
    r.parameters["models"] = models.dump();
    r.parameters["reduced_base"] = to_string(base);
    r.parameters["y"] = a.y;
    r.parameters["kn"] = rbs_knudsen(a.y);
    r.parameters["x_max"] = a.x_max;
    r.parameters["step"] = a.step;
    r.parameters["verbatim_matrix"] = a.verbatim;
    r.parameters["nsf"] = a.nsf;

    std::vector<SpectrumCurve> curves;
    std::vector<std::string> names;
    std::optional<CoefficientSet> first;
    for (const auto& m : a.models) {
        const ModelTag t = model_arg(m);
        const CoefficientSet c = coefficients_for(s, t, 1.0, base);
        if (!first) first = c;
        curves.push_back(density_spectrum(c, s.delta, a.y, grid, opt));
        names.push_back(to_string(t));
    }
    if (a.nsf) {
        const double lam =
            nsf_conductivity(s, first.value_or(coefficients_for(s, ModelTag::Model4, 1.0)));
        curves.push_back(nsf_density_spectrum(s.delta, lam, a.y, grid));
        names.push_back("nsf");
    }
    if (curves.empty()) throw InputError("rbs needs at least one model or --nsf");
    r.table.columns = {"x"};
    if (curves.size() == 1)
        r.table.columns.push_back("S_normalized");
    else
        for (const auto& n : names) r.table.columns.push_back("S_" + n);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::vector<Cell> row{grid[i]};
        for (const auto& cv : curves) row.push_back(cv.s_values[i]);
        r.table.rows.push_back(std::move(row));
    }
    json peaks = json::object();
    for (std::size_t j = 0; j < curves.size(); ++j) {
        const PeakReport p = peak_report(curves[j]);
        json pj;
        pj["rayleigh_height"] = p.rayleigh_height;
        pj["brillouin_x"] = p.brillouin_x ? json(*p.brillouin_x) : json(nullptr);
        pj["brillouin_height"] = p.brillouin_height ? json(*p.brillouin_height) : json(nullptr);
        peaks[names[j]] = pj;
        r.header.emplace_back("brillouin_x." + names[j],
                              p.brillouin_x ? format_number(*p.brillouin_x) : "none");
    }
    r.results["peaks"] = peaks;
    if (!a.emit_peaks.empty()) {
        json doc;
        doc["species"] = s.name;
        doc["y"] = a.y;
        doc["peaks"] = peaks;
        r.side_files.emplace_back(a.emit_peaks, doc);
    }
    return r;
}

Result cmd_heat(const HeatArgs& a) {
    const GasSpecies s = load(a.species);
    const ModelTag tag = model_arg(a.model);
    const ModelTag base = model_arg(a.reduced_base);
    require_positive("kn", a.kn);
    require_count("points", a.points, 3);
    HeatCase hc;
    hc.kn = a.kn;
    hc.chi = a.chi;
    hc.chi_upper = a.chi_upper;
    hc.delta = s.delta;
    hc.wall_temp_lower = a.wall_dev;
    hc.wall_temp_upper = -a.wall_dev;
    hc.coeffs = coefficients_for(s, tag, a.kn, base);
    hc.full_system = a.full_system;
    hc.grid_points = a.points;
    const HeatProfile p = a.nsf ? solve_heat_nsf(hc) : solve_heat_case(hc);
    const double residual = residual_check(p, hc);

    Result r;
    r.subcommand = "heat";
    r.species = species_json(s);
    r.parameters["model"] = a.nsf ? std::string("nsf") : to_string(tag);
    r.parameters["coefficients"] = to_string(tag);
    if (tag == ModelTag::Reduced) r.parameters["reduced_base"] = to_string(base);
    r.parameters["kn"] = a.kn;
    r.parameters["chi"] = a.chi;
    if (a.chi_upper) r.parameters["chi_upper"] = *a.chi_upper;
    r.parameters["wall_dev"] = a.wall_dev;
    r.parameters["full_system"] = a.full_system;
    r.parameters["points"] = a.points;
    if (!a.overlay.empty()) r.parameters["overlay"] = a.overlay;
    r.header.emplace_back("q_y", format_number(p.q_y));
    r.header.emplace_back("residual", format_number(residual));
    r.table.columns = {"y", "rho", "theta_tr", "theta_in", "theta", "vartheta", "Qy"};
    for (std::size_t i = 0; i < p.y_grid.size(); ++i)
        r.table.rows.push_back({p.y_grid[i], p.rho[i], p.theta_tr[i], p.theta_in[i], p.theta[i],
                                p.vartheta[i], p.Q_y[i]});
    if (!a.overlay.empty()) r.results["overlay"] = overlay_report(p, a.overlay, r);
    r.results["q_y"] = p.q_y;
    r.results["residual"] = residual;
    r.results["m"] = p.solution.m;
    r.results["condition_number"] = p.solution.condition_number;
    return r;
}

Result cmd_bc_table(const BcTableArgs& a) {
    const GasSpecies s = load(a.species);
    if (a.chi.empty()) throw InputError("bc-table needs at least one --chi value");
    Result r;
    r.subcommand = "bc-table";
    r.species = species_json(s);
    json chis = json::array();
    for (double c : a.chi) chis.push_back(c);
    r.parameters["chi"] = chis.dump();
    r.table.columns = {"chi", "eta11", "eta12", "eta22", "xi", "psd", "reduced_eta12",
                       "reduced_eta22"};
    for (double chi : a.chi) {
        const OnsagerMatrix m = onsager_matrix(s.delta, chi);
        const OnsagerMatrix red = reduced_onsager_matrix(s.delta, chi);
        r.table.rows.push_back({chi, m.eta11, m.eta12, m.eta22, m.xi,
                                std::string(m.is_psd() ? "1" : "0"), red.eta12, red.eta22});
    }
    return r;
}

} // namespace twotemp::cli
