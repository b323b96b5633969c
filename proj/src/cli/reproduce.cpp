#include <algorithm>
#include <functional>
#include <map>

#include "internal.hpp"
#include "twotemp/errors.hpp"

namespace twotemp::cli {

namespace {

struct Target {
    std::string description;
    std::function<Result(const ReproduceArgs&)> build;
};

std::string pick(const ReproduceArgs& a, const char* fallback) {
    return a.species.empty() ? std::string(fallback) : a.species;
}

Target stability_target(const char* model, const char* figure) {
    return {std::string("CH4 spatial/temporal stability, ") + figure,
            [model](const ReproduceArgs& a) {
                StabilityArgs s;
                s.species = pick(a, "CH4");
                s.model = model;
                try {
                    return cmd_stability(s);
                } catch (const InputError& e) {
                    if (std::string(model) != "3") throw;
                    throw InputError(std::string(e.what()) +
                                     "; pass --species <file> carrying model3 constants");
                }
            }};
}

Target acoustic_target(const char* gas, const char* quantity, const char* figure) {
    return {std::string(gas) + " " + quantity + " vs p/(mu omega), models 1-4 and NSF, " + figure,
            [gas, quantity](const ReproduceArgs& a) {
                AcousticsArgs s;
                s.species = pick(a, gas);
                s.models = {"1", "2", "3", "4"};
                s.r_min = 0.1;
                s.r_max = 100.0;
                s.points = 60;
                s.nsf = true;
                s.skip_missing = true;
                Result r = cmd_acoustics(s);
                r.header.emplace_back("quantity", quantity);
                return r;
            }};
}

/// Long-format profile table of one heat field for both Knudsen numbers.
Result heat_figure(const ReproduceArgs& a, const std::string& field) {
    Result out;
    out.table.columns = {"kn", "model_tag", "y", field};
    bool first = true;
    for (double kn : {0.071, 0.71}) {
        struct Variant {
            const char* tag;
            const char* model;
            bool nsf;
        };
        for (const Variant v : {Variant{"model4", "4", false}, Variant{"reduced", "reduced", false},
                                Variant{"nsf", "4", true}}) {
            HeatArgs h;
            h.species = pick(a, "N2");
            h.model = v.model;
            h.kn = kn;
            h.nsf = v.nsf;
            const Result r = cmd_heat(h);
            if (first) {
                out.species = r.species;
                out.parameters["wall_dev"] = h.wall_dev;
                out.parameters["chi"] = h.chi;
                out.parameters["points"] = h.points;
                first = false;
            }
            const auto& cols = r.table.columns;
            const std::size_t idx =
                std::find(cols.begin(), cols.end(), field) - cols.begin();
            for (const auto& row : r.table.rows)
                out.table.rows.push_back({kn, std::string(v.tag), row[0], row[idx]});
            const std::string key = std::string(v.tag) + "@" + format_number(kn);
            out.header.emplace_back("q_y." + key, format_number(r.results["q_y"].get<double>()));
            out.results["q_y"][key] = r.results["q_y"];
            out.results["residual"][key] = r.results["residual"];
        }
    }
    return out;
}

const std::map<std::string, Target>& registry() {
    static const std::map<std::string, Target> t = {
        {"fig-stability-ch4-model1", stability_target("1", "Model 1 coefficients")},
        {"fig-stability-ch4-model2", stability_target("2", "Model 2 coefficients")},
        {"fig-stability-ch4-model3", stability_target("3", "Model 3 coefficients")},
        {"fig-stability-ch4-model4", stability_target("4", "Model 4 coefficients")},
        {"fig-stability-ch4-reduced", stability_target("reduced", "reduced model")},
        {"fig-attenuation-n2", acoustic_target("N2", "atten_factor", "attenuation figure, upper panel")},
        {"fig-attenuation-o2", acoustic_target("O2", "atten_factor", "attenuation figure, lower panel")},
        {"fig-phase-velocity-n2", acoustic_target("N2", "recip_speed", "phase-velocity figure, upper panel")},
        {"fig-phase-velocity-o2", acoustic_target("O2", "recip_speed", "phase-velocity figure, lower panel")},
        {"fig-speed-of-sound-n2", acoustic_target("N2", "speed_dev", "speed-of-sound figure, upper panel")},
        {"fig-speed-of-sound-o2", acoustic_target("O2", "speed_dev", "speed-of-sound figure, lower panel")},
        {"fig-rbs-ch4",
         {"CH4 Rayleigh-Brillouin spectrum (--y 18.27, 4.46 or 2.70), model 1, reduced and NSF",
          [](const ReproduceArgs& a) {
              RbsArgs r;
              r.species = pick(a, "CH4");
              r.models = {"1", "reduced"};
              r.reduced_base = "1";
              r.y = a.y.value_or(18.27);
              r.nsf = true;
              return cmd_rbs(r);
          }}},
        {"fig-heat-density",
         {"heat conduction density profiles at Kn 0.071 and 0.71, two-temperature and NSF",
          [](const ReproduceArgs& a) { return heat_figure(a, "rho"); }}},
        {"fig-heat-theta-tr",
         {"heat conduction translational temperature at Kn 0.071 and 0.71",
          [](const ReproduceArgs& a) { return heat_figure(a, "theta_tr"); }}},
        {"fig-heat-theta-in",
         {"heat conduction internal temperature at Kn 0.071 and 0.71",
          [](const ReproduceArgs& a) { return heat_figure(a, "theta_in"); }}},
    };
    return t;
}

} // namespace

std::vector<TargetInfo> reproduce_targets() {
    std::vector<TargetInfo> out;
    for (const auto& [name, t] : registry()) out.push_back({name, t.description});
    return out;
}

Result cmd_reproduce(const ReproduceArgs& a) {
    if (a.list || a.target.empty()) {
        Result r;
        r.subcommand = "reproduce";
        r.species = nullptr;
        r.table.columns = {"target", "description"};
        for (const auto& t : reproduce_targets()) r.table.rows.push_back({t.name, t.description});
        return r;
    }
    const auto it = registry().find(a.target);
    if (it == registry().end())
        throw InputError("unknown reproduce target '" + a.target + "' (see reproduce --list)");
    if (a.y && a.target != "fig-rbs-ch4") throw InputError("--y only applies to fig-rbs-ch4");
    Result r = it->second.build(a);
    const std::string inner = r.subcommand;
    r.subcommand = "reproduce";
    json params;
    params["target"] = a.target;
    if (!inner.empty()) params["via"] = inner;
    for (const auto& [k, v] : r.parameters.items()) params[k] = v;
    r.parameters = params;
    return r;
}

} // namespace twotemp::cli
