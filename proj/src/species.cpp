#include "twotemp/species.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "twotemp/coefficients.hpp"
#include "twotemp/errors.hpp"

#ifndef TWOTEMP_DEFAULT_SPECIES_DIR
#define TWOTEMP_DEFAULT_SPECIES_DIR "data/species"
#endif

namespace twotemp {

using nlohmann::json;

std::string RangeError::format_value(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

double GasSpecies::knudsen(double length_scale) const {
    if (!(length_scale > 0.0)) throw RangeError("length_scale", length_scale, "(0, inf)");
    return shear_viscosity * std::sqrt(ref_theta()) / (ref_pressure * length_scale);
}

double heat_capacity_ratio(double delta) {
    if (!(delta > 0.0)) throw RangeError("delta", delta, "(0, inf)");
    return (5.0 + delta) / (3.0 + delta);
}

namespace {

void require_positive(const char* field, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) throw RangeError(field, v, "(0, inf)");
}

} // namespace

void validate(const GasSpecies& s) {
    if (s.name.empty()) throw InputError("missing field: name");
    require_positive("delta", s.delta);
    require_positive("gas_constant", s.gas_constant);
    require_positive("ref_temperature", s.ref_temperature);
    require_positive("ref_pressure", s.ref_pressure);
    require_positive("shear_viscosity", s.shear_viscosity);
    if (s.thermal_conductivity) require_positive("thermal_conductivity", *s.thermal_conductivity);
    if (!(s.accommodation >= 0.0 && s.accommodation <= 1.0))
        throw RangeError("accommodation", s.accommodation, "[0, 1]");
    if (s.model1) {
        if (!(s.model1->kappa >= 0.0 && s.model1->kappa <= 2.0 / 3.0))
            throw RangeError("model1.kappa", s.model1->kappa, "[0, 0.666667]");
        require_positive("model1.diameter", s.model1->diameter);
    }
    if (s.model2) {
        if (!(s.model2->nu >= -0.5 && s.model2->nu < 1.0))
            throw RangeError("model2.nu", s.model2->nu, "[-0.5, 1)");
        if (!(s.model2->theta1 > 0.0 && s.model2->theta1 <= 1.0))
            throw RangeError("model2.theta1", s.model2->theta1, "(0, 1]");
        require_positive("model2.collision_freq_coeff", s.model2->collision_freq_coeff);
    }
    if (s.model3) validate_model3(*s.model3, s.delta);
    if (s.model4) require_positive("model4.relaxation_time", s.model4->relaxation_time);
    if (!s.model1 && !s.model2 && !s.model3 && !(s.model4 && s.thermal_conductivity))
        throw InputError("species '" + s.name + "' provides no complete model constant set");
}

namespace {

double get_number(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) throw InputError("missing field: " + where + key);
    if (!it->is_number()) throw InputError("field " + where + key + " must be a number");
    return it->get<double>();
}

/// A model block is absent when missing, null, or marked "status": "unfilled".
const json* model_block(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end() || it->is_null()) return nullptr;
    if (!it->is_object()) throw InputError(std::string("field ") + key + " must be an object");
    if (auto st = it->find("status"); st != it->end() && st->is_string() &&
                                      st->get<std::string>() == "unfilled")
        return nullptr;
    return &*it;
}

} // namespace

GasSpecies species_from_json(const json& doc) {
    if (!doc.is_object()) throw InputError("species document must be an object");
    GasSpecies s;
    auto name = doc.find("name");
    if (name == doc.end() || !name->is_string()) throw InputError("missing field: name");
    s.name = name->get<std::string>();
    s.delta = get_number(doc, "delta", "");
    s.gas_constant = get_number(doc, "gas_constant", "");
    s.ref_temperature = get_number(doc, "ref_temperature", "");
    s.ref_pressure = get_number(doc, "ref_pressure", "");
    s.shear_viscosity = get_number(doc, "shear_viscosity", "");
    if (auto it = doc.find("thermal_conductivity"); it != doc.end() && !it->is_null())
        s.thermal_conductivity = get_number(doc, "thermal_conductivity", "");
    if (doc.contains("accommodation")) s.accommodation = get_number(doc, "accommodation", "");

    if (auto* b = model_block(doc, "model1"))
        s.model1 = Model1Constants{get_number(*b, "kappa", "model1."),
                                   get_number(*b, "diameter", "model1.")};
    if (auto* b = model_block(doc, "model2"))
        s.model2 = Model2Constants{get_number(*b, "nu", "model2."),
                                   get_number(*b, "theta1", "model2."),
                                   get_number(*b, "collision_freq_coeff", "model2.")};
    if (auto* b = model_block(doc, "model3"))
        s.model3 = Model3Constants{get_number(*b, "P0_q", "model3."),
                                   get_number(*b, "P1_q", "model3."),
                                   get_number(*b, "P0_s", "model3."),
                                   get_number(*b, "P1_s", "model3."),
                                   get_number(*b, "P0_Pi", "model3."),
                                   get_number(*b, "P0_sigma", "model3.")};
    if (auto* b = model_block(doc, "model4"))
        s.model4 = Model4Constants{get_number(*b, "relaxation_time", "model4.")};
    validate(s);
    return s;
}

json species_to_json(const GasSpecies& s) {
    json j;
    j["name"] = s.name;
    j["delta"] = s.delta;
    j["gas_constant"] = s.gas_constant;
    j["ref_temperature"] = s.ref_temperature;
    j["ref_pressure"] = s.ref_pressure;
    j["shear_viscosity"] = s.shear_viscosity;
    j["thermal_conductivity"] = s.thermal_conductivity ? json(*s.thermal_conductivity) : json();
    j["accommodation"] = s.accommodation;
    j["model1"] = s.model1 ? json{{"kappa", s.model1->kappa}, {"diameter", s.model1->diameter}}
                           : json();
    j["model2"] = s.model2 ? json{{"nu", s.model2->nu},
                                  {"theta1", s.model2->theta1},
                                  {"collision_freq_coeff", s.model2->collision_freq_coeff}}
                           : json();
    if (s.model3) {
        const auto& p = *s.model3;
        j["model3"] = {{"P0_q", p.P0_q}, {"P1_q", p.P1_q},   {"P0_s", p.P0_s},
                       {"P1_s", p.P1_s}, {"P0_Pi", p.P0_Pi}, {"P0_sigma", p.P0_sigma}};
    } else {
        j["model3"] = nullptr;
    }
    j["model4"] = s.model4 ? json{{"relaxation_time", s.model4->relaxation_time}} : json();
    return j;
}

GasSpecies parse_species(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed species document: ") + e.what());
    }
    return species_from_json(doc);
}

GasSpecies load_species(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open species file " + file.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_species(ss.str());
    } catch (const RangeError&) {
        throw;
    } catch (const InputError& e) {
        throw InputError(file.string() + ": " + e.what());
    }
}

std::filesystem::path species_directory() {
    if (const char* env = std::getenv("TWOTEMP_SPECIES_DIR"); env && *env) return env;
    return TWOTEMP_DEFAULT_SPECIES_DIR;
}

GasSpecies resolve_species(const std::string& path_or_name) {
    std::filesystem::path p(path_or_name);
    if (std::filesystem::is_regular_file(p)) return load_species(p);
    auto fixture = species_directory() / (path_or_name + ".json");
    if (std::filesystem::is_regular_file(fixture)) return load_species(fixture);
    throw InputError("unknown species '" + path_or_name + "' (no such file, no fixture in " +
                     species_directory().string() + ")");
}

} // namespace twotemp
