#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "twotemp/coefficients.hpp"
#include "twotemp/species.hpp"

namespace twotemp::cli {

using json = nlohmann::ordered_json;
using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Everything a subcommand produces before it is serialized.
struct Result {
    std::string subcommand;
    json species;  ///< resolved species, null when none is involved
    json parameters = json::object();
    std::vector<std::pair<std::string, std::string>> header;  ///< extra `# key=value` lines
    Table table;
    json results = json::object();
    std::vector<std::pair<std::string, json>> side_files;  ///< (path, document)
    std::optional<std::string> failure;  ///< checks that ran but did not pass
};

std::string format_number(double v);
std::string render_csv(const Result& r);
std::string render_json(const Result& r);

struct OutputOptions {
    std::string out;  ///< empty: stdout
    std::string format = "csv";
};

/// Writes the result (and its manifest when `out` is set) and returns the text for stdout.
std::string emit(const Result& r, const OutputOptions& o, const std::vector<std::string>& argv);

// ---- subcommands ----

struct CoeffsArgs {
    std::string species = "N2";
    std::vector<std::string> models;  ///< empty: every model the species supports
    double kn = 1.0;
    std::optional<double> length;
    std::string reduced_base = "4";
};
Result cmd_coeffs(const CoeffsArgs& a);

struct HCheckArgs {
    long samples = 10000;
    std::uint64_t seed = 20240601;
};
Result cmd_check_h_theorem(const HCheckArgs& a);

struct StabilityArgs {
    std::string species = "CH4";
    std::string model = "1";
    std::string reduced_base = "4";
    double kn = 1.0;
    double k_max = 100.0;
    double omega_max = 100.0;
    int samples = 200;
};
Result cmd_stability(const StabilityArgs& a);

struct AcousticsArgs {
    std::string species = "N2";
    std::vector<std::string> models{"4"};
    std::string reduced_base = "4";
    double r_min = 0.1;
    double r_max = 100.0;
    int points = 60;
    bool nsf = false;
    std::string bulk_viscosity = "0";  ///< number, or "relaxation"
    bool skip_missing = false;
};
Result cmd_acoustics(const AcousticsArgs& a);

struct RbsArgs {
    std::string species = "CH4";
    std::vector<std::string> models{"1"};
    std::string reduced_base = "1";
    double y = 18.27;
    double x_max = 3.0;
    double step = 0.005;
    bool verbatim = false;
    bool nsf = false;
    std::string emit_peaks;  ///< path of the peak JSON, empty: none
};
Result cmd_rbs(const RbsArgs& a);

struct HeatArgs {
    std::string species = "N2";
    std::string model = "4";
    std::string reduced_base = "4";
    double kn = 0.071;
    double chi = 1.0;
    std::optional<double> chi_upper;
    double wall_dev = 0.0476;
    bool nsf = false;
    bool full_system = false;
    int points = 201;
    std::string overlay;  ///< digitized reference profile CSV, empty: none
};
Result cmd_heat(const HeatArgs& a);

struct BcTableArgs {
    std::string species = "N2";
    std::vector<double> chi{0.0, 0.25, 0.5, 0.75, 1.0};
};
Result cmd_bc_table(const BcTableArgs& a);

struct ReproduceArgs {
    std::string target;
    bool list = false;
    std::optional<double> y;
    std::string species;  ///< override of the target's gas
};
Result cmd_reproduce(const ReproduceArgs& a);

struct TargetInfo {
    std::string name;
    std::string description;
};
std::vector<TargetInfo> reproduce_targets();

// ---- shared helpers ----
GasSpecies load(const std::string& path_or_name);
json species_json(const GasSpecies& s);
ModelTag model_arg(const std::string& text);

} // namespace twotemp::cli
