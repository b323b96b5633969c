#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "internal.hpp"
#include "twotemp/errors.hpp"

#ifndef TWOTEMP_VERSION
#define TWOTEMP_VERSION "dev"
#endif

namespace twotemp::cli {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string cell_text(const Cell& c) {
    if (const double* d = std::get_if<double>(&c)) return format_number(*d);
    return std::get<std::string>(c);
}

std::string scalar_text(const json& v) {
    if (v.is_number_float()) return format_number(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

json cell_json(const Cell& c) {
    if (const double* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d)) return nullptr;
        return *d;
    }
    return std::get<std::string>(c);
}

void write_file(const std::string& path, const std::string& text) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
    }
    std::ofstream f(p, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
    if (!f) throw InputError("write failed for '" + path + "'");
}

} // namespace

std::string render_csv(const Result& r) {
    std::ostringstream o;
    o << "# tool=twotemp version=" << TWOTEMP_VERSION << "\n";
    o << "# subcommand=" << r.subcommand << "\n";
    if (r.species.is_object()) o << "# species=" << r.species.value("name", "") << "\n";
    for (const auto& [k, v] : r.parameters.items()) o << "# " << k << "=" << scalar_text(v) << "\n";
    for (const auto& [k, v] : r.header) o << "# " << k << "=" << v << "\n";
    for (std::size_t i = 0; i < r.table.columns.size(); ++i)
        o << (i ? "," : "") << r.table.columns[i];
    o << "\n";
    for (const auto& row : r.table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) o << (i ? "," : "") << cell_text(row[i]);
        o << "\n";
    }
    return o.str();
}

std::string render_json(const Result& r) {
    json doc;
    doc["tool"] = "twotemp";
    doc["version"] = TWOTEMP_VERSION;
    doc["subcommand"] = r.subcommand;
    doc["species"] = r.species.is_object() ? json(r.species.value("name", "")) : json(nullptr);
    doc["parameters"] = r.parameters;
    json header = json::object();
    for (const auto& [k, v] : r.header) header[k] = v;
    doc["header"] = header;
    doc["columns"] = r.table.columns;
    json rows = json::array();
    for (const auto& row : r.table.rows) {
        json jr = json::array();
        for (const auto& c : row) jr.push_back(cell_json(c));
        rows.push_back(std::move(jr));
    }
    doc["rows"] = std::move(rows);
    doc["results"] = r.results;
    return doc.dump(2) + "\n";
}

std::string emit(const Result& r, const OutputOptions& o, const std::vector<std::string>& argv) {
    if (o.format != "csv" && o.format != "json")
        throw InputError("unknown format '" + o.format + "' (csv|json)");
    const std::string text = (o.format == "json") ? render_json(r) : render_csv(r);
    std::vector<std::string> outputs;
    for (const auto& [path, doc] : r.side_files) {
        write_file(path, doc.dump(2) + "\n");
        outputs.push_back(path);
    }
    if (o.out.empty()) return text;

    write_file(o.out, text);
    outputs.insert(outputs.begin(), o.out);
    json m;
    m["tool"] = "twotemp";
    m["version"] = TWOTEMP_VERSION;
    m["subcommand"] = r.subcommand;
    m["argv"] = argv;
    m["species"] = r.species;
    m["parameters"] = r.parameters;
    m["format"] = o.format;
    m["outputs"] = outputs;
    m["results"] = r.results;
    write_file(o.out + ".manifest.json", m.dump(2) + "\n");
    return {};
}

} // namespace twotemp::cli
