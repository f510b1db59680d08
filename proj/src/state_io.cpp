#include "pqovs/state_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "pqovs/errors.hpp"

namespace pqovs::io {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

std::string state_to_json(const RadialVortexState& state) {
    const auto& grid = state.grid();
    json doc;
    doc["format"] = kStateFormat;
    doc["charge"] = state.charge();
    doc["alpha"] = state.alpha() ? json(*state.alpha()) : json(nullptr);
    doc["family"] = to_string(state.family());
    json g;
    g["scheme"] = to_string(grid.scheme);
    g["r_max"] = grid.r_max;
    g["n"] = grid.n;
    if (grid.scheme == GridScheme::bessel_zero) g["order_hint"] = grid.order_hint;
    doc["grid"] = std::move(g);
    json samples = json::array();
    for (const auto& s : state.samples()) samples.push_back(json::array({s.real(), s.imag()}));
    doc["samples"] = std::move(samples);
    return doc.dump() + "\n";
}

RadialVortexState state_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("state file is not valid JSON: ") + e.what());
    }
    try {
        if (doc.at("format").get<std::string>() != kStateFormat) {
            throw InvalidArgument("state file: unsupported format '" + doc.at("format").get<std::string>() + "'");
        }
        const int charge = doc.at("charge").get<int>();
        std::optional<double> alpha;
        if (!doc.at("alpha").is_null()) alpha = doc.at("alpha").get<double>();
        const Family family = family_from_string(doc.at("family").get<std::string>());
        const auto& g = doc.at("grid");
        const GridScheme scheme = grid_scheme_from_string(g.at("scheme").get<std::string>());
        const int order_hint = g.contains("order_hint") ? g.at("order_hint").get<int>() : std::abs(charge);
        auto grid = make_grid(scheme, g.at("r_max").get<double>(), g.at("n").get<int>(), order_hint);

        const auto& raw = doc.at("samples");
        if (!raw.is_array() || static_cast<int>(raw.size()) != grid->n) {
            throw InvalidArgument("state file: sample count does not match grid");
        }
        std::vector<cplx> samples;
        samples.reserve(raw.size());
        for (const auto& pair : raw) {
            if (!pair.is_array() || pair.size() != 2) throw InvalidArgument("state file: samples must be [re, im]");
            samples.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        return RadialVortexState(charge, alpha, family, std::move(grid), std::move(samples));
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("state file: ") + e.what());
    }
}

std::string scan_to_csv(const FidelityScan& scan) {
    std::ostringstream os;
    os << "z,fidelity,norm\n";
    for (const auto& row : scan.rows) os << fmt17(row.z) << ',' << fmt17(row.fidelity) << ',' << fmt17(row.norm) << '\n';
    return os.str();
}

std::string scan_to_json(const FidelityScan& scan) {
    json rows = json::array();
    for (const auto& row : scan.rows) rows.push_back({{"z", row.z}, {"fidelity", row.fidelity}, {"norm", row.norm}});
    return json{{"rows", rows}}.dump() + "\n";
}

std::string density_to_csv(const DensityProfile& profile) {
    std::ostringstream os;
    os << "rho,density\n";
    for (std::size_t i = 0; i < profile.radii.size(); ++i) {
        os << fmt17(profile.radii[i]) << ',' << fmt17(profile.values[i]) << '\n';
    }
    return os.str();
}

std::string density_to_json(const DensityProfile& profile) {
    return json{{"rho", profile.radii}, {"density", profile.values}}.dump() + "\n";
}

std::string planes_to_tsv(const FourierPlaneList& planes) {
    std::ostringstream os;
    for (const auto& p : planes.planes) os << p.m << '\t' << fmt17(p.z) << '\n';
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidArgument("cannot open '" + tmp + "' for writing");
        out << contents;
        if (!out.flush()) throw InvalidArgument("failed writing '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.c_str());
        throw InvalidArgument("cannot move output into place at '" + path + "': " + ec.message());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace pqovs::io
