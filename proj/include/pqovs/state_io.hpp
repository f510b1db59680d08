#pragma once

#include <string>
#include <string_view>

#include "pqovs/propagator.hpp"
#include "pqovs/states.hpp"

namespace pqovs::io {

inline constexpr std::string_view kStateFormat = "pqovs-state-v1";

/// pqovs-state-v1 JSON document for `state`.
std::string state_to_json(const RadialVortexState& state);

/// Parses a pqovs-state-v1 document; the grid is rebuilt from its layout.
RadialVortexState state_from_json(std::string_view text);

/// `z,fidelity,norm` with 17 significant digits.
std::string scan_to_csv(const FidelityScan& scan);
std::string scan_to_json(const FidelityScan& scan);

/// `rho,density` with 17 significant digits.
std::string density_to_csv(const DensityProfile& profile);
std::string density_to_json(const DensityProfile& profile);

/// `m<TAB>z` lines.
std::string planes_to_tsv(const FourierPlaneList& planes);

/// Writes via a temporary sibling and rename.
void write_file_atomic(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

}  // namespace pqovs::io
