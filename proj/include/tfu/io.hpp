#pragma once

#include <filesystem>
#include <string>

#include "tfu/signal.hpp"
#include "tfu/surface.hpp"

namespace tfu {

/// Signal from a generator string: `gauss` (exp(-pi|x|^2)), `hermite:<k>`
/// or `hermite:<k1>,<k2>`, `spec:<json file>` (GaussHermiteSpec). The result
/// carries its closed form.
Signal generate_signal(const std::string& generator, const Grid& grid);

/// Writes a TFSIG1 manifest at `manifest` and the payload next to it as
/// `<manifest name>.bin`. A nonempty generator is recorded as `generator=`.
void write_signal(const std::filesystem::path& manifest, const Signal& s, const std::string& generator = "");

/// Reads a TFSIG1 manifest and payload. When the manifest names a generator
/// whose samples reproduce the payload, its closed form is attached.
Signal read_signal(const std::filesystem::path& manifest);

/// TFSUR1: manifest keys format, dim, x_L, x_n, y_L, y_n, data_file.
void write_surface(const std::filesystem::path& manifest, const Surface& s);
Surface read_surface(const std::filesystem::path& manifest);

}  // namespace tfu
