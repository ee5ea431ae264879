#include "tfu/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

#include "tfu/errors.hpp"
#include "tfu/hermite.hpp"
#include "tfu/spec.hpp"

namespace tfu {
namespace {

namespace fs = std::filesystem;

struct Entry {
  std::string value;
  int line;
};

using Manifest = std::map<std::string, Entry>;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Manifest read_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path.string());
  Manifest m;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw FormatError("manifest " + path.string() + " line " + std::to_string(line) + ": expected key=value");
    const std::string key = trim(s.substr(0, eq));
    if (key.empty())
      throw FormatError("manifest " + path.string() + " line " + std::to_string(line) + ": empty key");
    if (m.count(key))
      throw FormatError("manifest " + path.string() + " line " + std::to_string(line) + ": duplicate key '" + key + "'");
    m[key] = {trim(s.substr(eq + 1)), line};
  }
  return m;
}

const Entry& field(const Manifest& m, const fs::path& path, const std::string& key) {
  const auto it = m.find(key);
  if (it == m.end()) throw FormatError("manifest " + path.string() + ": missing key '" + key + "'");
  return it->second;
}

double number_field(const Manifest& m, const fs::path& path, const std::string& key) {
  const Entry& e = field(m, path, key);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(e.value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != e.value.size() || !std::isfinite(v))
    throw FormatError("manifest " + path.string() + " line " + std::to_string(e.line) + ": '" + key +
                      "' is not a number");
  return v;
}

int int_field(const Manifest& m, const fs::path& path, const std::string& key) {
  const double v = number_field(m, path, key);
  if (v != std::floor(v) || std::abs(v) > 1e9)
    throw FormatError("manifest " + path.string() + " line " + std::to_string(field(m, path, key).line) + ": '" +
                      key + "' is not an integer");
  return static_cast<int>(v);
}

void check_format(const Manifest& m, const fs::path& path, const std::string& expected) {
  const Entry& e = field(m, path, "format");
  if (e.value != expected)
    throw FormatError("manifest " + path.string() + " line " + std::to_string(e.line) + ": expected format=" +
                      expected);
}

Grid grid_field(const Manifest& m, const fs::path& path, const std::string& l_key, const std::string& n_key) {
  const int d = int_field(m, path, "dim");
  const double l = number_field(m, path, l_key);
  const int n = int_field(m, path, n_key);
  try {
    return Grid(d, l, n);
  } catch (const PreconditionError& e) {
    throw FormatError("manifest " + path.string() + " line " + std::to_string(field(m, path, n_key).line) + ": " +
                      e.what());
  }
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void put_double(unsigned char* dst, double x) {
  auto bits = std::bit_cast<std::uint64_t>(x);
  for (int b = 0; b < 8; ++b) dst[b] = static_cast<unsigned char>((bits >> (8 * b)) & 0xffu);
}

double get_double(const unsigned char* src) {
  std::uint64_t bits = 0;
  for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(src[b]) << (8 * b);
  return std::bit_cast<double>(bits);
}

void write_payload(const fs::path& path, std::span<const cplx> values) {
  std::vector<unsigned char> bytes(values.size() * 16);
  for (std::size_t i = 0; i < values.size(); ++i) {
    put_double(&bytes[16 * i], values[i].real());
    put_double(&bytes[16 * i + 8], values[i].imag());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

std::vector<cplx> read_payload(const fs::path& manifest, const Manifest& m, std::size_t count) {
  const Entry& e = field(m, manifest, "data_file");
  fs::path data = e.value;
  if (data.is_relative()) data = manifest.parent_path() / data;
  std::ifstream in(data, std::ios::binary);
  if (!in) throw IoError("cannot open payload " + data.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() != count * 16)
    throw FormatError("payload " + data.string() + " has " + std::to_string(bytes.size()) + " bytes, expected " +
                      std::to_string(count * 16));
  std::vector<cplx> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    values[i] = {get_double(&bytes[16 * i]), get_double(&bytes[16 * i + 8])};
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag()))
      throw FormatError("payload " + data.string() + " contains a non-finite value at index " + std::to_string(i));
  }
  return values;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

int parse_index(const std::string& s, const std::string& generator) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || v < 0) throw PreconditionError("invalid Hermite index in '" + generator + "'");
  return v;
}

}  // namespace

Signal generate_signal(const std::string& generator, const Grid& grid) {
  const int d = grid.dim();
  if (generator == "gauss") {
    return Signal::from_closed_form(grid, gaussian_closed_form(Eigen::MatrixXd::Identity(d, d)));
  }
  if (generator.rfind("hermite:", 0) == 0) {
    const std::string rest = generator.substr(8);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) {
      if (d != 1) throw PreconditionError("hermite:<k> needs d=1; use hermite:<k1>,<k2> for d=2");
      return hermite_function(HermiteIndex::of(parse_index(rest, generator)), grid);
    }
    if (d != 2) throw PreconditionError("hermite:<k1>,<k2> needs d=2");
    return hermite_function(
        HermiteIndex::of(parse_index(rest.substr(0, comma), generator), parse_index(rest.substr(comma + 1), generator)),
        grid);
  }
  if (generator.rfind("spec:", 0) == 0) {
    const fs::path path = generator.substr(5);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open spec file " + path.string());
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw FormatError("spec file " + path.string() + ": " + e.what());
    }
    const GaussHermiteSpec spec = GaussHermiteSpec::from_json(j);
    if (spec.dim() != d) throw PreconditionError("spec dimension does not match the grid");
    return sample_spec(spec, grid);
  }
  throw PreconditionError("unknown generator '" + generator + "' (expected gauss, hermite:<k>, spec:<file>)");
}

void write_signal(const fs::path& manifest, const Signal& s, const std::string& generator) {
  const Grid& g = s.grid();
  const fs::path data = manifest.filename().string() + ".bin";
  std::ostringstream m;
  m << "format=TFSIG1\n"
    << "dim=" << g.dim() << "\n"
    << "L=" << format_double(g.half_extent()) << "\n"
    << "n=" << g.points_per_axis() << "\n"
    << "data_file=" << data.string() << "\n";
  if (!generator.empty()) m << "generator=" << generator << "\n";
  write_payload(manifest.parent_path() / data, s.samples());
  write_text(manifest, m.str());
}

Signal read_signal(const fs::path& manifest) {
  const Manifest m = read_manifest(manifest);
  check_format(m, manifest, "TFSIG1");
  const Grid g = grid_field(m, manifest, "L", "n");
  Signal s(g, read_payload(manifest, m, g.size()));
  const auto gen = m.find("generator");
  if (gen == m.end()) return s;
  Signal reference = [&] {
    try {
      return generate_signal(gen->second.value, g);
    } catch (const Error& e) {
      throw FormatError("manifest " + manifest.string() + " line " + std::to_string(gen->second.line) + ": " +
                        e.what());
    }
  }();
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    diff = std::max(diff, std::abs(s[i] - reference[i]));
    scale = std::max(scale, std::abs(reference[i]));
  }
  if (diff <= 1e-12 * std::max(scale, 1e-300)) return s.with_closed_form(*reference.closed_form());
  return s;
}

void write_surface(const fs::path& manifest, const Surface& s) {
  const fs::path data = manifest.filename().string() + ".bin";
  std::ostringstream m;
  m << "format=TFSUR1\n"
    << "dim=" << s.dim() << "\n"
    << "x_L=" << format_double(s.x_grid().half_extent()) << "\n"
    << "x_n=" << s.x_grid().points_per_axis() << "\n"
    << "y_L=" << format_double(s.y_grid().half_extent()) << "\n"
    << "y_n=" << s.y_grid().points_per_axis() << "\n"
    << "data_file=" << data.string() << "\n";
  write_payload(manifest.parent_path() / data, s.samples());
  write_text(manifest, m.str());
}

Surface read_surface(const fs::path& manifest) {
  const Manifest m = read_manifest(manifest);
  check_format(m, manifest, "TFSUR1");
  const Grid xg = grid_field(m, manifest, "x_L", "x_n");
  const Grid yg = grid_field(m, manifest, "y_L", "y_n");
  return Surface(xg, yg, read_payload(manifest, m, xg.size() * yg.size()));
}

}  // namespace tfu
