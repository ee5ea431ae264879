#include "doctest.h"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "tfu/errors.hpp"
#include "tfu/hermite.hpp"
#include "tfu/io.hpp"
#include "tfu/transforms.hpp"
#include "unit/helpers.hpp"

using namespace tfu;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("tfu_io_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::vector<unsigned char> read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("signal round trip is bitwise") {
  TempDir dir;
  std::mt19937_64 rng(61);
  const Signal s = test::superposition(rng, default_grid(1), 6);
  write_signal(dir.path / "s.tfsig", s);
  const Signal r = read_signal(dir.path / "s.tfsig");
  CHECK(r.grid() == s.grid());
  bool identical = true;
  for (std::size_t i = 0; i < s.size(); ++i) identical = identical && r[i] == s[i];
  CHECK(identical);
  CHECK(r.closed_form() == nullptr);
}

TEST_CASE("payload is little-endian interleaved") {
  TempDir dir;
  const Signal h0 = hermite_function(HermiteIndex::of(0), default_grid(1));
  write_signal(dir.path / "h.tfsig", h0);
  const auto bytes = read_bytes(dir.path / "h.tfsig.bin");
  REQUIRE(bytes.size() == 16 * h0.size());
  std::uint64_t bits = 0;
  for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(bytes[16 * 128 + b]) << (8 * b);
  double value = 0.0;
  std::memcpy(&value, &bits, sizeof value);
  CHECK(value == h0[128].real());
}

TEST_CASE("generator closed form is reattached") {
  TempDir dir;
  const Grid g = default_grid(1);
  const Signal h2 = generate_signal("hermite:2", g);
  REQUIRE(h2.closed_form() != nullptr);
  write_signal(dir.path / "h2.tfsig", h2, "hermite:2");
  CHECK(read_signal(dir.path / "h2.tfsig").closed_form() != nullptr);

  // A payload that no longer matches its generator loses the closed form.
  write_signal(dir.path / "bad.tfsig", h2.scaled(2.0), "hermite:2");
  CHECK(read_signal(dir.path / "bad.tfsig").closed_form() == nullptr);
}

TEST_CASE("generators") {
  const Grid g1 = default_grid(1);
  const Signal h0 = hermite_function(HermiteIndex::of(0), g1);
  CHECK(test::max_abs_diff(generate_signal("gauss", g1), h0.scaled(std::pow(2.0, -0.25))) < 1e-14);
  const Grid g2 = make_grid(2, 4.0, 32);
  CHECK(test::max_abs_diff(generate_signal("hermite:1,2", g2), hermite_function(HermiteIndex::of(1, 2), g2)) == 0.0);
  CHECK_THROWS_AS(generate_signal("hermite:1", g2), PreconditionError);
  CHECK_THROWS_AS(generate_signal("hermite:x", g1), PreconditionError);
  CHECK_THROWS_AS(generate_signal("square", g1), PreconditionError);
  CHECK_THROWS_AS(generate_signal("spec:/nonexistent/spec.json", g1), IoError);
}

TEST_CASE("spec file generator") {
  TempDir dir;
  write_file(dir.path / "s.json",
             R"({"dim": 1, "A": 2.0, "poly": [{"alpha": [1], "re": 1.0, "im": 0.0}]})");
  const Grid g = default_grid(1);
  const Signal s = generate_signal("spec:" + (dir.path / "s.json").string(), g);
  const double x = g.point(140)[0];
  CHECK(s[140].real() == doctest::Approx(x * std::exp(-2 * kPi * x * x)));
  CHECK(s.closed_form() != nullptr);
  write_file(dir.path / "broken.json", "{\"dim\": 1,");
  CHECK_THROWS_AS(generate_signal("spec:" + (dir.path / "broken.json").string(), g), FormatError);
}

TEST_CASE("manifest errors") {
  TempDir dir;
  CHECK_THROWS_AS(read_signal(dir.path / "missing.tfsig"), IoError);

  write_file(dir.path / "a.tfsig", "format=TFSIG1\ndim=1\nL 8\n");
  try {
    read_signal(dir.path / "a.tfsig");
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  write_file(dir.path / "b.tfsig", "format=TFSUR1\ndim=1\nL=8\nn=256\ndata_file=b.bin\n");
  CHECK_THROWS_AS(read_signal(dir.path / "b.tfsig"), FormatError);

  write_file(dir.path / "c.tfsig", "format=TFSIG1\ndim=1\nL=8\nn=256\ndata_file=c.bin\n");
  write_file(dir.path / "c.bin", std::string(16 * 255, '\0'));
  CHECK_THROWS_AS(read_signal(dir.path / "c.tfsig"), FormatError);
  fs::remove(dir.path / "c.bin");
  CHECK_THROWS_AS(read_signal(dir.path / "c.tfsig"), IoError);

  write_file(dir.path / "d.tfsig", "format=TFSIG1\ndim=1\nL=eight\nn=256\ndata_file=d.bin\n");
  CHECK_THROWS_AS(read_signal(dir.path / "d.tfsig"), FormatError);

  write_file(dir.path / "e.tfsig", "format=TFSIG1\ndim=1\nL=8\nn=255\ndata_file=e.bin\n");
  CHECK_THROWS_AS(read_signal(dir.path / "e.tfsig"), FormatError);
}

TEST_CASE("surface round trip") {
  TempDir dir;
  std::mt19937_64 rng(62);
  const Grid g = default_grid(1);
  const Surface a = ambiguity(test::superposition(rng, g, 4), test::superposition(rng, g, 4));
  write_surface(dir.path / "a.tfsur", a);
  const Surface r = read_surface(dir.path / "a.tfsur");
  CHECK(r.x_grid() == a.x_grid());
  CHECK(r.y_grid() == a.y_grid());
  bool identical = r.size() == a.size();
  for (std::size_t i = 0; identical && i < a.size(); ++i) identical = r.samples()[i] == a.samples()[i];
  CHECK(identical);
  CHECK_THROWS_AS(read_signal(dir.path / "a.tfsur"), FormatError);
}
