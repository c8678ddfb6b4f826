#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <mub/io.hpp>

#include "cli.hpp"

using namespace mub;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("mub_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("build + verify round trip for a small Desarguesian set") {
  TempDir tmp;
  const std::string mub_path = tmp.file("d4.mub");
  const CliResult built = run_cli({"build", "--family", "desarguesian", "--p", "2", "--n", "2",
                                   "--out", mub_path});
  CHECK(built.code == cli::kExitOk);
  CHECK(built.out.find("CHECK mub_set PASS") != std::string::npos);

  const CliResult verified = run_cli({"verify", "--in", mub_path});
  CHECK(verified.code == cli::kExitOk);

  // byte-identical re-serialization
  const std::string text = read_file(mub_path);
  CHECK(serialize_mubset(parse_mubset(text)) == text);
  const MubSet m = parse_mubset(text);
  CHECK(m.frames.size() == 5);
}

TEST_CASE("build writes spread and plane side files") {
  TempDir tmp;
  const CliResult built =
      run_cli({"build", "--family", "desarguesian", "--p", "3", "--n", "1", "--out",
               tmp.file("d3.mub"), "--spread-out", tmp.file("d3.spr"), "--plane-out",
               tmp.file("d3.plane")});
  CHECK(built.code == cli::kExitOk);
  CHECK(run_cli({"verify", "--in", tmp.file("d3.spr")}).code == cli::kExitOk);
  CHECK(run_cli({"verify", "--in", tmp.file("d3.plane")}).code == cli::kExitOk);
}

TEST_CASE("bad parameters exit with the usage code") {
  TempDir tmp;
  const CliResult r = run_cli({"build", "--family", "bkl", "--p", "3", "--n", "3", "--s", "2",
                               "--out", tmp.file("x.mub")});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("BadParameters") != std::string::npos);

  CHECK(run_cli({"build", "--family", "nosuch", "--n", "1", "--out", tmp.file("y.mub")}).code ==
        cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run_cli({"verify", "--in", tmp.file("d.mub"), "--bogus-flag"}).code == cli::kExitUsage);
}

TEST_CASE("a corrupted exponent is caught with a frame witness, exit 1") {
  TempDir tmp;
  const std::string path = tmp.file("d4.mub");
  REQUIRE(run_cli({"build", "--family", "desarguesian", "--p", "2", "--n", "2", "--out", path})
              .code == cli::kExitOk);
  std::string text = read_file(path);
  // bump one exponent digit inside the last frame block
  const size_t pos = text.rfind("\n0 ");
  REQUIRE(pos != std::string::npos);
  text[pos + 1] = text[pos + 1] == '0' ? '1' : '0';
  write_file(path, text);

  const CliResult r = run_cli({"verify", "--in", path});
  CHECK(r.code == cli::kExitVerifyFailed);
  CHECK(r.out.find("CHECK mub_set FAIL") != std::string::npos);
  CHECK(r.out.find("frame") != std::string::npos);
}

TEST_CASE("truncated files exit with the parse code") {
  TempDir tmp;
  const std::string path = tmp.file("t.mub");
  REQUIRE(run_cli({"build", "--family", "desarguesian", "--p", "2", "--n", "1", "--out", path})
              .code == cli::kExitOk);
  const std::string text = read_file(path);
  write_file(path, text.substr(0, text.size() / 2));
  const CliResult r = run_cli({"verify", "--in", path});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("ParseError") != std::string::npos);
}

TEST_CASE("export writes N(N+1) vectors") {
  TempDir tmp;
  const std::string mub_path = tmp.file("q.mub");
  REQUIRE(run_cli({"build", "--family", "desarguesian", "--p", "2", "--n", "1", "--out", mub_path})
              .code == cli::kExitOk);
  const std::string vec_path = tmp.file("q.vec");
  CHECK(run_cli({"export", "--in", mub_path, "--out", vec_path}).code == cli::kExitOk);
  const std::string text = read_file(vec_path);
  CHECK(text.find("COUNT 6") != std::string::npos);
  CHECK(text.find("SCALE 1/sqrt(N)") != std::string::npos);
}

TEST_CASE("invariants prints a record and accepts an attached plane") {
  TempDir tmp;
  REQUIRE(run_cli({"build", "--family", "desarguesian", "--p", "2", "--n", "2", "--out",
                   tmp.file("d.mub"), "--plane-out", tmp.file("d.plane")})
              .code == cli::kExitOk);
  const CliResult no_plane = run_cli({"invariants", "--in", tmp.file("d.mub")});
  CHECK(no_plane.code == cli::kExitOk);
  CHECK(no_plane.out.find("invariance.overall=pass") != std::string::npos);
  CHECK(no_plane.out.find("plane_p_rank=") == std::string::npos);

  const CliResult with_plane =
      run_cli({"invariants", "--in", tmp.file("d.mub"), "--plane", tmp.file("d.plane")});
  CHECK(with_plane.code == cli::kExitOk);
  CHECK(with_plane.out.find("plane_p_rank=") != std::string::npos);
}

TEST_CASE("search writes a verified ORTHOSPREAD file") {
  TempDir tmp;
  const std::string path = tmp.file("o4.ospr");
  const CliResult r = run_cli({"search", "--n", "2", "--limit", "1", "--out", path});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("FOUND 1") != std::string::npos);
  CHECK(run_cli({"verify", "--in", path}).code == cli::kExitOk);
}

TEST_CASE("kantor build verifies at n=5") {
  TempDir tmp;
  const std::string path = tmp.file("k32.mub");
  const CliResult r = run_cli({"build", "--family", "kantor", "--n", "5", "--out", path,
                               "--spread-out", tmp.file("k32.spr")});
  CHECK(r.code == cli::kExitOk);
  CHECK(run_cli({"verify", "--in", path}).code == cli::kExitOk);
  CHECK(run_cli({"verify", "--in", tmp.file("k32.spr")}).code == cli::kExitOk);
}
