#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "diffract/config.hpp"
#include "diffract/fixtures.hpp"
#include "diffract/io.hpp"

using namespace diffract;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("diffract_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run_cli(const std::string& args, const std::string& out_file) {
  const std::string cmd =
      std::string(DIFFRACT_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("comb files round-trip atom-exactly") {
  auto mu = a_defect_comb(std::sqrt(2.0) - 1.0, -500.0, 500.0);
  const std::string text = comb_to_text(mu);
  auto back = comb_from_text(text);
  REQUIRE(back.size() == mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    CHECK(back.point(i)[0] == mu.point(i)[0]);  // bitwise via %.17g
    CHECK(back.weight(i) == mu.weight(i));
  }
  CHECK(back.region().lower[0] == mu.region().lower[0]);
  CHECK(back.region().upper[0] == mu.region().upper[0]);
  REQUIRE(back.discreteness_radius().has_value());
  CHECK(*back.discreteness_radius() == *mu.discreteness_radius());
}

TEST_CASE("comb file format essentials") {
  const std::string text =
      "# a comment\n"
      "dim=1\n"
      "0 1 0\n"
      "2.5 0.5 -0.25\n";
  auto comb = comb_from_text(text);
  REQUIRE(comb.size() == 2);
  CHECK(comb.point(1)[0] == doctest::Approx(2.5));
  CHECK(comb.weight(1).imag() == doctest::Approx(-0.25));

  CHECK_THROWS(comb_from_text("0 1 0\n"));       // atoms before the header
  CHECK_THROWS(comb_from_text("dim=1\n0 1\n"));  // short atom line
}

TEST_CASE("config parser: sections, types, line numbers") {
  auto cfg = ExperimentConfig::parse(
      "# recipe\n"
      "op = mean\n"
      "[tuning]\n"
      "n_max = 100\n"
      "freqs = 0 1 2\n");
  CHECK(cfg.get("op") == "mean");
  CHECK(cfg.get_long("tuning.n_max") == 100);
  CHECK(cfg.get_doubles("tuning.freqs").size() == 3);

  try {
    ExperimentConfig::parse("op = mean\nbad line\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(ExperimentConfig::parse("a = 1\na = 2\n"), ConfigError);
  CHECK_THROWS_AS(ExperimentConfig::parse("n = twelve\n").get_long("n"),
                  ConfigError);
}

TEST_CASE("config: seed is mandatory for random shifts") {
  auto cfg = ExperimentConfig::parse("op = weyl\n");
  CHECK_THROWS_AS(cfg.seed(), ConfigError);
  auto with_seed = ExperimentConfig::parse("seed = 7\n");
  CHECK(with_seed.seed() == 7);
}

TEST_CASE("cli: generate writes ingestible combs with expected atom counts") {
  TempDir tmp;
  const std::string comb_path = tmp.file("adefect.comb");
  const int rc = run_cli("generate a_defect --a 0.4142135 --region -1000 1000 -o " +
                             comb_path,
                         tmp.file("gen.log"));
  REQUIRE(rc == 0);
  auto comb = read_comb(comb_path);
  CHECK(std::llabs(static_cast<long long>(comb.size()) - 2000) <= 1);

  const std::string lat_path = tmp.file("lattice.comb");
  REQUIRE(run_cli("generate lattice --region -10 10 -o " + lat_path,
                  tmp.file("gen2.log")) == 0);
  CHECK(read_comb(lat_path).size() == 21);

  const std::string fib_path = tmp.file("fib.comb");
  REQUIRE(run_cli("generate fibonacci --region -100 100 -o " + fib_path,
                  tmp.file("gen3.log")) == 0);
  const auto fib = read_comb(fib_path);
  CHECK(std::abs(static_cast<double>(
            fib.count_in(BoxWindow::interval(-100, 100))) -
        0.7236 * 200.0) < 5.0);

  REQUIRE(run_cli("generate unknown_thing -o " + tmp.file("x.comb"),
                  tmp.file("gen4.log")) == 1);
}

TEST_CASE("cli: run executes a recipe deterministically") {
  TempDir tmp;
  const std::string cfg_path = tmp.file("fb.cfg");
  {
    std::ofstream os(cfg_path);
    os << "op = fourier_bohr\n"
          "input = fixture:lattice\n"
          "region = -1200 1200\n"
          "family = symmetric\n"
          "n_max = 1000\n"
          "k = 1\n"
          "seed = 42\n"
          "out_csv = " << tmp.file("fb.csv") << "\n"
          "out_json = " << tmp.file("fb.json") << "\n";
  }
  REQUIRE(run_cli("run " + cfg_path, tmp.file("run1.log")) == 0);
  const std::string csv1 = read_text_file(tmp.file("fb.csv"));
  const std::string json1 = read_text_file(tmp.file("fb.json"));
  REQUIRE(run_cli("run " + cfg_path, tmp.file("run2.log")) == 0);
  CHECK(read_text_file(tmp.file("fb.csv")) == csv1);   // byte-identical
  CHECK(read_text_file(tmp.file("fb.json")) == json1);
  CHECK(json1.find("\"status\": \"converged\"") != std::string::npos);
}

TEST_CASE("cli: region underflow exits with code 2") {
  TempDir tmp;
  const std::string cfg_path = tmp.file("under.cfg");
  {
    std::ofstream os(cfg_path);
    os << "op = mean\n"
          "input = fixture:lattice\n"
          "region = -50 50\n"
          "family = symmetric\n"
          "n_max = 1000\n";
  }
  CHECK(run_cli("run " + cfg_path, tmp.file("under.log")) == 2);
}

TEST_CASE("cli: oscillating report with a demanded verdict exits 3") {
  TempDir tmp;
  const std::string cfg_path = tmp.file("osc.cfg");
  {
    std::ofstream os(cfg_path);
    // an undetermined mean: noisy estimates from a tiny n range on blocks
    os << "op = fourier_bohr\n"
          "input = fixture:blocks\n"
          "region = -3000 3000\n"
          "family = symmetric\n"
          "n_max = 40\n"
          "n_min = 10\n"
          "n_tail = 20\n"
          "k = 0\n"
          "require_verdict = 1\n";
  }
  CHECK(run_cli("run " + cfg_path, tmp.file("osc.log")) == 3);
}

TEST_CASE("cli: config parse errors exit 1 and carry line numbers") {
  TempDir tmp;
  const std::string cfg_path = tmp.file("bad.cfg");
  write_text_file(cfg_path, "op = mean\nwhat even is this line\n");
  const std::string log = tmp.file("bad.log");
  CHECK(run_cli("run " + cfg_path, log) == 1);
  CHECK(read_text_file(log).find("line 2") != std::string::npos);
}

TEST_CASE("cli: export emits csv atoms") {
  TempDir tmp;
  const std::string comb_path = tmp.file("z.comb");
  REQUIRE(run_cli("generate lattice --region -3 3 -o " + comb_path,
                  tmp.file("g.log")) == 0);
  REQUIRE(run_cli("export --comb " + comb_path + " --csv " + tmp.file("z.csv"),
                  tmp.file("e.log")) == 0);
  const std::string csv = read_text_file(tmp.file("z.csv"));
  CHECK(csv.find("x_1,re_w,im_w") != std::string::npos);
  CHECK(csv.find("\n-3,") != std::string::npos);
}

TEST_CASE("cli: cpp recipe on the lattice passes and writes a verdict") {
  TempDir tmp;
  const std::string cfg_path = tmp.file("cpp.cfg");
  {
    std::ofstream os(cfg_path);
    os << "op = cpp\n"
          "input = fixture:lattice\n"
          "region = -2200 2200\n"
          "family = symmetric\n"
          "n_max = 2000\n"
          "freqs = 0 1 2\n"
          "out_json = " << tmp.file("cpp.json") << "\n"
          "out_csv = " << tmp.file("cpp.csv") << "\n";
  }
  REQUIRE(run_cli("run " + cfg_path, tmp.file("cpp.log")) == 0);
  const std::string json = read_text_file(tmp.file("cpp.json"));
  CHECK(json.find("\"pass\": true") != std::string::npos);
  const std::string csv = read_text_file(tmp.file("cpp.csv"));
  CHECK(csv.find("k,re_a,im_a,intensity,cpp_residual,status") != std::string::npos);
}

TEST_CASE("report and spectrum exports have the documented columns") {
  ConvergenceReport rep;
  rep.n_values = {1, 2};
  rep.estimates = {complexd{1.0, 0.5}, complexd{2.0, -0.5}};
  rep.status = ConvergenceStatus::undetermined;
  const std::string csv = report_to_csv(rep);
  CHECK(csv.rfind("n,re_estimate,im_estimate\n", 0) == 0);
  CHECK(csv.find("1,1,0.5\n") != std::string::npos);
  const std::string json = report_to_json(rep);
  CHECK(json.find("undetermined") != std::string::npos);
}
