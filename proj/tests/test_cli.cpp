#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "leeyang/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kRoot = fs::temp_directory_path() / "leeyang_cli_test";

struct Run {
  int status;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Run cli(const std::string& args) {
  fs::create_directories(kRoot);
  const fs::path out = kRoot / "stdout.txt", err = kRoot / "stderr.txt";
  const std::string cmd = std::string(LEEYANG_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

fs::path write_config(const std::string& name, const json& j) {
  fs::create_directories(kRoot);
  const fs::path p = kRoot / name;
  std::ofstream(p) << j.dump();
  return p;
}

std::string dir(const std::string& name) {
  const fs::path p = kRoot / name;
  fs::remove_all(p);
  return p.string();
}

}  // namespace

TEST_CASE("zeros of a single bond") {
  const auto cfg = write_config("ln2.json", {{"model", {{"kind", "explicit-list"}, {"explicit_couplings", {std::log(2.0)}}}}});
  const auto out = dir("ln2");
  const auto r = cli("zeros --config " + cfg.string() + " --out " + out);
  REQUIRE(r.status == 0);
  std::ifstream in(fs::path(out) / "zeros.csv");
  const auto z = leeyang::io::read_zeros_csv(in);
  REQUIRE(z.size() == 2);
  CHECK(z.phases()[0] == doctest::Approx(0.25));
  CHECK(z.phases()[1] == doctest::Approx(0.75));
  CHECK(json::parse(r.out)["zeros"] == 2);
}

TEST_CASE("ids per operator") {
  const auto cfg = write_config("ln2.json", {{"model", {{"kind", "explicit-list"}, {"explicit_couplings", {std::log(2.0)}}}}});
  const auto out = dir("ids");
  REQUIRE(cli("ids --normalization operator --config " + cfg.string() + " --out " + out).status == 0);
  CHECK(slurp(fs::path(out) / "ids.csv") == "theta,value\n0.25,0.5\n0.75,1\n");
}

TEST_CASE("fibonacci couplings file") {
  const auto out = dir("fib");
  REQUIRE(cli("coeffs --model fibonacci --n 10 --out " + out).status == 0);
  std::ifstream in(fs::path(out) / "couplings.csv");
  const auto ps = leeyang::io::read_couplings_csv(in);
  CHECK(ps.size() == 144);
  CHECK(ps[0] == 2.0 / 3.0);
}

TEST_CASE("outputs are deterministic") {
  const auto a = dir("det_a"), b = dir("det_b");
  REQUIRE(cli("zeros --model sft --n 40 --seed 7 --config " +
                  write_config("sft.json", {{"model", {{"transition", {{0.3, 0.7}, {0.9, 0.1}}}}}}).string() +
                  " --out " + a)
              .status == 0);
  // the written run_config.json reproduces the run
  REQUIRE(cli("zeros --config " + (fs::path(a) / "run_config.json").string() + " --out " + b).status == 0);
  CHECK(slurp(fs::path(a) / "zeros.csv") == slurp(fs::path(b) / "zeros.csv"));
  CHECK(!slurp(fs::path(a) / "zeros.csv").empty());
}

TEST_CASE("explicit coefficient list passes through") {
  const auto a = dir("pass_a"), b = dir("pass_b");
  REQUIRE(cli("coeffs --model uamo --n 10 --out " + a).status == 0);
  const auto src = (fs::path(a) / "coefficients.csv").string();
  const auto cfg = write_config("pass.json", {{"model", {{"kind", "explicit-list"}, {"source_csv", src}}}});
  REQUIRE(cli("coeffs --config " + cfg.string() + " --out " + b).status == 0);
  CHECK(slurp(src) == slurp(fs::path(b) / "coefficients.csv"));
}

TEST_CASE("cat-map coefficients are stable under doubled precision") {
  const auto a = dir("cat_a"), b = dir("cat_b");
  REQUIRE(cli("coeffs --model cat-map --n 100 --out " + a).status == 0);
  const auto bits = json::parse(slurp(kRoot / "stdout.txt"))["precision_bits"].get<int>();
  REQUIRE(cli("coeffs --model cat-map --n 100 --precision-bits " + std::to_string(2 * bits) + " --out " + b)
              .status == 0);
  std::ifstream ia(fs::path(a) / "coefficients.csv"), ib(fs::path(b) / "coefficients.csv");
  const auto x = leeyang::io::read_coefficients_csv(ia), y = leeyang::io::read_coefficients_csv(ib);
  REQUIRE(x.size() == 100);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  CHECK(worst <= 1e-14);
}

TEST_CASE("gaps on equally spaced zeros") {
  const auto cfg = write_config("free.json", {{"model", {{"kind", "explicit-list"}, {"explicit_alphas", json::array({{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}})}}}});
  const auto out = dir("free");
  const auto r = cli("gaps --config " + cfg.string() + " --out " + out);
  REQUIRE(r.status == 0);
  CHECK(slurp(fs::path(out) / "gaps.csv") == "left_theta,right_theta,length,label,n,m,residual\n");
}

TEST_CASE("bandwidth picture for N = 24") {
  const auto out = dir("band");
  const auto r = cli("bandwidth --model uamo --n 24 --out " + out);
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["dimension"] == 24);
  CHECK(j["max_offset_after"] == 4);
  CHECK(fs::exists(fs::path(out) / "banded.csv"));
  CHECK(slurp(fs::path(out) / "floquet.csv").rfind("row,col,re,im\n", 0) == 0);
}

TEST_CASE("labels and histogram") {
  const auto out = dir("labels");
  auto r = cli("labels --n 12 --out " + out);
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["gaps"] == 10);
  CHECK(j["max_residual"].get<double>() <= 10.0 / 377);
  r = cli("hist --bins 7 --out " + out);
  REQUIRE(r.status == 0);
  std::istringstream lines(slurp(fs::path(out) / "histogram.csv"));
  std::string line;
  int rows = -1;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 7);
}

TEST_CASE("verify") {
  const auto out = dir("verify");
  const auto r = cli("verify --seed 42 --out " + out);
  CHECK(r.status == 0);
  const auto j = json::parse(slurp(fs::path(out) / "verify.json"));
  CHECK(j["all_pass"] == true);
  CHECK(j["checks"].size() >= 9);

  const auto bad = write_config("bad.json", {{"model", {{"kind", "explicit-list"}, {"explicit_alphas", json::array({{1.5, 0.0}})}}}});
  const auto e = cli("verify --config " + bad.string() + " --out " + dir("bad"));
  CHECK(e.status == 1);
  CHECK(json::parse(e.err)["error"]["kind"] == "domain");
}

TEST_CASE("errors are reported as JSON") {
  auto r = cli("zeros --model henon --out " + dir("err"));
  CHECK(r.status == 1);
  CHECK(json::parse(r.err)["error"]["kind"] == "config");
  r = cli("zeros --frobnicate");
  CHECK(r.status == 1);
  CHECK(json::parse(r.err)["error"]["kind"] == "config");
  r = cli("zeros --model cat-map --out " + dir("err"));
  CHECK(r.status == 1);
  CHECK(json::parse(r.err)["error"]["message"].get<std::string>().find("length") != std::string::npos);
  r = cli("zeros --config /nonexistent.json");
  CHECK(json::parse(r.err)["error"]["kind"] == "io");
}
