// Drives the built hitloc_cli binary through the shell.

#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HITLOC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / ("hitloc_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run("--help").status == 0);
  CHECK(run("").status != 0);
  CHECK(run("no-such-command").status == 2);
  CHECK(run("pdf --d 3 --lambda 1 --bogus 1").status == 2);
  CHECK(run("pdf --d 1 --lambda 1 --u 1 --r 0").status == 2);
  CHECK(run("pdf --d 3 --lambda -1 --u 1 --r 0").status == 2);
  CHECK(run("capacity --d 3 --lambda 1 --u 1 --power 1 --power-grid 1,2").status == 2);
  CHECK(run("capacity --d 3 --lambda 1 --u 1 --power 1 --format xml").status == 2);
}

TEST_CASE("cf value") {
  const Run r = run("cf --d 3 --lambda 1 --u 1 --omega-norm 1.7320508075688772");
  REQUIRE(r.status == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "d,lambda,u,omega_norm,cf");
  const double v = std::stod(ls[1].substr(ls[1].rfind(',') + 1));
  CHECK(std::abs(v - std::exp(-1.0)) < 1e-15);
}

TEST_CASE("pdf rows") {
  const Run r = run("pdf --d 3 --lambda 1 --u 1 --r 0,1,2");
  REQUIRE(r.status == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "d,lambda,u,r,pdf");
  // lambda / (2 pi rho^3) (1 + u rho) e^{-u(rho - lambda)} at r = 0
  CHECK(std::abs(std::stod(ls[1].substr(ls[1].rfind(',') + 1)) - 1.0 / M_PI) < 1e-15);
  CHECK(run("pdf --d 2 --lambda 1 --u 0 --r 0").status == 0);
}

TEST_CASE("capacity row") {
  const Run r = run("capacity --d 3 --lambda 1 --u 1 --power 100");
  REQUIRE(r.status == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "d,lambda,u,P,upper,lower,gap,c_star");
  std::vector<double> cols;
  std::istringstream is(ls[1]);
  for (std::string c; std::getline(is, c, ',');) cols.push_back(std::stod(c));
  REQUIRE(cols.size() == 8);
  // mpmath, 30 digits
  CHECK(std::abs(cols[4] - 4.05268628336563072) < 1e-10);
  CHECK(std::abs(cols[7] - (-0.572286529918640362)) < 1e-10);
  CHECK(cols[5] <= cols[4]);

  const Run grid = run("capacity --d 3 --lambda 1 --u 1 --power-grid log:1:1e8:9 --format json");
  REQUIRE(grid.status == 0);
  const auto j = nlohmann::json::parse(grid.out);
  REQUIRE(j.size() == 9);
  CHECK(j[0]["P"] == 1.0);
  CHECK(j[8]["P"] == 1e8);
}

TEST_CASE("entropy sweep appends the Cauchy endpoint per d") {
  const Run r = run("entropy-sweep --d 2,3,4 --lambda 1 --u-grid log:1e-2:1:3");
  REQUIRE(r.status == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 1 + 3 * 4);
  CHECK(ls[0] == "d,lambda,u,h,method,error");
  int cauchy = 0;
  for (const auto& l : ls) cauchy += l.find(",closed_form_cauchy,") != std::string::npos;
  CHECK(cauchy == 3);
  CHECK(ls[4].rfind("2,1,0,", 0) == 0);
  // mpmath, 30 digits: g(1) at lambda = 1
  CHECK(std::abs(std::stod(ls[4].substr(6)) - 2.53102424696929079) < 1e-12);
}

TEST_CASE("offset curve starts at u = 0") {
  const Run r = run("offset-curve --d 2 --lambda 1 --u-grid 1e-3,1");
  REQUIRE(r.status == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[1].rfind("2,1,0,", 0) == 0);
  CHECK(std::abs(std::stod(ls[1].substr(6)) - (-1.11208571376461805)) < 1e-6);
}

TEST_CASE("sample output is deterministic and writes a sidecar") {
  const auto dir = scratch();
  const auto a = dir / "a.csv";
  const auto b = dir / "b.csv";
  REQUIRE(run("sample --d 3 --lambda 1 --u 1 --count 1000 --seed 42 --output " + a.string()).status == 0);
  REQUIRE(run("sample --d 3 --lambda 1 --u 1 --count 1000 --seed 42 --output " + b.string()).status == 0);
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(lines(text).size() == 1001);
  CHECK(lines(text)[0] == "x1,x2");

  const auto meta = nlohmann::json::parse(slurp(dir / "a.csv.json"));
  CHECK(meta["count"] == 1000);
  CHECK(meta["seed"] == 42);
  CHECK(meta["d"] == 3);

  const Run other = run("sample --d 3 --lambda 1 --u 1 --count 1000 --seed 43");
  CHECK(other.out != text);
  CHECK(run("sample --d 3 --lambda 1 --u 0 --count 10 --seed 1").status == 2);
  std::filesystem::remove_all(dir);
}
