#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <sys/wait.h>

#include "cubic/json_io.hpp"
#include "cubic/theta.hpp"

using namespace cubic;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(CUBIC_MIRROR_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("ray text") {
  Run r = run("ray --dir 1 1 --degree 3");
  CHECK(r.status == 0);
  CHECK(r.out == "1 + Σ_j z^{D3+L3j} X1^-1 X2^-1\n");
}

TEST_CASE("ray json round trip") {
  Run r = run("ray --dir 2 1 --degree 5 --format json");
  CHECK(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(ray_from_json(j["ray"]) == canonical_ray(Direction(2, 1), 5));
}

TEST_CASE("equation json") {
  Run r = run("equation --degree 4 --format json");
  CHECK(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["residual"] == Json::array());
  CHECK(j["passed"] == true);
  auto expected = expected_mirror_coefficients(4);
  for (const auto& [k, v] : expected) CHECK(series_from_json(j["coefficients"][k], 4) == v);
  CHECK(laurent_from_json(j["residual"], 4).is_zero());
}

TEST_CASE("equation text") {
  Run r = run("equation -d 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("residual = 0\nPASS\n") != std::string::npos);
}

TEST_CASE("cayley") {
  Run r = run("cayley --degree 4");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("all walls trivial; constant = -4 z^{D1+D2+D3}\n", 0) == 0);
  Run j = run("cayley --degree 4 --format json");
  CHECK(j.status == 0);
  Json parsed = Json::parse(j.out);
  CHECK(parsed["residual"] == Json::array());
  CHECK(parsed["rays"].size() == 24);
  CHECK(run("cayley --degree 2").status == 2);
}

TEST_CASE("other verification commands") {
  CHECK(run("frobenius --degree 4").status == 0);
  CHECK(run("consistency --degree 3").status == 0);
  Run l = run("lines");
  CHECK(l.status == 0);
  CHECK(l.out.rfind("lines: 27\n", 0) == 0);
  CHECK(run("lines --divisor 2").out.rfind("lines meeting D2: 8\n", 0) == 0);
  CHECK(run("lines --cubics").out.rfind("triangle-splitting twisted cubics: 24\n", 0) == 0);
  Run p = run("product --p1 v1 --p2 v1 --degree 3");
  CHECK(p.status == 0);
  CHECK(p.out.find("theta_0: 2 z^{D2+D3}") != std::string::npos);
  Run t = run("theta --point v1 --at 1/7 1/11 --degree 3 --trace");
  CHECK(t.status == 0);
  CHECK(t.out.rfind("theta_v1 at (1/7, 1/11) = z^{D2+D3} X1^-1 + X1\n", 0) == 0);
  CHECK(t.out.find("broken line from v1") != std::string::npos);
}

TEST_CASE("oracle subcommands") {
  Run e = run("oracle enumerate --self 1 --class-degree 3 --boundary 1 1 1 --until-stable --format json");
  CHECK(e.status == 0);
  CHECK(Json::parse(e.out)["count"] == 24);
  CHECK(run("oracle enumerate --self 1 --class-degree 3 --boundary 1 1 1").status == 1);
  Run f = run("oracle effective --class 2 0 0 1 1 1 1");
  CHECK(f.status == 0);
  CHECK(f.out.find(": effective") != std::string::npos);
  CHECK(run("oracle product --p1 v1+v2 --p2 v3 --degree 4").status == 0);
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 2);
  CHECK(run("bogus").status == 2);
  CHECK(run("ray --dir 2 2").status == 2);
  CHECK(run("ray").status == 2);
  CHECK(run("theta --point v7").status == 2);
  CHECK(run("equation --degree 0").status == 2);
  CHECK(run("equation --format xml").status == 2);
}

TEST_CASE("determinism with cold and warm caches") {
  auto dir = std::filesystem::temp_directory_path() / "cubic_cli_cache_test";
  std::filesystem::remove_all(dir);
  std::string args = "diagram --degree 5 --format json --cache " + dir.string();
  Run cold = run(args);
  Run warm = run(args);
  Run none = run("diagram --degree 5 --format json");
  CHECK(cold.status == 0);
  CHECK(cold.out == warm.out);
  CHECK(cold.out == none.out);
  CHECK(!std::filesystem::is_empty(dir));
  CHECK(run("equation --degree 3 --format json").out == run("equation --degree 3 --format json").out);
  std::filesystem::remove_all(dir);
}
