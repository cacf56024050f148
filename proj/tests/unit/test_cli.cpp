#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

using namespace qphase::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "qphase_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("parse the documented invocations") {
  const std::vector<std::string> a{"pmf", "exact", "displaced", "--n", "3", "--beta", "10.1", "--nmax", "300",
                                   "--out", "fig6.csv"};
  const RunConfig c = parse_args(a);
  CHECK(c.command == Command::pmf);
  CHECK(c.method == Method::exact);
  CHECK(c.family == Family::displaced);
  CHECK(*c.n == 3);
  CHECK(*c.beta == 10.1);
  CHECK(*c.nmax == 300);
  CHECK(c.out == "fig6.csv");

  const std::vector<std::string> b{"pmf", "exact", "tpcs", "--beta", "5.1", "--r", "3", "--nmax", "2000"};
  const RunConfig t = parse_args(b);
  CHECK(t.family == Family::tpcs);
  CHECK(*t.r == 3.);

  const std::vector<std::string> g{"qgrid", "product", "--m", "100", "--n", "3", "--beta", "10.1",
                                   "--window", "-2:14:-6:6", "--res", "400x300"};
  const RunConfig q = parse_args(g);
  REQUIRE(q.grid);
  CHECK(q.grid->x_min == -2.);
  CHECK(q.grid->y_max == 6.);
  CHECK(q.grid->nx == 400);
  CHECK(q.grid->ny == 300);
}

TEST_CASE("usage errors exit with 2") {
  const std::vector<std::vector<std::string>> bad{
      {"pmf", "exact", "displaced", "--n", "-1", "--beta", "1"},
      {"pmf", "exact", "displaced", "--n", "abc", "--beta", "1"},
      {"pmf", "exact", "displaced", "--beta", "1"},
      {"frobnicate"},
      {},
      {"pmf", "exact", "displaced", "--n", "1", "--beta", "1", "--bogus", "2"},
      {"pmf", "parity", "displaced", "--n", "1", "--beta", "1"},
      {"phases", "tpcs", "--beta", "1", "--r", "1"},
      {"compare", "displaced", "--n", "3", "--beta", "0"},
      {"pmf", "exact", "tpcs", "--beta", "1", "--r", "-1"},
      {"qgrid", "fock"},
      {"qgrid", "fock", "--m", "2", "--window", "1:0:0:1"},
      {"qgrid", "fock", "--m", "2", "--res", "1x4"},
      {"pmf", "exact", "displaced", "--n", "1", "--beta", "1", "--window", "0:1:0:1"},
      {"pmf", "exact", "displaced", "--n", "1", "--beta", "1", "--prefactor", "huge"},
  };
  for (const auto& args : bad) {
    const Result r = invoke(args);
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());
  }
}

TEST_CASE("help exits 0") {
  const Result r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("qphase pmf") != std::string::npos);
}

TEST_CASE("csv layout") {
  const Result r = invoke({"compare", "displaced", "--n", "3", "--beta", "10.1", "--nmax", "200"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 202);
  CHECK(l[0] == "m,p_exact,p_approx,area,phase");
  CHECK(l[101].rfind("100,3.87626975601e-03,", 0) == 0);
  CHECK(l[201].substr(l[201].size() - 1) == ",");  // no phase at m = 200
  CHECK(r.out.find('\r') == std::string::npos);

  const Result p = invoke({"phases", "displaced", "--n", "3", "--beta", "10.1", "--nmax", "200"});
  REQUIRE(p.code == 0);
  const auto pl = lines(p.out);
  CHECK(pl[0] == "m,psi_shifted,psi_wkb_shifted");
  CHECK(pl[201] == "200,,");
  CHECK(pl[68] == "67,,");

  const Result q = invoke({"qgrid", "fock", "--m", "1", "--window", "0:1:0:1", "--res", "2x2"});
  REQUIRE(q.code == 0);
  CHECK(lines(q.out) == std::vector<std::string>{"x,y,q", "0.00000000000e+00,0.00000000000e+00,0.00000000000e+00",
                                                 "1.00000000000e+00,0.00000000000e+00,1.17099663049e-01",
                                                 "0.00000000000e+00,1.00000000000e+00,1.17099663049e-01",
                                                 "1.00000000000e+00,1.00000000000e+00,8.61571172074e-02"});
}

TEST_CASE("strict mode") {
  CHECK(invoke({"phases", "displaced", "--n", "3", "--beta", "10.1", "--m", "200", "--strict"}).code == 3);
  CHECK(invoke({"phases", "displaced", "--n", "3", "--beta", "10.1", "--m", "200"}).code == 0);
  CHECK(invoke({"compare", "displaced", "--n", "3", "--beta", "10.1", "--m", "20", "--strict"}).code == 3);
  CHECK(invoke({"pmf", "approx", "tpcs", "--beta", "5.1", "--r", "3", "--m", "0", "--strict"}).code == 3);
  CHECK(invoke({"pmf", "approx", "displaced", "--n", "3", "--beta", "10.1", "--m", "100", "--strict"}).code == 0);
}

TEST_CASE("warnings go to the error stream") {
  const Result r = invoke({"pmf", "approx", "tpcs", "--beta", "1", "--r", "1", "--nmax", "10"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  const Result o = invoke({"pmf", "oracle", "displaced", "--n", "1", "--beta", "1", "--nmax", "3", "--window",
                           "-1:1:-1:1", "--res", "21x21"});
  CHECK(o.code == 0);
  CHECK(o.err.find("window") != std::string::npos);
}

TEST_CASE("output file, sidecar and replay") {
  const fs::path out = scratch("tpcs.csv");
  const Result r = invoke({"pmf", "exact", "tpcs", "--beta", "5.1", "--r", "3", "--nmax", "400", "--seed", "9",
                           "--out", out.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const std::string first = slurp(out);
  CHECK(first.rfind("m,p\n0,", 0) == 0);

  const fs::path meta = out.string() + ".meta.json";
  const auto j = nlohmann::json::parse(slurp(meta));
  CHECK(j.at("tool") == "qphase");
  CHECK(j.at("nmax") == 400);
  CHECK(j.at("seed") == 9);
  CHECK(j.at("x2") == "consistent");
  CHECK(j.at("version").is_string());

  const fs::path again = scratch("tpcs_again.csv");
  REQUIRE(invoke({"replay", meta.string(), "--out", again.string()}).code == 0);
  CHECK(slurp(again) == first);

  CHECK(invoke({"replay", scratch("missing.json").string()}).code == 1);
  std::ofstream(scratch("broken.json")) << "{ not json";
  CHECK(invoke({"replay", scratch("broken.json").string()}).code == 2);
}

TEST_CASE("unwritable output exits with 1") {
  const Result r = invoke({"pmf", "exact", "displaced", "--n", "1", "--beta", "1", "--nmax", "3", "--out",
                           "/nonexistent-dir/x.csv"});
  CHECK(r.code == 1);
}

TEST_CASE("config round trip") {
  RunConfig c;
  c.command = Command::qgrid;
  c.family = Family::product;
  c.m = 100;
  c.n = 3;
  c.beta = 10.1;
  c.grid = qphase::GridSpec{-2., 14., -6., 6., 400, 300};
  c.x2 = qphase::X2Mode::paper_literal;
  c.prefactor = qphase::PrefactorMode::paper_final;
  const RunConfig back = from_json(to_json(c));
  CHECK(to_json(back) == to_json(c));
}

TEST_CASE("number formatting") {
  CHECK(format_real(0.) == "0.00000000000e+00");
  CHECK(format_real(-0.) == "0.00000000000e+00");
  CHECK(format_real(1. / 3.) == "3.33333333333e-01");
  CHECK(format_real(-2.5e-300) == "-2.50000000000e-300");
}
