#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "mellinop/cli.hpp"
#include "mellinop/errors.hpp"
#include "mellinop/io.hpp"

using namespace mellinop;
using nlohmann::json;

namespace {

struct Run {
  int code;
  json out;
  std::string err;
};

Run cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  json j;
  if (!out.str().empty()) j = json::parse(out.str(), nullptr, false);
  return {code, j, err.str()};
}

std::string diag_json(std::initializer_list<double> v) {
  const auto n = v.size();
  json data = json::array();
  std::size_t i = 0;
  for (double x : v) {
    for (std::size_t k = 0; k < n; ++k) data.push_back(json::array({k == i ? x : 0.0, 0.0}));
    ++i;
  }
  return json{{"dim", n}, {"data", data}}.dump();
}

const std::string pauli_x = R"({"dim":2,"data":[[0,0],[1,0],[1,0],[0,0]]})";

std::filesystem::path scratch() {
  auto p = std::filesystem::temp_directory_path() / "mellinop_test_io_cli";
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("matrix JSON round trip and validation") {
  CMatrix m(2, 2);
  m << Complex(1, 2), Complex(3, -4), Complex(0, 0.5), Complex(-1, 0);
  CHECK(io::matrix_from_json(io::to_json(m)) == m);
  CHECK_THROWS_AS(io::matrix_from_json(json{{"dim", 2}, {"data", json::array({json::array({1, 0})})}}), InputError);
  CHECK_THROWS_AS(io::matrix_from_json(json{{"data", json::array()}}), InputError);
  CHECK_THROWS_AS(io::complex_from_json(json("x")), InputError);
}

TEST_CASE("group and group-function JSON") {
  const auto g = io::group_from_json(json("D4"));
  const auto again = io::group_from_json(io::to_json(*g));
  CHECK(again->same_as(*g));
  CHECK(again->labels() == g->labels());
  json f{{"group", "Z3"}, {"dim", 1}, {"values", json::array({json::array({1, 0}), json::array({0, 1}), 0})}};
  const auto fn = io::group_function_from_json(f);
  CHECK(fn(1)(0, 0) == Complex(0, 1));
  const auto back = io::group_function_from_json(io::to_json(fn));
  for (int x = 0; x < 3; ++x) CHECK(back(x) == fn(x));
  f["values"].erase(0);
  CHECK_THROWS_AS(io::group_function_from_json(f), InputError);
  CHECK_THROWS_AS(io::group_from_json(json{{"order", 2}, {"table", json::array({json::array({0, 1}), json::array({1, 1})})}}),
                  InputError);
}

TEST_CASE("group file references resolve relative to the function file") {
  const auto dir = scratch();
  std::ofstream(dir / "z2.json") << io::to_json(*builtin_group("Z2")).dump();
  const json f{{"group", "z2.json"}, {"dim", 1}, {"values", json::array({1, 2})}};
  const auto fn = io::group_function_from_json(f, dir);
  CHECK(fn.group()->order() == 2);
}

TEST_CASE("list parsing") {
  CHECK(io::parse_index_list("0,3,4") == std::vector<int>{0, 3, 4});
  CHECK_THROWS_AS(io::parse_index_list("0,1.5"), InputError);
  CHECK_THROWS_AS(io::parse_index_list("a"), InputError);
  CHECK(io::parse_complex("1.5") == Complex(1.5, 0));
  CHECK(io::parse_complex("1,-2") == Complex(1, -2));
  CHECK_THROWS_AS(io::parse_complex("1,2,3"), InputError);
}

TEST_CASE("cli: power example") {
  const auto r = cli_run({"power", "--matrix", diag_json({1, 4}), "--alpha", "0.5"});
  REQUIRE(r.code == 0);
  const CMatrix v = io::matrix_from_json(r.out["result"]["value"]);
  CHECK(std::abs(v(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(v(1, 1) - 0.5) < 1e-12);
  CHECK(r.out["command"]["name"] == "power");
}

TEST_CASE("cli: greens example") {
  const auto r = cli_run({"greens", "--dim", "3", "--alpha", "1", "--r", "2"});
  REQUIRE(r.code == 0);
  CHECK(std::abs(r.out["result"]["value"][0].get<double>() - 0.5) < 1e-12);
  CHECK(r.out["result"].contains("method"));
  CHECK(r.out["result"].contains("error_estimate"));
  const auto d = cli_run({"greens", "--dim", "2", "--r", "2.718281828459045", "--r2", "1"});
  REQUIRE(d.code == 0);
  CHECK(std::abs(d.out["result"]["value"][0].get<double>() + 2.0) < 1e-4);
}

TEST_CASE("cli: exit codes and error categories") {
  auto r = cli_run({"greens", "--dim", "2", "--r", "1"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.err)["error"]["category"] == "input");
  CHECK(cli_run({"power", "--matrix", diag_json({1, 4}), "--bogus", "1"}).code == 1);
  CHECK(cli_run({"power"}).code == 1);
  CHECK(cli_run({"nosuch"}).code == 1);
  CHECK(cli_run({"power", "--matrix", "/nonexistent/h.json"}).code == 1);
  CHECK(cli_run({"power", "--matrix", diag_json({-1, 4})}).code == 1);
  CHECK(cli_run({"verify", "--suite", "bogus"}).code == 1);
  CHECK(cli_run({"verify", "--suite", ""}).code == 1);
  r = cli_run({"power", "--matrix", diag_json({1, 4}), "--tol", "1e-300"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.err)["error"]["category"] == "numerical");
}

TEST_CASE("cli: verify suites pass and are deterministic") {
  std::ostringstream a, b, e;
  CHECK(cli::run({"verify", "--suite", "algebra"}, a, e) == 0);
  CHECK(cli::run({"verify", "--suite", "algebra"}, b, e) == 0);
  CHECK(a.str() == b.str());
  const json j = json::parse(a.str());
  CHECK(j["result"]["pass"] == true);
  CHECK(j["result"]["seed"] == "0xC0FFEE");
  std::ostringstream c;
  CHECK(cli::run({"verify", "--suite", "induction", "--seed", "0x1234"}, c, e) == 0);
  CHECK(json::parse(c.str())["result"]["seed"] == "0x1234");
}

TEST_CASE("cli: every route runs") {
  const auto dir = scratch();
  const std::string f1 = json{{"group", "S3"}, {"dim", 1}, {"values", json::array({1, 0, 2, 0, 0, 1})}}.dump();
  const std::string f2 = json{{"group", "S3"}, {"dim", 1}, {"values", json::array({0, 1, 0, 0, 3, 0})}}.dump();
  const std::string fam = json{{"components", json::array({json{{"label", "a"}, {"function", json::parse(f1)}},
                                                            json{{"label", "b"}, {"function", json::parse(f2)}}})}}.dump();
  const std::string gen = json{{"preset", "rotating-field"}, {"amplitude", 1.0}, {"frequency", 1.0}}.dump();
  const std::string weights = json{{"cartan", json::array({json::parse(diag_json({1, 0, -1}))})},
                                   {"raising", json::array({json{{"dim", 3},
                                                                 {"data", json::array({json::array({0, 0}), json::array({1, 0}), json::array({0, 0}),
                                                                                       json::array({0, 0}), json::array({0, 0}), json::array({1, 0}),
                                                                                       json::array({0, 0}), json::array({0, 0}), json::array({0, 0})})}}})}}
                                .dump();
  const std::string psi = R"([[1,0],[0,1]])";
  const std::string h = diag_json({1, 2, 3});

  std::map<std::pair<std::string, std::string>, std::vector<std::string>> args{
      {{"power", "power"}, {"--matrix", h, "--alpha", "0.5"}},
      {{"power", "regularized"}, {"--matrix", h, "--alpha", "-0.5"}},
      {{"power", "semigroup"}, {"--matrix", h, "--t", "0.5"}},
      {{"power", "eig"}, {"--matrix", h}},
      {{"power", "exp"}, {"--matrix", h, "--t", "0.5"}},
      {{"resolvent", ""}, {"--matrix", h, "--z", "0,2"}},
      {{"trace", "trace"}, {"--matrix", h, "--alpha", "2"}},
      {{"trace", "zeta"}, {"--matrix", h, "--alpha", "-0.5"}},
      {{"det", ""}, {"--matrix", h, "--alpha", "1"}},
      {{"zetadet", ""}, {"--matrix", h}},
      {{"log", ""}, {"--matrix", h}},
      {{"greens", "kernel"}, {"--dim", "3", "--r", "2"}},
      {{"greens", "difference"}, {"--dim", "1", "--r", "2", "--r2", "1"}},
      {{"greens", "propagator"}, {"--dim", "3", "--r", "1", "--t", "1"}},
      {{"greens", "harmonicity"}, {"--dim", "4", "--r", "1", "--r2", "2", "--steps", "10"}},
      {{"greens", "strip"}, {"--dim", "3"}},
      {{"greens", "transform"}, {"--dim", "3", "--r", "1", "--alpha", "0.5"}},
      {{"magnus", "evolve"}, {"--generator", gen, "--t", "1", "--steps", "10", "--csv", (dir / "u.csv").string()}},
      {{"magnus", "step"}, {"--generator", gen, "--t", "0", "--r", "0.1"}},
      {{"magnus", "heisenberg"}, {"--generator", gen, "--t", "1", "--steps", "10", "--matrix", pauli_x}},
      {{"magnus", "residual"}, {"--generator", gen, "--t", "1", "--steps", "10", "--matrix", pauli_x}},
      {{"magnus", "effective"}, {"--generator", gen, "--t", "1", "--steps", "10"}},
      {{"magnus", "bernoulli"}, {"--n", "6"}},
      {{"magnus", "ad"}, {"--matrix", pauli_x, "--matrix2", diag_json({1, -1}), "--n", "2"}},
      {{"group", "info"}, {"--group", "S3"}},
      {{"group", "integrate"}, {"--function", f1}},
      {{"group", "convolve"}, {"--function", f1, "--function2", f2}},
      {{"group", "involution"}, {"--function", f1}},
      {{"group", "norm"}, {"--function", f1}},
      {{"group", "regular-rep"}, {"--function", f1}},
      {{"group", "cstar-norm"}, {"--function", f1}},
      {{"group", "family-norm"}, {"--family", fam}},
      {{"group", "project"}, {"--family", fam, "--label", "b"}},
      {{"group", "characters"}, {"--group", "S4"}},
      {{"induce", "induce"}, {"--group", "S3", "--subgroup", "0,3,4", "--character", "1"}},
      {{"induce", "character"}, {"--group", "S3", "--subgroup", "0,3,4", "--character", "1"}},
      {{"induce", "frobenius"}, {"--group", "S3", "--subgroup", "0,3,4", "--character", "1"}},
      {{"induce", "inner-product"}, {"--group", "S3", "--subgroup", "0,3,4", "--character", "1", "--psi1", psi, "--psi2", psi, "--element", "1"}},
      {{"induce", "mellin-rep"}, {"--group", "S3", "--subgroup", "0,3,4", "--function", f1}},
      {{"induce", "leakage"}, {"--group", "S3", "--subgroup", "0,3,4", "--function", f1}},
      {{"induce", "weights"}, {"--input", weights}},
      {{"induce", "highest-weight"}, {"--input", weights}},
      {{"verify", ""}, {"--suite", "greens"}},
  };

  std::set<std::string> operations;
  for (const auto& route : cli::routes()) {
    CHECK_MESSAGE(operations.insert(route.operation).second, "operation listed twice: " << route.operation);
    const auto& subs = cli::subcommands();
    REQUIRE(std::find(subs.begin(), subs.end(), route.subcommand) != subs.end());
    const auto ops = cli::ops_of(route.subcommand);
    if (route.op.empty()) CHECK(ops.empty());
    else CHECK(std::find(ops.begin(), ops.end(), route.op) != ops.end());
  }
  // every (subcommand, op) pair is exercised
  for (const auto& sub : cli::subcommands()) {
    auto ops = cli::ops_of(sub);
    if (ops.empty()) ops.push_back("");
    for (const auto& op : ops) {
      const auto it = args.find({sub, op});
      REQUIRE_MESSAGE(it != args.end(), "no sample for " << sub << " " << op);
      std::vector<std::string> line{sub};
      if (!op.empty()) line.insert(line.end(), {"--op", op});
      line.insert(line.end(), it->second.begin(), it->second.end());
      const auto r = cli_run(line);
      CHECK_MESSAGE(r.code == 0, sub << " " << op << ": " << r.err);
    }
  }
  std::ifstream csv(dir / "u.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header.rfind("t,re_00,im_00", 0) == 0);
}

TEST_CASE("cli: output file") {
  const auto path = scratch() / "report.json";
  std::filesystem::remove(path);
  std::ostringstream out, err;
  CHECK(cli::run({"greens", "--dim", "4", "--r", "1", "--out", path.string()}, out, err) == 0);
  CHECK(out.str().empty());
  const json j = io::load_json(path);
  CHECK(std::abs(j["result"]["value"][0].get<double>() - 1.0 / 3.141592653589793) < 1e-13);
}
