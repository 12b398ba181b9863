#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "dsd/cli.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
namespace t = dsd::testing;

namespace {

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dsd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = dsd::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("dsd_cli_" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string write(const std::string& name, const dsd::Graph& g) const {
    std::ostringstream text;
    dsd::write_edge_list(g, text);
    return write(name, text.str());
  }
  fs::path path() const { return path_; }

 private:
  fs::path path_;
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> keys(const nlohmann::ordered_json& j) {
  std::vector<std::string> out;
  for (const auto& item : j.items()) out.push_back(item.key());
  return out;
}

}  // namespace

TEST_CASE("stats") {
  TempDir dir;
  const auto dup = dir.write("dup.txt", "0 1\n1 0\n1 2\n");
  const Output o = invoke({"stats", "--input", dup});
  CHECK(o.code == 0);
  const auto j = nlohmann::ordered_json::parse(o.out);
  CHECK(keys(j) == std::vector<std::string>{"dataset", "num_vertices", "num_edges", "raw_line_count",
                                            "max_degree", "self_loops", "self_loops_retained"});
  CHECK(j["dataset"] == "dup");
  CHECK(j["num_vertices"] == 3);
  CHECK(j["num_edges"] == 2);
  CHECK(j["raw_line_count"] == 3);
}

TEST_CASE("input errors exit with 2") {
  TempDir dir;
  Output o = invoke({"stats", "--input", (dir.path() / "missing.txt").string()});
  CHECK(o.code == 2);
  CHECK_FALSE(o.err.empty());
  CHECK(o.out.empty());

  o = invoke({"peel", "--input", dir.write("bad.txt", "0 1\n1 two\n")});
  CHECK(o.code == 2);
  CHECK(o.err.find(":2:") != std::string::npos);

  CHECK(invoke({"cbds", "--input", dir.write("empty.txt", "# nothing\n")}).code == 2);
  CHECK(invoke({"peel"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"exact", "--input", dir.write("k.txt", "0 1\n"), "--method", "magic"}).code == 2);
}

TEST_CASE("precondition errors exit with 3") {
  TempDir dir;
  const auto path = dir.write("p.txt", t::path_graph(20));
  CHECK(invoke({"exact", "--input", path, "--method", "bruteforce"}).code == 3);
  CHECK(invoke({"peel", "--input", path, "--epsilon", "-1"}).code == 3);
  CHECK(invoke({"peel", "--input", path, "--threads", "0"}).code == 3);
}

TEST_CASE("peel json on K4") {
  TempDir dir;
  const auto k4 = dir.write("k4.txt", t::complete_graph(4));
  const Output o = invoke({"peel", "--input", k4, "--epsilon", "0.5", "--threads", "2"});
  REQUIRE(o.code == 0);
  const auto j = nlohmann::ordered_json::parse(o.out);
  CHECK(keys(j) == std::vector<std::string>{"dataset", "algorithm", "epsilon", "workers", "density",
                                            "density_num", "density_den", "vertices", "edges",
                                            "passes", "eligible", "legit", "max_density_core",
                                            "ms"});
  CHECK(j["algorithm"] == "peel");
  CHECK(j["density"] == 1.5);
  CHECK(j["density_num"] == 6);
  CHECK(j["density_den"] == 4);
  CHECK(j["workers"] == 2);
  CHECK(j["epsilon"] == 0.5);
  CHECK(j["eligible"].is_null());
}

TEST_CASE("cbds and exact on fixture F") {
  TempDir dir;
  const auto f = dir.write("f.txt", t::fixture_f());
  Output o = invoke({"cbds", "--input", f, "--members"});
  REQUIRE(o.code == 0);
  auto j = nlohmann::ordered_json::parse(o.out);
  CHECK(j["density_num"] == 18);
  CHECK(j["density_den"] == 7);
  CHECK(j["eligible"] == 41);
  CHECK(j["legit"] == 1);
  CHECK(j["max_density_core"] == 4);
  CHECK(j["members"] == std::vector<int>{0, 1, 2, 3, 4, 5, 6});

  o = invoke({"exact", "--input", f, "--members"});
  REQUIRE(o.code == 0);
  j = nlohmann::ordered_json::parse(o.out);
  CHECK(j["algorithm"] == "exact-flow");
  CHECK(j["density"].get<double>() == doctest::Approx(18.0 / 7.0));
  CHECK(j["members"] == std::vector<int>{0, 1, 2, 3, 4, 5, 6});

  const auto k4 = dir.write("k4.txt", t::complete_graph(4));
  o = invoke({"exact", "--input", k4, "--method", "bruteforce"});
  REQUIRE(o.code == 0);
  CHECK(nlohmann::ordered_json::parse(o.out)["density"] == 1.5);
}

TEST_CASE("csv output has the fixed header") {
  TempDir dir;
  const auto k4 = dir.write("k4.txt", t::complete_graph(4));
  const Output o = invoke({"peel", "--input", k4, "--format", "csv", "--threads", "1"});
  REQUIRE(o.code == 0);
  const auto rows = lines(o.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] ==
        "dataset,algorithm,epsilon,workers,density,vertices,edges,passes,eligible,legit,ms,"
        "density_num,density_den,error");
  CHECK(rows[1].rfind("k4,peel,0,1,1.5,4,6,1,,,", 0) == 0);
  CHECK(rows[1].substr(rows[1].size() - 5) == ",6,4,");
}

TEST_CASE("bench") {
  TempDir dir;
  const auto k4 = dir.write("k4.txt", t::complete_graph(4));
  Output o = invoke({"bench", "--input", k4, "--algorithm", "peel", "--threads", "1,2", "--epsilon", "0"});
  REQUIRE(o.code == 0);
  auto rows = lines(o.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == dsd::cli::csv_header());
  CHECK(rows[1].rfind("k4,peel,0,1,1.5,", 0) == 0);
  CHECK(rows[2].rfind("k4,peel,0,2,1.5,", 0) == 0);

  const auto f = dir.write("f.txt", t::fixture_f());
  const auto csv = (dir.path() / "out.csv").string();
  o = invoke({"bench", "--input", k4 + "," + f, "--algorithm", "peel,cbds,exact", "--threads", "1,4",
              "--csv", csv});
  REQUIRE(o.code == 0);
  std::ifstream in(csv);
  std::stringstream buf;
  buf << in.rdbuf();
  rows = lines(buf.str());
  CHECK(rows.size() == 1 + 2 * 3 * 2);

  const auto missing = (dir.path() / "missing.txt").string();
  o = invoke({"bench", "--input", missing, "--algorithm", "cbds", "--threads", "1"});
  CHECK(o.code == 0);
  rows = lines(o.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].find("cannot open") != std::string::npos);

  CHECK(invoke({"bench"}).code == 2);
  CHECK(invoke({"bench", "--input", k4, "--algorithm", "nope"}).code == 2);
}

TEST_CASE("repeated runs report identical results") {
  TempDir dir;
  const auto g = dir.write("g.txt", t::random_graph(80, 0.1, 3));
  auto stable = [](const Output& o) {
    auto j = nlohmann::ordered_json::parse(o.out);
    j.erase("ms");
    j.erase("workers");
    return j.dump();
  };
  for (const std::string cmd : {"peel", "cbds"}) {
    const Output a = invoke({cmd, "--input", g, "--members", "--threads", "1"});
    REQUIRE(a.code == 0);
    CHECK(stable(a) == stable(invoke({cmd, "--input", g, "--members", "--threads", "3"})));
    CHECK(stable(a) == stable(invoke({cmd, "--input", g, "--members", "--threads", "1"})));
  }
  const Output a = invoke({"exact", "--input", g, "--members"});
  REQUIRE(a.code == 0);
  CHECK(stable(a) == stable(invoke({"exact", "--input", g, "--members"})));
}
