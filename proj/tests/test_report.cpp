#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "vogel/report_format.hpp"

using namespace vogel;
using namespace vogel::report;

namespace {

template <class T>
void check_round_trip(const T& value) {
  const Json j = value;
  const T back = Json::parse(j.dump()).get<T>();
  CHECK(back == value);
}

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult cli(const std::string& args) {
  const std::string cmd = std::string(VOGEL_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("structured output round trips") {
  for (const auto& r : solve("main", 50, true, false)) check_round_trip(r);
  for (const auto& r : solve("main", 8, false, true)) check_round_trip(r);
  for (const auto& r : solve("pattern3", 10, false, false)) check_round_trip(r);
  for (const auto& t : std::vector<dio::Triple>{{5, 3, -30}, {10, 5, 5}, {0, 0, 0}, {2, 6, -6}, {1, -4, -4}}) {
    check_round_trip(vogel_record(t, false));
    check_round_trip(vogel_record(t, true));
  }
  check_round_trip(geometry_record({3, 4, -12}));
  check_round_trip(geometry_record({24, 8, 3}));
  check_round_trip(mckay_record(mckay::GroupFamily::octahedral()));
  check_round_trip(mckay_record(mckay::GroupFamily::binary_dihedral(3)));
  check_round_trip(compare());
  for (const auto& r : series_table()) check_round_trip(r);
}

TEST_CASE("solve") {
  const auto iso = solve("main", 50, true, false);
  REQUIRE(iso.size() == 15);
  CHECK(iso.front().knm == dio::Triple{5, 3, -30});
  CHECK(iso.front().dim == 248);
  CHECK(iso.front().rank == 8);
  CHECK(iso.front().algebra == "e8");
  CHECK(iso[3].knm == dio::Triple{1, -4, -4});
  CHECK(iso.back().knm == dio::Triple{42, 7, 3});
  const auto fam = solve("main", 10, false, true);
  std::set<dio::Triple> triples;
  for (const auto& r : fam) triples.insert(r.knm);
  for (std::int64_t n = 3; n <= 10; ++n) CHECK(triples.count({n, 2, -n}) == 1);
  for (std::int64_t m = 1; m <= 10; ++m) CHECK(triples.count({m, 0, 0}) == 1);
  for (const auto& r : fam) CHECK(r.kind != "isolated");
  CHECK_FALSE(solve("pattern2", 20, false, false).empty());
  CHECK_THROWS_AS(solve("pattern2", 20, true, false), InputError);
  CHECK_THROWS_AS(solve("nope", 20, false, false), UnknownName);
}

TEST_CASE("vogel records") {
  const auto e8 = vogel_record({5, 3, -30}, false);
  CHECK(e8.abg == Point{-1, 6, 10});
  CHECK(e8.dim == 248);
  CHECK(e8.rank == 8);
  CHECK(e8.algebra == "e8");
  REQUIRE(e8.geometry);
  CHECK(e8.geometry->pair_name == "dodecahedron/icosahedron");
  const auto y10 = vogel_record({10, 5, 5}, true);
  CHECK(y10.dim == -144);
  CHECK(y10.rank == -14);
  CHECK(y10.algebra == "Y10");
  CHECK(y10.geometry->regular_map == true);
  REQUIRE(y10.expansion);
  std::int64_t sum = 0;
  for (const auto& [e, c] : y10.expansion->coefficients) sum += c;
  CHECK(sum == -144);
  const auto zero = vogel_record({0, 0, 0}, false);
  CHECK(zero.algebra == "D(2,1;lambda)");
  CHECK(zero.family);
  CHECK_FALSE(vogel_record({1, -4, -4}, false).geometry);
  CHECK_THROWS_AS(vogel_record({5, 5, 5}, false), InputError);
}

TEST_CASE("comparison report") {
  const auto c = compare();
  REQUIRE(c.rows.size() == 5);
  CHECK(std::count_if(c.rows.begin(), c.rows.end(), [](const auto& r) { return r.coincide; }) == 1);
  CHECK(c.rows[0].coincide);
  CHECK(c.rows[0].mckay == std::vector<std::string>{"E_8"});
  CHECK(c.rows[0].diophantine_cartan == "E_8");
  CHECK(c.rows[1].mckay == std::vector<std::string>{"E_7"});
  CHECK(c.rows[1].diophantine_cartan == "E_6");
  CHECK(c.rows[2].mckay == std::vector<std::string>{"E_6"});
  CHECK(c.rows[2].diophantine == "so(8)");
  CHECK_FALSE(c.rows[3].coincide);
  CHECK(c.rows[3].mckay.size() == 3);
  CHECK(c.rows[4].diophantine == "D(2,1;lambda)");
  CHECK(c.footnotes.size() >= 2);
}

TEST_CASE("csv and plain rendering") {
  TextTable t;
  t.headers = {"a", "b"};
  t.rows = {{"x,y", "say \"hi\""}, {"1", "2"}};
  std::ostringstream csv;
  render_csv(csv, t);
  CHECK(csv.str() == "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n1,2\n");
  std::ostringstream plain;
  render_plain(plain, t);
  CHECK(plain.str().find("x,y") != std::string::npos);
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS_AS(parse_format("xml"), ParseError);
  std::ostringstream isolated_csv;
  render_csv(isolated_csv, solution_table(solve("main", 50, true, false)));
  CHECK(isolated_csv.str().rfind("k,n,m,alpha beta gamma,dim,rank,algebra", 0) == 0);
}

TEST_CASE("cli exit codes and output") {
  CHECK(cli("solve main --bound 50 --isolated --format csv").code == 0);
  const auto iso = cli("solve main --bound 50 --isolated --format json");
  REQUIRE(iso.code == 0);
  const auto doc = Json::parse(iso.out);
  CHECK(doc.at("schema") == kSchemaVersion);
  CHECK(doc.at("records").size() == 15);
  const auto v = cli("vogel 5 3 -30 --format json");
  REQUIRE(v.code == 0);
  CHECK(Json::parse(v.out).at("records").at(0).at("dim") == 248);
  const auto mk = cli("mckay C 6");
  CHECK(mk.code == 0);
  CHECK(mk.out.find("A_5^(1)") != std::string::npos);
  const auto bd = cli("mckay BD 4 --format json");
  REQUIRE(bd.code == 0);
  const auto bdj = Json::parse(bd.out).at("records").at(0);
  CHECK(bdj.at("order") == 16);
  CHECK(bdj.at("degrees").size() == 7);
  CHECK(bdj.at("affine") == "D_6^(1)");
  CHECK(cli("mckay 2I").out.find("E_8") != std::string::npos);
  CHECK(cli("geometry 24 8 3").code == 0);
  const auto cmp = cli("compare --format json");
  REQUIRE(cmp.code == 0);
  CHECK(Json::parse(cmp.out).at("records").size() == 5);
  CHECK(cli("compare --table series").code == 0);
  CHECK(cli("compare --table isolated --format csv").out.find("42,7,3") != std::string::npos);
  CHECK(cli("selftest").code == 0);

  CHECK(cli("vogel 5 5 5").code == 1);
  CHECK(cli("solve nope").code == 1);
  CHECK(cli("solve main --bound 0").code == 1);
  CHECK(cli("mckay 3T").code == 1);
  CHECK(cli("geometry 1 -4 -4").code == 1);
  CHECK(cli("frobnicate").code == 1);
  CHECK(cli("solve main --format xml").code == 1);
  CHECK(cli("").code == 1);
}

TEST_CASE("cli reports corrupted character data as an internal consistency failure") {
  std::ifstream in(VOGEL_SOURCE_DIR "/data/character_tables.txt", std::ios::binary);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  const std::string path = "vogel_cli_tampered_tables.txt";
  {
    std::ofstream(path, std::ios::binary) << text;
  }
  CHECK(cli("mckay 2I --tables " + path).code == 0);
  text.replace(text.find("irrep 5 5 5 1"), 13, "irrep 5 5 5 2");
  {
    std::ofstream(path, std::ios::binary) << text;
  }
  CHECK(cli("mckay 2I --tables " + path).code == 2);
  CHECK(cli("mckay 2I --tables /nonexistent/tables.txt").code == 1);
  std::remove(path.c_str());
}

TEST_CASE("cli writes to --out") {
  const std::string path = "vogel_cli_out_test.json";
  std::remove(path.c_str());
  REQUIRE(cli("mckay 2T --format json --out " + path).code == 0);
  std::ifstream in(path);
  REQUIRE(in);
  const auto doc = Json::parse(in);
  CHECK(doc.at("records").at(0).at("affine") == "E_6^(1)");
  std::remove(path.c_str());
}
