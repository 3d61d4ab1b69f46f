#include <catch_amalgamated.hpp>

#include "golden.hpp"

TEST_CASE("normalization maps equivalent spellings together") {
  using golden::normalize;
  CHECK(normalize("$\\mathfrak{e}_8$") == normalize("e8"));
  CHECK(normalize("$SO(8)$") == normalize("so(8)"));
  CHECK(normalize("$D_{2,1,\\lambda}$") == normalize("D(2,1;lambda)"));
  CHECK(normalize("$Y_{10}$") == normalize("Y10"));
  CHECK(normalize("$2I, |2I|=120$") == normalize("2I, |2I|=120"));
  CHECK(normalize("$D_{n-2}$") != normalize("D_{n+2}"));
  CHECK(normalize("$A_n$") != normalize("A_{n-1}"));
}

TEST_CASE("tabular parsing keeps rules as block boundaries") {
  const auto blocks = golden::parse_tabular("a & b \\\\ c & d\\\\ \\hline e & \\\\ \\cline{1-2} f & g\\\\ \\hline");
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].size() == 2);
  CHECK(blocks[1].size() == 2);
  CHECK(blocks[1][0].cells == std::vector<std::string>{"e", ""});
  CHECK(blocks[1][1].cells == std::vector<std::string>{"f", "g"});
}

TEST_CASE("golden tables parse to the expected shapes") {
  CHECK(golden::parse_tabular(golden::read("comparison.tex")).size() == 5);
  CHECK(golden::parse_tabular(golden::read("series.tex")).size() == 2);
  const auto isolated = golden::parse_tabular(golden::read("isolated.tex"));
  std::size_t rows = 0;
  for (const auto& b : isolated) rows += b.size();
  CHECK(rows == 15);
}

TEST_CASE("isolated-solution table matches the printed cells exactly") {
  golden::Checker chk;
  golden::check_isolated(chk, golden::computed_isolated());
  const auto problems = chk.problems();
  for (const auto& p : problems) UNSCOPED_INFO(p);
  CHECK(problems.empty());
  CHECK(chk.diff_count() == 0);
}

TEST_CASE("comparison and series tables match up to the documented discrepancies") {
  golden::Checker chk;
  golden::check_comparison(chk, vogel::report::compare());
  golden::check_series(chk, vogel::report::series_table());
  const auto problems = chk.problems();
  for (const auto& p : problems) UNSCOPED_INFO(p);
  CHECK(problems.empty());
  CHECK(chk.diff_count() == 4);
}

TEST_CASE("an unlisted disagreement is reported") {
  auto c = vogel::report::compare();
  c.rows[1].mckay = {"E_6"};
  golden::Checker chk;
  golden::check_comparison(chk, c);
  CHECK_FALSE(chk.problems().empty());
}

TEST_CASE("a listed disagreement that no longer occurs is reported as stale") {
  auto c = vogel::report::compare();
  c.rows[3].mckay[2] = "D_{n-2}";
  golden::Checker chk;
  golden::check_comparison(chk, c);
  const auto problems = chk.problems();
  REQUIRE(problems.size() == 1);
  CHECK(problems[0].find("stale") != std::string::npos);
}
