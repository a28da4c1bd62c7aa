#include "doctest.h"
#include "radar_order/csv.hpp"

using namespace radar;

TEST_CASE("parse_csv_text infers column types") {
  const auto t = parse_csv_text("a,b\n1,x\n2,y");
  REQUIRE(t.row_count() == 2);
  CHECK(t.is_numeric("a"));
  CHECK_FALSE(t.is_numeric("b"));
  const auto& a = std::get<NumericColumn>(t.column("a"));
  CHECK(*a[0] == 1.0);
  CHECK(*a[1] == 2.0);
  const auto& b = std::get<CategoricalColumn>(t.column("b"));
  CHECK(*b[1] == "y");
}

TEST_CASE("empty cells are missing") {
  const auto t = parse_csv_text("a\n1\n\n3");
  REQUIRE(t.row_count() == 3);
  REQUIRE(t.is_numeric("a"));
  const auto& a = std::get<NumericColumn>(t.column("a"));
  CHECK(*a[0] == 1.0);
  CHECK_FALSE(a[1].has_value());
  CHECK(*a[2] == 3.0);

  const auto u = parse_csv_text("a,b\n,x\n2,\n");
  REQUIRE(u.row_count() == 2);
  CHECK(u.is_numeric("a"));
  CHECK_FALSE(std::get<NumericColumn>(u.column("a"))[0].has_value());
  CHECK_FALSE(std::get<CategoricalColumn>(u.column("b"))[1].has_value());
}

TEST_CASE("duplicate headers and ragged rows are errors") {
  CHECK_THROWS_AS(parse_csv_text("a,a\n1,2"), parse_error);
  try {
    parse_csv_text("a,b\n1,2\n3\n4,5");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_csv_text(""), parse_error);
  CHECK_THROWS_AS(parse_csv_text("a,b\n\"open,1\n"), parse_error);
}

TEST_CASE("quoting, CRLF and mixed content") {
  const auto t =
      parse_csv_text("name,score,tag\r\n\"Smith, J\",1.5e1,\"say \"\"hi\"\"\"\r\nLee,-2,x\r\n");
  REQUIRE(t.row_count() == 2);
  CHECK(*std::get<CategoricalColumn>(t.column("name"))[0] == "Smith, J");
  CHECK(*std::get<NumericColumn>(t.column("score"))[0] == 15.0);
  CHECK(*std::get<NumericColumn>(t.column("score"))[1] == -2.0);
  CHECK(*std::get<CategoricalColumn>(t.column("tag"))[0] == "say \"hi\"");

  const auto q = parse_csv_text("v\n\"line1\nline2\"\n");
  CHECK(*std::get<CategoricalColumn>(q.column("v"))[0] == "line1\nline2");

  // A single non-numeric cell makes the whole column categorical.
  const auto mixed = parse_csv_text("v\n1\ntwo\n3");
  CHECK_FALSE(mixed.is_numeric("v"));
  CHECK_FALSE(parse_csv_text("v\n1\nnan").is_numeric("v"));
}

TEST_CASE("parse_csv reports unreadable files") {
  CHECK_THROWS_AS(parse_csv("/nonexistent/dir/file.csv"), input_error);
}
