#include <doctest.h>

#include <fstream>
#include <sstream>

#include "catgrp/acceptance.hpp"
#include "catgrp/document_ops.hpp"
#include "catgrp/dsl.hpp"
#include "catgrp/equivalence.hpp"
#include "test_util.hpp"

using namespace catgrp;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(CATGRP_FIXTURES_DIR) + "/" + name,
                   std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Diagnostic first_error(const ParseResult& r) {
  REQUIRE_FALSE(r.ok());
  return r.diagnostics.front();
}

}  // namespace

TEST_CASE("empty documents are valid and serialize to empty text") {
  const ParseResult r = parse_spec("");
  CHECK(r.ok());
  CHECK(r.doc.decls.empty());
  CHECK(serialize_spec(r.doc).empty());
  CHECK(parse_spec("# nothing but comments\n\n").ok());
}

TEST_CASE("builtin group declarations expand to tables") {
  const ParseResult r = parse_spec("group C4 builtin cyclic 4\n");
  REQUIRE(r.ok());
  const auto& g = std::get<GroupDecl>(r.doc.decls.at(0).body);
  CHECK(g.order == 4);
  CHECK(g.table == make_cyclic(4)->table());
  // Builtins are sugar: serialization writes the explicit table.
  CHECK(serialize_spec(r.doc).find("builtin") == std::string::npos);
  CHECK(serialize_spec(r.doc).substr(0, 17) == "group C4 order 4\n");
}

TEST_CASE("golden fixture round-trips byte-exactly") {
  const std::string text = read_fixture("a3_s3_xmod.spec");
  const ParseResult r = parse_spec(text);
  REQUIRE(r.ok());
  CHECK(serialize_spec(r.doc) == text);
  // The committed fixture matches the library's own construction.
  CHECK(serialize_spec(a3_s3_xmod_document(false)) == text);
}

TEST_CASE("parse is a retraction of serialize") {
  for (const char* name :
       {"a3_s3_xmod.spec", "a3_s3_trivial_action.spec"}) {
    const ParseResult first = parse_spec(read_fixture(name));
    REQUIRE(first.ok());
    const ParseResult second = parse_spec(serialize_spec(first.doc));
    REQUIRE(second.ok());
    CHECK(serialize_spec(second.doc) == serialize_spec(first.doc));
  }
}

TEST_CASE("diagnostics carry real positions") {
  SUBCASE("short table row") {
    const std::string text = read_fixture("bad_rowlen.spec");
    const ParseResult r = parse_spec(text);
    const Diagnostic d = first_error(r);
    CHECK(d.message == "row length 3, expected 4");
    CHECK(d.line == 4);
    CHECK(d.column == 1);
  }
  SUBCASE("unknown reference") {
    const Diagnostic d =
        first_error(parse_spec("hom f : A -> B\n0\n"));
    CHECK(d.message.find("does not resolve") != std::string::npos);
    CHECK(d.line == 1);
  }
  SUBCASE("duplicate name") {
    const Diagnostic d = first_error(parse_spec(
        "group G order 1\n0\ngroup G order 1\n0\n"));
    CHECK(d.message.find("already declared") != std::string::npos);
    CHECK(d.line == 3);
  }
  SUBCASE("identity convention") {
    const Diagnostic d = first_error(parse_spec(
        "group G order 2\n1 0\n0 1\n"));
    CHECK(d.message.find("identity") != std::string::npos);
  }
  SUBCASE("order cap") {
    test::CapGuard guard;
    set_order_cap(10);
    const Diagnostic d =
        first_error(parse_spec("group G order 12\n"));
    CHECK(d.message.find("cap") != std::string::npos);
  }
  SUBCASE("entry out of range") {
    const Diagnostic d = first_error(parse_spec(
        "group G order 2\n0 1\n1 5\n"));
    CHECK(d.message.find("out of range") != std::string::npos);
    CHECK(d.line == 3);
    CHECK(d.column == 3);
  }
  SUBCASE("positions index into the text") {
    const std::string text =
        "group G order 2\n0 1\n1 0\nhom f : G -> H\n0 0\n";
    const ParseResult r = parse_spec(text);
    std::vector<std::string> lines;
    std::istringstream stream(text);
    for (std::string line; std::getline(stream, line);)
      lines.push_back(line);
    for (const Diagnostic& d : r.diagnostics) {
      REQUIRE(d.line >= 1);
      REQUIRE(d.line <= static_cast<int>(lines.size()));
      CHECK(d.column >= 1);
      CHECK(d.column <= static_cast<int>(lines[d.line - 1].size()) + 1);
    }
  }
}

TEST_CASE("declaration errors are collected per declaration") {
  const std::string text =
      "group G order 2\n0 1\n1 5\n"      // bad entry
      "group H order 2\n0 1\n1 0\n"      // fine
      "hom f : G -> H\n0 0\n";           // G failed to parse
  const ParseResult r = parse_spec(text);
  CHECK(r.diagnostics.size() == 2);
}

TEST_CASE("comments and spacing are tolerated") {
  const std::string text =
      "# header comment\n"
      "group   G order 2   # trailing\n"
      " 0 1 \n"
      "1 0\n"
      "xmodless?\n";
  const ParseResult r = parse_spec(text);
  CHECK(r.diagnostics.size() == 1);  // only the stray last line
}

TEST_CASE("internalcat declarations parse comp rows against the pullback") {
  const CrossedModule xm = [] {
    const ParseResult r = parse_spec(
        serialize_spec(a3_s3_xmod_document(false)));
    REQUIRE(r.ok());
    DocumentEnv env(r.doc);
    return env.xmod("m");
  }();
  const InternalCategory ic = xmod_to_internal(xm);
  const SpecDocument doc = internal_cat_to_document(ic, "m");

  const std::string text = serialize_spec(doc);
  const ParseResult r = parse_spec(text);
  REQUIRE(r.ok());
  CHECK(serialize_spec(r.doc) == text);

  const auto& decl = std::get<InternalCatDecl>(r.doc.decls.back().body);
  CHECK(decl.comp.size() == 54);

  // One dropped comp row shifts the whole section and fails.
  std::string truncated = text;
  truncated.resize(truncated.rfind('\n', truncated.size() - 2) + 1);
  CHECK_FALSE(parse_spec(truncated).ok());
}

TEST_CASE("document checks drive every declaration kind") {
  const ParseResult r = parse_spec(read_fixture("a3_s3_xmod.spec"));
  REQUIRE(r.ok());
  const auto reports = run_document_checks(r.doc);
  // S3, A3, incl, conj, then xmod axioms + kernel/image consequences.
  CHECK(reports.size() == 7);
  for (const auto& nr : reports) CHECK(nr.report.passed);

  const ParseResult broken =
      parse_spec(read_fixture("a3_s3_trivial_action.spec"));
  REQUIRE(broken.ok());
  bool saw_equivariance_failure = false;
  for (const auto& nr : run_document_checks(broken.doc))
    if (!nr.report.passed &&
        nr.report.detail.find("equivariance") != std::string::npos)
      saw_equivariance_failure = true;
  CHECK(saw_equivariance_failure);
}
