#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsato/database.hpp"
#include "bsato/errors.hpp"
#include "bsato/stratify.hpp"

#include <cstdio>

using namespace bsato;

namespace {

Database sample_bsp() { return stratify_bsp(1, 1); }

Database sample_ann() {
  RingPtr C = Ring::make({"u"});
  auto sig = AlgebraSignature::make(Ring::make({"x1", "dx1", "s", "u"}), {{"x1", "dx1"}});
  Database db;
  db.kind = "ann";
  db.n = 1;
  db.d = 1;
  db.C = C;
  db.sig = sig;
  db.s_name = "s";
  db.f = CPoly::parse(Ring::make({"x1", "u"}), "u*x1");
  AnnStratum st;
  st.gens = {WeylElem::parse(sig, "u*x1*dx1-s*u")};
  Constructible r;
  r.pieces.push_back(
      make_piece(make_ideal(C, {}), make_ideal(C, {CPoly::parse(C, "u")})));
  st.region = r;
  db.ann_strata.push_back(st);
  db.meta["note"] = "sample";
  return db;
}

}  // namespace

TEST_CASE("round trip is the identity on a computed database") {
  Database db = sample_bsp();
  std::string bytes = serialize(db);
  Database back = deserialize(bytes);

  CHECK(back.kind == db.kind);
  CHECK(back.n == db.n);
  CHECK(back.d == db.d);
  CHECK(back.projective == db.projective);
  REQUIRE(back.strata.size() == db.strata.size());
  for (size_t i = 0; i < db.strata.size(); ++i) {
    CHECK(back.strata[i].b == db.strata[i].b);
    CHECK(back.strata[i].region.pieces.size() == db.strata[i].region.pieces.size());
    CHECK(back.strata[i].region.has_chain == db.strata[i].region.has_chain);
    REQUIRE(back.strata[i].region.chain.size() == db.strata[i].region.chain.size());
    for (size_t k = 0; k < db.strata[i].region.chain.size(); ++k)
      CHECK(ideal_equal(back.strata[i].region.chain[k], db.strata[i].region.chain[k]));
  }
  // serialization is canonical, so a second trip is byte-identical
  CHECK(serialize(back) == bytes);
}

TEST_CASE("round trip preserves ann databases") {
  Database db = sample_ann();
  std::string bytes = serialize(db);
  Database back = deserialize(bytes);
  CHECK(back.kind == "ann");
  CHECK(back.s_name == "s");
  REQUIRE(back.ann_strata.size() == 1);
  REQUIRE(back.ann_strata[0].gens.size() == 1);
  CHECK(back.ann_strata[0].gens[0].str() == db.ann_strata[0].gens[0].str());
  CHECK(back.meta.at("note") == "sample");
  CHECK(back.sig.ring->size() == 4);
  CHECK(serialize(back) == bytes);
}

TEST_CASE("empty database is a valid file") {
  Database db;
  std::string bytes = serialize(db);
  Database back = deserialize(bytes);
  CHECK(back.strata.empty());
  CHECK(back.kind == "");
  CHECK(serialize(back) == bytes);
}

TEST_CASE("unknown version is rejected") {
  std::string bytes = serialize(sample_bsp());
  auto pos = bytes.find("\"version\": 1");
  REQUIRE(pos != std::string::npos);
  bytes.replace(pos, 12, "\"version\": 9");
  CHECK_THROWS_AS(deserialize(bytes), parse_error);
}

TEST_CASE("malformed input reports a parse error") {
  CHECK_THROWS_AS(deserialize("{ not json"), parse_error);
  CHECK_THROWS_AS(deserialize("{}"), parse_error);
  CHECK_THROWS_AS(deserialize("{\"format\":\"other\",\"version\":1}"), parse_error);
}

TEST_CASE("save and load files") {
  Database db = sample_bsp();
  std::string path = "test_db_roundtrip.json";
  save_database(db, path);
  Database back = load_database(path);
  CHECK(serialize(back) == serialize(db));
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_database("does_not_exist.json"), error);
}

TEST_CASE("file ordering is stable regardless of in-memory stratum order") {
  Database db = sample_bsp();
  Database shuffled = db;
  std::reverse(shuffled.strata.begin(), shuffled.strata.end());
  CHECK(serialize(shuffled) == serialize(db));
}
