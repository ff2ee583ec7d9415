#include <gtest/gtest.h>

#include <filesystem>

#include "examples.hpp"
#include "weakhopf/errors.hpp"
#include "weakhopf/io.hpp"

using namespace weakhopf;
using namespace weakhopf::examples;
namespace fs = std::filesystem;

TEST(Io, StructureRoundTripIsByteIdentical) {
  for (const WeakHopf& h : {kg_z2z2(), kg_z2z2_dual(), group_weak_z2(), kg_z2s3()}) {
    const std::string text = write_structure(h);
    const StructureData d = parse_structure(text);
    const WeakHopf back = d.hopf();
    EXPECT_EQ(write_structure(back), text);
    EXPECT_TRUE(maps_equal(back.mult(), h.mult()));
    EXPECT_TRUE(maps_equal(back.antipode(), h.antipode()));
  }
}

TEST(Io, CorpusStructuresRoundTrip) {
  for (const char* name : {"kG_z2z2.json", "kG_z2z2_dual.json", "kZ2_hopf.json", "group_weak_z2.json",
                           "kG_z2s3.json"}) {
    const fs::path p = fs::path(corpus_dir) / name;
    const std::string text = read_text(p);
    EXPECT_EQ(write_structure(load_structure(p).hopf()), text) << name;
  }
}

TEST(Io, PrimeFieldRoundTrip) {
  const WeakHopf h = abelian_group_weak_hopf(FiniteGroup::cyclic(2), Field::prime(5));
  const std::string text = write_structure(h);
  EXPECT_NE(text.find("{\"Fp\":5}"), std::string::npos);
  // 1/2 = 3 in F_5
  EXPECT_NE(text.find("\"3\""), std::string::npos);
  EXPECT_EQ(write_structure(parse_structure(text).hopf()), text);
}

TEST(Io, CoactionAndActionTablesRoundTrip) {
  const CoactionMap cm = g1_translation();
  const std::string rho = write_rho(cm);
  EXPECT_TRUE(maps_equal(parse_rho(rho, cm.hopf(), cm.coalgebra()), cm.rho()));
  const ModuleActionMap ma = coaction_to_action(cm);
  const std::string act = write_action(ma);
  EXPECT_TRUE(maps_equal(parse_action(act, ma.acting(), ma.coalgebra()), ma.act()));
  const LinMap pi = projection_onto(1);
  EXPECT_TRUE(maps_equal(parse_projection(write_projection(pi), cm.coalgebra()), pi));
}

TEST(Io, MalformedInputsAreParseErrors) {
  const std::string good = write_structure(kz2_hopf());
  EXPECT_THROW(parse_structure("{\"field\": \"Q\""), ParseError);
  EXPECT_THROW(parse_structure("[]"), ParseError);
  EXPECT_THROW(parse_structure("{\"field\": \"R\", \"basis\": [\"x\"], \"comult\": [], \"counit\": []}"), ParseError);
  EXPECT_THROW(parse_structure("{\"field\": \"Q\", \"basis\": [\"x\"], \"comult\": [[0, [[0, 1, \"1\"]]]], "
                               "\"counit\": []}"),
               ParseError);
  EXPECT_THROW(parse_structure("{\"field\": \"Q\", \"basis\": [\"x\"], \"comult\": [[0, [[0, 0, \"1\"], [0, 0, "
                               "\"2\"]]]], \"counit\": []}"),
               ParseError);
  EXPECT_THROW(parse_structure("{\"field\": \"Q\", \"basis\": [\"x\"], \"comult\": [], \"counit\": [[0, \"1/0\"]]}"),
               ParseError);
  EXPECT_THROW(parse_structure("{\"field\": {\"Fp\": 4}, \"basis\": [\"x\"], \"comult\": [], \"counit\": []}"),
               ParseError);
  EXPECT_THROW(parse_structure("{\"field\": \"Q\", \"basis\": [\"x\", \"x\"], \"comult\": [], \"counit\": []}"),
               ParseError);
  // coalgebra-only files load but have no algebra
  const StructureData c = parse_structure(write_coalgebra(kz2_hopf().coalgebra()));
  EXPECT_THROW(c.bialgebra(), ParseError);
  EXPECT_EQ(parse_structure(good).space.dim(), 2u);
}

TEST(Io, GroupoidFiles) {
  const Groupoid g = parse_groupoid(read_text(fs::path(corpus_dir) / "z2z2.groupoid.json"));
  EXPECT_EQ(g.size(), 4u);
  const Groupoid raw = parse_groupoid(read_text(fs::path(corpus_dir) / "z2.groupoid.json"));
  EXPECT_EQ(raw.arrows(), (std::vector<std::string>{"e", "a"}));
  EXPECT_THROW(parse_groupoid("{\"arrows\": [\"e\"], \"identities\": [], \"compose\": []}"), ParseError);
  const Groupoid cayley =
      parse_groupoid("{\"groups\": [{\"elements\": [\"1\", \"x\"], \"identity\": \"1\", \"table\": [[\"1\", \"x\"], "
                     "[\"x\", \"1\"]]}]}");
  EXPECT_EQ(cayley.arrows(), (std::vector<std::string>{"1:1", "1:x"}));
}

TEST(Io, FieldFlag) {
  EXPECT_TRUE(parse_field("Q").is_rational());
  EXPECT_EQ(parse_field("F7").characteristic(), 7u);
  EXPECT_EQ(parse_field("Fp:11").characteristic(), 11u);
  EXPECT_THROW(parse_field("F8"), PreconditionError);
  EXPECT_THROW(parse_field("R"), PreconditionError);
}
