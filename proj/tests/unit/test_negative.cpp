#include <gtest/gtest.h>

#include "corruptions.hpp"

using namespace weakhopf::examples;

namespace {

Corruption find(const std::string& map) {
  for (auto& c : corruptions()) {
    if (c.map == map) return c;
  }
  throw std::runtime_error("no corruption for " + map);
}

}  // namespace

TEST(Negative, SixMapsAreCovered) { EXPECT_EQ(corruptions().size(), 6u); }

TEST(Negative, Multiplication) { EXPECT_EQ(corruption_mismatch(find("m")), ""); }
TEST(Negative, Comultiplication) { EXPECT_EQ(corruption_mismatch(find("Δ")), ""); }
TEST(Negative, Counit) { EXPECT_EQ(corruption_mismatch(find("ε")), ""); }
TEST(Negative, Antipode) { EXPECT_EQ(corruption_mismatch(find("S")), ""); }
TEST(Negative, Coaction) { EXPECT_EQ(corruption_mismatch(find("ρ")), ""); }
TEST(Negative, Projection) { EXPECT_EQ(corruption_mismatch(find("π")), ""); }

TEST(Negative, MismatchIsReported) {
  Corruption c = find("π");
  c.expected_failed = {"image_subcoalgebra"};
  EXPECT_NE(corruption_mismatch(c), "");
  c = find("S");
  c.tuple = {"2:a"};
  EXPECT_NE(corruption_mismatch(c), "");
}
