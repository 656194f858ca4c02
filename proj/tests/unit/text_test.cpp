#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "sgfr/text.hpp"

namespace sgfr {
namespace {

TEST(Text, GeneratorLists) {
  EXPECT_EQ(parse_generator_list("4,6,9"), (std::vector<Int>{4, 6, 9}));
  EXPECT_EQ(parse_generator_list(" 8 , 12,17 "), (std::vector<Int>{8, 12, 17}));
  EXPECT_EQ(parse_generator_list("1"), (std::vector<Int>{1}));
  EXPECT_SGFR_ERROR(parse_generator_list(""), ParseError);
  EXPECT_SGFR_ERROR(parse_generator_list("4,,6"), ParseError);
  EXPECT_SGFR_ERROR(parse_generator_list("4,6,"), ParseError);
  EXPECT_SGFR_ERROR(parse_generator_list("4;6"), ParseError);
  EXPECT_SGFR_ERROR(parse_generator_list("x"), ParseError);
}

TEST(Text, Families) {
  EXPECT_EQ(parse_family("hermitian:q=2,r=3").expanded, (NumericalSemigroup{4, 6, 9}));
  EXPECT_EQ(parse_family("suzuki:p=2,n=1").expanded, (NumericalSemigroup{8, 10, 12, 13}));
  EXPECT_EQ(parse_family("suzuki-gamma1:p=2,n=1").expanded, (NumericalSemigroup{4, 5, 6}));
  EXPECT_EQ(parse_family("hermitian:r=3,q=2").label(), "hermitian:q=2,r=3");
  EXPECT_SGFR_ERROR(parse_family("hermitian:q=2"), ParseError);
  EXPECT_SGFR_ERROR(parse_family("hermitian:q=2,r=3,s=1"), ParseError);
  EXPECT_SGFR_ERROR(parse_family("klein:q=2,r=3"), ParseError);
  EXPECT_SGFR_ERROR(parse_family("hermitian:q=two,r=3"), ParseError);
  EXPECT_SGFR_ERROR(parse_family("hermitian:q=1,r=3"), InvalidParameters);
}

TEST(Text, Gluings) {
  const Gluing g = parse_gluing("2*(2,3)+5*(1)");
  EXPECT_EQ(g.expanded(), (NumericalSemigroup{4, 5, 6}));
  EXPECT_EQ(parse_gluing(g.to_string()).expanded(), g.expanded());
  const Gluing nested = parse_gluing("2*(2*(2,3)+5*(1))+13*(1)");
  EXPECT_EQ(nested.expanded(), (NumericalSemigroup{8, 10, 12, 13}));
  EXPECT_EQ(parse_gluing("4*(2*(1)+3*(1))+17*(1)").expanded(), (NumericalSemigroup{8, 12, 17}));
  EXPECT_SGFR_ERROR(parse_gluing("2*(2,3)+5*(1"), ParseError);
  EXPECT_SGFR_ERROR(parse_gluing("2*(2,3)"), ParseError);
  EXPECT_SGFR_ERROR(parse_gluing("2*(2,3)+3*(1)"), IsMinimalGenerator);
}

TEST(Text, SemigroupSpecKinds) {
  auto s = parse_semigroup_spec("4,6,9");
  EXPECT_EQ(s.kind, SemigroupSpec::Kind::Generators);
  EXPECT_EQ(s.semigroup, (NumericalSemigroup{4, 6, 9}));
  s = parse_semigroup_spec("hermitian:q=2,r=3");
  EXPECT_EQ(s.kind, SemigroupSpec::Kind::Family);
  ASSERT_TRUE(s.family);
  EXPECT_EQ(s.semigroup, (NumericalSemigroup{4, 6, 9}));
  s = parse_semigroup_spec("3*(2,3)+4*(1)");
  EXPECT_EQ(s.kind, SemigroupSpec::Kind::Gluing);
  ASSERT_TRUE(s.gluing);
  EXPECT_EQ(s.semigroup, (NumericalSemigroup{4, 6, 9}));
  EXPECT_SGFR_ERROR(parse_semigroup_spec("4,6"), GcdNotOne);
}

}  // namespace
}  // namespace sgfr
