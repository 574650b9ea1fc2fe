// Copyright 2026 The tropfst Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>

#include <gtest/gtest.h>

#include "testing/generators.hpp"
#include "tropfst/text_format.hpp"
#include "tropfst/wfst.hpp"

namespace tropfst {
namespace {

using Kind = ValidationReport::Kind;

const char kPushExample[] =
    "I 0 0\n0 1 a A 1\n0 2 a A 2\n1 3 z Z 42\n2 4 x X 3\nF 3 0\nF 4 0\n";
const char kEpsExample[] = "I 0 0\n0 1 <eps> <eps> 1\n1 2 a a-out 2\nF 2 0\n";

TEST(ValidateTest, PushExampleIsValid) {
  const Wfst m = ParseText(kPushExample);
  EXPECT_EQ(m.num_states(), 5u);
  EXPECT_EQ(m.arcs().size(), 4u);
  EXPECT_TRUE(Validate(m).ok());
}

TEST(ValidateTest, DuplicatePair) {
  const Wfst m = ParseText("I 0 0\n0 1 a A 1\n0 1 b B 2\nF 1 0\n");
  const auto report = Validate(m);
  EXPECT_TRUE(report.Has(Kind::kDuplicateArc));
  EXPECT_EQ(report.violations.size(), 1u);
  EXPECT_THROW(BuildMatrices(m), ValidationError);
}

TEST(ValidateTest, StateOutOfRange) {
  Wfst m(3);
  m.SetInitial(0, 0);
  m.SetFinal(2, 0);
  m.AddArc(Arc{7, 1, kEpsilon, kEpsilon, 1});
  EXPECT_TRUE(Validate(m).Has(Kind::kStateOutOfRange));
}

TEST(ValidateTest, NonFiniteWeightAndMissingEnds) {
  const Wfst m = ParseText("0 1 a A inf\n");
  const auto report = Validate(m);
  EXPECT_TRUE(report.Has(Kind::kNonFiniteArcWeight));
  EXPECT_TRUE(report.Has(Kind::kNoInitialState));
  EXPECT_TRUE(report.Has(Kind::kNoFinalState));
}

TEST(BuildMatricesTest, EpsilonExample) {
  const MatrixView view = BuildMatrices(ParseText(kEpsExample));
  const TropMatrix inf(3, 3);
  TropMatrix e = inf;
  e(0, 1) = 1;
  EXPECT_EQ(view.e, e);
  TropMatrix a_eps = inf;
  a_eps(1, 2) = 2;
  EXPECT_EQ(view.a_eps, a_eps);
  EXPECT_EQ(view.sigma_i(0, 1), kEpsilon);
  EXPECT_EQ(view.sigma_o(0, 1), kEpsilon);
  EXPECT_EQ(view.sigma_i(0, 2), kNoLabel);
}

TEST(BuildMatricesTest, NoEpsilonOrOnlyEpsilon) {
  const MatrixView plain = BuildMatrices(ParseText(kPushExample));
  EXPECT_EQ(plain.e, TropMatrix(5, 5));
  EXPECT_EQ(plain.a_eps, plain.a);

  const MatrixView eps_only =
      BuildMatrices(ParseText("I 0 0\n0 1 <eps> <eps> 2\nF 1 0\n"));
  EXPECT_EQ(eps_only.a_eps, TropMatrix(2, 2));
  EXPECT_EQ(eps_only.e, eps_only.a);
}

TEST(BuildMatricesTest, HalfEpsilonArcIsNotEpsilon) {
  const MatrixView view =
      BuildMatrices(ParseText("I 0 0\n0 1 <eps> X 2\nF 1 0\n"));
  EXPECT_EQ(view.e, TropMatrix(2, 2));
  EXPECT_EQ(view.a_eps(0, 1), TropWeight(2));
}

TEST(ParseTextTest, SingleStateAcceptor) {
  const Wfst m = ParseText("I 0 0\nF 0 0\n");
  EXPECT_EQ(m.num_states(), 1u);
  EXPECT_TRUE(m.arcs().empty());
  EXPECT_EQ(SerializeText(m), "I 0 0\nF 0 0\n");
}

TEST(ParseTextTest, TooFewFieldsReportsLine) {
  try {
    ParseText("0 1 a\n");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 1u);
  }
  try {
    ParseText("I 0 0\n0 1 a A x\n");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(ParseText("I -1 0\n"), ParseError);
  EXPECT_THROW(ParseText("I 0 0\nI 0 1\n"), ParseError);
}

TEST(ParseTextTest, UnknownSymbolWithFixedTables) {
  SymbolTable isyms, osyms;
  isyms.AddSymbol("a");
  osyms.AddSymbol("A");
  ParseOptions opts{&isyms, &osyms};
  EXPECT_NO_THROW(ParseText("0 1 a A 1\n", opts));
  EXPECT_THROW(ParseText("0 1 b A 1\n", opts), SymbolError);
}

TEST(SerializeTextTest, CanonicalOrder) {
  const Wfst m = ParseText(
      "F 4 0\n2 4 x X 3\n0 2 a A 2\nF 3 0\n1 3 z Z 42\n0 1 a A 1\nI 0 0\n");
  // One initial line, four arcs by (src, dst), two final lines.
  EXPECT_EQ(SerializeText(m), kPushExample);
}

TEST(SerializeTextTest, ShortestRoundTripWeights) {
  const Wfst m = ParseText("I 0 0.1\n0 1 a A 2.50\n0 0 b B -0\nF 1 1e3\n");
  EXPECT_EQ(SerializeText(m), "I 0 0.1\n0 0 b B 0\n0 1 a A 2.5\nF 1 1000\n");
}

TEST(WfstModelProperties, DecompositionAndRoundTrip) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Wfst m = testing::RandomAcyclicMachine(rng);
    ASSERT_TRUE(Validate(m).ok());
    const MatrixView view = BuildMatrices(m);
    EXPECT_EQ(PointwiseMin(view.a_eps, view.e), view.a);

    const std::string text = SerializeText(m);
    const Wfst back = ParseText(text);
    EXPECT_EQ(SerializeText(back), text);
    EXPECT_EQ(back.SortedArcs().size(), m.arcs().size());
  }
}

}  // namespace
}  // namespace tropfst
