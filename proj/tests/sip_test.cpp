// Copyright 2026 The sipdepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "gtest/gtest.h"
#include "sipdepth/error.hpp"
#include "sipdepth/sip.hpp"

namespace sipdepth {
namespace {

SipInstance make_sip(std::vector<std::vector<long>> rows, std::vector<long> b,
                     std::vector<ExtInt> l, std::vector<ExtInt> u) {
  SipInstance sip;
  sip.a = dense_matrix(rows, l.size());
  for (long v : b) sip.b.emplace_back(v);
  sip.l = std::move(l);
  sip.u = std::move(u);
  return sip;
}

Errc error_code(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::kInternal;
}

TEST(ExtIntTest, TotalOrder) {
  EXPECT_LT(ExtInt::neg_inf(), ExtInt(Integer("-100000000000000000000000")));
  EXPECT_LT(ExtInt(5), ExtInt::pos_inf());
  EXPECT_LT(ExtInt::neg_inf(), ExtInt::pos_inf());
  EXPECT_EQ(ExtInt::pos_inf(), ExtInt::pos_inf());
  EXPECT_EQ(ExtInt(3), ExtInt(Integer(3)));
  EXPECT_GT(ExtInt(4), ExtInt(3));
}

TEST(ValidateTest, MinimalInstanceIsValid) {
  EXPECT_NO_THROW(validate(make_sip({{1}}, {0}, {0}, {0})));
}

TEST(ValidateTest, CrossedBounds) {
  try {
    validate(make_sip({{1}}, {0}, {1}, {0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kCrossedBounds);
    EXPECT_EQ(e.where(), (std::vector<std::size_t>{0}));
  }
}

TEST(ValidateTest, DuplicateEntry) {
  SipInstance sip = make_sip({{1}}, {0}, {0}, {0});
  sip.a.entries.push_back({0, 0, 1});
  try {
    validate(sip);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDuplicateEntry);
    EXPECT_EQ(e.where(), (std::vector<std::size_t>{0, 0}));
  }
}

TEST(ValidateTest, DimensionAndEntryErrors) {
  SipInstance sip = make_sip({{1}}, {0}, {0}, {0});
  sip.b.emplace_back(1);
  EXPECT_EQ(error_code([&] { validate(sip); }), Errc::kDimensionMismatch);
  sip = make_sip({{1}}, {0}, {0}, {0});
  sip.a.entries.push_back({0, 3, 1});
  EXPECT_EQ(error_code([&] { validate(sip); }), Errc::kIndexOutOfRange);
  sip = make_sip({{1}}, {0}, {0}, {0});
  sip.a.entries[0].value = 0;
  EXPECT_EQ(error_code([&] { validate(sip); }), Errc::kZeroEntry);
}

TEST(EvaluateTest, Examples) {
  const auto sip = make_sip({{1, 1}}, {2}, {0, 0}, {2, 2});
  EXPECT_TRUE(evaluate(sip, {1, 1}));
  EXPECT_FALSE(evaluate(sip, {3, -1}));
  const auto kernel = make_sip({{1, -1}}, {0}, {ExtInt::neg_inf(), ExtInt::neg_inf()},
                               {ExtInt::pos_inf(), ExtInt::pos_inf()});
  EXPECT_TRUE(evaluate(kernel, {7, 7}));
  EXPECT_FALSE(evaluate(kernel, {7, 8}));
}

TEST(EvaluateTest, WrongLength) {
  const auto sip = make_sip({{1, 1}}, {2}, {0, 0}, {2, 2});
  EXPECT_EQ(error_code([&] { evaluate(sip, {1}); }), Errc::kDimensionMismatch);
}

TEST(EvaluateTest, NoOverflowOnHugeValues) {
  const Integer big("340282366920938463463374607431768211456");  // 2^128
  SipInstance sip = make_sip({{1, 1}}, {0}, {ExtInt::neg_inf(), ExtInt::neg_inf()},
                             {ExtInt::pos_inf(), ExtInt::pos_inf()});
  EXPECT_TRUE(evaluate(sip, {big, -big}));
  EXPECT_FALSE(evaluate(sip, {big, -big + 1}));
}

TEST(ShiftTest, SingleVariable) {
  const auto shifted = shift_to_zero_lower_bounds(make_sip({{1}}, {3}, {2}, {5}));
  EXPECT_EQ(shifted.sip, make_sip({{1}}, {1}, {0}, {3}));
  EXPECT_EQ(shifted.offset, (std::vector<Integer>{2}));
}

TEST(ShiftTest, IdentityWhenLowerBoundsAreZero) {
  const auto sip = make_sip({{1, 2}}, {4}, {0, 0}, {3, ExtInt::pos_inf()});
  const auto shifted = shift_to_zero_lower_bounds(sip);
  EXPECT_EQ(shifted.sip, sip);
  EXPECT_EQ(shifted.offset, (std::vector<Integer>{0, 0}));
}

TEST(ShiftTest, NegativeLowerBounds) {
  // b' = b - A l = 0 - (1*(-1) + 1*(-1)) = 2, u' = u - l = 2.
  const auto shifted = shift_to_zero_lower_bounds(make_sip({{1, 1}}, {0}, {-1, -1}, {1, 1}));
  EXPECT_EQ(shifted.sip.b, (std::vector<Integer>{2}));
  EXPECT_EQ(shifted.sip.u, (std::vector<ExtInt>{2, 2}));
  EXPECT_EQ(shifted.offset, (std::vector<Integer>{-1, -1}));
}

TEST(ShiftTest, InfiniteLowerBound) {
  const auto sip = make_sip({{1}}, {0}, {ExtInt::neg_inf()}, {0});
  EXPECT_EQ(error_code([&] { shift_to_zero_lower_bounds(sip); }), Errc::kInfiniteLowerBound);
}

// For random instances and every x' in the shifted box, membership agrees
// with x' + offset in the original.
TEST(ShiftTest, PropertyPreservesSolutionSet) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-2, 2), bound(-3, 3), rhs(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::vector<std::vector<long>> rows(2, std::vector<long>(n));
    for (auto& r : rows) {
      for (auto& v : r) v = coef(rng);
    }
    std::vector<ExtInt> l, u;
    for (std::size_t i = 0; i < n; ++i) {
      long lo = bound(rng), hi = bound(rng);
      if (lo > hi) std::swap(lo, hi);
      l.emplace_back(lo);
      u.emplace_back(hi);
    }
    const auto sip = make_sip(rows, {rhs(rng), rhs(rng)}, l, u);
    const auto shifted = shift_to_zero_lower_bounds(sip);
    std::vector<Integer> x(n, 0);
    // Odometer over the shifted box.
    while (true) {
      std::vector<Integer> original(n);
      for (std::size_t i = 0; i < n; ++i) original[i] = x[i] + shifted.offset[i];
      ASSERT_EQ(evaluate(shifted.sip, x), evaluate(sip, original));
      std::size_t i = 0;
      while (i < n && ExtInt(Integer(x[i] + 1)) > shifted.sip.u[i]) x[i++] = 0;
      if (i == n) break;
      x[i] += 1;
    }
  }
}

TEST(SipJsonTest, RoundTripAndCanonicalOrder) {
  SipInstance sip = make_sip({{0, 2}, {-1, 0}}, {4, -1}, {ExtInt::neg_inf(), 0},
                             {1, ExtInt::pos_inf()});
  // Scramble entry order; serialization is row-major regardless.
  std::reverse(sip.a.entries.begin(), sip.a.entries.end());
  const std::string text = serialize_sip(sip);
  EXPECT_EQ(text,
            R"({"rows":2,"cols":2,"entries":[[0,1,2],[1,0,-1]],"b":[4,-1],"l":["-inf",0],"u":[1,"+inf"]})"
            "\n");
  SipInstance canonical = sip;
  canonical.a.canonicalize();
  EXPECT_EQ(parse_sip(text), canonical);
  EXPECT_EQ(serialize_sip(parse_sip(text)), text);
}

TEST(SipJsonTest, MinimalInstanceRoundTrip) {
  const auto sip = make_sip({{1}}, {0}, {0}, {0});
  EXPECT_EQ(parse_sip(serialize_sip(sip)), sip);
}

TEST(SipJsonTest, InfinityStrings) {
  const auto sip = parse_sip(R"({"rows":0,"cols":1,"entries":[],"b":[],"l":["-inf"],"u":["+inf"]})");
  EXPECT_TRUE(sip.l[0].is_neg_inf());
  EXPECT_TRUE(sip.u[0].is_pos_inf());
}

TEST(SipJsonTest, BigIntegersTravelAsStrings) {
  SipInstance sip = make_sip({{1}}, {0}, {0}, {0});
  sip.b[0] = Integer("123456789012345678901234567890");
  sip.u[0] = ExtInt(Integer("123456789012345678901234567890"));
  const auto text = serialize_sip(sip);
  EXPECT_NE(text.find("\"123456789012345678901234567890\""), std::string::npos);
  EXPECT_EQ(parse_sip(text), sip);
}

TEST(SipJsonTest, MalformedTriple) {
  const char* text = R"({"rows":1,"cols":1,"entries":[[0,0]],"b":[0],"l":[0],"u":[0]})";
  EXPECT_EQ(error_code([&] { parse_sip(text); }), Errc::kSyntax);
}

TEST(SipJsonTest, SyntaxErrorCarriesLineAndColumn) {
  try {
    parse_sip("{\n  \"rows\": 1,\n  oops\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kSyntax);
    ASSERT_EQ(e.where().size(), 2u);
    EXPECT_EQ(e.where()[0], 3u);
  }
}

TEST(SipJsonTest, InfiniteRightHandSideRejected) {
  const char* text = R"({"rows":1,"cols":1,"entries":[[0,0,1]],"b":["+inf"],"l":[0],"u":[0]})";
  EXPECT_EQ(error_code([&] { parse_sip(text); }), Errc::kSyntax);
}

TEST(SipJsonTest, ValidationErrorsSurface) {
  const char* crossed = R"({"rows":1,"cols":1,"entries":[[0,0,1]],"b":[0],"l":[1],"u":[0]})";
  EXPECT_EQ(error_code([&] { parse_sip(crossed); }), Errc::kCrossedBounds);
  const char* dup = R"({"rows":1,"cols":1,"entries":[[0,0,1],[0,0,2]],"b":[0],"l":[0],"u":[0]})";
  EXPECT_EQ(error_code([&] { parse_sip(dup); }), Errc::kDuplicateEntry);
}

TEST(SolutionJsonTest, RoundTrip) {
  const std::vector<Integer> x{1, -7, Integer("99999999999999999999999")};
  EXPECT_EQ(parse_solution(serialize_solution(x)), x);
  EXPECT_EQ(serialize_solution({1, -7}), "{\"x\":[1,-7]}\n");
}

}  // namespace
}  // namespace sipdepth
