#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "vex/errors.hpp"
#include "vex/io.hpp"

using namespace vex;

namespace {

GammaElement random_gamma(std::mt19937_64& rng) {
  const auto parts = strict_partitions_bounded(4);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  GammaElement::Combo combo;
  for (int i = 0; i < 4; ++i) {
    Polynomial c = testkit::random_poly(rng);
    if (!c.is_zero()) combo[parts[pick(rng)]] = c;
  }
  return GammaElement::from_combo(std::move(combo));
}

}  // namespace

TEST(Json, RoundTripRandomized) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const GammaElement e = random_gamma(rng);
    const nlohmann::json j = terms_to_json(e);
    EXPECT_EQ(terms_from_json(j), e);
    EXPECT_EQ(terms_from_json(nlohmann::json::parse(j.dump())), e);
    EXPECT_EQ(terms_to_json(e).dump(), j.dump());
  }
}

TEST(Json, BigCoefficientsSurvive) {
  const Dyadic big(BigInt("123456789012345678901234567891"), 7);
  const GammaElement e = GammaElement::q_basis(StrictPartition({3, 1})) * Polynomial(Monomial::of(xv(12), 3), big);
  const nlohmann::json j = terms_to_json(e);
  EXPECT_EQ(j[0]["coeff"]["num"], "123456789012345678901234567891");
  EXPECT_EQ(j[0]["coeff"]["log2den"], 7);
  EXPECT_EQ(j[0]["mono"]["x12"], 3);
  EXPECT_EQ(terms_from_json(j), e);
}

TEST(Json, Schema) {
  const GammaElement e = GammaElement::q_basis(StrictPartition({2})) + GammaElement(Polynomial(yv(1)) * Dyadic::pow2(-1));
  const nlohmann::json j = terms_to_json(e);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["q"], nlohmann::json::array({2}));
  EXPECT_TRUE(j[0]["mono"].empty());
  EXPECT_EQ(j[1]["q"], nlohmann::json::array());
  EXPECT_EQ(j[1]["coeff"]["log2den"], 1);
  EXPECT_EQ(j[1]["mono"]["y1"], 1);
}

TEST(Json, Errors) {
  EXPECT_THROW(terms_from_json(nlohmann::json::object()), ParseError);
  EXPECT_THROW(terms_from_json(nlohmann::json::parse(R"([{"q":[1,2],"coeff":{"num":"1","log2den":0},"mono":{}}])")),
               ParseError);
  EXPECT_THROW(terms_from_json(nlohmann::json::parse(R"([{"q":[1],"coeff":{"num":"x","log2den":0},"mono":{}}])")),
               ParseError);
  EXPECT_THROW(terms_from_json(nlohmann::json::parse(R"([{"q":[1],"coeff":{"num":"1","log2den":0},"mono":{"w1":1}}])")),
               ParseError);
  EXPECT_THROW(parse_format("yaml"), ParseError);
}

TEST(Render, Examples) {
  const GammaElement q1 = GammaElement::q_basis(StrictPartition({1}));
  EXPECT_EQ(render_gamma(q1, Basis::Q, Format::Plain), "Q_(1)");
  EXPECT_EQ(render_gamma(q1, Basis::P, Format::Plain), "2*P_(1)");
  EXPECT_EQ(render_gamma(q1, Basis::Q, Format::Latex), "Q_{1}");
  const Polynomial x1(xv(1));
  const GammaElement e = GammaElement::q_basis(StrictPartition({2})) + q1 * (x1 - Polynomial(yv(1))) - GammaElement(x1);
  EXPECT_EQ(render_gamma(e, Basis::Q, Format::Plain), "Q_(2) + (x1 - y1)*Q_(1) - x1");
  EXPECT_EQ(render_polynomial(x1 * Dyadic::pow2(-1) - Polynomial(yv(2)).pow(2), Format::Latex), "-y_{2}^{2} + \\frac{1}{2} x_{1}");
  EXPECT_EQ(render_gamma(GammaElement(), Basis::Q, Format::Plain), "0");
}
