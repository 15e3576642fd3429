#include <gtest/gtest.h>

#include "helpers.hpp"
#include "lie_oracle.hpp"
#include "qtchar/error.hpp"
#include "qtchar/restrict.hpp"

using namespace qtchar;
using qtchar::testing::M;
using qtchar::testing::T;
using qtchar::testing::type;

namespace {

HeightFunction ascending(const DynkinDiagram& d) { return heights(d, Orientation::ascending(d)); }

std::vector<Weight> weights_up_to_level(int rank, int level) {
  std::vector<Weight> out;
  Weight w(static_cast<size_t>(rank), 0);
  while (true) {
    int sum = 0;
    for (int x : w) sum += x;
    if (sum <= level) out.push_back(w);
    size_t i = 0;
    while (i < w.size() && w[i] == level) w[i++] = 0;
    if (i == w.size()) break;
    ++w[i];
  }
  return out;
}

}  // namespace

TEST(Weight, Parse) {
  const auto d = type("D4");
  EXPECT_EQ(parse_weight(d, "0,1,0,0"), (Weight{0, 1, 0, 0}));
  for (const char* bad : {"0,1,0", "0,1,0,0,0", "0,-1,0,0", "a,1,0,0", "", "0,,0,0"}) {
    EXPECT_THROW(parse_weight(d, bad), InvalidInput) << bad;
  }
  EXPECT_EQ(weight_to_string({2, 0, 1}), "2L1 + L3");
  EXPECT_EQ(weight_to_string({0, 0}), "0");
}

TEST(CanonicalP, Examples) {
  const auto a1 = type("A1");
  EXPECT_EQ(canonical_P(a1, {2}, ascending(a1)), M("Y[1,0]^2"));
  const auto d4 = type("D4");
  const auto h = heights(d4, Orientation::parse(d4, "1>2,3>2,4>2"));
  EXPECT_EQ(canonical_P(d4, {0, 1, 0, 0}, h), M("Y[2,0]"));
  EXPECT_EQ(canonical_P(d4, {0, 0, 0, 0}, h), YMonomial{});
  EXPECT_EQ(canonical_P(d4, {1, 0, 1, 0}, h), M("Y[1,1] Y[3,1]"));
}

TEST(OrdinaryCharacter, Examples) {
  FundamentalCache cache;
  const auto a1 = type("A1");
  const auto chi = chi_t_ordinary(a1, M("Y[1,0]^2"), cache);
  EXPECT_EQ(chi.terms.size(), 3u);
  EXPECT_EQ(chi.coefficient({2}), TPoly(1));
  EXPECT_EQ(chi.coefficient({0}), 1 + T(2));
  EXPECT_EQ(chi.coefficient({-2}), TPoly(1));

  const auto d4 = type("D4");
  EXPECT_EQ(chi_t_ordinary(d4, M("Y[2,0]"), cache).coefficient({0, 0, 0, 0}), 4 + T(2));
  const auto triv = chi_t_ordinary(d4, YMonomial{}, cache);
  EXPECT_EQ(triv.terms.size(), 1u);
  EXPECT_EQ(triv.coefficient({0, 0, 0, 0}), TPoly(1));
}

TEST(WeightMultiplicity, Examples) {
  FundamentalCache cache;
  const auto a1 = type("A1"), d4 = type("D4"), a2 = type("A2");
  EXPECT_EQ(weight_multiplicity(a1, {2}, {0}, ascending(a1), cache), 1);
  EXPECT_EQ(weight_multiplicity(d4, {0, 1, 0, 0}, {0, 0, 0, 0}, ascending(d4), cache), 4);
  EXPECT_EQ(weight_multiplicity(a2, {1, 1}, {0, 0}, ascending(a2), cache), 2);
}

TEST(Branching, Examples) {
  FundamentalCache cache;
  auto table = [&](const char* name, Weight w) {
    const auto d = type(name);
    std::map<Weight, TPoly::Coeff> out;
    for (const auto& r : branching(d, w, ascending(d), cache)) {
      if (r.multiplicity != 0) out[r.weight] = r.multiplicity;
    }
    return out;
  };
  EXPECT_EQ(table("A1", {2}), (std::map<Weight, TPoly::Coeff>{{{2}, 1}, {{0}, 1}}));
  EXPECT_EQ(table("A3", {0, 1, 0}), (std::map<Weight, TPoly::Coeff>{{{0, 1, 0}, 1}}));
  EXPECT_EQ(table("D4", {0, 1, 0, 0}), (std::map<Weight, TPoly::Coeff>{{{0, 1, 0, 0}, 1}, {{0, 0, 0, 0}, 1}}));
}

TEST(RestrictProperty, WeightMultiplicitiesMatchFreudenthal) {
  FundamentalCache cache;
  for (auto [name, level] : std::vector<std::pair<const char*, int>>{{"A1", 3}, {"A2", 2}, {"A3", 2}, {"D4", 2}}) {
    const auto d = type(name);
    const auto h = ascending(d);
    for (const auto& w : weights_up_to_level(d.rank(), level)) {
      oracle::Freudenthal f(d, w);
      const auto chi = chi_t_ordinary(d, canonical_P(d, w, h), cache);
      for (const auto& w2 : chi.dominant_weights()) {
        EXPECT_EQ(chi.coefficient(w2).constant_term(), f.at_weight(w2))
            << name << " " << weight_to_string(w) << " at " << weight_to_string(w2);
      }
      for (const auto& [w2, m] : f.dominant_multiplicities()) {
        EXPECT_EQ(chi.coefficient(w2).constant_term(), m) << name << " " << weight_to_string(w);
      }
    }
  }
}

TEST(RestrictProperty, DimensionsAddUp) {
  FundamentalCache cache;
  for (auto [name, level] : std::vector<std::pair<const char*, int>>{{"A2", 2}, {"A3", 2}, {"D4", 1}}) {
    const auto d = type(name);
    const auto h = ascending(d);
    for (const auto& w : weights_up_to_level(d.rank(), level)) {
      const auto p = canonical_P(d, w, h);
      const auto standard = standard_qchar(d, p, cache);
      const auto chi = chi_t_ordinary(d, p, cache);
      std::int64_t total = 0;
      for (const auto& [wt, e] : chi.terms) total += e.coefficient.eval_at_one();
      EXPECT_EQ(total, standard.dimension());
      std::int64_t from_branching = 0;
      for (const auto& r : branching(d, w, h, cache)) {
        EXPECT_GE(r.multiplicity, 0);
        from_branching += oracle::weyl_dimension(d, r.weight) * r.multiplicity;
      }
      EXPECT_EQ(from_branching, total) << name << " " << weight_to_string(w);
    }
  }
}

TEST(RestrictProperty, TEqualsOneIsWeylInvariant) {
  // the t = 1 collapse is an ordinary character: invariant under simple reflections
  FundamentalCache cache;
  for (const char* name : {"A2", "A3", "D4"}) {
    const auto d = type(name);
    const auto c = cartan_matrix(d);
    const auto h = ascending(d);
    for (const auto& w : weights_up_to_level(d.rank(), 1)) {
      const auto chi = chi_t_ordinary(d, canonical_P(d, w, h), cache);
      for (const auto& [wt, e] : chi.terms) {
        for (size_t i = 0; i < wt.size(); ++i) {
          Weight r = wt;
          for (size_t j = 0; j < wt.size(); ++j) r[j] -= wt[i] * c[i][j];
          EXPECT_EQ(chi.coefficient(r).eval_at_one(), e.coefficient.eval_at_one());
        }
      }
    }
  }
}

TEST(RestrictProperty, OrientationDoesNotChangeBranching) {
  FundamentalCache cache;
  const auto d = type("A3");
  const Weight w{1, 0, 1};
  auto z = [&](const char* o) {
    std::map<Weight, TPoly::Coeff> out;
    for (const auto& r : branching(d, w, heights(d, Orientation::parse(d, o)), cache)) out[r.weight] = r.multiplicity;
    return out;
  };
  EXPECT_EQ(z("1>2,2>3"), z("2>1,2>3"));
  EXPECT_EQ(z("1>2,3>2"), z("2>1,3>2"));
}
