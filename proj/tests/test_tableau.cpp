#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "polybasis/serialize.hpp"

using namespace polybasis;
using namespace testing_helpers;

namespace {

SkylineFilling F(std::size_t n, std::initializer_list<std::pair<int, std::vector<int>>> rows) {
  return SkylineFilling::from_rows(n, rows);
}

std::vector<SkylineFilling> assf_0103_listed() {
  std::vector<SkylineFilling> out;
  for (std::vector<int> top : {std::vector<int>{4, 4, 4}, {4, 4, 3}, {4, 4, 2}, {4, 4, 1}, {4, 3, 3}, {4, 3, 2}, {4, 3, 1}})
    out.push_back(F(4, {{4, top}, {2, {2}}}));
  return out;
}

// The nineteen quasi-key tableaux of shape (0,3,0,2), in the order drawn.
std::vector<SkylineFilling> qkt_0302_listed() {
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> data = {
      {{4, 4}, {2, 2, 2}}, {{4, 4}, {2, 2, 1}}, {{4, 4}, {2, 1, 1}}, {{4, 3}, {2, 2, 2}}, {{4, 3}, {2, 2, 1}},
      {{4, 3}, {2, 1, 1}}, {{4, 2}, {2, 1, 1}}, {{4, 1}, {2, 2, 2}}, {{4, 4}, {1, 1, 1}}, {{4, 3}, {1, 1, 1}},
      {{4, 2}, {1, 1, 1}}, {{3, 3}, {2, 2, 2}}, {{3, 3}, {2, 2, 1}}, {{3, 3}, {2, 1, 1}}, {{3, 2}, {2, 1, 1}},
      {{3, 1}, {2, 2, 2}}, {{3, 3}, {1, 1, 1}}, {{3, 2}, {1, 1, 1}}, {{2, 2}, {1, 1, 1}}};
  std::vector<SkylineFilling> out;
  for (const auto& [top, bottom] : data) out.push_back(F(4, {{4, top}, {2, bottom}}));
  return out;
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Polynomial gf(const std::vector<SkylineFilling>& fs, std::size_t n) { return generating_function(fs, n); }

}  // namespace

TEST(Skyline, FillingValidation) {
  EXPECT_THROW(SkylineFilling(wc({1}), {{1, 2}}), std::invalid_argument);
  EXPECT_THROW(SkylineFilling(wc({1}), {{0}}), std::invalid_argument);
  EXPECT_THROW(F(2, {{3, {1}}}), std::invalid_argument);
  const auto f = F(4, {{4, {4, 4, 4}}, {2, {2}}});
  EXPECT_EQ(f.shape(), wc({0, 1, 0, 3}));
  EXPECT_EQ(f.at(4, 3), 4);
  EXPECT_EQ(f.width(), 3);
}

TEST(Skyline, Triples) {
  EXPECT_TRUE(triples_of(wc({1, 1})).empty());
  const auto t = triples_of(wc({2, 2}));
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0], (Triple{TripleKind::A, {1, 1}, {1, 2}, {2, 2}}));
  EXPECT_TRUE(triples_of(wc({0})).empty());
  const auto b = triples_of(wc({1, 3}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], (Triple{TripleKind::B, {2, 1}, {2, 2}, {1, 1}}));
  // Non-adjacent rows take part as well.
  EXPECT_EQ(triples_of(wc({2, 0, 2})).size(), 1u);
}

TEST(Skyline, InversionPredicate) {
  EXPECT_TRUE(is_inversion(4, 4, 2));
  EXPECT_FALSE(is_inversion(3, 2, 3));
  EXPECT_TRUE(is_inversion(2, 1, 3));
  EXPECT_FALSE(is_inversion(3, 1, 2));
}

TEST(Skyline, Weight) {
  EXPECT_EQ(weight(F(4, {{4, {4, 4, 4}}, {2, {2}}}), 4), wc({0, 1, 0, 3}));
  EXPECT_EQ(weight(F(4, {{4, {4, 3, 1}}, {2, {2}}}), 4), wc({1, 1, 1, 1}));
  EXPECT_EQ(weight(SkylineFilling(wc({0, 0}), {{}, {}}), 2), wc({0, 0}));
  EXPECT_THROW(weight(F(2, {{2, {2}}}), 1), std::invalid_argument);
}

TEST(Models, ParseAndNames) {
  for (Model m : kAllModels) EXPECT_EQ(parse_model(to_string(m)), m);
  EXPECT_THROW(parse_model("SSF"), std::invalid_argument);
}

TEST(Models, AtomFillingsOf0103) {
  const auto listed = assf_0103_listed();
  EXPECT_TRUE(is_valid(Model::ASSF, wc({0, 1, 0, 3}), listed.front()));
  const auto all = enumerate(Model::ASSF, wc({0, 1, 0, 3}));
  EXPECT_EQ(all, sorted(listed));
  std::set<WeakComposition> weights;
  for (const auto& f : all) weights.insert(weight(f, 4));
  EXPECT_EQ(weights, (std::set<WeakComposition>{wc({0, 1, 0, 3}), wc({0, 1, 1, 2}), wc({0, 2, 0, 2}), wc({1, 1, 0, 2}),
                                                wc({0, 1, 2, 1}), wc({0, 2, 1, 1}), wc({1, 1, 1, 1})}));
}

TEST(Models, QuasiKeyTableauxOf0302) {
  const auto a = wc({0, 3, 0, 2});
  const auto listed = qkt_0302_listed();
  EXPECT_EQ(enumerate(Model::qKT, a), sorted(listed));
  EXPECT_EQ(enumerate(Model::qKT1, a), sorted(std::vector<SkylineFilling>(listed.begin(), listed.begin() + 8)));
  EXPECT_TRUE(is_valid(Model::qKT1, a, listed.front()));

  const auto qy = enumerate(Model::QqKT, a);
  EXPECT_EQ(qy, sorted(std::vector<SkylineFilling>{listed[0], listed[6], listed[7]}));
  std::set<WeakComposition> weights;
  for (const auto& f : qy) weights.insert(weight(f, 4));
  EXPECT_EQ(weights, (std::set<WeakComposition>{wc({0, 3, 0, 2}), wc({2, 2, 0, 1}), wc({1, 3, 0, 1})}));
  for (std::size_t k = 0; k < listed.size(); ++k)
    EXPECT_EQ(is_quasi_yamanouchi(listed[k]), k == 0 || k == 6 || k == 7) << k;
}

TEST(Models, RejectsEntriesAboveRowIndex) {
  EXPECT_FALSE(is_valid(Model::qKT, wc({0, 2}), F(2, {{2, {3, 1}}})));
  EXPECT_FALSE(is_valid(Model::ASSF, wc({0, 1, 0, 3}), F(4, {{4, {4, 4, 4}}, {2, {3}}})));
  EXPECT_FALSE(is_valid(Model::ASSF, wc({0, 1}), F(2, {{1, {1}}})));
}

TEST(Models, AtomFillingsMatchBruteForceDefinition) {
  for (const auto& a : index_range(4, 4)) {
    std::vector<SkylineFilling> expected;
    for (const auto& rows : oracle::assf(oracle::vec(a))) expected.emplace_back(a, rows);
    EXPECT_EQ(enumerate(Model::ASSF, a), sorted(expected)) << to_string(a);
  }
}

TEST(Models, BasementFormulationAgrees) {
  for (const auto& a : index_range(5, 4)) EXPECT_EQ(enumerate_assf_with_basement(a), enumerate(Model::ASSF, a));
}

TEST(Models, AtomEqualsFixedQuasiKey) {
  for (const auto& a : index_range(6, 4)) EXPECT_EQ(gf(enumerate(Model::ASSF, a), a.size()), gf(enumerate(Model::qKT1, a), a.size()));
}

TEST(Models, ParticleFillingsAreTheIntersection) {
  for (const auto& a : index_range(6, 4)) {
    const auto assf = enumerate(Model::ASSF, a);
    const auto fssf = enumerate(Model::FSSF, a);
    std::vector<SkylineFilling> both;
    std::set_intersection(assf.begin(), assf.end(), fssf.begin(), fssf.end(), std::back_inserter(both));
    EXPECT_EQ(enumerate(Model::LSSF, a), both) << to_string(a);
  }
}

TEST(Models, TripleConditionsRedundantForSlideModels) {
  for (const auto& a : index_range(5, 4)) {
    for (Model m : {Model::FSSF, Model::MSSF}) {
      const ModelChecker check(m, a);
      for (const auto& f : enumerate(m, a)) EXPECT_TRUE(check.all_triples_inversion(f));
      std::size_t without = 0;
      for_each_candidate(a, false, [&](const SkylineFilling& f) {
        const bool rows_ok = m == Model::MSSF ? detail::rows_constant(f) && detail::first_column_increases_upward(f)
                                              : detail::higher_rows_strictly_larger(f);
        without += rows_ok;
      });
      EXPECT_EQ(without, enumerate(m, a).size()) << to_string(a);
    }
  }
}

TEST(Models, FillingJsonRoundTrip) {
  const auto f = F(4, {{4, {4, 4, 3}}, {2, {2}}});
  const auto j = json::to_json(f);
  EXPECT_EQ(j.at("shape"), json::Json({0, 1, 0, 3}));
  EXPECT_EQ(j.at("rows").at("4"), json::Json({4, 4, 3}));
  EXPECT_EQ(json::filling_from_json(j), f);
}

TEST(ReverseTableaux, Validation) {
  EXPECT_THROW(ReverseSSYT({{1, 2}}), std::invalid_argument);
  EXPECT_THROW(ReverseSSYT({{2}, {2}}), std::invalid_argument);
  EXPECT_THROW(ReverseSSYT({{2}, {1, 1}}), std::invalid_argument);
  const ReverseSSYT t({{3, 3, 1}, {2}});
  EXPECT_EQ(t.shape(), Partition({3, 1}));
  EXPECT_EQ(t.column(1), (std::vector<int>{3, 2}));
  EXPECT_EQ(weight(t, 3), wc({1, 1, 2}));
}

TEST(ReverseTableaux, Enumeration) {
  EXPECT_EQ(enumerate_revssyt(Partition({1}), 2), (std::vector<ReverseSSYT>{ReverseSSYT(std::vector<std::vector<int>>{{1}}), ReverseSSYT(std::vector<std::vector<int>>{{2}})}));
  EXPECT_EQ(enumerate_revssyt(Partition({1, 1}), 2), (std::vector<ReverseSSYT>{ReverseSSYT({{2}, {1}})}));
  EXPECT_EQ(enumerate_revssyt(Partition({2, 1}), 2),
            sorted(std::vector<ReverseSSYT>{ReverseSSYT({{2, 2}, {1}}), ReverseSSYT({{2, 1}, {1}})}));
  EXPECT_TRUE(enumerate_revssyt(Partition({1, 1, 1}), 2).empty());
}

TEST(ReverseTableaux, SchurMatchesOrdinaryTableaux) {
  for (int k = 0; k <= 5; ++k)
    for (const auto& lambda : partitions_of(k))
      for (int n = 1; n <= 4; ++n) {
        Polynomial rev(static_cast<std::size_t>(n));
        for (const auto& t : enumerate_revssyt(lambda, n)) rev.add_term(weight(t, static_cast<std::size_t>(n)), 1);
        EXPECT_EQ(rev, oracle::schur_ssyt(lambda.parts(), n)) << to_string(lambda) << " n=" << n;
      }
}

TEST(Destandardization, AtomExample) {
  const auto start = F(5, {{5, {5, 1}}, {3, {3, 2}}});
  const auto middle = F(5, {{5, {5, 1}}, {3, {3, 3}}});
  const auto right = F(5, {{5, {5, 2}}, {3, {3, 3}}});
  for (const auto& f : {start, middle, right}) EXPECT_TRUE(is_valid(Model::ASSF, wc({0, 0, 2, 0, 2}), f));
  EXPECT_EQ(dst(start), middle);
  EXPECT_FALSE(is_particle_highest(start));
  EXPECT_TRUE(is_particle_highest(middle));
  EXPECT_EQ(dst(right), right);
  EXPECT_EQ(dst_q(start), right);
  EXPECT_EQ(dst_q(right), right);
  EXPECT_EQ(dst_q(F(2, {{2, {2, 2}}})), F(2, {{2, {2, 2}}}));
}

TEST(Destandardization, HighestAtomFillingsOf0103) {
  const auto listed = assf_0103_listed();
  for (std::size_t k = 0; k < listed.size(); ++k) EXPECT_EQ(is_particle_highest(listed[k]), k == 0 || k == 2) << k;
}

TEST(Destandardization, FirstColumnLabelsAreFixed) {
  const auto f = F(3, {{3, {3}}, {2, {2}}, {1, {1}}});
  EXPECT_EQ(dst(f), f);
  EXPECT_EQ(dst_q(f), f);
}

TEST(Destandardization, Properties) {
  for (const auto& a : index_range(5, 4)) {
    for (Model m : {Model::ASSF, Model::qKT1}) {
      for (const auto& f : enumerate(m, a)) {
        const auto d = dst(f);
        const auto q = dst_q(f);
        EXPECT_TRUE(is_valid(m, a, d));
        EXPECT_TRUE(is_valid(m, a, q));
        EXPECT_EQ(dst(d), d);
        EXPECT_EQ(dst_q(q), q);
        EXPECT_EQ(is_particle_highest(f), dst(f) == f);
        EXPECT_EQ(is_quasi_yamanouchi(f), dst_q(f) == f);
        if (is_quasi_yamanouchi(f)) {
          EXPECT_TRUE(is_particle_highest(f));
        }
        const auto fixed = slides(weight(d, a.size()), true);
        EXPECT_TRUE(fixed.count(weight(f, a.size()))) << to_string(a);
      }
    }
  }
}

TEST(Destandardization, QuasiYamanouchiModelMatchesPredicate) {
  for (const auto& a : index_range(5, 4)) {
    std::vector<SkylineFilling> expected;
    for (const auto& f : enumerate(Model::qKT, a))
      if (is_quasi_yamanouchi(f)) expected.push_back(f);
    EXPECT_EQ(enumerate(Model::QqKT, a), expected);
  }
}
