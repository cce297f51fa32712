#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sumdiff/enumerate.hpp"
#include "sumdiff/errors.hpp"
#include "sumdiff/families.hpp"
#include "sumdiff/labelling.hpp"

using namespace sumdiff;

TEST_CASE("edge labellings") {
  const Graph k2 = oracle::complete(2);
  const auto sums = derive_edge_labelling(k2, VertexLabelling({0, 1}), LabelKind::Sum);
  REQUIRE(sums.labels.size() == 1);
  CHECK(sums.labels[0].second == 1);

  for (int k = 1; k <= 3; ++k) {
    for (int s = 1; s <= 3; ++s) {
      const auto inst = chained_odd_cycles(k, s);
      std::vector<Label> id(inst.graph.order());
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<Label>(i) + 1;
      const auto diffs = derive_edge_labelling(inst.graph, VertexLabelling(id), LabelKind::Difference);
      for (const auto& [e, value] : diffs.labels) CHECK((value == 1 || value == 2 * k));
    }
  }

  CHECK_THROWS_AS(VertexLabelling({1, 1}), ValidationError);
  CHECK_THROWS_AS(derive_edge_labelling(k2, VertexLabelling({0, 1, 2}), LabelKind::Sum),
                  ValidationError);
}

TEST_CASE("distinct value counts") {
  const auto kk52 = subdivided_complete_kk(5, 2);
  REQUIRE(kk52.certificates.size() == 1);
  CHECK(distinct_edge_values(kk52.graph, kk52.certificates[0].labelling, LabelKind::Sum) == 5);

  CHECK(distinct_edge_values(Graph(4), VertexLabelling({3, 1, 4, 5}), LabelKind::Sum) == 0);
  CHECK(distinct_edge_values(Graph(4), VertexLabelling({3, 1, 4, 5}), LabelKind::Difference) == 0);

  for (int n = 2; n <= 9; ++n) {
    std::vector<Label> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    CHECK(distinct_edge_values(oracle::path(n), VertexLabelling(id), LabelKind::Difference) == 1);
  }
}

TEST_CASE("certificate verification") {
  const auto g64 = gnk(6, 4);
  Certificate g64cert = g64.certificates.at(0);
  g64cert.claimed_value = 10;
  CHECK(verify_certificate(g64cert).pass);

  const auto chain = chained_odd_cycles(2, 3);
  Certificate chain_cert = chain.certificates.at(0);
  CHECK(chain_cert.kind == LabelKind::Difference);
  CHECK(chain_cert.claimed_value == 2);
  CHECK(verify_certificate(chain_cert).pass);

  Certificate off = subdivided_complete_kk(5, 2).certificates.at(0);
  off.claimed_value = 4;
  const auto verdict = verify_certificate(off);
  CHECK_FALSE(verdict.pass);
  CHECK(verdict.observed == 5);

  Certificate mismatch = chain_cert;
  mismatch.labelling = VertexLabelling({1, 2, 3});
  CHECK_THROWS_AS(verify_certificate(mismatch), ValidationError);
}

TEST_CASE("distinct counts are invariant under translation, negation and scaling") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<Label> shift(-1000, 1000);
  std::uniform_int_distribution<Label> factor(1, 9);
  for (const Graph& g : enumerate_connected_up_to(6)) {
    std::vector<Label> values(g.order());
    for (int t = 0; t < 5; ++t) {
      std::vector<Label> pool(40);
      for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<Label>(i) - 20;
      std::shuffle(pool.begin(), pool.end(), rng);
      values.assign(pool.begin(), pool.begin() + g.order());
      const VertexLabelling f(values);
      for (LabelKind kind : {LabelKind::Sum, LabelKind::Difference}) {
        const auto base = distinct_edge_values(g, f, kind);
        CHECK(distinct_edge_values(g, f.translated(shift(rng)), kind) == base);
        CHECK(distinct_edge_values(g, f.negated(), kind) == base);
        CHECK(distinct_edge_values(g, f.scaled(factor(rng)), kind) == base);
      }
      for (const auto& [e, value] : derive_edge_labelling(g, f, LabelKind::Difference).labels) {
        CHECK(value >= 1);
      }
    }
  }
}

TEST_CASE("labelling text format") {
  const VertexLabelling f({5, -2, 7});
  CHECK(parse_labelling(emit_labelling(f)) == f);
  CHECK(parse_labelling("# comment\n1 4\n0 3\n") == VertexLabelling({3, 4}));
  CHECK_THROWS_AS(parse_labelling("0 1\n2 3\n"), ValidationError);
  CHECK_THROWS_AS(parse_labelling("0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_labelling("0 1\n1 1\n"), ValidationError);
}

TEST_CASE("label arithmetic is overflow checked") {
  const Label big = std::numeric_limits<Label>::max();
  CHECK_THROWS_AS(checked_add(big, 1), ValidationError);
  CHECK_THROWS_AS(VertexLabelling({big, 0}).translated(1), ValidationError);
}
