#include <algorithm>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sumdiff/errors.hpp"
#include "sumdiff/families.hpp"
#include "sumdiff/graph_algorithms.hpp"
#include "sumdiff/graph_io.hpp"
#include "sumdiff/serialize.hpp"
#include "sumdiff/solvers.hpp"

using namespace sumdiff;

namespace {

int choose2(int k) { return k * (k - 1) / 2; }

}  // namespace

TEST_CASE("chained odd cycles") {
  const auto chain = chained_odd_cycles(2, 3);
  CHECK(chain.graph.order() == 13);
  CHECK(chain.graph.size() == 15);
  CHECK(count_cycles_of_length(chain.graph, 5) == 3);
  CHECK(verify_certificate(chain.certificates.at(0)).observed == 2);

  const auto triangle = chained_odd_cycles(1, 1);
  CHECK(triangle.graph.order() == 3);
  CHECK(triangle.graph.size() == 3);
  CHECK(*girth(chained_odd_cycles(3, 2).graph) == 7);
  CHECK_THROWS_AS(chained_odd_cycles(0, 2), ValidationError);
}

TEST_CASE("chained odd cycles have difference index 2") {
  for (int k = 1; k <= 6; ++k) {
    for (int s = 1; 2 * s * k + 1 <= 13; ++s) {
      CAPTURE(k);
      CAPTURE(s);
      CHECK(difference_index(chained_odd_cycles(k, s).graph).value == 2);
    }
  }
}

TEST_CASE("prism") {
  const auto p3 = prism(3);
  CHECK(p3.graph.order() == 6);
  CHECK(p3.graph.size() == 9);
  CHECK(p3.certificates.empty());
  CHECK(count_cycles_of_length(p3.graph, 3) == 2);
  CHECK(is_bipartite(prism(4).graph).bipartite);
  CHECK(*girth(prism(5).graph) == 4);
  for (int n = 3; n <= 8; ++n) {
    const auto degrees = degree_sequence(prism(n).graph).sorted();
    for (int d : degrees) CHECK(d == 3);
  }
  CHECK_THROWS_AS(prism(2), ValidationError);
}

TEST_CASE("subdivided complete graph") {
  const auto k4 = subdivided_complete(4);
  CHECK(k4.graph.order() == 5);
  REQUIRE(k4.certificates.size() == 2);
  CHECK(k4.certificates[0].kind == LabelKind::Difference);
  CHECK(k4.certificates[0].claimed_value == 3);
  CHECK(k4.certificates[1].kind == LabelKind::Sum);
  CHECK(k4.certificates[1].claimed_value == 4);

  const auto k5 = subdivided_complete(5);
  const auto sums = derive_edge_labelling(k5.graph, k5.certificates[1].labelling, LabelKind::Sum);
  std::vector<Label> values;
  for (const auto& [e, v] : sums.labels) values.push_back(v);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  CHECK(values == std::vector<Label>{3, 4, 5, 6, 7, 8});

  CHECK(subdivided_complete(6).certificates[0].claimed_value == 5);
  CHECK_THROWS_AS(subdivided_complete(3), ValidationError);
}

TEST_CASE("subdivided complete graph indices are exact for n = 4, 5") {
  for (int n = 4; n <= 5; ++n) {
    const Graph g = subdivided_complete(n).graph;
    CHECK(difference_index(g).value == n - 1);
    CHECK(sum_index(g).value == 2 * n - 4);
  }
}

TEST_CASE("doubly subdivided complete graph") {
  const auto kk52 = subdivided_complete_kk(5, 2);
  CHECK(kk52.graph.order() == 7);
  CHECK(kk52.graph.size() == 12);
  CHECK(kk52.certificates.at(0).claimed_value == 5);
  CHECK(kk52.certificates.at(0).labelling.values() == std::vector<Label>{1, 2, 3, 4, 5, 6, 0});
  CHECK(sum_index(kk52.graph).value == 5);

  CHECK(subdivided_complete_kk(9, 3).certificates.at(0).claimed_value == 11);

  try {
    subdivided_complete_kk(5, 3);
    FAIL("expected a parameter error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("n >= C(k,2) + 2k = 9") != std::string::npos);
  }

  for (int k = 2; k <= 4; ++k) {
    for (int n = choose2(k) + 2 * k; n <= 12; ++n) {
      const auto inst = subdivided_complete_kk(n, k);
      CHECK(inst.graph.order() == n + k * (k - 1));
      CHECK(inst.graph.size() == static_cast<std::size_t>(choose2(n) + k * (k - 1)));
      CHECK(inst.certificates.at(0).claimed_value == 2 * n - 2 * k - 1);
    }
  }
}

TEST_CASE("gnk") {
  const auto g64 = gnk(6, 4);
  CHECK(g64.graph.order() == 13);
  CHECK(g64.certificates.at(0).claimed_value == 10);
  CHECK(g64.certificates.at(0).labelling.values() ==
        std::vector<Label>{1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 7, 12, 13});
  CHECK(gnk(9, 5).certificates.at(0).claimed_value <= 14);
  CHECK_THROWS_AS(gnk(5, 4), ValidationError);
  CHECK_THROWS_AS(gnk(6, 2), ValidationError);
}

TEST_CASE("gnk degree profile matches the closed form") {
  for (int k = 3; k <= 6; ++k) {
    for (int n = std::max(1, 3 * k - 6); n <= 12; ++n) {
      const auto inst = gnk(n, k);
      std::vector<int> expected;
      for (int u = 0; u < n; ++u) expected.push_back(u < 3 * (k - 2) ? k + 2 : k + 3);
      for (int j = 0; j < k; ++j) expected.push_back(n);
      for (int i = 0; i < 3; ++i) expected.push_back(n - k + 2);
      std::sort(expected.begin(), expected.end());
      CHECK(degree_sequence(inst.graph).sorted() == expected);
      CHECK(inst.certificates.at(0).claimed_value <= n + k);
    }
  }
}

TEST_CASE("shipped certificate files match the generators") {
  const std::string dir = std::string(SUMDIFF_SOURCE_DIR) + "/data/certificates/";
  const std::vector<std::pair<std::string, FamilyInstance>> shipped{
      {"chained_cycles_k2_s3", chained_odd_cycles(2, 3)},
      {"subdivided_complete_kk_n5_k2", subdivided_complete_kk(5, 2)},
      {"gnk_n6_k4", gnk(6, 4)},
      {"subdivided_complete_n4", subdivided_complete(4)},
      {"subdivided_complete_n5", subdivided_complete(5)},
      {"subdivided_complete_n6", subdivided_complete(6)},
      {"prism_n3", prism(3)},
  };
  for (const auto& [stem, inst] : shipped) {
    CAPTURE(stem);
    const Json stored = Json::parse(read_text_file(dir + stem + ".json"));
    CHECK(stored == family_to_json(inst));
    const auto graphs = read_graphs(dir + stem + ".g6", GraphFormat::Graph6);
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0] == inst.graph);
    for (const auto& c : certificates_from_json(stored)) CHECK(verify_certificate(c).pass);
  }
}
