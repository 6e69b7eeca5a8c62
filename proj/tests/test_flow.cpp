#include "mbqc/flow.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mbqc/stabilizer.hpp"

using namespace mbqc;
using namespace mbqc::testing;

namespace {

// row-space-preserving random row mixing of a generator matrix
GeneratorMatrix mix_rows(GeneratorMatrix g, std::mt19937& rng) {
  const int n = g.n();
  if (n < 2) return g;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int t = 0; t < 4 * n; ++t) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    g.phi.row(i) ^= g.phi.row(j);
    g.s.row(i) ^= g.s.row(j);
  }
  return g;
}

GeneratorMatrix path_cluster(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a < n; ++a) edges.emplace_back(a, a + 1);
  return graph_state(edges, n, xy_planes(n));
}

// canonical row-space form; comparable because both sides carry n rows
BitMatrix row_space_form(const GeneratorMatrix& g) {
  return rref(g.phi.hstack(g.s)).rref;
}

}  // namespace

TEST_CASE("derive_processing: path cluster golden") {
  GeneratorMatrix g = cluster3();
  ProcessingRelations p = derive_processing(g, {1}, {3});

  CHECK(p.igauge == QubitSet{1});
  CHECK(p.ocomp == QubitSet{3});
  CHECK(p.T == bm({"000", "100", "010"}));
  CHECK(p.H == bm({"1", "0", "1"}));
  CHECK(p.Z == bm({"101"}));
  CHECK(p.R == bm({"0"}));

  // compact forms drop the forced zero/identity blocks
  CHECK(p.compact_T() == bm({"10", "01"}));
  CHECK(p.compact_H() == bm({"0", "1"}));
  CHECK(p.compact_Z() == bm({"10"}));

  // the normal-form basis elements are honest stabilizer elements
  PauliWord k1 = p.correction_op(1);
  CHECK(k1.w == bv("010"));
  CHECK(k1.v == bv("101"));
  CHECK(stabilizer_coords(g, k1) == bv("010"));  // equals the second generator

  PauliWord k2 = p.correction_op(2);
  CHECK(k2.w == bv("001"));
  CHECK(k2.v == bv("010"));
  CHECK(stabilizer_coords(g, k2) == bv("001"));

  PauliWord g1 = p.gauge_op(1);
  CHECK(g1.w == bv("101"));
  CHECK(g1.v == bv("000"));
  CHECK(stabilizer_coords(g, g1) == bv("101"));

  CHECK_THROWS_AS(p.correction_op(3), std::invalid_argument);
  CHECK_THROWS_AS(p.gauge_op(2), std::invalid_argument);
}

TEST_CASE("derive_processing: ghz golden") {
  GeneratorMatrix g = ghz3();
  ProcessingRelations p = derive_processing(g, {1}, {3});

  CHECK(p.T.is_zero());
  CHECK(p.H == bm({"1", "1", "1"}));
  CHECK(p.Z == bm({"111"}));
  CHECK(p.R == bm({"0"}));
}

TEST_CASE("derive_processing: independent of the generating set presentation") {
  std::mt19937 rng(411);
  std::uniform_int_distribution<int> nd(2, 6);
  for (int trial = 0; trial < 100; ++trial) {
    GeneratorMatrix g = random_generator(rng, nd(rng));
    auto pairs = enumerate_extremal_pairs(g);
    REQUIRE(!pairs.empty());
    auto& [ig, oc] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
    ProcessingRelations a = derive_processing(g, ig, oc);
    ProcessingRelations b = derive_processing(mix_rows(g, rng), ig, oc);
    CHECK(a.T == b.T);
    CHECK(a.H == b.H);
    CHECK(a.Z == b.Z);
    CHECK(a.R == b.R);
  }
}

TEST_CASE("derive_processing: invalid pairs") {
  SUBCASE("dependent gauge columns") {
    CHECK_THROWS_WITH_AS(derive_processing(ghz3(), {1, 2}, {2, 3}),
                         doctest::Contains("dependent"), Error);
    try {
      derive_processing(ghz3(), {1, 2}, {2, 3});
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidGaugeSet);
    }
  }
  SUBCASE("non-square split") {
    try {
      derive_processing(cluster3(), {1, 2}, {3});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidOutputSet);
    }
  }
  SUBCASE("square but singular split") {
    try {
      derive_processing(cluster3(), {2}, {3});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidOutputSet);
    }
  }
  SUBCASE("labels out of range") {
    try {
      derive_processing(cluster3(), {4}, {3});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IndexOutOfRange);
      CHECK(e.detail() == 4);
    }
  }
}

TEST_CASE("cones of the influence matrix") {
  ProcessingRelations p = derive_processing(cluster3(), {1}, {3});
  Cones c = cones(p.T);
  CHECK(c.fc[0] == QubitSet{2});
  CHECK(c.fc[1] == QubitSet{3});
  CHECK(c.fc[2] == QubitSet{});
  CHECK(c.bc[0] == QubitSet{});
  CHECK(c.bc[1] == QubitSet{1});
  CHECK(c.bc[2] == QubitSet{2});
  CHECK(c.inputs == QubitSet{1});
  CHECK(c.outputs == QubitSet{3});

  Cones cg = cones(derive_processing(ghz3(), {1}, {3}).T);
  CHECK(cg.inputs == QubitSet{1, 2, 3});
  CHECK(cg.outputs == QubitSet{1, 2, 3});
}

TEST_CASE("temporal_relation: strict order and ctc detection") {
  SUBCASE("path cluster is strict") {
    TemporalRelation r = temporal_relation(derive_processing(cluster3(), {1}, {3}).T);
    CHECK(r.is_strict_partial_order);
    CHECK(r.closure == bm({"011", "001", "000"}));
    CHECK(r.self_loops.empty());
    CHECK(r.sccs.empty());
  }
  SUBCASE("bare edge with empty pair is a 2-cycle") {
    TemporalRelation r = temporal_relation(derive_processing(edge2(), {}, {}).T);
    CHECK_FALSE(r.is_strict_partial_order);
    CHECK(r.self_loops.empty());
    REQUIRE(r.sccs.size() == 1);
    CHECK(r.sccs[0] == QubitSet{1, 2});
  }
  SUBCASE("single Y qubit is a self-loop") {
    TemporalRelation r = temporal_relation(derive_processing(yloop1(), {}, {}).T);
    CHECK_FALSE(r.is_strict_partial_order);
    CHECK(r.self_loops == QubitSet{1});
    REQUIRE(r.sccs.size() == 1);
    CHECK(r.sccs[0] == QubitSet{1});
  }
  SUBCASE("union pattern has both kinds") {
    TemporalRelation r = temporal_relation(derive_processing(union3(), {}, {}).T);
    CHECK_FALSE(r.is_strict_partial_order);
    CHECK(r.self_loops == QubitSet{1});
    REQUIRE(r.sccs.size() == 2);
    CHECK(r.sccs[0] == QubitSet{1});
    CHECK(r.sccs[1] == QubitSet{2, 3});
  }
}

TEST_CASE("extremalize: goldens and reductions") {
  SUBCASE("cluster, minimal declared sets are already extremal") {
    ExtremalizeResult r = extremalize(cluster3(), {1}, {3});
    CHECK(r.igauge == QubitSet{1});
    CHECK(r.ocomp == QubitSet{3});
    CHECK(r.relations.T == bm({"000", "100", "010"}));
  }
  SUBCASE("cluster, everything declared stays full") {
    ExtremalizeResult r = extremalize(cluster3(), {1, 2, 3}, {1, 2, 3});
    CHECK(r.igauge == QubitSet{1, 2, 3});
    CHECK(r.ocomp == QubitSet{1, 2, 3});
    CHECK(r.relations.T.is_zero());
  }
  SUBCASE("ghz, everything declared reduces to a proper subset") {
    ExtremalizeResult r = extremalize(ghz3(), {1, 2, 3}, {1, 2, 3});
    CHECK(r.igauge == QubitSet{1});
    CHECK(r.ocomp == QubitSet{3});
    CHECK(r.relations.T.is_zero());
  }
  SUBCASE("gaugeable qubit outside the declared input set") {
    try {
      extremalize(cluster3(), {2}, {1, 2, 3});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::GaugeableOutsideInput);
      CHECK(e.detail() == 1);
    }
    try {
      extremalize(cluster3(), {1}, {1, 3});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::GaugeableOutsideInput);
      CHECK(e.detail() == 2);
    }
  }
  SUBCASE("no correction set exists") {
    GeneratorMatrix gx = from_letters({"X"}, xy_planes(1));
    try {
      extremalize(gx, {}, {});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NoValidSplit);
    }
  }
}

TEST_CASE("enumerate_extremal_pairs: cluster golden") {
  auto pairs = enumerate_extremal_pairs(cluster3());
  CHECK(pairs.size() == 9);
  CHECK(std::is_sorted(pairs.begin(), pairs.end()));
  CHECK(pairs.front() == std::pair<QubitSet, QubitSet>({1}, {1}));
  auto has = [&](QubitSet ig, QubitSet oc) {
    return std::find(pairs.begin(), pairs.end(), std::make_pair(ig, oc)) != pairs.end();
  };
  CHECK(has({1}, {3}));
  CHECK(has({1, 2, 3}, {1, 2, 3}));
  CHECK(has({1, 3}, {2, 3}));
  CHECK_FALSE(has({2}, {3}));

  auto rels = enumerate_relations(cluster3());
  REQUIRE(rels.size() == pairs.size());
  for (std::size_t i = 0; i < rels.size(); ++i) {
    CHECK(rels[i].igauge == pairs[i].first);
    CHECK(rels[i].ocomp == pairs[i].second);
  }
}

TEST_CASE("enumerate_extremal_pairs: counting oracle and strategy agreement") {
  std::mt19937 rng(1723);
  std::uniform_int_distribution<int> nd(2, 6);
  for (int trial = 0; trial < 40; ++trial) {
    GeneratorMatrix g = random_generator(rng, nd(rng));
    auto ex = enumerate_extremal_pairs(g, EnumerationStrategy::Exhaustive);
    CHECK(ex.size() == brute_force_basis_count(g));
    CHECK(std::is_sorted(ex.begin(), ex.end()));
    CHECK(ex == enumerate_extremal_pairs(g, EnumerationStrategy::PivotExchange));
    for (const auto& [ig, oc] : ex) CHECK_NOTHROW(derive_processing(g, ig, oc));
  }
}

TEST_CASE("enumerate_extremal_pairs: strategies agree on a longer path") {
  GeneratorMatrix g = path_cluster(9);  // auto switches to the exchange walk here
  auto walk = enumerate_extremal_pairs(g);
  CHECK(walk == enumerate_extremal_pairs(g, EnumerationStrategy::Exhaustive));
}

TEST_CASE("reconstruct: round trip through the relations") {
  SUBCASE("cluster") {
    GeneratorMatrix g = cluster3();
    ProcessingRelations p = derive_processing(g, {1}, {3});
    GeneratorMatrix back = reconstruct(p.T, p.H, p.Z, p.R);
    CHECK(row_space_form(back) == row_space_form(g));
  }
  SUBCASE("every enumerated relation of fuzzed instances") {
    std::mt19937 rng(95);
    std::uniform_int_distribution<int> nd(2, 5);
    for (int trial = 0; trial < 25; ++trial) {
      GeneratorMatrix g = random_generator(rng, nd(rng));
      for (const ProcessingRelations& p : enumerate_relations(g)) {
        GeneratorMatrix back = reconstruct(p.T, p.H, p.Z, p.R);
        CHECK(row_space_form(back) == row_space_form(g));
        check_valid(back);
      }
    }
  }
}

TEST_CASE("reconstruct: rejects inconsistent relations") {
  SUBCASE("shape mismatch") {
    CHECK_THROWS_AS(reconstruct(BitMatrix(2, 2), BitMatrix(3, 1), bm({"00"}), bm({"0"})),
                    std::invalid_argument);
  }
  SUBCASE("rank mismatch") {
    try {
      reconstruct(BitMatrix(2, 2), bm({"10", "01"}), bm({"00"}), bm({"00"}));
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::RankMismatch);
    }
  }
  SUBCASE("gauge block not invertible on input rows") {
    try {
      reconstruct(bm({"00", "10"}), bm({"0", "1"}), bm({"01"}), bm({"0"}));
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotCommutingReconstruction);
    }
  }
  SUBCASE("output block not invertible on output columns") {
    try {
      reconstruct(bm({"00", "10"}), bm({"1", "0"}), bm({"10"}), bm({"0"}));
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotOptimalOutput);
    }
  }
  SUBCASE("anticommuting reconstruction") {
    try {
      reconstruct(bm({"00", "10"}), bm({"1", "0"}), bm({"11"}), bm({"0"}));
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotCommutingReconstruction);
    }
  }
}

TEST_CASE("extended_influence block layout") {
  ProcessingRelations p = derive_processing(cluster3(), {1}, {3});
  CHECK(extended_influence(p) ==
        bm({"00000", "10000", "01000", "10100", "01010"}));

  ProcessingRelations q = derive_processing(ghz3(), {1}, {3});
  CHECK(extended_influence(q) ==
        bm({"00000", "10000", "10000", "10000", "01110"}));
}

TEST_CASE("check_optimal_output") {
  GeneratorMatrix g = cluster3();
  ProcessingRelations p = derive_processing(g, {1}, {3});
  CHECK(check_optimal_output(p.Z, p.R, p, g));
  CHECK_FALSE(check_optimal_output(bm({"010"}), bm({"0"}), p, g));  // o = s2 alone

  // any invertible left mix of an optimal output block is still optimal
  ProcessingRelations p2 = derive_processing(g, {1, 2}, {1, 3});
  BitMatrix v = bm({"10", "11"});
  CHECK(check_optimal_output(v * p2.Z, v * p2.R, p2, g));
}

TEST_CASE("can_gauge_individually on the cluster") {
  GeneratorMatrix g = cluster3();
  CHECK(can_gauge_individually(g, 1, {1}, {3}));
  CHECK_FALSE(can_gauge_individually(g, 2, {1}, {3}));
  CHECK_FALSE(can_gauge_individually(g, 3, {1}, {3}));
}
