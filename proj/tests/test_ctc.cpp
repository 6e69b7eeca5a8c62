#include "mbqc/ctc.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace mbqc;
using namespace mbqc::testing;

TEST_CASE("find_ctcs: goldens") {
  SUBCASE("bare edge, empty pair: one 2-cycle") {
    CtcReport r = find_ctcs(derive_processing(edge2(), {}, {}).T);
    CHECK(r.self_loops.empty());
    REQUIRE(r.cycles.size() == 1);
    CHECK(r.cycles[0] == std::vector<int>{1, 2});
    CHECK_FALSE(r.empty());
  }
  SUBCASE("single Y qubit: one self-loop") {
    CtcReport r = find_ctcs(derive_processing(yloop1(), {}, {}).T);
    CHECK(r.self_loops == QubitSet{1});
    CHECK(r.cycles.empty());
  }
  SUBCASE("union pattern: both kinds") {
    CtcReport r = find_ctcs(derive_processing(union3(), {}, {}).T);
    CHECK(r.self_loops == QubitSet{1});
    REQUIRE(r.cycles.size() == 1);
    CHECK(r.cycles[0] == std::vector<int>{2, 3});
  }
  SUBCASE("strict order: nothing") {
    CtcReport r = find_ctcs(derive_processing(cluster3(), {1}, {3}).T);
    CHECK(r.empty());
  }
  SUBCASE("chord shortens the reported cycle") {
    // 1->2->3->4->1 with chord 1->3: the shortest cycle is (1,3,4)
    BitMatrix t(4, 4);
    t.set(1, 0, true);
    t.set(2, 1, true);
    t.set(3, 2, true);
    t.set(0, 3, true);
    t.set(2, 0, true);
    CtcReport r = find_ctcs(t);
    CHECK(r.self_loops.empty());
    REQUIRE(r.cycles.size() == 1);
    CHECK(r.cycles[0] == std::vector<int>{1, 3, 4});
  }
  SUBCASE("cycles through self-looped qubits are not reported") {
    BitMatrix t = bm({"11", "10"});  // loop at 1 plus 1 <-> 2
    CtcReport r = find_ctcs(t);
    CHECK(r.self_loops == QubitSet{1});
    CHECK(r.cycles.empty());
  }
}

TEST_CASE("break_cycle: bare edge golden") {
  GeneratorMatrix g = edge2();
  ProcessingRelations p = derive_processing(g, {}, {});
  REQUIRE(p.T == bm({"01", "10"}));

  BreakResult r = break_cycle(g, p, {1, 2});
  CHECK(r.g == g);  // the generator set is untouched
  CHECK(r.p.igauge == QubitSet{1});
  CHECK(r.p.ocomp == QubitSet{2});
  CHECK(r.p.T == bm({"00", "10"}));
  CHECK(r.p.H == bm({"1", "0"}));
  CHECK(r.p.Z == bm({"01"}));
  CHECK(r.p.R == bm({"1"}));
  CHECK(r.flag_qubit == 2);
  CHECK(r.flag_row == bv("01"));  // the broken rule q1 = s2 becomes o2 = s2

  TemporalRelation after = temporal_relation(r.p.T);
  CHECK(after.is_strict_partial_order);
}

TEST_CASE("break_self_loop: single Y qubit golden") {
  GeneratorMatrix g = yloop1();
  ProcessingRelations p = derive_processing(g, {}, {});
  REQUIRE(p.T == bm({"1"}));

  BreakResult r = break_self_loop(g, p, 1);
  CHECK(r.g.planes[0] == MeasurementPlane{Axis::Y, Axis::X});
  CHECK(r.p.igauge == QubitSet{1});
  CHECK(r.p.ocomp == QubitSet{1});
  CHECK(r.p.T == bm({"0"}));
  CHECK(r.p.H == bm({"1"}));
  CHECK(r.p.Z == bm({"1"}));
  CHECK(r.p.R == bm({"0"}));
  CHECK(r.flag_qubit == 1);
  CHECK(r.flag_row == bv("1"));  // q1 = s1 becomes o1 = s1
}

TEST_CASE("break_self_loop: errors") {
  GeneratorMatrix g = union3();
  ProcessingRelations p = derive_processing(g, {}, {});
  try {
    break_self_loop(g, p, 2);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSelfLoop);
    CHECK(e.detail() == 2);
  }
  try {
    break_self_loop(g, p, 4);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
  ProcessingRelations fake;
  fake.T = bm({"1"});
  fake.igauge = {1};
  try {
    break_self_loop(yloop1(), fake, 1);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundaryQubit);
  }
}

TEST_CASE("break_cycle: errors") {
  GeneratorMatrix g = edge2();
  ProcessingRelations p = derive_processing(g, {}, {});
  SUBCASE("too short") {
    try {
      break_cycle(g, p, {1});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotMinimal);
    }
  }
  SUBCASE("label out of range") {
    try {
      break_cycle(g, p, {1, 5});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IndexOutOfRange);
      CHECK(e.detail() == 5);
    }
  }
  SUBCASE("repeated qubit") {
    try {
      break_cycle(g, p, {2, 2});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotMinimal);
    }
  }
  SUBCASE("touches the boundary sets") {
    ProcessingRelations broken = derive_processing(g, {1}, {2});
    try {
      break_cycle(g, broken, {1, 2});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BoundaryOverlap);
      CHECK(e.detail() == 1);
    }
  }
  SUBCASE("chorded cycle is not minimal") {
    ProcessingRelations fake;
    fake.T = BitMatrix(4, 4);
    fake.T.set(1, 0, true);
    fake.T.set(2, 1, true);
    fake.T.set(3, 2, true);
    fake.T.set(0, 3, true);
    fake.T.set(2, 0, true);  // chord 1 -> 3
    GeneratorMatrix g4 = graph_state({{1, 2}, {2, 3}, {3, 4}}, 4, xy_planes(4));
    try {
      break_cycle(g4, fake, {1, 2, 3, 4});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotMinimal);
    }
  }
}

TEST_CASE("remove_all: union pattern needs one self-loop break and one cycle break") {
  GeneratorMatrix g = union3();
  ProcessingRelations p = derive_processing(g, {}, {});
  RemovalTrace trace = remove_all(g, p);

  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].kind == RemovalStep::Kind::SelfLoop);
  CHECK(trace.steps[0].qubits == std::vector<int>{1});
  CHECK(trace.steps[0].flag_qubit == 1);
  CHECK(trace.steps[0].flag_row == bv("100"));
  CHECK(trace.steps[1].kind == RemovalStep::Kind::Cycle);
  CHECK(trace.steps[1].qubits == std::vector<int>{2, 3});
  CHECK(trace.steps[1].flag_qubit == 3);
  CHECK(trace.steps[1].flag_row == bv("001"));

  CHECK(trace.p.igauge == QubitSet{1, 2});
  CHECK(trace.p.ocomp == QubitSet{1, 3});
  CHECK(trace.p.T == bm({"000", "000", "010"}));
  CHECK(trace.p.H == bm({"10", "01", "00"}));
  CHECK(trace.p.Z == bm({"100", "001"}));
  CHECK(trace.p.R == bm({"00", "01"}));
  CHECK(trace.flag_qubits == QubitSet{1, 3});
  CHECK(trace.flag_bits() == std::vector<int>{1, 2});
  CHECK(trace.g.planes[0] == MeasurementPlane{Axis::Y, Axis::X});
  CHECK(trace.g.planes[1] == MeasurementPlane{Axis::X, Axis::Y});
  CHECK(temporal_relation(trace.p.T).is_strict_partial_order);
}

TEST_CASE("remove_all: nothing to do and single steps") {
  SUBCASE("already strict") {
    GeneratorMatrix g = cluster3();
    ProcessingRelations p = derive_processing(g, {1}, {3});
    RemovalTrace trace = remove_all(g, p);
    CHECK(trace.steps.empty());
    CHECK(trace.p.T == p.T);
  }
  SUBCASE("bare edge") {
    GeneratorMatrix g = edge2();
    RemovalTrace trace = remove_all(g, derive_processing(g, {}, {}));
    REQUIRE(trace.steps.size() == 1);
    CHECK(trace.steps[0].kind == RemovalStep::Kind::Cycle);
    CHECK(trace.flag_qubits == QubitSet{2});
    CHECK(trace.flag_bits() == std::vector<int>{1});
    CHECK(temporal_relation(trace.p.T).is_strict_partial_order);
  }
  SUBCASE("single Y qubit") {
    GeneratorMatrix g = yloop1();
    RemovalTrace trace = remove_all(g, derive_processing(g, {}, {}));
    REQUIRE(trace.steps.size() == 1);
    CHECK(trace.steps[0].kind == RemovalStep::Kind::SelfLoop);
    CHECK(trace.flag_bits() == std::vector<int>{1});
    CHECK(temporal_relation(trace.p.T).is_strict_partial_order);
  }
}
