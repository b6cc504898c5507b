#include "doctest.h"
#include "lendepth/errors.hpp"
#include "lendepth/maxsubdb.hpp"

using namespace lendepth;

namespace {
const MaxSubgroupDatabase& db() { return MaxSubgroupDatabase::builtin(); }
GroupDescriptor d(const char* s) { return parse_descriptor(s); }
const Characteristic p0 = Characteristic::zero();
Characteristic p(std::uint64_t v) { return Characteristic::prime(v); }
}  // namespace

TEST_CASE("characteristic conditions") {
  auto c = CharCondition::parse("p=0,p>=5");
  CHECK(c.matches(p0));
  CHECK(c.matches(p(5)));
  CHECK(c.matches(p(101)));
  CHECK_FALSE(c.matches(p(3)));
  CHECK_FALSE(CharCondition::parse("p>0").matches(p0));
  CHECK(CharCondition::parse("p!=2").matches(p0));
  CHECK_FALSE(CharCondition::parse("p!=2").matches(p(2)));
  CHECK_THROWS_AS(CharCondition::parse("q=2"), ValidationError);
  CHECK_THROWS_AS(CharCondition::parse(""), ValidationError);
}

TEST_CASE("stored witnesses") {
  auto w = db().is_maximal_step(d("B3"), d("G2"), p0);
  REQUIRE(w);
  CHECK(w->kind == StepKind::TableCited);
  CHECK_FALSE(db().is_maximal_step(d("B3"), d("A1"), p0));
  auto b = db().is_maximal_step(d("A1"), d("U1 T1"), p(7));
  REQUIRE(b);
  CHECK(b->kind == StepKind::BorelDescent);
  for (const auto& f : db().facts()) CHECK(f.child.dim() < f.parent.dim());
}

TEST_CASE("parametric patterns") {
  CHECK(db().is_maximal_step(d("C7"), d("C3 C4"), p(3)));
  CHECK(db().is_maximal_step(d("C7"), d("A1 C6"), p(3)));
  CHECK(db().is_maximal_step(d("D9"), d("D4 D5"), p(3)));
  CHECK(db().is_maximal_step(d("D9"), d("B8"), p(3)));
  CHECK(db().is_maximal_step(d("D6"), d("A1^2 D4"), p(2)));
  CHECK_FALSE(db().is_maximal_step(d("D6"), d("T1 D5"), p(2)));
  CHECK(db().is_maximal_step(d("B5"), d("D5"), p(2)));
  CHECK(db().is_maximal_step(d("A5"), d("C3"), p(2)));
  CHECK(db().is_maximal_step(d("A4"), d("B2"), p(3)));
  CHECK_FALSE(db().is_maximal_step(d("A4"), d("B2"), p(2)));
  CHECK(db().is_maximal_step(d("A1^2"), d("A1"), p(2)));
  CHECK(db().is_maximal_step(d("A1^2"), d("U1 A1 T1"), p(2)));
  CHECK(db().is_maximal_step(d("A2 T1"), d("A2"), p(2)));
  CHECK(db().is_maximal_step(d("U5 T2"), d("U4 T2"), p(2)));
  CHECK(db().is_maximal_step(d("U5 T2"), d("U5 T1"), p(2)));
  CHECK_FALSE(db().is_maximal_step(d("U5 T2"), d("U3 T2"), p(2)));
  CHECK(db().is_maximal_step(d("A4"), d("U4 A3 T1"), p(2)));
  CHECK(db().is_maximal_step(d("U4 A3 T1"), d("A3 T1"), p(2)));
  CHECK(db().is_maximal_step(d("U4 A3 T1"), d("U7 A2 T2"), p(2)));
  CHECK(db().is_maximal_step(d("E8"), d("U57 E7 T1"), p0));
}

TEST_CASE("characteristic two B/C exchange") {
  CHECK(db().is_maximal_step(d("C4"), d("D4"), p(2)));
  CHECK(db().is_maximal_step(d("B4"), d("D4"), p(2)));
  CHECK(db().is_maximal_step(d("C5"), d("D5"), p(2)));
  CHECK_FALSE(db().is_maximal_step(d("C5"), d("D5"), p(3)));
  CHECK(db().is_maximal_step(d("B3 C3"), d("B3"), p(2)));
}

TEST_CASE("maximal_connected lists") {
  auto a4 = db().maximal_connected({Family::A, 4}, p(2));
  CHECK(a4.tag.status == Completeness::Complete);
  REQUIRE(a4.subgroups.size() == 2);
  CHECK(a4.subgroups[0].child.render() == "U4 A3 T1");
  CHECK(a4.subgroups[1].child.render() == "U6 A2 A1 T1");
  auto a2 = db().maximal_connected({Family::A, 2}, p(2));
  CHECK(a2.tag.status == Completeness::Complete);
  REQUIRE(a2.subgroups.size() == 1);
  CHECK(a2.subgroups[0].child.render() == "U2 A1 T1");
  CHECK_THROWS_AS(db().maximal_connected({Family::C, 7}, p(3)), NotCuratedError);
  auto a2p3 = db().maximal_connected({Family::A, 2}, p(3));
  CHECK(a2p3.tag.status == Completeness::Complete);
  REQUIRE(a2p3.subgroups.size() == 2);
  CHECK(a2p3.subgroups[0].child.render() == "A1");
  CHECK(a2p3.subgroups[1].child.render() == "U2 A1 T1");
  CHECK(db().maximal_connected({Family::B, 3}, p(3)).tag.status == Completeness::WitnessesOnly);
}

TEST_CASE("refutation") {
  CHECK(db().refutes(d("B3"), d("A1"), p0));
  CHECK(db().refutes(d("B2"), d("A1"), p(2)));
  CHECK_FALSE(db().refutes(d("B2"), d("A1"), p(5)));
  CHECK(db().refutes(d("A1"), d("T1"), p0));
  CHECK_FALSE(db().refutes(d("A1"), d("U1 T1"), p0));
}

TEST_CASE("brute force depth") {
  CHECK(db().depth_bruteforce({Family::A, 1}, p(2)) == 3);
  CHECK(db().depth_bruteforce({Family::A, 1}, p0) == 3);
  CHECK(db().depth_bruteforce({Family::A, 2}, p(2)) == 6);
  CHECK(db().depth_bruteforce({Family::A, 2}, p(3)) == 4);
  CHECK(db().depth_bruteforce({Family::A, 3}, p(2)) == 6);
  CHECK(db().depth_bruteforce({Family::A, 4}, p(2)) == 9);
  CHECK(db().depth_bruteforce({Family::A, 4}, p(3)) == 6);
  CHECK(db().depth_bruteforce({Family::A, 6}, p0) == 6);
  CHECK(db().depth_bruteforce({Family::E, 6}, p(3)) == 6);
  CHECK(db().depth_bruteforce({Family::E, 6}, p(2)) == 6);
  CHECK(db().depth_bruteforce({Family::E, 7}, p(3)) == 7);
  CHECK(db().depth_bruteforce({Family::E, 8}, p(3)) == 7);
  CHECK_THROWS_AS(db().depth_bruteforce({Family::C, 4}, p(2)), IncompleteError);
}

TEST_CASE("database format errors") {
  CHECK_THROWS_AS(MaxSubgroupDatabase::from_text("A1 | T1 | all | BorelDescent | x\n"), DatabaseFormatError);
  CHECK_THROWS_AS(MaxSubgroupDatabase::from_text("@format maxsubdb 1\nA1 | A2 | all | TableCited | x\n"),
                  DatabaseFormatError);
  CHECK_THROWS_AS(MaxSubgroupDatabase::from_text("@format maxsubdb 1\nA1 | T1 | all | Bogus | x\n"),
                  DatabaseFormatError);
  try {
    MaxSubgroupDatabase::from_text("@format maxsubdb 1\n\nA1 | E9 | all | TableCited | x\n");
  } catch (const DatabaseFormatError& e) {
    CHECK(e.line() == 3);
  }
  auto small = MaxSubgroupDatabase::from_text("@format maxsubdb 1\nA1 | U1 T1 | all | BorelDescent | Borel\n");
  CHECK(small.facts().size() == 1);
}
