#include "doctest.h"
#include "lendepth/chaincert.hpp"
#include "lendepth/depth.hpp"
#include "lendepth/errors.hpp"
#include "lendepth/length.hpp"

using namespace lendepth;

namespace {
const MaxSubgroupDatabase& db() { return MaxSubgroupDatabase::builtin(); }

ChainCertificate chain(std::uint64_t p, std::string_view text) {
  return annotate(Characteristic::from_value(p), parse_chain(text), db());
}
}  // namespace

TEST_CASE("displayed chains certify") {
  auto a6 = chain(0, "A6 > B3 > G2 > A1 > U1 T1 > T1 > 1");
  auto rep = verify(a6, db());
  CHECK(rep.overall == Verdict::Certified);
  CHECK(rep.length == 6);
  CHECK(length_of(a6) == 6);

  auto e8 = chain(2, "E8 > D8 > B4 > B2 B2 > B2 > A1 A1 > A1 > U1 T1 > T1 > 1");
  auto r8 = verify(e8, db());
  CHECK(r8.overall == Verdict::Certified);
  CHECK(r8.length == 9);

  auto c4 = chain(2, "C4 > C2 C2 > C2 > A1 A1 > A1 > U1 T1 > T1 > 1");
  CHECK(verify(c4, db()).overall == Verdict::Certified);
  CHECK(length_of(chain(0, "A1 > U1*T1 > T1 > 1")) == 3);
  CHECK(length_of(chain(0, "1")) == 0);
}

TEST_CASE("non-maximal step is refuted") {
  auto bad = chain(0, "A6 > B3 > A1 > U1 T1 > T1 > 1");
  auto rep = verify(bad, db());
  CHECK(rep.overall == Verdict::Refuted);
  REQUIRE(rep.steps.size() == 5);
  CHECK(rep.steps[0].verdict == Verdict::Certified);
  CHECK(rep.steps[1].verdict == Verdict::Refuted);
}

TEST_CASE("unknown steps are uncertifiable, not refuted") {
  auto odd = chain(0, "E8 > A4 A4 > A4 > A1 > U1 T1 > T1 > 1");
  auto rep = verify(odd, db());
  CHECK(rep.overall != Verdict::Certified);
  CHECK(rep.steps[3].verdict == Verdict::Certified);
}

TEST_CASE("structural errors list offending indices") {
  ChainCertificate up{Characteristic::zero(), parse_chain("A1 > A2 > 1"), {}};
  try {
    check_structure(up);
    FAIL("expected StructuralError");
  } catch (const StructuralError& e) {
    CHECK(e.indices() == std::vector<std::size_t>{1});
  }
  ChainCertificate open{Characteristic::zero(), parse_chain("A1 > T1"), {}};
  try {
    check_structure(open);
    FAIL("expected StructuralError");
  } catch (const StructuralError& e) {
    CHECK(e.indices() == std::vector<std::size_t>{1});
  }
  ChainCertificate steps{Characteristic::zero(), parse_chain("T1 > 1"), {{}, {}}};
  CHECK_THROWS_AS(check_structure(steps), StructuralError);
  CHECK_THROWS_AS(verify(ChainCertificate{}, db()), StructuralError);
}

TEST_CASE("serialisation round trip") {
  auto cert = chain(2, "E8 > D8 > B4 > B2 B2 > B2 > A1 A1 > A1 > U1 T1 > T1 > 1");
  auto text = serialize(cert);
  CHECK(text.rfind("# lendepth chain certificate\nformat 1\nchar 2\nnode E8\n", 0) == 0);
  auto back = parse_certificate(text);
  CHECK(back.characteristic == cert.characteristic);
  CHECK(back.nodes == cert.nodes);
  REQUIRE(back.steps.size() == cert.steps.size());
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    CHECK(back.steps[i].kind == cert.steps[i].kind);
    CHECK(back.steps[i].citation == cert.steps[i].citation);
  }
  CHECK(serialize(back) == text);

  std::string crlf;
  for (char ch : text) {
    if (ch == '\n') crlf += '\r';
    crlf += ch;
  }
  CHECK(serialize(parse_certificate(crlf)) == text);
}

TEST_CASE("certificate parse errors") {
  CHECK_THROWS_AS(parse_certificate("char 0\nnode 1\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("format 1\nnode 1\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("format 2\nchar 0\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("format 1\nchar 4\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("format 1\nchar 0\nnode X9\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("format 1\nchar 0\nstep Nonsense\tx\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("format 1\nchar 0\nedge A1\n"), ParseError);
  CHECK_THROWS_AS(parse_chain("A1 > > 1"), ParseError);
}

TEST_CASE("deleting an interior node breaks certification") {
  for (auto t : canonical_types_up_to(6))
    for (std::uint64_t p : {0, 2, 3}) {
      auto c = Characteristic::from_value(p);
      auto sc = shortest_chain(t, c, db());
      auto lc = max_length_chain(t, c, db());
      for (const auto* cert : {&sc.chain, &lc}) {
        REQUIRE(verify(*cert, db()).overall == Verdict::Certified);
        for (std::size_t i = 1; i + 1 < cert->nodes.size(); ++i) {
          auto nodes = cert->nodes;
          nodes.erase(nodes.begin() + static_cast<std::ptrdiff_t>(i));
          INFO(t.name() << " p=" << p << " drop " << i << ": " << render_chain(*cert));
          CHECK(verify(ChainCertificate{c, nodes, {}}, db()).overall != Verdict::Certified);
        }
      }
    }
}
