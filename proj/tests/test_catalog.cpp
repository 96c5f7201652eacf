#include "qconf/catalog.hpp"

#include <doctest.h>

using namespace qconf;

namespace {

std::size_t failures(const std::vector<Check>& cs) {
  std::size_t n = 0;
  for (const auto& c : cs)
    if (c.status == Status::Fail) {
      MESSAGE(c.id << ": " << c.witness);
      ++n;
    }
  return n;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("catalog names and aliases") {
  CHECK(algebra_by_name("sp4") == algebra_by_name("so5"));
  CHECK(algebra_by_name("so32")->dim() == 10);
  CHECK(algebra_by_name("so42")->dim() == 15);
  CHECK(algebra_by_name("sl4")->dim() == 15);
  CHECK_THROWS_AS(algebra_by_name("e8"), UnknownLabel);
}

TEST_CASE("so32.readings") {
  const auto& c = so32();
  REQUIRE(c.readings.size() == 2);
  std::size_t bijective = 0;
  for (const auto& r : c.readings) {
    if (r.name == "K0") {
      CHECK(r.rank == 9);
      CHECK_FALSE(r.physical.has_value());
    }
    bijective += r.physical.has_value();
  }
  CHECK(bijective == 1);
  CHECK(c.readings[c.admissible].name == "K2");
  CHECK(c.readings[c.admissible].rank == 10);
}

TEST_CASE("dictionaries preserve brackets") {
  CHECK(failures(check_dictionary(sl2().physical_to_chevalley, "sl2")) == 0);
  CHECK(failures(check_dictionary(so32().cw_to_physical, "so32")) == 0);
  CHECK(failures(check_dictionary(so42().sl4_to_physical, "so42")) == 0);
}

TEST_CASE("dictionaries round-trip") {
  for (const auto* d : {&so32().cw_to_physical, &so42().sl4_to_physical}) {
    for (std::size_t i = 0; i < d->source->dim(); ++i) CHECK(d->unmap(d->map(d->source->basis(i))) == d->source->basis(i));
  }
}

TEST_CASE("so5.cartan_weyl") {
  const auto& cw = so32().cw_data;
  for (std::size_t a = 1; a <= 4; ++a) CHECK(weight(cw.h(1), cw.e(a)).has_value());
  const auto g = so32().cw.algebra;
  // e3 and e4 are defined as iterated brackets of the simple roots.
  CHECK(bracket((*g)["e1"], (*g)["e2"]) == (*g)["e3"]);
  CHECK(bracket((*g)["e1"], (*g)["e3"]) == (*g)["e4"]);
  CHECK(bracket((*g)["e2"], (*g)["e3"]).is_zero());
}

TEST_CASE("so42.borel_images") {
  const auto& b = so42().borel;
  const auto g = b.algebra;
  CHECK(b.h(2) == -((*g)["D"] + (*g)["L3"]));
}

TEST_CASE("catalog verification reports no failures") {
  CHECK(failures(verify_sl2_catalog()) == 0);
  CHECK(failures(verify_so32_catalog()) == 0);
  CHECK(failures(verify_so42_catalog()) == 0);
}

TEST_CASE("so42.serre.e3_e4 is recorded, not failed") {
  bool seen = false;
  for (const auto& c : verify_so42_catalog())
    if (c.id == "so42.serre.e3_e4") {
      seen = true;
      CHECK(c.status == Status::RecordedDiscrepancy);
    }
  CHECK(seen);
}

}
