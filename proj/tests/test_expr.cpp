#include <optional>

#include "doctest.h"
#include "modrad/expr.hpp"

using namespace modrad;
using expr::eval_object;
using expr::parse_object;
using expr::print_node;
using expr::Value;
using expr::ValueKind;

namespace {

const char* kCanonical[] = {
    "Zn(4)",
    "prod(Zn(2),Zn(3))",
    "idealization(Zn(4),cyc(Zn(4),[]))",
    "loc(Zn(12),[5])",
    "Zmod(2,4)",
    "cyc(Zn(12),[4])",
    "prod(Zmod(2),Zmod(3))",
    "ideal(Zn(12),[4])",
    "sub(Zmod(6),[2])",
    "sub(prod(Zmod(2),Zmod(3)),[(1,0)])",
    "sub(Zmod(4),[])",
};

}  // namespace

TEST_CASE("printer and parser invert each other") {
  for (const char* text : kCanonical) {
    CAPTURE(text);
    auto node = parse_object(text);
    CHECK(print_node(*node) == text);
    auto again = parse_object(print_node(*node));
    CHECK(print_node(*again) == text);
  }
  CHECK(print_node(*parse_object("  Zn( 4 ) ")) == "Zn(4)");
  CHECK(print_node(*parse_object("sub(Zmod(6), [ 2 , 4 ])")) == "sub(Zmod(6),[2,4])");
}

TEST_CASE("evaluation produces the advertised objects") {
  Value ring = eval_object("Zn(4)");
  CHECK(ring.kind == ValueKind::Ring);
  CHECK(ring.ring->n == 4);

  Value prod_ring = eval_object("prod(Zn(2),Zn(3))");
  CHECK(prod_ring.ring->n == 6);

  Value zmod = eval_object("Zmod(2,4)");
  CHECK(zmod.kind == ValueKind::Module);
  CHECK(zmod.module->n == 8);
  CHECK(zmod.module->adapter());
  CHECK(zmod.module->exponent == 4);

  Value cyc = eval_object("cyc(Zn(12),[4])");
  CHECK(cyc.module->n == 4);
  CHECK_FALSE(cyc.module->adapter());

  Value ideal = eval_object("ideal(Zn(12),[4])");
  CHECK(ideal.kind == ValueKind::Ideal);
  CHECK(ideal.ideal->elems.count() == 3);

  Value sub = eval_object("sub(Zmod(6),[2])");
  CHECK(sub.kind == ValueKind::Submodule);
  CHECK(sub.sub->elems.count() == 3);

  Value tuple = eval_object("sub(prod(Zmod(2),Zmod(3)),[(1,0)])");
  CHECK(tuple.part_sizes == std::vector<int>{2, 3});
  CHECK(tuple.sub->elems.test(1 * 3 + 0));
  CHECK(tuple.sub->elems.count() == 2);

  Value ext = eval_object("idealization(Zn(4),cyc(Zn(4),[]))");
  CHECK(ext.kind == ValueKind::Ring);
  CHECK(ext.ring->n == 16);
  CHECK(ext.ext.has_value());

  Value empty = eval_object("sub(Zmod(4),[])");
  CHECK(empty.sub->zero());
}

TEST_CASE("localization expressions") {
  Value iso = eval_object("loc(Zn(12),[5])");
  CHECK(iso.kind == ValueKind::Ring);
  CHECK(iso.ring->n == 12);
  REQUIRE(iso.loc.has_value());
  CHECK_FALSE(iso.loc->degenerate);

  Value shrink = eval_object("loc(Zn(12),[2])");
  CHECK(shrink.ring->n == 3);

  Value dead = eval_object("loc(Zn(12),[6])");
  CHECK(dead.loc->degenerate);
  CHECK(dead.ring == nullptr);
}

TEST_CASE("parse and evaluation errors carry the right codes") {
  auto code_of = [](const char* text) -> std::optional<Errc> {
    try {
      (void)eval_object(text);
    } catch (const Error& e) {
      return e.code();
    }
    return std::nullopt;
  };

  CHECK_THROWS_AS((void)parse_object("Zn("), Error);
  CHECK_THROWS_AS((void)parse_object("Zn(4)x"), Error);
  CHECK_THROWS_AS((void)parse_object("loc(Zn(12),[])"), Error);
  CHECK_THROWS_AS((void)parse_object("frob(3)"), Error);
  CHECK_THROWS_AS((void)parse_object("sub(Zn(4),[])"), Error);

  CHECK(code_of("Zn(1)") == Errc::BadModulus);
  CHECK(code_of("Zn(0)") == Errc::BadModulus);
  CHECK(code_of("sub(Zmod(6),[7])") == Errc::BadElement);
  CHECK(code_of("ideal(Zn(12),[13])") == Errc::BadElement);
  CHECK(code_of("sub(prod(Zmod(2),Zmod(3)),[(1,0,0)])") == Errc::BadElement);
}
