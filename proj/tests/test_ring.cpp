#include <algorithm>

#include "doctest.h"
#include "modrad/ring.hpp"
#include "reference.hpp"

using namespace modrad;

namespace {

DenseSet of(int n, std::initializer_list<int> xs) {
  DenseSet s(n);
  for (int x : xs) s.set(x);
  return s;
}

Ideal gen(RingPtr R, std::initializer_list<int> gs) {
  return ideal_generated(R, std::vector<int>(gs));
}

}  // namespace

TEST_CASE("dense set basics") {
  DenseSet s(70);
  CHECK(s.none());
  s.set(0);
  s.set(65);
  s.set(3);
  CHECK(s.count() == 3);
  CHECK(s.test(65));
  CHECK_FALSE(s.test(64));
  CHECK(s.first_set() == 0);
  CHECK(s.to_vector() == std::vector<int>{0, 3, 65});

  DenseSet t(70);
  t.set(3);
  CHECK(s.contains(t));
  CHECK_FALSE(t.contains(s));
  CHECK(t.lex_less(s));
  CHECK((s & t) == t);
  CHECK((s | t) == s);

  int sum = 0;
  s.for_each([&](int i) { sum += i; });
  CHECK(sum == 68);
}

TEST_CASE("residue ring tables and names") {
  RingPtr R = Ring::residue({6});
  CHECK(R->n == 6);
  CHECK(R->addv(4, 5) == 3);
  CHECK(R->mulv(4, 5) == 2);
  CHECK(R->negv(2) == 4);
  CHECK(R->one == 1);
  CHECK_FALSE(R->adapter());

  RingPtr P = Ring::residue({2, 3});
  CHECK(P->n == 6);
  // componentwise arithmetic under row-major (a, b) -> 3a + b
  int e = 1 * 3 + 2;  // (1, 2)
  CHECK(P->mulv(e, e) == 1 * 3 + 1);
  CHECK(P->addv(e, e) == 0 * 3 + 1);
}

TEST_CASE("ring invariants match the definitional oracle") {
  std::vector<RingPtr> rings;
  for (long n = 2; n <= 24; ++n) rings.push_back(Ring::residue({n}));
  rings.push_back(Ring::residue({2, 2}));
  rings.push_back(Ring::residue({2, 3}));
  rings.push_back(Ring::residue({4, 6}));
  rings.push_back(Ring::residue({6, 6}));

  for (const auto& R : rings) {
    CAPTURE(R->label);
    const RingInvariants& inv = R->invariants();
    CHECK(inv.units == ref::units(*R));
    CHECK(inv.jacobson == ref::jacobson(*R));
    CHECK(inv.nilradical == ref::nilradical(*R));
    CHECK(inv.zero_divisors == ref::zero_divisors(*R));
    for (int a = 0; a < R->n; ++a)
      CHECK(inv.regular.test(a) == !inv.zero_divisors.test(a));
    CHECK(inv.zero_divisors.test(R->zero));
  }
}

TEST_CASE("ideal lattice of Zn is the divisor lattice") {
  for (long n = 2; n <= 24; ++n) {
    RingPtr R = Ring::residue({n});
    auto divs = ref::divisors(n);
    CHECK(R->ideal_list().size() == divs.size());
    for (long d : divs) {
      Ideal I = gen(R, {int(d % n)});
      CHECK(I.elems.count() == int(n / d));
    }
  }
  CHECK(all_ideals(Ring::residue({2, 2})).size() == 4);
  CHECK(all_ideals(Ring::residue({2, 3})).size() == 4);
}

TEST_CASE("ideal operations on Z12") {
  RingPtr R = Ring::residue({12});
  Ideal two = gen(R, {2}), four = gen(R, {4}), six = gen(R, {6});

  CHECK(two.elems == of(12, {0, 2, 4, 6, 8, 10}));
  CHECK(ideal_product(two, six).elems == of(12, {0}));
  CHECK(ideal_product(two, two).elems == four.elems);
  CHECK(ideal_intersect(four, six).elems == of(12, {0}));
  CHECK(radical_of_ideal(four).elems == two.elems);
  CHECK(radical_of_ideal(gen(R, {0})).elems == R->invariants().nilradical);
  CHECK(ideal_from_set(R, four.elems).same_as(four));
  CHECK(two.contains_ideal(four));
  CHECK_FALSE(four.contains_ideal(two));
}

TEST_CASE("ideal kinds on small rings") {
  RingPtr Z12 = Ring::residue({12});
  CHECK(ideal_predicate(gen(Z12, {2}), IdealKind::Maximal).holds);
  CHECK(ideal_predicate(gen(Z12, {2}), IdealKind::Prime).holds);
  CHECK(ideal_predicate(gen(Z12, {3}), IdealKind::Maximal).holds);
  CHECK(ideal_predicate(gen(Z12, {4}), IdealKind::Primary).holds);
  CHECK_FALSE(ideal_predicate(gen(Z12, {4}), IdealKind::Prime).holds);
  CHECK_FALSE(ideal_predicate(gen(Z12, {6}), IdealKind::Primary).holds);
  CHECK_FALSE(ideal_predicate(gen(Z12, {6}), IdealKind::QuasiPrimary).holds);
  CHECK(ideal_zero_divisor_set(gen(Z12, {4})) == of(12, {0, 2, 4, 6, 8, 10}));

  RingPtr Z6 = Ring::residue({6});
  Verdict v = ideal_predicate(gen(Z6, {2}), IdealKind::J);
  CHECK_FALSE(v.holds);
  CHECK(replay_ideal_witness(gen(Z6, {2}), IdealKind::J, v));

  RingPtr Z4 = Ring::residue({4});
  CHECK(ideal_predicate(gen(Z4, {2}), IdealKind::J).holds);
  CHECK(ideal_predicate(gen(Z4, {2}), IdealKind::QuasiJ).holds);
}

TEST_CASE("local rings: every proper ideal is a J-ideal and quasi-J") {
  for (long n : {4, 8, 9, 16, 25, 27}) {
    RingPtr R = Ring::residue({n});
    for (const Ideal& I : R->ideal_list()) {
      if (!I.proper()) continue;
      CAPTURE(n);
      CAPTURE(I.to_string());
      CHECK(ideal_predicate(I, IdealKind::J).holds);
      CHECK(ideal_predicate(I, IdealKind::QuasiJ).holds);
    }
  }
}

TEST_CASE("product rings admit no quasi-J ideals") {
  for (auto moduli : std::vector<std::vector<long>>{{2, 2}, {2, 3}, {3, 4}, {2, 2, 2}}) {
    RingPtr R = Ring::residue(moduli);
    for (const Ideal& I : R->ideal_list()) {
      if (!I.proper()) continue;
      CAPTURE(R->label);
      CAPTURE(I.to_string());
      Verdict v = ideal_predicate(I, IdealKind::QuasiJ);
      CHECK_FALSE(v.holds);
      CHECK(replay_ideal_witness(I, IdealKind::QuasiJ, v));
    }
  }
}

TEST_CASE("kind names round-trip") {
  for (IdealKind k : {IdealKind::Prime, IdealKind::Maximal, IdealKind::Primary,
                      IdealKind::QuasiPrimary, IdealKind::J, IdealKind::QuasiJ, IdealKind::Nil,
                      IdealKind::Reg})
    CHECK(ideal_kind_from(to_string(k)) == k);
  CHECK(ideal_kind_from("quasi_J") == IdealKind::QuasiJ);
  CHECK(ideal_kind_from("n") == IdealKind::Nil);
  CHECK(ideal_kind_from("r") == IdealKind::Reg);
  CHECK_FALSE(ideal_kind_from("bogus").has_value());
}

TEST_CASE("symbolic integer ring") {
  RingPtr Z = Ring::integers();
  CHECK(Z->adapter());
  CHECK(Z->n == 0);
  CHECK_THROWS_AS((void)Z->invariants(), Error);
  CHECK_THROWS_AS((void)Z->ideal_list(), Error);

  Ideal six = symbolic_ideal(6), four = symbolic_ideal(4), two = symbolic_ideal(2);
  CHECK(six.symbolic());
  CHECK(six.proper());
  CHECK_FALSE(symbolic_ideal(1).proper());
  CHECK(symbolic_ideal(0).zero());
  CHECK(radical_of_ideal(symbolic_ideal(12)).sym == 6);
  CHECK(ideal_product(four, six).sym == 24);
  CHECK(ideal_intersect(four, six).sym == 12);
  CHECK(two.contains_ideal(six));
  CHECK_FALSE(six.contains_ideal(two));
}

TEST_CASE("broken tables are rejected") {
  RingPtr Z4 = Ring::residue({4});
  std::vector<int> add = Z4->add, mul = Z4->mul;
  mul[1 * 4 + 2] = 3;  // 1 * 2 must stay 2
  auto fail = check_ring_axioms(4, add, mul, 0, 1);
  REQUIRE(fail.has_value());
  CHECK_FALSE(fail->law.empty());
  CHECK_THROWS_AS((void)Ring::table(4, add, mul, 0, 1, "bad"), Error);
}

TEST_CASE("carrier cap guards construction") {
  Caps saved = caps();
  caps().carrier = 64;
  CHECK_THROWS_AS((void)Ring::residue({100}), Error);
  try {
    (void)Ring::residue({100});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
  caps() = saved;
}
