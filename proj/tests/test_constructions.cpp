#include <algorithm>

#include "doctest.h"
#include "modrad/constructions.hpp"
#include "reference.hpp"

using namespace modrad;

namespace {

DenseSet of(int n, std::initializer_list<int> xs) {
  DenseSet s(n);
  for (int x : xs) s.set(x);
  return s;
}

}  // namespace

TEST_CASE("quotient modules and their projections") {
  RingPtr R = Ring::residue({12});
  ModulePtr M = Module::regular(R);
  Submodule four = submodule_generated(M, {4});
  QuotientModule Q = quotient_module(M, four);

  CHECK(Q.module->n == 4);
  CHECK(Q.map.epi());
  CHECK(Q.map.kernel().elems == four.elems);
  for (int a = 0; a < M->n; ++a)
    for (int b = 0; b < M->n; ++b)
      CHECK(Q.map.apply(M->addv(a, b)) ==
            Q.module->addv(Q.map.apply(a), Q.map.apply(b)));

  Submodule two = submodule_generated(M, {2});
  CHECK(image_submodule(Q.map, two).elems.count() == 2);
  CHECK(preimage_submodule(Q.map, Q.module->zero_sub()).elems == four.elems);
}

TEST_CASE("product modules and projections") {
  ModulePtr A = Module::integer_module({2}), B = Module::integer_module({3});
  ModulePtr P = Module::product({A, B});
  CHECK(P->n == 6);
  CHECK(P->adapter());
  CHECK(P->exponent == 6);

  DenseSet left = A->full_sub().elems, rzero = B->zero_sub().elems;
  DenseSet strip = product_set(P->n, {A, B}, {&left, &rzero});
  CHECK(strip.count() == 2);

  ModuleMap pi0 = projection_map(P, {A, B}, 0);
  CHECK(pi0.epi());
  CHECK(pi0.kernel().elems.count() == 3);
  ModuleMap pi1 = projection_map(P, {A, B}, 1);
  CHECK(pi1.kernel().elems.count() == 2);
}

TEST_CASE("ring localization") {
  RingPtr R = Ring::residue({12});

  MultiplicativeSet units = multiplicative_set(R, {5});
  CHECK(units.elems == of(12, {1, 5}));
  Localization at_units = localize_ring(R, units);
  CHECK_FALSE(at_units.degenerate);
  CHECK(at_units.ring->n == 12);

  Localization at_two = localize_ring(R, multiplicative_set(R, {2}));
  REQUIRE_FALSE(at_two.degenerate);
  CHECK(at_two.ring->n == 3);
  for (int a = 0; a < R->n; ++a)
    for (int b = 0; b < R->n; ++b) {
      CHECK(at_two.ring_map[R->addv(a, b)] ==
            at_two.ring->addv(at_two.ring_map[a], at_two.ring_map[b]));
      CHECK(at_two.ring_map[R->mulv(a, b)] ==
            at_two.ring->mulv(at_two.ring_map[a], at_two.ring_map[b]));
    }
  CHECK(at_two.push_ideal(ideal_generated(R, {6})).elems ==
        of(3, {0}));

  MultiplicativeSet nil = multiplicative_set(R, {6});
  CHECK(nil.has_zero());
  Localization dead = localize_ring(R, nil);
  CHECK(dead.degenerate);
  CHECK(dead.ring == nullptr);
  CHECK_THROWS_AS((void)dead.push_ideal(ideal_generated(R, {2})), Error);
}

TEST_CASE("module localization carries a twisted structure map") {
  RingPtr R = Ring::residue({12});
  ModulePtr M = Module::regular(R);
  LocalizedModule LM = localize_module(M, multiplicative_set(R, {2}));
  REQUIRE_FALSE(LM.degenerate());
  CHECK(LM.module->n == 3);

  for (int a = 0; a < M->n; ++a)
    for (int b = 0; b < M->n; ++b)
      CHECK(LM.map.apply(M->addv(a, b)) ==
            LM.module->addv(LM.map.apply(a), LM.map.apply(b)));
  for (int r = 0; r < R->n; ++r)
    for (int m = 0; m < M->n; ++m)
      CHECK(LM.map.apply(M->actv(r, m)) ==
            LM.module->actv(LM.loc.ring_map[r], LM.map.apply(m)));

  Submodule six = submodule_generated(M, {6});
  CHECK(LM.push_submodule(six).elems == of(3, {0}));
  Submodule four = submodule_generated(M, {4});
  CHECK(LM.push_submodule(four).elems.full());

  CHECK_THROWS_AS((void)localize_module(Module::integer_module({4}),
                                        multiplicative_set(R, {5})),
                  Error);
}

TEST_CASE("idealization arithmetic and pair ideals") {
  RingPtr R = Ring::residue({4});
  ModulePtr M = Module::regular(R);
  Idealization A = idealization(R, M);
  CHECK(A.ring->n == 16);
  CHECK_FALSE(A.surrogate);

  // (r1,m1)(r2,m2) = (r1 r2, r1 m2 + r2 m1)
  int x = A.pair_index(2, 3), y = A.pair_index(3, 1);
  CHECK(A.ring->mulv(x, y) == A.pair_index(2, 3));
  CHECK(A.ring->addv(x, y) == A.pair_index(1, 0));

  DenseSet expect_j(16);
  for (int r : {0, 2})
    for (int m = 0; m < 4; ++m) expect_j.set(A.pair_index(r, m));
  CHECK(A.ring->invariants().jacobson == expect_j);

  Ideal two = ideal_generated(R, {2});
  Submodule twoM = submodule_generated(M, {2});
  Ideal P = pair_ideal(A, two, twoM);
  CHECK(P.elems.count() == 4);
  CHECK_THROWS_AS((void)pair_ideal(A, two, M->zero_sub()), Error);

  Idealization S = idealization(Ring::integers(), Module::integer_module({4}));
  CHECK(S.surrogate);
  CHECK(S.ring->n == 16);
}

TEST_CASE("symbolic ideal predicates over the integers") {
  CHECK(symbolic_Z_ideal_predicate(2, IdealKind::Prime).holds);
  CHECK(symbolic_Z_ideal_predicate(2, IdealKind::Maximal).holds);
  CHECK(symbolic_Z_ideal_predicate(4, IdealKind::Primary).holds);
  CHECK_FALSE(symbolic_Z_ideal_predicate(4, IdealKind::Prime).holds);
  CHECK_FALSE(symbolic_Z_ideal_predicate(6, IdealKind::Primary).holds);
  CHECK_FALSE(symbolic_Z_ideal_predicate(6, IdealKind::QuasiPrimary).holds);
  CHECK(symbolic_Z_ideal_predicate(9, IdealKind::Primary).holds);
  CHECK(symbolic_Z_ideal_predicate(9, IdealKind::QuasiPrimary).holds);
  CHECK_FALSE(symbolic_Z_ideal_predicate(12, IdealKind::QuasiPrimary).holds);
  CHECK(symbolic_Z_ideal_predicate(0, IdealKind::Prime).holds);
  CHECK(symbolic_Z_ideal_predicate(0, IdealKind::J).holds);
  CHECK(symbolic_Z_ideal_predicate(0, IdealKind::QuasiJ).holds);

  for (long k : {1, 2, 3, 4, 6, 9, 12}) {
    CAPTURE(k);
    Verdict v = symbolic_Z_ideal_predicate(k, IdealKind::QuasiJ);
    CHECK_FALSE(v.holds);
    CHECK(replay_symbolic_Z_witness(k, IdealKind::QuasiJ, v));
  }
}

TEST_CASE("module maps reject mismatched scalars") {
  ModulePtr A = Module::integer_module({2});
  ModulePtr B = Module::regular(Ring::residue({2}));
  std::vector<int> ident{0, 1};
  CHECK_THROWS_AS((void)make_module_map(A, B, ident, "cross"), Error);
}
