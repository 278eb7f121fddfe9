#include <algorithm>

#include "doctest.h"
#include "modrad/module.hpp"
#include "reference.hpp"

using namespace modrad;

namespace {

DenseSet of(int n, std::initializer_list<int> xs) {
  DenseSet s(n);
  for (int x : xs) s.set(x);
  return s;
}

std::vector<ModulePtr> oracle_sweep() {
  std::vector<ModulePtr> out;
  for (long n : {4, 6, 8, 9, 12}) out.push_back(Module::integer_module({n}));
  out.push_back(Module::integer_module({2, 2}));
  out.push_back(Module::integer_module({2, 4}));
  out.push_back(Module::integer_module({2, 2, 2}));
  RingPtr Z12 = Ring::residue({12});
  out.push_back(Module::regular(Z12));
  out.push_back(Module::cyclic(Z12, ideal_generated(Z12, {4})));
  out.push_back(Module::regular(Ring::residue({6})));
  out.push_back(Module::regular(Ring::residue({2, 3})));
  return out;
}

}  // namespace

TEST_CASE("integer-adapter module invariants") {
  ModulePtr M = Module::integer_module({4});
  CHECK(M->adapter());
  CHECK(M->n == 4);
  CHECK(M->exponent == 4);
  CHECK(M->scalar_count() == 4);
  CHECK(M->name_of(2) == "2̄");

  const ModuleInvariants& inv = M->invariants();
  CHECK(inv.annihilator.sym == 4);
  CHECK(inv.jr.sym == 4);
  CHECK(inv.jr_scalars == of(4, {0}));
  CHECK(inv.z_scalars == of(4, {0, 2}));
  CHECK(inv.nz_scalars == of(4, {0}));
  CHECK(inv.torsion.full());
  CHECK(inv.j_m == of(4, {0, 2}));
  CHECK(inv.jrm == of(4, {0}));
  CHECK_FALSE(inv.faithful);
}

TEST_CASE("finite regular module invariants") {
  RingPtr R = Ring::residue({12});
  ModulePtr M = Module::regular(R);
  const ModuleInvariants& inv = M->invariants();
  CHECK(inv.annihilator.zero());
  CHECK(inv.jr.elems == R->invariants().jacobson);
  CHECK(inv.faithful);
  CHECK(is_multiplication(*M).holds);
  CHECK(M->submodule_list().size() == 6);
}

TEST_CASE("submodule lattice and radical match the brute-force oracle") {
  for (const auto& M : oracle_sweep()) {
    CAPTURE(M->label);
    auto expect = ref::submodule_sets(*M);
    const auto& got = M->submodule_list();
    REQUIRE(got.size() == expect.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].elems == expect[i]);

    for (const Submodule& N : got) {
      CHECK(M->m_rad(N).elems == ref::m_rad_set(*M, N.elems));
      bool prime = ref::prime_submodule_set(*M, N.elems);
      CHECK(submodule_predicate(*M, N, SubKind::Prime).holds ==
            (prime && N.proper()));
    }
    CHECK(M->m_rad(M->full_sub()).elems.full());
  }
}

TEST_CASE("residual ideals and colon operations") {
  RingPtr R = Ring::residue({12});
  ModulePtr M = Module::regular(R);
  Submodule four = submodule_generated(M, {4});
  CHECK(residual_ideal(*M, four).elems == of(12, {0, 4, 8}));
  CHECK(colon_submodule(*M, four, ideal_generated(R, {2})).elems ==
        of(12, {0, 2, 4, 6, 8, 10}));
  CHECK(colon_by_set(*M, four, of(12, {5})).elems == of(12, {0, 4, 8}));
  CHECK(ideal_action(ideal_generated(R, {2}), *M).elems ==
        of(12, {0, 2, 4, 6, 8, 10}));

  Submodule six = submodule_generated(M, {6});
  CHECK(submodule_sum(four, six).elems == of(12, {0, 2, 4, 6, 8, 10}));
  CHECK(submodule_intersect(four, six).elems == of(12, {0}));

  ModulePtr Z6 = Module::integer_module({6});
  Submodule two = submodule_generated(Z6, {2});
  ScalarIdeal res = residual_scalar_ideal(*Z6, two);
  CHECK(res.ideal.sym == 2);
  CHECK(res.exponent == 6);
  CHECK(res.contains_scalar(2));
  CHECK_FALSE(res.contains_scalar(3));
  CHECK(res.as_scalar_set(6) == of(6, {0, 2, 4}));
  CHECK(ideal_action(symbolic_ideal(2), *Z6).elems == of(6, {0, 2, 4}));
}

TEST_CASE("quasi-J versus J on the four-element cyclic module") {
  ModulePtr M = Module::integer_module({4});
  Submodule zero = M->zero_sub();
  CHECK(M->m_rad(zero).elems == of(4, {0, 2}));
  CHECK(residual_ideal(*M, zero).sym == 4);

  CHECK(submodule_predicate(*M, zero, SubKind::QuasiJ).holds);
  Verdict vj = submodule_predicate(*M, zero, SubKind::J);
  CHECK_FALSE(vj.holds);
  CHECK(replay_submodule_witness(*M, zero, SubKind::J, vj));

  Submodule two = submodule_generated(M, {2});
  Verdict vq = submodule_predicate(*M, two, SubKind::QuasiJ);
  CHECK_FALSE(vq.holds);
  CHECK(replay_submodule_witness(*M, two, SubKind::QuasiJ, vq));

  auto maxq = quasi_J_maximal_set(*M);
  REQUIRE(maxq.size() == 1);
  CHECK(maxq[0].zero());

  CHECK(submodule_predicate(*M, M->full_sub(), SubKind::QuasiJ).flag == "improper");
}

TEST_CASE("six-element cyclic module comparison point") {
  ModulePtr M = Module::integer_module({6});
  Submodule two = submodule_generated(M, {2});
  CHECK(submodule_predicate(*M, two, SubKind::R).holds);
  CHECK(submodule_predicate(*M, two, SubKind::Sr).holds);
  Verdict v = submodule_predicate(*M, two, SubKind::QuasiJ);
  CHECK_FALSE(v.holds);
  CHECK(replay_submodule_witness(*M, two, SubKind::QuasiJ, v));
}

TEST_CASE("pure, divisible, small") {
  ModulePtr M6 = Module::integer_module({6});
  Submodule zero6 = M6->zero_sub();
  CHECK(submodule_predicate(*M6, zero6, SubKind::Pure).holds);
  CHECK(submodule_predicate(*M6, zero6, SubKind::Divisible).holds);
  Submodule two = submodule_generated(M6, {2});
  CHECK(submodule_predicate(*M6, two, SubKind::Pure).holds);
  // the class of 6 is regular in Z yet collapses <2̄> to 0
  Verdict dv = submodule_predicate(*M6, two, SubKind::Divisible);
  CHECK_FALSE(dv.holds);
  CHECK(replay_submodule_witness(*M6, two, SubKind::Divisible, dv));
  CHECK_FALSE(submodule_predicate(*M6, two, SubKind::Small).holds);

  // over a finite ring reg(R) consists of units, so submodules of the
  // regular module are divisible
  ModulePtr R6 = Module::regular(Ring::residue({6}));
  Submodule two6 = submodule_generated(R6, {2});
  CHECK(submodule_predicate(*R6, two6, SubKind::Divisible).holds);

  ModulePtr M4 = Module::integer_module({4});
  Submodule half = submodule_generated(M4, {2});
  CHECK(submodule_predicate(*M4, half, SubKind::Small).holds);
  CHECK(M4->j_over(M4->zero_sub()).elems == of(4, {0, 2}));
}

TEST_CASE("presimplifiable variants") {
  for (long p : {2, 3, 5, 7}) {
    ModulePtr M = Module::integer_module({p});
    CAPTURE(p);
    CHECK(presimplifiable(*M, PresimplKind::J).holds);
    CHECK_FALSE(presimplifiable(*M, PresimplKind::Plain).holds);
  }
  ModulePtr M4 = Module::integer_module({4});
  CHECK(presimplifiable(*M4, PresimplKind::QuasiJ).holds);
  CHECK_FALSE(presimplifiable(*M4, PresimplKind::J).holds);
  CHECK_FALSE(presimplifiable(*M4, PresimplKind::Plain).holds);
  CHECK_FALSE(presimplifiable(*M4, PresimplKind::Quasi).holds);
}

TEST_CASE("multiplication modules and submodule products") {
  for (long n = 2; n <= 12; ++n)
    CHECK(is_multiplication(*Module::integer_module({n})).holds);
  ModulePtr pair = Module::integer_module({2, 2});
  CHECK_FALSE(is_multiplication(*pair).holds);
  CHECK(pair->submodule_list().size() == 5);
  CHECK_THROWS_AS(
      (void)submodule_product(*pair, pair->zero_sub(), pair->zero_sub()), Error);

  ModulePtr M6 = Module::integer_module({6});
  Submodule two = submodule_generated(M6, {2}), three = submodule_generated(M6, {3});
  CHECK(submodule_product(*M6, two, three).zero());
  CHECK(submodule_product(*M6, two, two).elems == of(6, {0, 2, 4}));
}

TEST_CASE("submodule kind names round-trip") {
  for (SubKind k : {SubKind::Prime, SubKind::Primary, SubKind::QuasiPrimary, SubKind::J,
                    SubKind::QuasiJ, SubKind::R, SubKind::Sr, SubKind::Pure, SubKind::Divisible,
                    SubKind::Small})
    CHECK(sub_kind_from(to_string(k)) == k);
  for (PresimplKind k :
       {PresimplKind::Plain, PresimplKind::Quasi, PresimplKind::J, PresimplKind::QuasiJ})
    CHECK(presimpl_kind_from(to_string(k)) == k);
  CHECK_FALSE(sub_kind_from("bogus").has_value());
}

TEST_CASE("broken module tables are rejected") {
  ModulePtr M = Module::integer_module({4});
  std::vector<int> add = M->add, act = M->act;
  act[1 * 4 + 3] = 0;  // 1 acting on 3 must stay 3
  auto fail =
      check_module_axioms(*Module::raw(M->ring, 4, add, act, 0, 4, {}, "bad", false));
  REQUIRE(fail.has_value());
  CHECK_FALSE(fail->law.empty());
  CHECK_THROWS_AS((void)Module::raw(M->ring, 4, add, act, 0, 4, {}, "bad"), Error);
}

TEST_CASE("zero-divisor scalars of a submodule") {
  ModulePtr M = Module::integer_module({6});
  Submodule two = submodule_generated(M, {2});
  // classes moving some outside element into <2>: 2 and 4 send 1 to 2=N, 0 kills
  DenseSet z = submodule_zero_divisor_scalars(*M, two);
  CHECK(z.test(0));
  CHECK(z.test(2));
  CHECK_FALSE(z.test(1));
}
