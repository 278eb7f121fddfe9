#include "modrad/harness.hpp"

#include <unordered_set>

#include "modrad/config.hpp"

namespace modrad {

CorpusSpec corpus_preset(const std::string& name) {
  CorpusSpec spec;
  spec.name = name;
  if (name == "default") return spec;
  if (name == "small") {
    spec.max_residue = 16;
    spec.max_product_factor = 4;
    spec.max_zmod_carrier = 36;
    spec.square_ring_bound = 6;
    spec.mult_set_ring_bound = 12;
    spec.idealization_budget = 64;
    spec.hom_carrier_bound = 12;
    spec.avoid_sample_cap = 2000;
    return spec;
  }
  throw Error(Errc::ParseError, "unknown corpus preset '" + name + "'");
}

std::vector<ModulePtr> Corpus::modules() const {
  std::vector<ModulePtr> out = z_modules;
  out.insert(out.end(), ring_modules.begin(), ring_modules.end());
  return out;
}

namespace {

// proper nonzero ideals, in lattice order
std::vector<Ideal> inner_ideals(const RingPtr& R) {
  std::vector<Ideal> out;
  for (const auto& I : all_ideals(R))
    if (I.proper() && !I.zero()) out.push_back(I);
  return out;
}

}  // namespace

Corpus build_corpus(const CorpusSpec& spec) {
  Corpus c;
  c.spec = spec;

  for (long n = 2; n <= spec.max_residue; ++n) c.rings.push_back(Ring::residue({n}));
  for (long a = 2; a <= spec.max_product_factor; ++a)
    for (long b = a; b <= spec.max_product_factor; ++b) c.rings.push_back(Ring::residue({a, b}));

  for (long n = 2; n <= spec.max_zmod_carrier; ++n)
    c.z_modules.push_back(Module::integer_module({n}));
  for (long a = 2; a * a <= spec.max_zmod_carrier; ++a)
    for (long b = a; a * b <= spec.max_zmod_carrier; ++b)
      c.z_modules.push_back(Module::integer_module({a, b}));
  for (long a = 2; a * a * a <= spec.max_zmod_carrier; ++a)
    for (long b = a; a * b * b <= spec.max_zmod_carrier; ++b)
      for (long d = b; a * b * d <= spec.max_zmod_carrier; ++d)
        c.z_modules.push_back(Module::integer_module({a, b, d}));

  for (const auto& R : c.rings) {
    auto reg = Module::regular(R);
    c.ring_modules.push_back(reg);
    for (const auto& I : inner_ideals(R)) c.ring_modules.push_back(Module::cyclic(R, I));
    if (R->n <= spec.square_ring_bound)
      c.ring_modules.push_back(Module::product({reg, reg}));
  }

  // same-ring factor pairs, Z-module pairs first
  for (long a = 2; a * a <= spec.max_zmod_carrier; ++a)
    for (long b = a; a * b <= spec.max_zmod_carrier; ++b) {
      Corpus::ProductEntry e;
      e.parts = {Module::integer_module({a}), Module::integer_module({b})};
      e.prod = Module::product(e.parts);
      c.products.push_back(std::move(e));
    }
  if (spec.max_zmod_carrier >= 8) {
    Corpus::ProductEntry e;
    e.parts = {Module::integer_module({2}), Module::integer_module({2}),
               Module::integer_module({2})};
    e.prod = Module::product(e.parts);
    c.products.push_back(std::move(e));
  }
  for (const auto& R : c.rings) {
    if (R->n > spec.square_ring_bound) continue;
    std::vector<ModulePtr> factors;
    factors.push_back(Module::regular(R));
    for (const auto& I : inner_ideals(R)) factors.push_back(Module::cyclic(R, I));
    const long bound = long(spec.square_ring_bound) * spec.square_ring_bound;
    for (size_t i = 0; i < factors.size(); ++i)
      for (size_t j = i; j < factors.size(); ++j) {
        if (long(factors[i]->n) * factors[j]->n > bound) continue;
        Corpus::ProductEntry e;
        e.parts = {factors[i], factors[j]};
        e.prod = Module::product(e.parts);
        c.products.push_back(std::move(e));
      }
  }

  for (const auto& R : c.rings) {
    long n = R->n;
    if (n * n <= spec.idealization_budget)
      c.idealizations.push_back(idealization(R, Module::regular(R)));
    for (const auto& I : inner_ideals(R)) {
      auto Q = Module::cyclic(R, I);
      if (n * Q->n <= spec.idealization_budget) c.idealizations.push_back(idealization(R, Q));
    }
    if (n * n * n <= spec.idealization_budget) {
      auto reg = Module::regular(R);
      c.idealizations.push_back(idealization(R, Module::product({reg, reg})));
    }
  }

  for (const auto& R : c.rings) {
    if (R->n > spec.mult_set_ring_bound) continue;
    std::unordered_set<DenseSet, DenseSetHash> seen;
    for (int g = 0; g < R->n; ++g) {
      auto S = multiplicative_set(R, {g});
      if (seen.insert(S.elems).second) c.mult_sets.push_back(std::move(S));
    }
  }

  for (const auto& M : c.modules())
    if (M->n <= spec.hom_carrier_bound) c.hom_sources.push_back(M);

  return c;
}

}  // namespace modrad
