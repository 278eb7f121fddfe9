#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modrad/module.hpp"
#include "modrad/ring.hpp"

namespace modrad {

// additive and action-compatible map between modules over the same scalars
struct ModuleMap {
  ModulePtr source;
  ModulePtr target;
  std::vector<int> mapping;
  std::string kind;

  int apply(int m) const { return mapping[m]; }
  Submodule kernel() const;
  bool epi() const;
};

ModuleMap make_module_map(ModulePtr source, ModulePtr target, std::vector<int> mapping,
                          std::string kind);

Submodule image_submodule(const ModuleMap& f, const Submodule& N);
Submodule preimage_submodule(const ModuleMap& f, const Submodule& K);

struct QuotientModule {
  ModulePtr module;
  ModuleMap map;
};

QuotientModule quotient_module(ModulePtr M, const Submodule& N);

// component sets to a subset of a product carrier built from parts
DenseSet product_set(int prod_size, const std::vector<ModulePtr>& parts,
                     const std::vector<const DenseSet*>& comps);

ModuleMap projection_map(ModulePtr prod, const std::vector<ModulePtr>& parts, int index);

struct MultiplicativeSet {
  RingPtr ring;
  std::vector<int> gens;
  DenseSet elems;

  bool has_zero() const { return elems.test(ring->zero); }
  std::string to_string() const;
};

MultiplicativeSet multiplicative_set(RingPtr R, const std::vector<int>& gens);

struct Localization {
  RingPtr ring;  // null when 0 lands in the set and everything collapses
  RingPtr base;
  MultiplicativeSet set;
  std::vector<int> ring_map;
  std::vector<std::pair<int, int>> reps;  // fraction class -> least (r, s)
  bool degenerate = false;

  Ideal push_ideal(const Ideal& I) const;
};

Localization localize_ring(RingPtr R, const MultiplicativeSet& S);

struct LocalizedModule {
  Localization loc;
  ModulePtr module;  // null when degenerate
  ModuleMap map;

  bool degenerate() const { return loc.degenerate; }
  Submodule push_submodule(const Submodule& N) const;
};

LocalizedModule localize_module(ModulePtr M, const MultiplicativeSet& S);

// trivial extension of a ring by a module, carrier R x M with
// (r1,m1)(r2,m2) = (r1 r2, r1 m2 + r2 m1); integer-adapter input is replaced
// by the residue ring Z_e acting through the same tables, and the result is
// reported as that finite surrogate
struct Idealization {
  RingPtr ring;
  RingPtr base;
  ModulePtr mod;
  bool surrogate = false;

  int pair_index(int r, int m) const { return r * mod->n + m; }
  int first(int x) const { return x / mod->n; }
  int second(int x) const { return x % mod->n; }
};

Idealization idealization(RingPtr R, ModulePtr M);

// I x N as an ideal of the extension; requires IM inside N
Ideal pair_ideal(const Idealization& A, const Ideal& I, const Submodule& N);

// closed forms for ideals nZ of the integer ring itself
Verdict symbolic_Z_ideal_predicate(long n, IdealKind kind);
bool replay_symbolic_Z_witness(long n, IdealKind kind, const Verdict& v);

}  // namespace modrad
