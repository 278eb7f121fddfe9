#pragma once

#include <mutex>
#include <unordered_map>

#include "modrad/ring.hpp"

namespace modrad {

class Module;
using ModulePtr = std::shared_ptr<const Module>;

struct Submodule {
  ModulePtr mod;
  DenseSet elems;
  std::vector<int> gens;

  bool proper() const;
  bool zero() const;
  bool contains(int m) const { return elems.test(m); }
  bool contains_sub(const Submodule& o) const { return elems.contains(o.elems); }
  bool same_as(const Submodule& o) const { return elems == o.elems; }
  std::string to_string() const;
};

// Scalar-side ideal usable as a gate over the scalar domain. For finite
// rings this is just the ideal's element set; over the integer adapter it
// is the symbolic ideal nZ tested classwise: the residue class c + eZ lies
// inside nZ exactly when n divides both c and e (never, for n = 0).
struct ScalarIdeal {
  Ideal ideal;
  long exponent = 0;  // adapter period, 0 for finite scalar rings

  bool symbolic() const { return ideal.symbolic(); }
  bool contains_scalar(int s) const;
  DenseSet as_scalar_set(int domain) const;
  std::string to_string() const { return ideal.to_string(); }
};

struct ModuleInvariants {
  std::vector<int> neg;
  Ideal annihilator;   // (0 : M)
  Ideal jr;            // (J(R)M : M)
  DenseSet jr_scalars; // jr as a set over the scalar domain
  DenseSet z_scalars;  // Z(M)  = { r : rm = 0 for some m != 0 }
  DenseSet nz_scalars; // NZ(M) = { r : rm = 0 for some m outside Nil(M) }
  DenseSet torsion;    // T(M)  = { m : ann(m) != 0 }
  DenseSet nil;        // Nil(M) = intersection of all prime submodules
  DenseSet j_m;        // J(M)   = intersection of all maximal submodules
  DenseSet jrm;        // J(R)M as an element set
  bool faithful = false;
};

enum class SubKind { Prime, Primary, QuasiPrimary, J, QuasiJ, R, Sr, Pure, Divisible, Small };
const char* to_string(SubKind k);
std::optional<SubKind> sub_kind_from(const std::string& s);

enum class PresimplKind { Plain, Quasi, J, QuasiJ };
const char* to_string(PresimplKind k);
std::optional<PresimplKind> presimpl_kind_from(const std::string& s);

// Finite unital module over a finite ring or over the integer adapter.
// Adapter modules quantify scalars over the residues 0..exponent-1; the
// action of any integer depends only on its class mod the exponent, so
// that domain is lossless. Immutable after construction; lazy caches are
// internally synchronized.
class Module : public std::enable_shared_from_this<Module> {
 public:
  RingPtr ring;
  int n = 0;
  int zero = 0;
  long exponent = 0;  // adapter modules only (>= 1); 0 otherwise
  std::vector<int> add;  // n x n
  std::vector<int> act;  // scalar_count() x n
  std::vector<std::string> names;
  std::string label;

  int addv(int a, int b) const { return add[size_t(a) * n + b]; }
  int actv(int s, int m) const { return act[size_t(s) * n + m]; }
  int negv(int m) const { return invariants().neg[m]; }
  int subv(int a, int b) const { return addv(a, negv(b)); }
  bool adapter() const { return ring->adapter(); }
  int scalar_count() const { return adapter() ? int(exponent) : ring->n; }
  int scalar_add(int a, int b) const {
    return adapter() ? int((a + b) % exponent) : ring->addv(a, b);
  }
  int scalar_mul(int a, int b) const {
    return adapter() ? int(long(a) * b % exponent) : ring->mulv(a, b);
  }
  int scalar_one() const { return adapter() ? int(1 % exponent) : ring->one; }
  std::string scalar_name(int s) const {
    return adapter() ? std::to_string(s) : ring->name_of(s);
  }
  const std::string& name_of(int m) const { return names[m]; }
  ModulePtr self() const { return shared_from_this(); }

  const ModuleInvariants& invariants() const;
  // every submodule, ordered by (size, element set); lazily enumerated
  const std::vector<Submodule>& submodule_list() const;
  const std::vector<int>& prime_indices() const;
  const std::vector<int>& maximal_indices() const;
  // intersection of the prime (resp. maximal) submodules containing N;
  // the empty intersection is M itself. Memoized.
  Submodule m_rad(const Submodule& N) const;
  Submodule j_over(const Submodule& N) const;
  Submodule full_sub() const;
  Submodule zero_sub() const;

  static ModulePtr regular(RingPtr R);                        // R over itself
  static ModulePtr cyclic(RingPtr R, const Ideal& I);         // R/I over R
  static ModulePtr integer_module(const std::vector<long>& factors);
  static ModulePtr product(const std::vector<ModulePtr>& parts);
  static ModulePtr raw(RingPtr R, int n, std::vector<int> add, std::vector<int> act, int zero,
                       long exponent, std::vector<std::string> names, std::string label,
                       bool check_axioms = true);

 private:
  mutable std::once_flag inv_once_, lat_once_;
  mutable ModuleInvariants inv_;
  mutable std::vector<Submodule> subs_;
  mutable std::vector<int> primes_, maximals_;
  mutable std::mutex memo_mu_;
  mutable std::unordered_map<DenseSet, DenseSet, DenseSetHash> rad_memo_, jover_memo_;
};

// nullopt when add is an abelian group and the action is unital, bilinear
// and multiplicative (and, for adapter modules, the exponent is minimal);
// otherwise the first failing law with its least witness tuple.
std::optional<AxiomFailure> check_module_axioms(const Module& M);

Submodule submodule_from_set(ModulePtr M, DenseSet elems);  // gens recovered greedily
Submodule submodule_generated(ModulePtr M, const std::vector<int>& gens);
std::vector<Submodule> all_submodules(ModulePtr M);

Submodule submodule_sum(const Submodule& a, const Submodule& b);
Submodule submodule_intersect(const Submodule& a, const Submodule& b);

// (N : M) = { r : rM subset N }; symbolic kZ over the adapter with k the
// least positive residue whose action maps M into N (k = exponent when
// only 0 does)
Ideal residual_ideal(const Module& M, const Submodule& N);
ScalarIdeal residual_scalar_ideal(const Module& M, const Submodule& N);
// [N :_M I] = { m : Im subset N }
Submodule colon_submodule(const Module& M, const Submodule& N, const Ideal& I);
// (N :_M S) = { m : sm in N for all s in S }, S a nonempty scalar set
Submodule colon_by_set(const Module& M, const Submodule& N, const DenseSet& scalars);
// IM as a submodule
Submodule ideal_action(const Ideal& I, const Module& M);

Verdict submodule_predicate(const Module& M, const Submodule& N, SubKind kind);
Verdict presimplifiable(const Module& M, PresimplKind variant);
// every submodule N satisfies N = (N:M)M
Verdict is_multiplication(const Module& M);
// NK = ((N:M)(K:M))M; requires a multiplication module
Submodule submodule_product(const Module& M, const Submodule& N, const Submodule& K);
// maximal elements of the set of quasi-J submodules
std::vector<Submodule> quasi_J_maximal_set(const Module& M);
// Z_N(M) = { r : rm in N for some m outside N }, over the scalar domain
DenseSet submodule_zero_divisor_scalars(const Module& M, const Submodule& N);

bool replay_submodule_witness(const Module& M, const Submodule& N, SubKind kind,
                              const Verdict& v);

std::string set_to_string(const Module& M, const DenseSet& s);

}  // namespace modrad
