#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "modrad/config.hpp"
#include "modrad/dense_set.hpp"
#include "modrad/verdict.hpp"

namespace modrad {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

enum class RingKind { ResidueProduct, Table, IntegerAdapter };

// Ideal of a ring. Finite rings carry the element set plus a generator
// list; the integer adapter carries the symbolic form nZ (sym = n >= 0,
// sym == 0 is the zero ideal, sym == 1 the whole ring).
struct Ideal {
  RingPtr ring;
  DenseSet elems;
  std::vector<int> gens;
  long sym = -1;

  bool symbolic() const { return sym >= 0; }
  bool proper() const;
  bool zero() const;
  bool contains(int x) const { return elems.test(x); }
  bool contains_ideal(const Ideal& o) const;
  bool same_as(const Ideal& o) const;
  std::string to_string() const;
};

struct RingInvariants {
  std::vector<int> neg;
  DenseSet units, jacobson, nilradical, zero_divisors, regular;
};

enum class IdealKind { Prime, Maximal, Primary, QuasiPrimary, J, QuasiJ, Nil, Reg };
const char* to_string(IdealKind k);
std::optional<IdealKind> ideal_kind_from(const std::string& s);

struct AxiomFailure {
  std::string law;
  int a = -1, b = -1, c = -1;
  std::string to_string() const;
};

// Finite commutative ring with identity, given by full operation tables,
// or the symbolic integer adapter (n == 0, no tables). Immutable after
// construction; the lazy caches are internally synchronized, so shared
// instances are safe to read from several threads.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  RingKind kind = RingKind::Table;
  int n = 0;
  int zero = 0, one = 0;
  std::vector<int> add, mul;
  std::vector<long> moduli;  // residue-product rings
  std::vector<std::string> names;
  std::string label;

  int addv(int a, int b) const { return add[size_t(a) * n + b]; }
  int mulv(int a, int b) const { return mul[size_t(a) * n + b]; }
  int negv(int a) const { return invariants().neg[a]; }
  int subv(int a, int b) const { return addv(a, negv(b)); }
  bool adapter() const { return kind == RingKind::IntegerAdapter; }
  RingPtr self() const { return shared_from_this(); }
  const std::string& name_of(int x) const { return names[x]; }

  const RingInvariants& invariants() const;
  // every ideal, ordered by (size, element set); lazily enumerated once
  const std::vector<Ideal>& ideal_list() const;
  const std::vector<int>& maximal_ideal_indices() const;

  static RingPtr residue(const std::vector<long>& moduli);
  static RingPtr table(int n, std::vector<int> add, std::vector<int> mul, int zero, int one,
                       std::string label = "", RingKind kind = RingKind::Table,
                       std::vector<std::string> names = {}, bool check_axioms = true);
  static RingPtr integers();

 private:
  mutable std::once_flag inv_once_, ideal_once_;
  mutable RingInvariants inv_;
  mutable std::vector<Ideal> ideals_;
  mutable std::vector<int> maximals_;
};

// nullopt when the tables satisfy all commutative-ring-with-identity
// axioms; otherwise the first failing law in a fixed law order, with the
// lexicographically least witness tuple for that law.
std::optional<AxiomFailure> check_ring_axioms(int n, const std::vector<int>& add,
                                              const std::vector<int>& mul, int zero, int one);

Ideal ideal_from_set(RingPtr R, DenseSet elems);        // gens recovered greedily
Ideal ideal_generated(RingPtr R, const std::vector<int>& gens);
Ideal symbolic_ideal(long n);                           // nZ over the adapter
std::vector<Ideal> all_ideals(RingPtr R);
Ideal radical_of_ideal(const Ideal& I);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Verdict ideal_predicate(const Ideal& I, IdealKind kind);
// Z_I(R) = { r : rs in I for some s outside I }
DenseSet ideal_zero_divisor_set(const Ideal& I);

// re-evaluates the defining formula at a false verdict's witness
bool replay_ideal_witness(const Ideal& I, IdealKind kind, const Verdict& v);

std::string set_to_string(const Ring& R, const DenseSet& s);

}  // namespace modrad
