#include "modrad/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

#include "modrad/scan.hpp"

namespace modrad {

Caps& caps() {
  static Caps c = [] {
    Caps x;
    if (const char* env = std::getenv("MODRAD_CAP")) {
      long v = std::atol(env);
      if (v >= 2) x.carrier = int(std::min<long>(v, 1 << 20));
    }
    return x;
  }();
  return c;
}

namespace {

const char* kBar = "̄";

std::string bar(long v) { return std::to_string(v) + kBar; }

std::string tuple_name(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += parts[i];
  }
  return s + ")";
}

}  // namespace

const char* to_string(IdealKind k) {
  switch (k) {
    case IdealKind::Prime: return "prime";
    case IdealKind::Maximal: return "maximal";
    case IdealKind::Primary: return "primary";
    case IdealKind::QuasiPrimary: return "quasi_primary";
    case IdealKind::J: return "J";
    case IdealKind::QuasiJ: return "quasi_J";
    case IdealKind::Nil: return "n";
    case IdealKind::Reg: return "r";
  }
  return "?";
}

std::optional<IdealKind> ideal_kind_from(const std::string& s) {
  for (IdealKind k : {IdealKind::Prime, IdealKind::Maximal, IdealKind::Primary,
                      IdealKind::QuasiPrimary, IdealKind::J, IdealKind::QuasiJ, IdealKind::Nil,
                      IdealKind::Reg})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

std::string AxiomFailure::to_string() const {
  std::string s = law + " at (" + std::to_string(a);
  if (b >= 0) s += "," + std::to_string(b);
  if (c >= 0) s += "," + std::to_string(c);
  return s + ")";
}

std::optional<AxiomFailure> check_ring_axioms(int n, const std::vector<int>& add,
                                              const std::vector<int>& mul, int zero, int one) {
  if (n <= 0 || int(add.size()) != n * n || int(mul.size()) != n * n)
    return AxiomFailure{"table-shape", -1, -1, -1};
  for (int i = 0; i < n * n; ++i)
    if (add[i] < 0 || add[i] >= n || mul[i] < 0 || mul[i] >= n)
      return AxiomFailure{"entry-range", i / n, i % n, -1};
  if (zero < 0 || zero >= n || one < 0 || one >= n) return AxiomFailure{"identity-range", -1, -1, -1};
  if (zero == one) return AxiomFailure{"one-equals-zero", zero, one, -1};

  auto at = [n](const std::vector<int>& t, long a, long b) { return t[a * n + b]; };
  const long n2 = long(n) * n, n3 = n2 * n;

  long i = scan::find_first(long(n), [&](long a) { return at(add, a, zero) != a; });
  if (i >= 0) return AxiomFailure{"additive-identity", int(i), zero, -1};

  i = scan::find_first(long(n), [&](long a) {
    for (int b = 0; b < n; ++b)
      if (at(add, a, b) == zero) return false;
    return true;
  });
  if (i >= 0) return AxiomFailure{"additive-inverse", int(i), -1, -1};

  i = scan::find_first(n2, [&](long f) { return at(add, f / n, f % n) != at(add, f % n, f / n); });
  if (i >= 0) return AxiomFailure{"additive-commutativity", int(i / n), int(i % n), -1};

  i = scan::find_first(n3, [&](long f) {
    int a = int(f / n2), b = int(f / n % n), c = int(f % n);
    return at(add, at(add, a, b), c) != at(add, a, at(add, b, c));
  });
  if (i >= 0) return AxiomFailure{"additive-associativity", int(i / n2), int(i / n % n), int(i % n)};

  i = scan::find_first(long(n), [&](long a) { return at(mul, a, one) != a; });
  if (i >= 0) return AxiomFailure{"multiplicative-identity", int(i), one, -1};

  i = scan::find_first(n2, [&](long f) { return at(mul, f / n, f % n) != at(mul, f % n, f / n); });
  if (i >= 0) return AxiomFailure{"multiplicative-commutativity", int(i / n), int(i % n), -1};

  i = scan::find_first(n3, [&](long f) {
    int a = int(f / n2), b = int(f / n % n), c = int(f % n);
    return at(mul, at(mul, a, b), c) != at(mul, a, at(mul, b, c));
  });
  if (i >= 0)
    return AxiomFailure{"multiplicative-associativity", int(i / n2), int(i / n % n), int(i % n)};

  i = scan::find_first(n3, [&](long f) {
    int a = int(f / n2), b = int(f / n % n), c = int(f % n);
    return at(mul, a, at(add, b, c)) != at(add, at(mul, a, b), at(mul, a, c));
  });
  if (i >= 0) return AxiomFailure{"distributivity", int(i / n2), int(i / n % n), int(i % n)};

  return std::nullopt;
}

RingPtr Ring::residue(const std::vector<long>& moduli) {
  if (moduli.empty()) throw Error(Errc::BadModulus, "residue ring needs at least one modulus");
  long size = 1;
  for (long m : moduli) {
    if (m < 2) throw Error(Errc::BadModulus, "modulus " + std::to_string(m) + " < 2");
    size *= m;
    if (size > caps().carrier)
      throw Error(Errc::CapExceeded, "carrier " + std::to_string(size) + " exceeds cap " +
                                         std::to_string(caps().carrier));
  }
  const int n = int(size);
  const int k = int(moduli.size());
  std::vector<long> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * moduli[i + 1];

  auto ring = std::make_shared<Ring>();
  ring->kind = RingKind::ResidueProduct;
  ring->n = n;
  ring->moduli = moduli;
  ring->add.resize(size_t(n) * n);
  ring->mul.resize(size_t(n) * n);
  ring->names.resize(n);

  std::vector<long> digits(k);
  for (int x = 0; x < n; ++x) {
    long rem = x;
    std::vector<std::string> parts(k);
    for (int i = 0; i < k; ++i) {
      digits[i] = rem / stride[i];
      rem %= stride[i];
      parts[i] = bar(digits[i]);
    }
    ring->names[x] = k == 1 ? parts[0] : tuple_name(parts);
  }
  scan::parallel_for(n, [&](long x) {
    for (int y = 0; y < n; ++y) {
      long sa = 0, sm = 0;
      for (int i = 0; i < k; ++i) {
        long dx = x / stride[i] % moduli[i], dy = y / stride[i] % moduli[i];
        sa += (dx + dy) % moduli[i] * stride[i];
        sm += dx * dy % moduli[i] * stride[i];
      }
      ring->add[size_t(x) * n + y] = int(sa);
      ring->mul[size_t(x) * n + y] = int(sm);
    }
  });
  ring->zero = 0;
  ring->one = 0;
  for (int i = 0; i < k; ++i) ring->one += int(stride[i]);
  std::string lbl;
  for (int i = 0; i < k; ++i) lbl += (i ? "x" : "") + ("Z" + std::to_string(moduli[i]));
  ring->label = lbl;
  return ring;
}

RingPtr Ring::table(int n, std::vector<int> add, std::vector<int> mul, int zero, int one,
                    std::string label, RingKind kind, std::vector<std::string> names,
                    bool check_axioms) {
  if (n > caps().carrier)
    throw Error(Errc::CapExceeded,
                "carrier " + std::to_string(n) + " exceeds cap " + std::to_string(caps().carrier));
  if (check_axioms)
    if (auto fail = check_ring_axioms(n, add, mul, zero, one))
      throw Error(Errc::AxiomViolation, "ring axiom failure: " + fail->to_string());
  auto ring = std::make_shared<Ring>();
  ring->kind = kind;
  ring->n = n;
  ring->zero = zero;
  ring->one = one;
  ring->add = std::move(add);
  ring->mul = std::move(mul);
  ring->label = label.empty() ? "table-ring(" + std::to_string(n) + ")" : std::move(label);
  if (names.empty()) {
    ring->names.resize(n);
    for (int i = 0; i < n; ++i) ring->names[i] = std::to_string(i);
  } else {
    if (int(names.size()) != n) throw Error(Errc::BadTable, "name list size mismatch");
    ring->names = std::move(names);
  }
  return ring;
}

RingPtr Ring::integers() {
  static RingPtr z = [] {
    auto r = std::make_shared<Ring>();
    r->kind = RingKind::IntegerAdapter;
    r->n = 0;
    r->label = "Z";
    return r;
  }();
  return z;
}

const RingInvariants& Ring::invariants() const {
  if (adapter())
    throw Error(Errc::IntegerAdapter, "ring invariants are undefined for the symbolic integer ring");
  std::call_once(inv_once_, [this] {
    RingInvariants inv;
    inv.neg.assign(n, 0);
    std::vector<unsigned char> unit(n, 0), zd(n, 0), nil(n, 0);
    scan::parallel_for(n, [&](long a) {
      for (int b = 0; b < n; ++b) {
        if (addv(int(a), b) == zero) inv.neg[a] = b;
        if (mulv(int(a), b) == one) unit[a] = 1;
        if (b != zero && mulv(int(a), b) == zero) zd[a] = 1;
      }
      int x = int(a);
      for (int k = 1; k <= n; ++k) {
        if (x == zero) {
          nil[a] = 1;
          break;
        }
        x = mulv(x, int(a));
      }
    });
    std::vector<unsigned char> jac(n, 0);
    scan::parallel_for(n, [&](long a) {
      for (int r = 0; r < n; ++r) {
        int y = addv(one, inv.neg[mulv(r, int(a))]);  // 1 - r a
        if (!unit[y]) return;
      }
      jac[a] = 1;
    });
    inv.units = DenseSet(n);
    inv.jacobson = DenseSet(n);
    inv.nilradical = DenseSet(n);
    inv.zero_divisors = DenseSet(n);
    inv.regular = DenseSet(n);
    for (int a = 0; a < n; ++a) {
      if (unit[a]) inv.units.set(a);
      if (jac[a]) inv.jacobson.set(a);
      if (nil[a]) inv.nilradical.set(a);
      if (zd[a]) inv.zero_divisors.set(a);
      else inv.regular.set(a);
    }
    inv_ = std::move(inv);
  });
  return inv_;
}

namespace {

DenseSet ideal_close(const Ring& R, const DenseSet& start) {
  DenseSet s(R.n);
  std::vector<int> stack, members;
  auto push = [&](int x) {
    if (!s.test(x)) {
      s.set(x);
      stack.push_back(x);
    }
  };
  push(R.zero);
  start.for_each(push);
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    members.clear();
    s.for_each([&](int y) { members.push_back(y); });
    for (int y : members) push(R.addv(x, y));
    for (int r = 0; r < R.n; ++r) push(R.mulv(r, x));
  }
  return s;
}

std::vector<int> greedy_gens(const Ring& R, const DenseSet& target) {
  std::vector<int> gens;
  DenseSet have = ideal_close(R, DenseSet(R.n));
  if (have == target) return gens;
  for (int x = 0; x < R.n; ++x) {
    if (target.test(x) && !have.test(x)) {
      gens.push_back(x);
      DenseSet seed = have;
      seed.set(x);
      have = ideal_close(R, seed);
      if (have == target) break;
    }
  }
  return gens;
}

}  // namespace

const std::vector<Ideal>& Ring::ideal_list() const {
  if (adapter()) throw Error(Errc::IntegerAdapter, "ideal enumeration is symbolic over Z");
  std::call_once(ideal_once_, [this] {
    struct Entry {
      DenseSet elems;
      std::vector<int> gens;
    };
    std::vector<Entry> found;
    std::unordered_map<DenseSet, int, DenseSetHash> seen;
    Entry zero{ideal_close(*this, DenseSet(n)), {}};
    seen.emplace(zero.elems, 0);
    found.push_back(std::move(zero));
    for (size_t head = 0; head < found.size(); ++head) {
      for (int x = 0; x < n; ++x) {
        if (found[head].elems.test(x)) continue;
        DenseSet seed = found[head].elems;
        seed.set(x);
        DenseSet closed = ideal_close(*this, seed);
        if (seen.emplace(closed, int(found.size())).second) {
          auto gens = found[head].gens;
          gens.push_back(x);
          found.push_back({std::move(closed), std::move(gens)});
          if (int(found.size()) > caps().ideals)
            throw Error(Errc::CapExceeded, "ideal count exceeds cap");
        }
      }
    }
    std::sort(found.begin(), found.end(),
              [](const Entry& a, const Entry& b) { return a.elems.lex_less(b.elems); });
    auto self = shared_from_this();
    ideals_.reserve(found.size());
    for (auto& e : found) ideals_.push_back(Ideal{self, std::move(e.elems), std::move(e.gens), -1});
    for (size_t i = 0; i < ideals_.size(); ++i) {
      const Ideal& I = ideals_[i];
      if (!I.proper()) continue;
      bool maximal = true;
      for (const Ideal& J : ideals_)
        if (J.proper() && !(J.elems == I.elems) && J.elems.contains(I.elems)) {
          maximal = false;
          break;
        }
      if (maximal) maximals_.push_back(int(i));
    }
  });
  return ideals_;
}

const std::vector<int>& Ring::maximal_ideal_indices() const {
  ideal_list();
  return maximals_;
}

bool Ideal::proper() const {
  if (symbolic()) return sym != 1;
  return elems.count() != ring->n;
}

bool Ideal::zero() const {
  if (symbolic()) return sym == 0;
  return elems.count() == 1;
}

bool Ideal::contains_ideal(const Ideal& o) const {
  if (symbolic() != o.symbolic()) throw Error(Errc::RingMismatch, "mixed symbolic/finite ideals");
  if (symbolic()) {
    if (sym == 0) return o.sym == 0;
    return o.sym % sym == 0;  // oZ subset symZ iff sym | o (with 0 % k == 0 for 0Z)
  }
  return elems.contains(o.elems);
}

bool Ideal::same_as(const Ideal& o) const {
  return contains_ideal(o) && o.contains_ideal(*this);
}

std::string Ideal::to_string() const {
  if (symbolic()) return std::to_string(sym) + "ℤ";
  if (gens.empty()) return "⟨" + ring->name_of(ring->zero) + "⟩";
  std::string s = "⟨";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += ring->name_of(gens[i]);
  }
  return s + "⟩";
}

std::string set_to_string(const Ring& R, const DenseSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int x) {
    if (!first) out += ",";
    first = false;
    out += R.name_of(x);
  });
  return out + "}";
}

Ideal ideal_from_set(RingPtr R, DenseSet elems) {
  Ideal I{R, std::move(elems), {}, -1};
  I.gens = greedy_gens(*R, I.elems);
  return I;
}

Ideal ideal_generated(RingPtr R, const std::vector<int>& gens) {
  if (R->adapter()) {
    long g = 0;
    for (int x : gens) g = std::gcd(g, long(x));
    return symbolic_ideal(g);
  }
  DenseSet seed(R->n);
  for (int g : gens) {
    if (g < 0 || g >= R->n) throw Error(Errc::BadElement, "generator index out of range");
    seed.set(g);
  }
  Ideal I{R, ideal_close(*R, seed), gens, -1};
  return I;
}

Ideal symbolic_ideal(long n) {
  if (n < 0) throw Error(Errc::BadElement, "symbolic ideal needs n >= 0");
  return Ideal{Ring::integers(), DenseSet(), {}, n};
}

std::vector<Ideal> all_ideals(RingPtr R) { return R->ideal_list(); }

namespace {

// distinct-prime product; rad(0) = 0
long squarefree_kernel(long n) {
  long r = 1;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      r *= p;
      while (n % p == 0) n /= p;
    }
  return n == 0 ? 0 : r * n;
}

bool elem_power_in(const Ring& R, int x, const DenseSet& I) {
  int y = x;
  for (int k = 1; k <= R.n; ++k) {
    if (I.test(y)) return true;
    y = R.mulv(y, x);
  }
  return false;
}

}  // namespace

Ideal radical_of_ideal(const Ideal& I) {
  if (I.symbolic()) return symbolic_ideal(squarefree_kernel(I.sym));
  const Ring& R = *I.ring;
  std::vector<unsigned char> in(R.n, 0);
  scan::parallel_for(R.n, [&](long x) { in[x] = elem_power_in(R, int(x), I.elems); });
  DenseSet s(R.n);
  for (int x = 0; x < R.n; ++x)
    if (in[x]) s.set(x);
  return ideal_from_set(I.ring, std::move(s));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (a.symbolic() || b.symbolic()) {
    if (!a.symbolic() || !b.symbolic()) throw Error(Errc::RingMismatch, "mixed ideal product");
    return symbolic_ideal(a.sym * b.sym);
  }
  if (a.ring != b.ring) throw Error(Errc::RingMismatch, "ideal product across rings");
  const Ring& R = *a.ring;
  DenseSet seed(R.n);
  a.elems.for_each([&](int x) { b.elems.for_each([&](int y) { seed.set(R.mulv(x, y)); }); });
  return ideal_from_set(a.ring, ideal_close(R, seed));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  if (a.symbolic() || b.symbolic()) {
    if (!a.symbolic() || !b.symbolic()) throw Error(Errc::RingMismatch, "mixed ideal intersect");
    return symbolic_ideal(std::lcm(a.sym, b.sym));
  }
  if (a.ring != b.ring) throw Error(Errc::RingMismatch, "ideal intersect across rings");
  return ideal_from_set(a.ring, a.elems & b.elems);
}

namespace {

WitnessPart part(const Ring& R, const char* role, int x) {
  return WitnessPart{role, x, R.name_of(x)};
}

// first (a,b) in lex order with ab in I, a outside gate, b outside target
Verdict pair_scan(const Ring& R, const DenseSet& I, const DenseSet& gate_outside,
                  const DenseSet& target, const char* flag = "") {
  const long n = R.n;
  long f = scan::find_first(n * n, [&](long i) {
    int a = int(i / n), b = int(i % n);
    return I.test(R.mulv(a, b)) && !gate_outside.test(a) && !target.test(b);
  });
  if (f < 0) return Verdict::yes();
  return Verdict::no({part(R, "a", int(f / R.n)), part(R, "b", int(f % R.n))}, flag);
}

}  // namespace

Verdict ideal_predicate(const Ideal& I, IdealKind kind) {
  if (I.symbolic())
    throw Error(Errc::IntegerAdapter, "use the symbolic predicate for ideals of Z");
  const Ring& R = *I.ring;
  if (!I.proper()) return Verdict::improper("ideal is the whole ring");
  switch (kind) {
    case IdealKind::Prime:
      return pair_scan(R, I.elems, I.elems, I.elems);
    case IdealKind::Maximal: {
      // R/I a field: every a outside I invertible mod I
      DenseSet one_coset(R.n);
      I.elems.for_each([&](int i) { one_coset.set(R.addv(R.one, i)); });
      long f = scan::find_first(R.n, [&](long a) {
        if (I.elems.test(int(a))) return false;
        for (int b = 0; b < R.n; ++b)
          if (one_coset.test(R.mulv(int(a), b))) return false;
        return true;
      });
      if (f < 0) return Verdict::yes();
      return Verdict::no({part(R, "a", int(f))});
    }
    case IdealKind::Primary:
      return pair_scan(R, I.elems, I.elems, radical_of_ideal(I).elems);
    case IdealKind::QuasiPrimary: {
      Ideal rad = radical_of_ideal(I);
      if (!rad.proper()) return Verdict::improper("radical is the whole ring");
      Verdict v = pair_scan(*rad.ring, rad.elems, rad.elems, radical_of_ideal(rad).elems, "radical");
      return v;
    }
    case IdealKind::J:
      return pair_scan(R, I.elems, R.invariants().jacobson, I.elems);
    case IdealKind::QuasiJ: {
      Ideal rad = radical_of_ideal(I);
      if (!rad.proper()) return Verdict::improper("radical is the whole ring");
      return pair_scan(R, rad.elems, R.invariants().jacobson, rad.elems, "radical");
    }
    case IdealKind::Nil:
      return pair_scan(R, I.elems, R.invariants().nilradical, I.elems);
    case IdealKind::Reg: {
      // Ann(a) = 0 means a is regular
      const DenseSet& reg = R.invariants().regular;
      const long n = R.n;
      long f = scan::find_first(n * n, [&](long i) {
        int a = int(i / n), b = int(i % n);
        return I.elems.test(R.mulv(a, b)) && reg.test(a) && !I.elems.test(b);
      });
      if (f < 0) return Verdict::yes();
      return Verdict::no({part(R, "a", int(f / R.n)), part(R, "b", int(f % R.n))});
    }
  }
  return Verdict::yes();
}

DenseSet ideal_zero_divisor_set(const Ideal& I) {
  if (I.symbolic()) throw Error(Errc::IntegerAdapter, "Z_I is finite-ring only");
  const Ring& R = *I.ring;
  std::vector<unsigned char> in(R.n, 0);
  scan::parallel_for(R.n, [&](long r) {
    for (int s = 0; s < R.n; ++s)
      if (!I.elems.test(s) && I.elems.test(R.mulv(int(r), s))) {
        in[r] = 1;
        return;
      }
  });
  DenseSet out(R.n);
  for (int r = 0; r < R.n; ++r)
    if (in[r]) out.set(r);
  return out;
}

bool replay_ideal_witness(const Ideal& I, IdealKind kind, const Verdict& v) {
  if (v.holds || v.witness.empty()) return false;
  if (v.flag == "improper") return !I.proper();
  const Ring& R = *I.ring;
  auto find = [&](const char* role) -> int {
    for (const auto& p : v.witness)
      if (p.role == role) return int(p.index);
    return -1;
  };
  DenseSet target = I.elems;
  if (v.flag == "radical") target = radical_of_ideal(I).elems;
  switch (kind) {
    case IdealKind::Prime: {
      int a = find("a"), b = find("b");
      return target.test(R.mulv(a, b)) && !target.test(a) && !target.test(b);
    }
    case IdealKind::Maximal: {
      int a = find("a");
      if (a < 0 || I.elems.test(a)) return false;
      for (int b = 0; b < R.n; ++b) {
        int diff = R.subv(R.mulv(a, b), R.one);
        if (I.elems.test(diff)) return false;
      }
      return true;
    }
    case IdealKind::Primary: {
      int a = find("a"), b = find("b");
      return I.elems.test(R.mulv(a, b)) && !I.elems.test(a) &&
             !radical_of_ideal(I).elems.test(b);
    }
    case IdealKind::QuasiPrimary: {
      int a = find("a"), b = find("b");
      DenseSet rad2 = radical_of_ideal(radical_of_ideal(I)).elems;
      return target.test(R.mulv(a, b)) && !target.test(a) && !rad2.test(b);
    }
    case IdealKind::J:
    case IdealKind::QuasiJ: {
      int a = find("a"), b = find("b");
      return target.test(R.mulv(a, b)) && !R.invariants().jacobson.test(a) && !target.test(b);
    }
    case IdealKind::Nil: {
      int a = find("a"), b = find("b");
      return I.elems.test(R.mulv(a, b)) && !R.invariants().nilradical.test(a) &&
             !I.elems.test(b);
    }
    case IdealKind::Reg: {
      int a = find("a"), b = find("b");
      return I.elems.test(R.mulv(a, b)) && R.invariants().regular.test(a) && !I.elems.test(b);
    }
  }
  return false;
}

}  // namespace modrad
