#include "modrad/module.hpp"

#include <algorithm>
#include <numeric>

#include "modrad/scan.hpp"

namespace modrad {

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

DenseSet full_set(int n) {
  DenseSet s(n);
  for (int i = 0; i < n; ++i) s.set(i);
  return s;
}

DenseSet submodule_close(const Module& M, const DenseSet& start) {
  DenseSet s(M.n);
  std::vector<int> stack, members;
  auto push = [&](int x) {
    if (!s.test(x)) {
      s.set(x);
      stack.push_back(x);
    }
  };
  push(M.zero);
  start.for_each(push);
  const int S = M.scalar_count();
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    members.clear();
    s.for_each([&](int y) { members.push_back(y); });
    for (int y : members) push(M.addv(x, y));
    for (int r = 0; r < S; ++r) push(M.actv(r, x));
  }
  return s;
}

std::vector<int> greedy_gens(const Module& M, const DenseSet& target) {
  std::vector<int> gens;
  DenseSet have = submodule_close(M, DenseSet(M.n));
  for (int x = 0; x < M.n && !(have == target); ++x) {
    if (target.test(x) && !have.test(x)) {
      gens.push_back(x);
      DenseSet seed = have;
      seed.set(x);
      have = submodule_close(M, seed);
    }
  }
  if (!(have == target)) throw Error(Errc::BadElement, "element set is not a submodule");
  return gens;
}

// { s : sM subset N } over the scalar domain
DenseSet scalar_residual(const Module& M, const DenseSet& N) {
  const int S = M.scalar_count();
  DenseSet out(S);
  for (int s = 0; s < S; ++s) {
    bool all = true;
    for (int m = 0; m < M.n && all; ++m) all = N.test(M.actv(s, m));
    if (all) out.set(s);
  }
  return out;
}

WitnessPart spart(const Module& M, const char* role, int s) {
  return WitnessPart{role, s, M.scalar_name(s)};
}

WitnessPart mpart(const Module& M, const char* role, int m) {
  return WitnessPart{role, m, M.name_of(m)};
}

// first (r,m), scalars major, with rm in N, r outside gate, m outside target
Verdict mod_pair_scan(const Module& M, const DenseSet& N, const DenseSet& gate_outside,
                      const DenseSet& target) {
  const long S = M.scalar_count(), n = M.n;
  long f = scan::find_first(S * n, [&](long i) {
    int s = int(i / n), m = int(i % n);
    return N.test(M.actv(s, m)) && !gate_outside.test(s) && !target.test(m);
  });
  if (f < 0) return Verdict::yes();
  return Verdict::no({spart(M, "r", int(f / n)), mpart(M, "m", int(f % n))});
}

DenseSet radical_residual_scalars(const Module& M, const Submodule& N) {
  Ideal rad = radical_of_ideal(residual_ideal(M, N));
  return ScalarIdeal{std::move(rad), M.exponent}.as_scalar_set(M.scalar_count());
}

// ann_M(s) = 0: s kills no nonzero element
bool scalar_kills_nothing(const Module& M, int s) {
  for (int m = 0; m < M.n; ++m)
    if (m != M.zero && M.actv(s, m) == M.zero) return false;
  return true;
}

// ann_R(m) = 0: no nonzero scalar kills m; never true over the adapter
// (the exponent itself is a nonzero annihilating integer)
bool element_free(const Module& M, int m) {
  if (M.adapter()) return false;
  for (int s = 0; s < M.scalar_count(); ++s)
    if (s != M.ring->zero && M.actv(s, m) == M.zero) return false;
  return true;
}

DenseSet act_image(const Module& M, int s, const DenseSet& X) {
  DenseSet out(M.n);
  X.for_each([&](int x) { out.set(M.actv(s, x)); });
  return out;
}

DenseSet sum_set(const Module& M, const DenseSet& A, const DenseSet& B) {
  DenseSet out(M.n);
  A.for_each([&](int a) { B.for_each([&](int b) { out.set(M.addv(a, b)); }); });
  return out;
}

DenseSet regular_scalars(const Module& M) {
  // every residue class contains a nonzero integer, so all adapter scalar
  // classes meet reg(Z)
  if (M.adapter()) return full_set(M.scalar_count());
  return M.ring->invariants().regular;
}

}  // namespace

const char* to_string(SubKind k) {
  switch (k) {
    case SubKind::Prime: return "prime";
    case SubKind::Primary: return "primary";
    case SubKind::QuasiPrimary: return "quasi_primary";
    case SubKind::J: return "J";
    case SubKind::QuasiJ: return "quasi_J";
    case SubKind::R: return "r";
    case SubKind::Sr: return "sr";
    case SubKind::Pure: return "pure";
    case SubKind::Divisible: return "divisible";
    case SubKind::Small: return "small";
  }
  return "?";
}

std::optional<SubKind> sub_kind_from(const std::string& s) {
  for (SubKind k : {SubKind::Prime, SubKind::Primary, SubKind::QuasiPrimary, SubKind::J,
                    SubKind::QuasiJ, SubKind::R, SubKind::Sr, SubKind::Pure, SubKind::Divisible,
                    SubKind::Small})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

const char* to_string(PresimplKind k) {
  switch (k) {
    case PresimplKind::Plain: return "plain";
    case PresimplKind::Quasi: return "quasi";
    case PresimplKind::J: return "J";
    case PresimplKind::QuasiJ: return "quasi_J";
  }
  return "?";
}

std::optional<PresimplKind> presimpl_kind_from(const std::string& s) {
  for (PresimplKind k :
       {PresimplKind::Plain, PresimplKind::Quasi, PresimplKind::J, PresimplKind::QuasiJ})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

bool Submodule::proper() const { return elems.count() != mod->n; }

bool Submodule::zero() const { return elems.count() == 1; }

std::string Submodule::to_string() const {
  if (gens.empty()) return "⟨" + mod->name_of(mod->zero) + "⟩";
  std::string s = "⟨";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += mod->name_of(gens[i]);
  }
  return s + "⟩";
}

bool ScalarIdeal::contains_scalar(int s) const {
  if (!symbolic()) return ideal.elems.test(s);
  // class s + eZ inside nZ
  return ideal.sym > 0 && s % ideal.sym == 0 && exponent % ideal.sym == 0;
}

DenseSet ScalarIdeal::as_scalar_set(int domain) const {
  if (!symbolic()) return ideal.elems;
  DenseSet out(domain);
  for (int s = 0; s < domain; ++s)
    if (contains_scalar(s)) out.set(s);
  return out;
}

ModulePtr Module::raw(RingPtr R, int n, std::vector<int> add, std::vector<int> act, int zero,
                      long exponent, std::vector<std::string> names, std::string label,
                      bool check_axioms) {
  if (n < 1 || n > caps().carrier)
    throw Error(Errc::CapExceeded, "module carrier " + std::to_string(n) + " out of range");
  auto mod = std::make_shared<Module>();
  mod->ring = std::move(R);
  mod->n = n;
  mod->zero = zero;
  mod->exponent = mod->ring->adapter() ? exponent : 0;
  mod->add = std::move(add);
  mod->act = std::move(act);
  if (names.empty()) {
    mod->names.resize(n);
    for (int i = 0; i < n; ++i) mod->names[i] = std::to_string(i);
  } else {
    mod->names = std::move(names);
  }
  mod->label = std::move(label);
  if (check_axioms)
    if (auto fail = check_module_axioms(*mod))
      throw Error(Errc::AxiomViolation, "module axiom failure: " + fail->to_string());
  return mod;
}

ModulePtr Module::regular(RingPtr R) {
  if (R->adapter())
    throw Error(Errc::IntegerAdapter, "the integer ring is not a finite module over itself");
  return raw(R, R->n, R->add, R->mul, R->zero, 0, R->names, R->label, false);
}

ModulePtr Module::cyclic(RingPtr R, const Ideal& I) {
  if (R->adapter()) throw Error(Errc::IntegerAdapter, "cyclic modules need a finite scalar ring");
  if (I.ring != R) throw Error(Errc::RingMismatch, "ideal belongs to a different ring");
  const int rn = R->n;
  std::vector<int> rep_of(rn, -1), reps, index_of(rn, -1);
  for (int x = 0; x < rn; ++x) {
    if (rep_of[x] >= 0) continue;
    index_of[x] = int(reps.size());
    reps.push_back(x);
    I.elems.for_each([&](int i) { rep_of[R->addv(x, i)] = x; });
  }
  const int cn = int(reps.size());
  std::vector<int> add(size_t(cn) * cn), act(size_t(rn) * cn);
  for (int a = 0; a < cn; ++a)
    for (int b = 0; b < cn; ++b) add[size_t(a) * cn + b] = index_of[rep_of[R->addv(reps[a], reps[b])]];
  for (int r = 0; r < rn; ++r)
    for (int b = 0; b < cn; ++b) act[size_t(r) * cn + b] = index_of[rep_of[R->mulv(r, reps[b])]];
  std::vector<std::string> names(cn);
  for (int i = 0; i < cn; ++i) names[i] = R->name_of(reps[i]);
  return raw(R, cn, std::move(add), std::move(act), index_of[rep_of[R->zero]], 0,
             std::move(names), R->label + "/" + I.to_string(), false);
}

ModulePtr Module::integer_module(const std::vector<long>& factors) {
  if (factors.empty()) throw Error(Errc::BadModulus, "integer module needs at least one factor");
  long size = 1, e = 1;
  for (long d : factors) {
    if (d < 2) throw Error(Errc::BadModulus, "invariant factor " + std::to_string(d) + " < 2");
    size *= d;
    e = std::lcm(e, d);
    if (size > caps().carrier)
      throw Error(Errc::CapExceeded, "carrier " + std::to_string(size) + " exceeds cap " +
                                         std::to_string(caps().carrier));
  }
  const int n = int(size);
  const int k = int(factors.size());
  std::vector<long> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * factors[i + 1];

  std::vector<std::string> names(n);
  for (int x = 0; x < n; ++x) {
    std::vector<std::string> parts(k);
    for (int i = 0; i < k; ++i) parts[i] = bar(x / stride[i] % factors[i]);
    names[x] = k == 1 ? parts[0] : tuple_name(parts);
  }
  std::vector<int> add(size_t(n) * n), act(size_t(e) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      long v = 0;
      for (int i = 0; i < k; ++i)
        v += (x / stride[i] % factors[i] + y / stride[i] % factors[i]) % factors[i] * stride[i];
      add[size_t(x) * n + y] = int(v);
    }
  for (long s = 0; s < e; ++s)
    for (int x = 0; x < n; ++x) {
      long v = 0;
      for (int i = 0; i < k; ++i) v += s * (x / stride[i] % factors[i]) % factors[i] * stride[i];
      act[size_t(s) * n + x] = int(v);
    }
  std::string lbl;
  for (int i = 0; i < k; ++i) lbl += (i ? "x" : "") + ("Z" + std::to_string(factors[i]));
  return raw(Ring::integers(), n, std::move(add), std::move(act), 0, e, std::move(names),
             std::move(lbl), false);
}

ModulePtr Module::product(const std::vector<ModulePtr>& parts) {
  if (parts.empty()) throw Error(Errc::BadModulus, "product of no modules");
  RingPtr R = parts[0]->ring;
  long size = 1, e = parts[0]->adapter() ? 1 : 0;
  for (const auto& p : parts) {
    if (p->ring != R) throw Error(Errc::RingMismatch, "product parts over different rings");
    size *= p->n;
    if (p->adapter()) e = std::lcm(e, p->exponent);
    if (size > caps().carrier)
      throw Error(Errc::CapExceeded, "carrier " + std::to_string(size) + " exceeds cap " +
                                         std::to_string(caps().carrier));
  }
  const int n = int(size);
  const int k = int(parts.size());
  std::vector<long> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * parts[i + 1]->n;
  const long S = R->adapter() ? e : R->n;

  std::vector<std::string> names(n);
  for (int x = 0; x < n; ++x) {
    std::vector<std::string> sub(k);
    for (int i = 0; i < k; ++i) sub[i] = parts[i]->name_of(int(x / stride[i] % parts[i]->n));
    names[x] = tuple_name(sub);
  }
  std::vector<int> add(size_t(n) * n), act(size_t(S) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      long v = 0;
      for (int i = 0; i < k; ++i) {
        int xi = int(x / stride[i] % parts[i]->n), yi = int(y / stride[i] % parts[i]->n);
        v += long(parts[i]->addv(xi, yi)) * stride[i];
      }
      add[size_t(x) * n + y] = int(v);
    }
  for (long s = 0; s < S; ++s)
    for (int x = 0; x < n; ++x) {
      long v = 0;
      for (int i = 0; i < k; ++i) {
        int xi = int(x / stride[i] % parts[i]->n);
        int si = parts[i]->adapter() ? int(s % parts[i]->exponent) : int(s);
        v += long(parts[i]->actv(si, xi)) * stride[i];
      }
      act[size_t(s) * n + x] = int(v);
    }
  std::string lbl;
  for (int i = 0; i < k; ++i) lbl += (i ? "x" : "") + parts[i]->label;
  long zero = 0;
  for (int i = 0; i < k; ++i) zero += long(parts[i]->zero) * stride[i];
  return raw(R, n, std::move(add), std::move(act), int(zero), e, std::move(names),
             std::move(lbl), false);
}

std::optional<AxiomFailure> check_module_axioms(const Module& M) {
  const int n = M.n;
  const long S = M.scalar_count();
  if (n <= 0 || int(M.add.size()) != n * n || long(M.act.size()) != S * n ||
      int(M.names.size()) != n)
    return AxiomFailure{"table-shape", -1, -1, -1};
  for (int v : M.add)
    if (v < 0 || v >= n) return AxiomFailure{"entry-range", -1, -1, -1};
  for (int v : M.act)
    if (v < 0 || v >= n) return AxiomFailure{"entry-range", -1, -1, -1};
  if (M.zero < 0 || M.zero >= n) return AxiomFailure{"identity-range", -1, -1, -1};
  if (M.adapter() && (M.exponent < 1 || (M.exponent == 1) != (n == 1)))
    return AxiomFailure{"exponent-range", -1, -1, -1};

  long i = scan::find_first(n, [&](long a) { return M.addv(int(a), M.zero) != a; });
  if (i >= 0) return AxiomFailure{"additive-identity", int(i), M.zero, -1};

  i = scan::find_first(n, [&](long a) {
    for (int b = 0; b < n; ++b)
      if (M.addv(int(a), b) == M.zero) return false;
    return true;
  });
  if (i >= 0) return AxiomFailure{"additive-inverse", int(i), -1, -1};

  const long n2 = long(n) * n;
  i = scan::find_first(n2, [&](long f) {
    return M.addv(int(f / n), int(f % n)) != M.addv(int(f % n), int(f / n));
  });
  if (i >= 0) return AxiomFailure{"additive-commutativity", int(i / n), int(i % n), -1};

  i = scan::find_first(n2 * n, [&](long f) {
    int a = int(f / n2), b = int(f / n % n), c = int(f % n);
    return M.addv(M.addv(a, b), c) != M.addv(a, M.addv(b, c));
  });
  if (i >= 0) return AxiomFailure{"additive-associativity", int(i / n2), int(i / n % n), int(i % n)};

  i = scan::find_first(n, [&](long m) { return M.actv(M.scalar_one(), int(m)) != m; });
  if (i >= 0) return AxiomFailure{"action-identity", int(i), -1, -1};

  i = scan::find_first(S * n2, [&](long f) {
    int s = int(f / n2), a = int(f / n % n), b = int(f % n);
    return M.actv(s, M.addv(a, b)) != M.addv(M.actv(s, a), M.actv(s, b));
  });
  if (i >= 0) return AxiomFailure{"action-additivity", int(i / n2), int(i / n % n), int(i % n)};

  i = scan::find_first(S * S * n, [&](long f) {
    int s = int(f / (S * n)), t = int(f / n % S), m = int(f % n);
    return M.actv(M.scalar_add(s, t), m) != M.addv(M.actv(s, m), M.actv(t, m));
  });
  if (i >= 0) return AxiomFailure{"scalar-additivity", int(i / (S * n)), int(i / n % S), int(i % n)};

  i = scan::find_first(S * S * n, [&](long f) {
    int s = int(f / (S * n)), t = int(f / n % S), m = int(f % n);
    return M.actv(s, M.actv(t, m)) != M.actv(M.scalar_mul(s, t), m);
  });
  if (i >= 0)
    return AxiomFailure{"action-associativity", int(i / (S * n)), int(i / n % S), int(i % n)};

  if (M.adapter()) {
    // the tables force act(d, m) = d.m, so exponent laws reduce to rows
    i = scan::find_first(n, [&](long m) { return M.actv(0, int(m)) != M.zero; });
    if (i >= 0) return AxiomFailure{"exponent-annihilates", int(i), -1, -1};
    for (long d = 1; d < M.exponent; ++d) {
      bool kills_all = true;
      for (int m = 0; m < n && kills_all; ++m) kills_all = M.actv(int(d), m) == M.zero;
      if (kills_all) return AxiomFailure{"exponent-not-minimal", int(d), -1, -1};
    }
  }
  return std::nullopt;
}

const ModuleInvariants& Module::invariants() const {
  std::call_once(inv_once_, [this] {
    ModuleInvariants inv;
    const int S = scalar_count();
    inv.neg.assign(n, 0);
    scan::parallel_for(n, [&](long a) {
      for (int b = 0; b < n; ++b)
        if (addv(int(a), b) == zero) {
          inv.neg[a] = b;
          break;
        }
    });

    if (adapter()) {
      inv.jrm = DenseSet(n);
      inv.jrm.set(zero);
      inv.annihilator = symbolic_ideal(exponent);
      inv.jr = symbolic_ideal(exponent);  // (0.M : M) = ann(M)
      inv.faithful = false;
    } else {
      const DenseSet& jac = ring->invariants().jacobson;
      DenseSet seed(n);
      jac.for_each([&](int r) {
        for (int m = 0; m < n; ++m) seed.set(actv(r, m));
      });
      inv.jrm = submodule_close(*this, seed);
      DenseSet annset(ring->n), jrset(ring->n);
      for (int r = 0; r < ring->n; ++r) {
        bool ann = true, jr = true;
        for (int m = 0; m < n && (ann || jr); ++m) {
          int v = actv(r, m);
          ann = ann && v == zero;
          jr = jr && inv.jrm.test(v);
        }
        if (ann) annset.set(r);
        if (jr) jrset.set(r);
      }
      inv.annihilator = ideal_from_set(ring, annset);
      inv.jr = ideal_from_set(ring, std::move(jrset));
      inv.faithful = inv.annihilator.elems.count() == 1;
    }
    inv.jr_scalars = ScalarIdeal{inv.jr, exponent}.as_scalar_set(S);

    submodule_list();
    DenseSet nil = full_set(n), jm = full_set(n);
    for (int i : primes_) nil &= subs_[i].elems;
    for (int i : maximals_) jm &= subs_[i].elems;
    inv.nil = nil;
    inv.j_m = jm;

    inv.z_scalars = DenseSet(S);
    inv.nz_scalars = DenseSet(S);
    for (int s = 0; s < S; ++s)
      for (int m = 0; m < n; ++m) {
        if (actv(s, m) != zero) continue;
        if (m != zero) inv.z_scalars.set(s);
        if (!nil.test(m)) inv.nz_scalars.set(s);
      }

    inv.torsion = DenseSet(n);
    for (int m = 0; m < n; ++m) {
      if (adapter()) {
        inv.torsion.set(m);  // the exponent annihilates everything
        continue;
      }
      for (int s = 0; s < S; ++s)
        if (s != ring->zero && actv(s, m) == zero) {
          inv.torsion.set(m);
          break;
        }
    }
    inv_ = std::move(inv);
  });
  return inv_;
}

const std::vector<Submodule>& Module::submodule_list() const {
  std::call_once(lat_once_, [this] {
    struct Entry {
      DenseSet elems;
      std::vector<int> gens;
    };
    std::vector<Entry> found;
    std::unordered_map<DenseSet, int, DenseSetHash> seen;
    Entry zero_e{submodule_close(*this, DenseSet(n)), {}};
    seen.emplace(zero_e.elems, 0);
    found.push_back(std::move(zero_e));
    for (size_t head = 0; head < found.size(); ++head) {
      for (int x = 0; x < n; ++x) {
        if (found[head].elems.test(x)) continue;
        DenseSet seed = found[head].elems;
        seed.set(x);
        DenseSet closed = submodule_close(*this, seed);
        if (seen.emplace(closed, int(found.size())).second) {
          auto gens = found[head].gens;
          gens.push_back(x);
          found.push_back({std::move(closed), std::move(gens)});
          if (int(found.size()) > caps().submodules)
            throw Error(Errc::CapExceeded, "submodule count exceeds cap");
        }
      }
    }
    std::sort(found.begin(), found.end(),
              [](const Entry& a, const Entry& b) { return a.elems.lex_less(b.elems); });
    auto self_ptr = shared_from_this();
    subs_.reserve(found.size());
    for (auto& e : found) subs_.push_back(Submodule{self_ptr, std::move(e.elems), std::move(e.gens)});

    const long S = scalar_count();
    for (size_t i = 0; i < subs_.size(); ++i) {
      const DenseSet& N = subs_[i].elems;
      if (N.count() == n) continue;
      bool maximal = true;
      for (const Submodule& K : subs_)
        if (K.elems.count() != n && !(K.elems == N) && K.elems.contains(N)) {
          maximal = false;
          break;
        }
      if (maximal) maximals_.push_back(int(i));
      DenseSet res = scalar_residual(*this, N);
      long bad = scan::find_first(S * n, [&](long f) {
        int s = int(f / n), m = int(f % n);
        return N.test(actv(s, m)) && !N.test(m) && !res.test(s);
      });
      if (bad < 0) primes_.push_back(int(i));
    }
  });
  return subs_;
}

const std::vector<int>& Module::prime_indices() const {
  submodule_list();
  return primes_;
}

const std::vector<int>& Module::maximal_indices() const {
  submodule_list();
  return maximals_;
}

Submodule Module::m_rad(const Submodule& N) const {
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = rad_memo_.find(N.elems);
    if (it != rad_memo_.end()) return submodule_from_set(self(), it->second);
  }
  submodule_list();
  DenseSet out = full_set(n);
  for (int i : primes_)
    if (subs_[i].elems.contains(N.elems)) out &= subs_[i].elems;
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    rad_memo_.emplace(N.elems, out);
  }
  return submodule_from_set(self(), std::move(out));
}

Submodule Module::j_over(const Submodule& N) const {
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = jover_memo_.find(N.elems);
    if (it != jover_memo_.end()) return submodule_from_set(self(), it->second);
  }
  submodule_list();
  DenseSet out = full_set(n);
  for (int i : maximals_)
    if (subs_[i].elems.contains(N.elems)) out &= subs_[i].elems;
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    jover_memo_.emplace(N.elems, out);
  }
  return submodule_from_set(self(), std::move(out));
}

Submodule Module::full_sub() const { return submodule_from_set(self(), full_set(n)); }

Submodule Module::zero_sub() const {
  DenseSet z(n);
  z.set(zero);
  return Submodule{self(), std::move(z), {}};
}

Submodule submodule_from_set(ModulePtr M, DenseSet elems) {
  Submodule N{M, std::move(elems), {}};
  N.gens = greedy_gens(*M, N.elems);
  return N;
}

Submodule submodule_generated(ModulePtr M, const std::vector<int>& gens) {
  DenseSet seed(M->n);
  for (int g : gens) {
    if (g < 0 || g >= M->n) throw Error(Errc::BadElement, "generator index out of range");
    seed.set(g);
  }
  return Submodule{M, submodule_close(*M, seed), gens};
}

std::vector<Submodule> all_submodules(ModulePtr M) { return M->submodule_list(); }

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  if (a.mod != b.mod) throw Error(Errc::RingMismatch, "sum across modules");
  return submodule_from_set(a.mod, sum_set(*a.mod, a.elems, b.elems));
}

Submodule submodule_intersect(const Submodule& a, const Submodule& b) {
  if (a.mod != b.mod) throw Error(Errc::RingMismatch, "intersect across modules");
  return submodule_from_set(a.mod, a.elems & b.elems);
}

Ideal residual_ideal(const Module& M, const Submodule& N) {
  if (M.adapter()) {
    for (long c = 1; c <= M.exponent; ++c) {
      bool all = true;
      for (int m = 0; m < M.n && all; ++m) all = N.elems.test(M.actv(int(c % M.exponent), m));
      if (all) return symbolic_ideal(c);
    }
    return symbolic_ideal(M.exponent);  // unreachable: the exponent always works
  }
  return ideal_from_set(M.ring, scalar_residual(M, N.elems));
}

ScalarIdeal residual_scalar_ideal(const Module& M, const Submodule& N) {
  return ScalarIdeal{residual_ideal(M, N), M.exponent};
}

Submodule colon_submodule(const Module& M, const Submodule& N, const Ideal& I) {
  DenseSet out(M.n);
  if (I.symbolic()) {
    if (!M.adapter()) throw Error(Errc::RingMismatch, "symbolic ideal over a finite scalar ring");
    int c = int(I.sym % M.exponent);
    for (int m = 0; m < M.n; ++m)
      if (N.elems.test(M.actv(c, m))) out.set(m);
  } else {
    if (I.ring != M.ring) throw Error(Errc::RingMismatch, "ideal belongs to a different ring");
    for (int m = 0; m < M.n; ++m) {
      bool all = true;
      I.elems.for_each([&](int a) { all = all && N.elems.test(M.actv(a, m)); });
      if (all) out.set(m);
    }
  }
  return submodule_from_set(M.self(), std::move(out));
}

Submodule colon_by_set(const Module& M, const Submodule& N, const DenseSet& scalars) {
  if (scalars.none()) throw Error(Errc::EmptyScalarSet, "colon by an empty scalar set");
  DenseSet out(M.n);
  for (int m = 0; m < M.n; ++m) {
    bool all = true;
    scalars.for_each([&](int s) { all = all && N.elems.test(M.actv(s, m)); });
    if (all) out.set(m);
  }
  return submodule_from_set(M.self(), std::move(out));
}

Submodule ideal_action(const Ideal& I, const Module& M) {
  DenseSet seed(M.n);
  if (I.symbolic()) {
    if (!M.adapter()) throw Error(Errc::RingMismatch, "symbolic ideal over a finite scalar ring");
    int c = int(I.sym % M.exponent);
    for (int m = 0; m < M.n; ++m) seed.set(M.actv(c, m));
  } else {
    if (I.ring != M.ring) throw Error(Errc::RingMismatch, "ideal belongs to a different ring");
    I.elems.for_each([&](int a) {
      for (int m = 0; m < M.n; ++m) seed.set(M.actv(a, m));
    });
  }
  return submodule_from_set(M.self(), submodule_close(M, seed));
}

Verdict submodule_predicate(const Module& M, const Submodule& N, SubKind kind) {
  if (!N.proper()) return Verdict::improper("submodule is the whole module");
  const long S = M.scalar_count(), n = M.n;
  switch (kind) {
    case SubKind::Prime:
      return mod_pair_scan(M, N.elems, scalar_residual(M, N.elems), N.elems);
    case SubKind::Primary:
      return mod_pair_scan(M, N.elems, radical_residual_scalars(M, N), N.elems);
    case SubKind::QuasiPrimary:
      return mod_pair_scan(M, N.elems, radical_residual_scalars(M, N), M.m_rad(N).elems);
    case SubKind::J:
      return mod_pair_scan(M, N.elems, M.invariants().jr_scalars, N.elems);
    case SubKind::QuasiJ:
      return mod_pair_scan(M, N.elems, M.invariants().jr_scalars, M.m_rad(N).elems);
    case SubKind::R: {
      long f = scan::find_first(S * n, [&](long i) {
        int s = int(i / n), m = int(i % n);
        return N.elems.test(M.actv(s, m)) && !N.elems.test(m) && scalar_kills_nothing(M, s);
      });
      if (f < 0) return Verdict::yes();
      return Verdict::no({spart(M, "r", int(f / n)), mpart(M, "m", int(f % n))});
    }
    case SubKind::Sr: {
      DenseSet res = scalar_residual(M, N.elems);
      long f = scan::find_first(S * n, [&](long i) {
        int s = int(i / n), m = int(i % n);
        return N.elems.test(M.actv(s, m)) && !res.test(s) && element_free(M, m);
      });
      if (f < 0) return Verdict::yes();
      return Verdict::no({spart(M, "r", int(f / n)), mpart(M, "m", int(f % n))});
    }
    case SubKind::Pure: {
      for (int s = 0; s < S; ++s) {
        DenseSet sM(M.n);
        for (int m = 0; m < M.n; ++m) sM.set(M.actv(s, m));
        DenseSet inter = sM & N.elems;
        DenseSet sN = act_image(M, s, N.elems);
        if (inter == sN) continue;
        int bad = -1;
        for (int m = 0; m < M.n && bad < 0; ++m)
          if (inter.test(m) && !sN.test(m)) bad = m;
        return Verdict::no({spart(M, "r", s), mpart(M, "n", bad)});
      }
      return Verdict::yes();
    }
    case SubKind::Divisible: {
      DenseSet reg = regular_scalars(M);
      for (int s = 0; s < S; ++s) {
        if (!reg.test(s)) continue;
        DenseSet sN = act_image(M, s, N.elems);
        if (sN == N.elems) continue;
        int bad = -1;
        for (int m = 0; m < M.n && bad < 0; ++m)
          if (N.elems.test(m) && !sN.test(m)) bad = m;
        return Verdict::no({spart(M, "r", s), mpart(M, "n", bad)});
      }
      return Verdict::yes();
    }
    case SubKind::Small: {
      const auto& subs = M.submodule_list();
      for (size_t i = 0; i < subs.size(); ++i) {
        if (subs[i].elems.count() == M.n) continue;
        if (sum_set(M, N.elems, subs[i].elems).full())
          return Verdict::no({WitnessPart{"K", long(i), subs[i].to_string()}});
      }
      return Verdict::yes();
    }
  }
  return Verdict::yes();
}

Verdict presimplifiable(const Module& M, PresimplKind variant) {
  if (M.n == 1)
    throw Error(Errc::ZeroModule, "presimplifiable variants are undefined for the zero module");
  const auto& inv = M.invariants();
  const int S = M.scalar_count();
  const DenseSet& src = (variant == PresimplKind::Plain || variant == PresimplKind::J)
                            ? inv.z_scalars
                            : inv.nz_scalars;
  DenseSet gate;
  if (variant == PresimplKind::Plain || variant == PresimplKind::Quasi)
    gate = M.adapter() ? DenseSet(S) : M.ring->invariants().jacobson;
  else
    gate = inv.jr_scalars;
  long f = scan::find_first(S, [&](long s) { return src.test(int(s)) && !gate.test(int(s)); });
  if (f < 0) return Verdict::yes();
  return Verdict::no({spart(M, "r", int(f))});
}

Verdict is_multiplication(const Module& M) {
  const auto& subs = M.submodule_list();
  for (size_t i = 0; i < subs.size(); ++i) {
    Submodule im = ideal_action(residual_ideal(M, subs[i]), M);
    if (!(im.elems == subs[i].elems))
      return Verdict::no({WitnessPart{"N", long(i), subs[i].to_string()}});
  }
  return Verdict::yes();
}

Submodule submodule_product(const Module& M, const Submodule& N, const Submodule& K) {
  if (!is_multiplication(M).holds)
    throw Error(Errc::NonMultiplication, "submodule products need a multiplication module");
  return ideal_action(ideal_product(residual_ideal(M, N), residual_ideal(M, K)), M);
}

std::vector<Submodule> quasi_J_maximal_set(const Module& M) {
  const auto& subs = M.submodule_list();
  std::vector<int> qj;
  for (size_t i = 0; i < subs.size(); ++i)
    if (submodule_predicate(M, subs[i], SubKind::QuasiJ).holds) qj.push_back(int(i));
  std::vector<Submodule> out;
  for (int i : qj) {
    bool maximal = true;
    for (int j : qj)
      if (j != i && subs[j].elems.contains(subs[i].elems) && !(subs[j].elems == subs[i].elems)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(subs[i]);
  }
  return out;
}

DenseSet submodule_zero_divisor_scalars(const Module& M, const Submodule& N) {
  const int S = M.scalar_count();
  DenseSet out(S);
  for (int s = 0; s < S; ++s)
    for (int m = 0; m < M.n; ++m)
      if (!N.elems.test(m) && N.elems.test(M.actv(s, m))) {
        out.set(s);
        break;
      }
  return out;
}

bool replay_submodule_witness(const Module& M, const Submodule& N, SubKind kind,
                              const Verdict& v) {
  if (v.holds || v.witness.empty()) return false;
  if (v.flag == "improper") return !N.proper();
  auto find = [&](const char* role) -> long {
    for (const auto& p : v.witness)
      if (p.role == role) return p.index;
    return -1;
  };
  switch (kind) {
    case SubKind::Prime: {
      int r = int(find("r")), m = int(find("m"));
      return N.elems.test(M.actv(r, m)) && !N.elems.test(m) &&
             !scalar_residual(M, N.elems).test(r);
    }
    case SubKind::Primary: {
      int r = int(find("r")), m = int(find("m"));
      return N.elems.test(M.actv(r, m)) && !N.elems.test(m) &&
             !radical_residual_scalars(M, N).test(r);
    }
    case SubKind::QuasiPrimary: {
      int r = int(find("r")), m = int(find("m"));
      return N.elems.test(M.actv(r, m)) && !radical_residual_scalars(M, N).test(r) &&
             !M.m_rad(N).elems.test(m);
    }
    case SubKind::J: {
      int r = int(find("r")), m = int(find("m"));
      return N.elems.test(M.actv(r, m)) && !M.invariants().jr_scalars.test(r) &&
             !N.elems.test(m);
    }
    case SubKind::QuasiJ: {
      int r = int(find("r")), m = int(find("m"));
      return N.elems.test(M.actv(r, m)) && !M.invariants().jr_scalars.test(r) &&
             !M.m_rad(N).elems.test(m);
    }
    case SubKind::R: {
      int r = int(find("r")), m = int(find("m"));
      return N.elems.test(M.actv(r, m)) && scalar_kills_nothing(M, r) && !N.elems.test(m);
    }
    case SubKind::Sr: {
      int r = int(find("r")), m = int(find("m"));
      return N.elems.test(M.actv(r, m)) && element_free(M, m) &&
             !scalar_residual(M, N.elems).test(r);
    }
    case SubKind::Pure: {
      int r = int(find("r")), e = int(find("n"));
      DenseSet sM(M.n);
      for (int m = 0; m < M.n; ++m) sM.set(M.actv(r, m));
      return sM.test(e) && N.elems.test(e) && !act_image(M, r, N.elems).test(e);
    }
    case SubKind::Divisible: {
      int r = int(find("r")), e = int(find("n"));
      return regular_scalars(M).test(r) && N.elems.test(e) && !act_image(M, r, N.elems).test(e);
    }
    case SubKind::Small: {
      long k = find("K");
      const auto& subs = M.submodule_list();
      if (k < 0 || k >= long(subs.size())) return false;
      return subs[k].elems.count() != M.n && sum_set(M, N.elems, subs[k].elems).full();
    }
  }
  return false;
}

std::string set_to_string(const Module& M, const DenseSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int x) {
    if (!first) out += ",";
    first = false;
    out += M.name_of(x);
  });
  return out + "}";
}

}  // namespace modrad
