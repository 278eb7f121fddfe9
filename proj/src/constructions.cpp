#include "modrad/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "modrad/scan.hpp"

namespace modrad {

namespace {

long squarefree_kernel(long n) {
  if (n == 0) return 0;
  long out = 1;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out *= p;
      while (n % p == 0) n /= p;
    }
  if (n > 1) out *= n;
  return out;
}

long least_prime_factor(long n) {
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

bool is_prime_power(long n) {
  long p = least_prime_factor(n);
  while (n % p == 0) n /= p;
  return n == 1;
}

WitnessPart ipart(const char* role, long v) {
  return WitnessPart{role, v, std::to_string(v)};
}

}  // namespace

ModuleMap make_module_map(ModulePtr source, ModulePtr target, std::vector<int> mapping,
                          std::string kind) {
  if (int(mapping.size()) != source->n) throw Error(Errc::BadTable, "map table size mismatch");
  for (int v : mapping)
    if (v < 0 || v >= target->n) throw Error(Errc::BadElement, "map image out of range");
  if (source->ring != target->ring && !(source->adapter() && target->adapter()))
    throw Error(Errc::RingMismatch, "map endpoints over different scalar rings");
  for (int a = 0; a < source->n; ++a)
    for (int b = 0; b < source->n; ++b)
      if (mapping[source->addv(a, b)] != target->addv(mapping[a], mapping[b]))
        throw Error(Errc::BadTable, "map is not additive");
  const int S = source->scalar_count();
  for (int s = 0; s < S; ++s) {
    int t = target->adapter() ? int(s % target->exponent) : s;
    for (int m = 0; m < source->n; ++m)
      if (mapping[source->actv(s, m)] != target->actv(t, mapping[m]))
        throw Error(Errc::BadTable, "map does not respect the action");
  }
  return ModuleMap{std::move(source), std::move(target), std::move(mapping), std::move(kind)};
}

Submodule ModuleMap::kernel() const {
  DenseSet k(source->n);
  for (int m = 0; m < source->n; ++m)
    if (mapping[m] == target->zero) k.set(m);
  return submodule_from_set(source, std::move(k));
}

bool ModuleMap::epi() const {
  DenseSet image(target->n);
  for (int v : mapping) image.set(v);
  return image.count() == target->n;
}

Submodule image_submodule(const ModuleMap& f, const Submodule& N) {
  if (N.mod != f.source) throw Error(Errc::RingMismatch, "submodule not in the map source");
  DenseSet out(f.target->n);
  N.elems.for_each([&](int x) { out.set(f.mapping[x]); });
  return submodule_from_set(f.target, std::move(out));
}

Submodule preimage_submodule(const ModuleMap& f, const Submodule& K) {
  if (K.mod != f.target) throw Error(Errc::RingMismatch, "submodule not in the map target");
  DenseSet out(f.source->n);
  for (int x = 0; x < f.source->n; ++x)
    if (K.elems.test(f.mapping[x])) out.set(x);
  return submodule_from_set(f.source, std::move(out));
}

QuotientModule quotient_module(ModulePtr M, const Submodule& N) {
  if (N.mod != M) throw Error(Errc::RingMismatch, "submodule of a different module");
  const int n = M->n;
  std::vector<int> rep_of(n, -1), reps, index_of(n, -1);
  for (int x = 0; x < n; ++x) {
    if (rep_of[x] >= 0) continue;
    index_of[x] = int(reps.size());
    reps.push_back(x);
    N.elems.for_each([&](int k) { rep_of[M->addv(x, k)] = x; });
  }
  const int qn = int(reps.size());
  long qe = 0;
  if (M->adapter()) {
    qe = residual_ideal(*M, N).sym;  // least positive class collapsing into N
  }
  const int S = M->adapter() ? int(qe) : M->ring->n;
  std::vector<int> add(size_t(qn) * qn), act(size_t(S) * qn);
  for (int a = 0; a < qn; ++a)
    for (int b = 0; b < qn; ++b)
      add[size_t(a) * qn + b] = index_of[rep_of[M->addv(reps[a], reps[b])]];
  for (int s = 0; s < S; ++s)
    for (int b = 0; b < qn; ++b) act[size_t(s) * qn + b] = index_of[rep_of[M->actv(s, reps[b])]];
  std::vector<std::string> names(qn);
  for (int i = 0; i < qn; ++i) names[i] = M->name_of(reps[i]);
  ModulePtr Q = Module::raw(M->ring, qn, std::move(add), std::move(act),
                            index_of[rep_of[M->zero]], qe, std::move(names),
                            M->label + "/" + N.to_string(), true);
  std::vector<int> mapping(n);
  for (int x = 0; x < n; ++x) mapping[x] = index_of[rep_of[x]];
  return QuotientModule{Q, make_module_map(M, Q, std::move(mapping), "quotient")};
}

DenseSet product_set(int prod_size, const std::vector<ModulePtr>& parts,
                     const std::vector<const DenseSet*>& comps) {
  if (parts.size() != comps.size())
    throw Error(Errc::BadTable, "component count mismatch");
  const int k = int(parts.size());
  std::vector<long> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * parts[i + 1]->n;
  if (k > 0 && stride[0] * parts[0]->n != prod_size)
    throw Error(Errc::BadTable, "carrier is not the product of the parts");
  DenseSet out(prod_size);
  for (int x = 0; x < prod_size; ++x) {
    bool in = true;
    for (int i = 0; i < k && in; ++i) in = comps[i]->test(int(x / stride[i] % parts[i]->n));
    if (in) out.set(x);
  }
  return out;
}

ModuleMap projection_map(ModulePtr prod, const std::vector<ModulePtr>& parts, int index) {
  const int k = int(parts.size());
  if (index < 0 || index >= k) throw Error(Errc::BadElement, "projection index out of range");
  std::vector<long> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * parts[i + 1]->n;
  std::vector<int> mapping(prod->n);
  for (int x = 0; x < prod->n; ++x) mapping[x] = int(x / stride[index] % parts[index]->n);
  return make_module_map(prod, parts[index], std::move(mapping), "projection");
}

std::string MultiplicativeSet::to_string() const { return set_to_string(*ring, elems); }

MultiplicativeSet multiplicative_set(RingPtr R, const std::vector<int>& gens) {
  if (R->adapter())
    throw Error(Errc::IntegerAdapter, "multiplicative sets are finite-ring only");
  DenseSet elems(R->n);
  std::vector<int> stack;
  auto push = [&](int x) {
    if (!elems.test(x)) {
      elems.set(x);
      stack.push_back(x);
    }
  };
  push(R->one);
  for (int g : gens) {
    if (g < 0 || g >= R->n) throw Error(Errc::BadElement, "generator index out of range");
    push(g);
  }
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int g : gens) push(R->mulv(x, g));
  }
  return MultiplicativeSet{std::move(R), gens, std::move(elems)};
}

Localization localize_ring(RingPtr R, const MultiplicativeSet& S) {
  if (S.ring != R) throw Error(Errc::RingMismatch, "multiplicative set of a different ring");
  Localization out;
  out.base = R;
  out.set = S;
  if (S.has_zero()) {
    out.degenerate = true;
    return out;
  }
  const std::vector<int> sv = S.elems.to_vector();
  const int ns = int(sv.size());
  const int np = R->n * ns;
  auto equiv = [&](int r1, int s1, int r2, int s2) {
    int d = R->subv(R->mulv(r1, s2), R->mulv(r2, s1));
    for (int u : sv)
      if (R->mulv(u, d) == R->zero) return true;
    return false;
  };
  std::vector<int> cls(np, -1);
  std::vector<std::pair<int, int>> reps;
  for (int p = 0; p < np; ++p) {
    if (cls[p] >= 0) continue;
    int id = int(reps.size());
    reps.emplace_back(p / ns, sv[p % ns]);
    cls[p] = id;
    for (int q = p + 1; q < np; ++q)
      if (cls[q] < 0 && equiv(p / ns, sv[p % ns], q / ns, sv[q % ns])) cls[q] = id;
  }
  std::vector<int> spos(R->n, -1);
  for (int j = 0; j < ns; ++j) spos[sv[j]] = j;
  auto class_of = [&](int r, int s) { return cls[r * ns + spos[s]]; };
  const int ln = int(reps.size());
  std::vector<int> add(size_t(ln) * ln), mul(size_t(ln) * ln);
  for (int a = 0; a < ln; ++a)
    for (int b = 0; b < ln; ++b) {
      auto [r1, s1] = reps[a];
      auto [r2, s2] = reps[b];
      add[size_t(a) * ln + b] =
          class_of(R->addv(R->mulv(r1, s2), R->mulv(r2, s1)), R->mulv(s1, s2));
      mul[size_t(a) * ln + b] = class_of(R->mulv(r1, r2), R->mulv(s1, s2));
    }
  std::vector<std::string> names(ln);
  for (int c = 0; c < ln; ++c) names[c] = R->name_of(reps[c].first) + "/" + R->name_of(reps[c].second);
  out.ring = Ring::table(ln, std::move(add), std::move(mul), class_of(R->zero, R->one),
                         class_of(R->one, R->one), "S^-1" + R->label, RingKind::Table,
                         std::move(names), true);
  out.reps = std::move(reps);
  out.ring_map.resize(R->n);
  for (int r = 0; r < R->n; ++r) out.ring_map[r] = class_of(r, R->one);
  return out;
}

Ideal Localization::push_ideal(const Ideal& I) const {
  if (degenerate) throw Error(Errc::DegenerateLocalization, "localization collapsed to zero");
  if (I.ring != base) throw Error(Errc::RingMismatch, "ideal of a different ring");
  std::vector<int> gens;
  I.elems.for_each([&](int a) { gens.push_back(ring_map[a]); });
  return ideal_generated(ring, gens);
}

LocalizedModule localize_module(ModulePtr M, const MultiplicativeSet& S) {
  if (M->adapter())
    throw Error(Errc::IntegerAdapter, "module localization is finite-ring only");
  LocalizedModule out{localize_ring(M->ring, S), nullptr, ModuleMap{}};
  if (out.loc.degenerate) return out;
  const RingPtr& R = M->ring;
  const std::vector<int> sv = S.elems.to_vector();
  const int ns = int(sv.size());
  const int np = M->n * ns;
  auto equiv = [&](int m1, int s1, int m2, int s2) {
    int d = M->subv(M->actv(s2, m1), M->actv(s1, m2));
    for (int u : sv)
      if (M->actv(u, d) == M->zero) return true;
    return false;
  };
  std::vector<int> cls(np, -1);
  std::vector<std::pair<int, int>> reps;
  for (int p = 0; p < np; ++p) {
    if (cls[p] >= 0) continue;
    int id = int(reps.size());
    reps.emplace_back(p / ns, sv[p % ns]);
    cls[p] = id;
    for (int q = p + 1; q < np; ++q)
      if (cls[q] < 0 && equiv(p / ns, sv[p % ns], q / ns, sv[q % ns])) cls[q] = id;
  }
  std::vector<int> spos(R->n, -1);
  for (int j = 0; j < ns; ++j) spos[sv[j]] = j;
  auto class_of = [&](int m, int s) { return cls[m * ns + spos[s]]; };
  const int ln = int(reps.size());
  const int rn = out.loc.ring->n;
  std::vector<int> add(size_t(ln) * ln), act(size_t(rn) * ln);
  for (int a = 0; a < ln; ++a)
    for (int b = 0; b < ln; ++b) {
      auto [m1, s1] = reps[a];
      auto [m2, s2] = reps[b];
      add[size_t(a) * ln + b] =
          class_of(M->addv(M->actv(s2, m1), M->actv(s1, m2)), R->mulv(s1, s2));
    }
  for (int c = 0; c < rn; ++c) {
    auto [r, t] = out.loc.reps[c];
    for (int b = 0; b < ln; ++b) {
      auto [m, s] = reps[b];
      act[size_t(c) * ln + b] = class_of(M->actv(r, m), R->mulv(t, s));
    }
  }
  std::vector<std::string> names(ln);
  for (int c = 0; c < ln; ++c)
    names[c] = M->name_of(reps[c].first) + "/" + R->name_of(reps[c].second);
  out.module = Module::raw(out.loc.ring, ln, std::move(add), std::move(act),
                           class_of(M->zero, R->one), 0, std::move(names),
                           "S^-1" + M->label, true);
  std::vector<int> mapping(M->n);
  for (int m = 0; m < M->n; ++m) mapping[m] = class_of(m, R->one);
  for (int a = 0; a < M->n; ++a)
    for (int b = 0; b < M->n; ++b)
      if (mapping[M->addv(a, b)] != out.module->addv(mapping[a], mapping[b]))
        throw Error(Errc::BadTable, "localization map is not additive");
  for (int r = 0; r < R->n; ++r)
    for (int m = 0; m < M->n; ++m)
      if (mapping[M->actv(r, m)] != out.module->actv(out.loc.ring_map[r], mapping[m]))
        throw Error(Errc::BadTable, "localization map twists the action incorrectly");
  out.map = ModuleMap{M, out.module, std::move(mapping), "localization"};
  return out;
}

Submodule LocalizedModule::push_submodule(const Submodule& N) const {
  if (loc.degenerate) throw Error(Errc::DegenerateLocalization, "localization collapsed to zero");
  if (!module) throw Error(Errc::DegenerateLocalization, "no localized module");
  std::vector<int> gens;
  N.elems.for_each([&](int m) { gens.push_back(map.mapping[m]); });
  return submodule_generated(module, gens);
}

Idealization idealization(RingPtr R, ModulePtr M) {
  Idealization A;
  A.base = R;
  A.mod = M;
  if (R->adapter()) {
    if (!M->adapter()) throw Error(Errc::RingMismatch, "module over a different ring");
    A.base = Ring::residue({M->exponent});
    A.mod = Module::raw(A.base, M->n, M->add, M->act, M->zero, 0, M->names, M->label, false);
    A.surrogate = true;
  } else if (M->ring != R) {
    throw Error(Errc::RingMismatch, "module over a different ring");
  }
  const RingPtr& B = A.base;
  const ModulePtr& W = A.mod;
  const int rn = B->n, mn = W->n, n = rn * mn;
  std::vector<int> add(size_t(n) * n), mul(size_t(n) * n);
  for (int x = 0; x < n; ++x) {
    int r1 = x / mn, m1 = x % mn;
    for (int y = 0; y < n; ++y) {
      int r2 = y / mn, m2 = y % mn;
      add[size_t(x) * n + y] = B->addv(r1, r2) * mn + W->addv(m1, m2);
      mul[size_t(x) * n + y] =
          B->mulv(r1, r2) * mn + W->addv(W->actv(r1, m2), W->actv(r2, m1));
    }
  }
  std::vector<std::string> names(n);
  for (int x = 0; x < n; ++x)
    names[x] = "(" + B->name_of(x / mn) + "," + W->name_of(x % mn) + ")";
  A.ring = Ring::table(n, std::move(add), std::move(mul), B->zero * mn + W->zero,
                       B->one * mn + W->zero, B->label + "(+)" + W->label, RingKind::Table,
                       std::move(names), true);

  DenseSet expect_j(n), expect_nil(n);
  const auto& binv = B->invariants();
  for (int r = 0; r < rn; ++r)
    for (int m = 0; m < mn; ++m) {
      if (binv.jacobson.test(r)) expect_j.set(r * mn + m);
      if (binv.nilradical.test(r)) expect_nil.set(r * mn + m);
    }
  const auto& einv = A.ring->invariants();
  if (!(einv.jacobson == expect_j))
    throw Error(Errc::AxiomViolation, "extension Jacobson radical mismatch");
  if (!(einv.nilradical == expect_nil))
    throw Error(Errc::AxiomViolation, "extension nilradical mismatch");
  return A;
}

Ideal pair_ideal(const Idealization& A, const Ideal& I, const Submodule& N) {
  if (I.symbolic() || I.ring != A.base)
    throw Error(Errc::RingMismatch, "ideal of a different ring");
  if (N.mod != A.mod) throw Error(Errc::RingMismatch, "submodule of a different module");
  bool legal = true;
  I.elems.for_each([&](int a) {
    for (int m = 0; m < A.mod->n && legal; ++m) legal = N.elems.test(A.mod->actv(a, m));
  });
  if (!legal)
    throw Error(Errc::PairIdealIllegal, "IM is not inside N, no such pair ideal");
  DenseSet elems(A.ring->n);
  I.elems.for_each([&](int a) { N.elems.for_each([&](int x) { elems.set(A.pair_index(a, x)); }); });
  return ideal_from_set(A.ring, std::move(elems));
}

Verdict symbolic_Z_ideal_predicate(long n, IdealKind kind) {
  if (n < 0) throw Error(Errc::BadElement, "negative generator");
  if (n == 1) return Verdict::improper("ideal is the whole ring");
  if (n == 0) {
    if (kind == IdealKind::Maximal) return Verdict::no({ipart("a", 2)});
    return Verdict::yes();
  }
  const long p = least_prime_factor(n);
  const long rad = squarefree_kernel(n);
  switch (kind) {
    case IdealKind::Prime:
      if (p == n) return Verdict::yes();
      return Verdict::no({ipart("a", p), ipart("b", n / p)});
    case IdealKind::Maximal:
      if (p == n) return Verdict::yes();
      return Verdict::no({ipart("a", p)});
    case IdealKind::Primary: {
      if (is_prime_power(n)) return Verdict::yes();
      long ppow = 1;
      long rest = n;
      while (rest % p == 0) {
        ppow *= p;
        rest /= p;
      }
      return Verdict::no({ipart("a", rest), ipart("b", ppow)});
    }
    case IdealKind::QuasiPrimary:
      if (is_prime_power(n)) return Verdict::yes();
      return Verdict::no({ipart("a", p), ipart("b", rad / p)}, "radical");
    case IdealKind::J:
    case IdealKind::Nil:
    case IdealKind::Reg:
      return Verdict::no({ipart("a", n), ipart("b", 1)});
    case IdealKind::QuasiJ:
      return Verdict::no({ipart("a", rad), ipart("b", 1)}, "radical");
  }
  return Verdict::yes();
}

bool replay_symbolic_Z_witness(long n, IdealKind kind, const Verdict& v) {
  if (v.holds || v.witness.empty()) return false;
  if (v.flag == "improper") return n == 1;
  auto find = [&](const char* role) -> long {
    for (const auto& p : v.witness)
      if (p.role == role) return p.index;
    return -1;
  };
  auto in = [](long mod, long x) { return mod > 0 ? x % mod == 0 : x == 0; };
  const long rad = n > 0 ? squarefree_kernel(n) : 0;
  const long a = find("a"), b = find("b");
  switch (kind) {
    case IdealKind::Prime:
      return in(n, a * b) && !in(n, a) && !in(n, b);
    case IdealKind::Maximal:
      return !in(n, a) && (n > 0 ? std::gcd(a, n) != 1 : a != 1 && a != -1);
    case IdealKind::Primary:
      return in(n, a * b) && !in(n, a) && !in(rad, b);
    case IdealKind::QuasiPrimary:
      return in(rad, a * b) && !in(rad, a) && !in(rad, b);
    case IdealKind::J:
    case IdealKind::Nil:
    case IdealKind::Reg:
      return in(n, a * b) && a != 0 && !in(n, b);
    case IdealKind::QuasiJ:
      return in(rad, a * b) && a != 0 && !in(rad, b);
  }
  return false;
}

}  // namespace modrad
