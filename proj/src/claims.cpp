#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "modrad/config.hpp"
#include "modrad/harness.hpp"

namespace modrad {

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "PASS";
    case ClaimStatus::Fail: return "FAIL";
    default: return "VACUOUS";
  }
}

namespace {

constexpr size_t kViolationCap = 50;

std::string wit_str(const Verdict& v) {
  std::string out;
  for (const auto& p : v.witness) {
    if (!out.empty()) out += ", ";
    out += p.role + "=" + p.text;
  }
  if (!v.flag.empty()) out += out.empty() ? "[" + v.flag + "]" : " [" + v.flag + "]";
  return out;
}

std::string sub_inst(const ModulePtr& M, const Submodule& N) {
  return M->label + ", N=" + N.to_string();
}

void vio(CheckReport& rep, std::string instance, std::string why) {
  if (rep.violations.size() < kViolationCap)
    rep.violations.push_back({std::move(instance), std::move(why)});
  else if (rep.violations.size() == kViolationCap)
    rep.violations.push_back({"...", "further violations suppressed"});
}

bool pred(const ModulePtr& M, const Submodule& N, SubKind k) {
  return submodule_predicate(*M, N, k).holds;
}

bool ipred(const Ideal& I, IdealKind k) {
  if (I.symbolic()) return symbolic_Z_ideal_predicate(I.sym, k).holds;
  return ideal_predicate(I, k).holds;
}

bool is_mult(const ModulePtr& M) {
  static std::unordered_map<const Module*, bool> memo;
  auto it = memo.find(M.get());
  if (it != memo.end()) return it->second;
  bool v = is_multiplication(*M).holds;
  memo.emplace(M.get(), v);
  return v;
}

bool is_fgfm(const ModulePtr& M) {
  return !M->adapter() && M->invariants().faithful && is_mult(M);
}

// span of { a n : a in I, n in N } for finite scalar rings
Submodule ideal_on_sub(const ModulePtr& M, const Ideal& I, const Submodule& N) {
  std::vector<int> gens;
  I.elems.for_each([&](int a) { N.elems.for_each([&](int x) { gens.push_back(M->actv(a, x)); }); });
  return submodule_generated(M, gens);
}

Ideal jacobson_ideal(const RingPtr& R) {
  return ideal_from_set(R, R->invariants().jacobson);
}

const std::string kNoFaithfulIdeal =
    "no finite ring has a proper faithful ideal: a finite ring splits into local factors, every "
    "proper ideal misses a factor identity and is killed by it, so the hypothesis only admits "
    "I = R";

// ------------------------------------------------------------------ eq1

void claim_eq1(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.modules()) {
    const auto& subs = M->submodule_list();
    const auto& jrs = M->invariants().jr_scalars;
    const int S = M->scalar_count();
    const bool finite = !M->adapter();
    std::vector<Ideal> outside_ideals;
    if (finite) {
      const Ideal& jr = M->invariants().jr;
      for (const auto& A : all_ideals(M->ring))
        if (!jr.contains_ideal(A)) outside_ideals.push_back(A);
    }
    for (const auto& N : subs) {
      if (!N.proper()) continue;
      ++rep.instances;
      const Submodule rad = M->m_rad(N);
      const bool a = pred(M, N, SubKind::QuasiJ);

      bool b = true;
      std::string bwhy;
      for (int r = 0; r < S && b; ++r) {
        if (jrs.test(r)) continue;
        for (const auto& K : subs) {
          bool rK_in = true;
          K.elems.for_each([&](int x) {
            if (rK_in && !N.elems.test(M->actv(r, x))) rK_in = false;
          });
          if (rK_in && !rad.elems.contains(K.elems)) {
            b = false;
            bwhy = "r=" + M->scalar_name(r) + ", K=" + K.to_string();
            break;
          }
        }
      }

      bool c = b;
      std::string cwhy;
      if (finite) {
        c = true;
        for (const auto& A : outside_ideals) {
          for (const auto& K : subs) {
            bool AK_in = true;
            A.elems.for_each([&](int x) {
              if (!AK_in) return;
              K.elems.for_each([&](int y) {
                if (AK_in && !N.elems.test(M->actv(x, y))) AK_in = false;
              });
            });
            if (AK_in && !rad.elems.contains(K.elems)) {
              c = false;
              cwhy = "A=" + A.to_string() + ", K=" + K.to_string();
              break;
            }
          }
          if (!c) break;
        }
      }

      ++rep.hits;
      if (a) ++rep.nontrivial;
      if (a != b)
        vio(rep, sub_inst(M, N),
            "element form disagrees: quasi_J=" + std::string(a ? "true" : "false") +
                (bwhy.empty() ? "" : ", counterpair " + bwhy));
      else if (a != c)
        vio(rep, sub_inst(M, N),
            "ideal form disagrees: quasi_J=" + std::string(a ? "true" : "false") +
                (cwhy.empty() ? "" : ", counterpair " + cwhy));
    }
  }
  rep.note = "ideal-quantified form runs over finite scalar rings; scalar classes stand in for "
             "ideals of Z on adapter modules";
}

// ------------------------------------------------------------- hom pair

std::vector<ModuleMap> epimorphisms(const Corpus& corpus) {
  std::vector<ModuleMap> maps;
  for (const auto& M : corpus.hom_sources) {
    const auto& subs = M->submodule_list();
    for (const auto& L : subs)
      if (L.proper()) maps.push_back(quotient_module(M, L).map);
  }
  for (const auto& e : corpus.products) {
    if (e.prod->n > corpus.spec.hom_carrier_bound) continue;
    for (size_t i = 0; i < e.parts.size(); ++i)
      maps.push_back(projection_map(e.prod, e.parts, int(i)));
  }
  return maps;
}

void claim_hom_img(const Corpus& corpus, CheckReport& rep) {
  for (const auto& f : epimorphisms(corpus)) {
    const Submodule ker = f.kernel();
    for (const auto& N : f.source->submodule_list()) {
      if (!N.proper()) continue;
      ++rep.instances;
      if (!N.elems.contains(ker.elems)) continue;
      if (!pred(f.source, N, SubKind::QuasiJ)) continue;
      ++rep.hits;
      if (!ker.zero()) ++rep.nontrivial;
      Submodule img = image_submodule(f, N);
      Verdict v = submodule_predicate(*f.target, img, SubKind::QuasiJ);
      if (!v.holds)
        vio(rep, f.kind + " " + f.source->label + " -> " + f.target->label + ", N=" + N.to_string(),
            "image " + img.to_string() + " not quasi-J: " + wit_str(v));
    }
  }
}

void claim_hom_pre(const Corpus& corpus, CheckReport& rep) {
  for (const auto& f : epimorphisms(corpus)) {
    const Submodule ker = f.kernel();
    const bool ker_ok = f.source->invariants().jrm.contains(ker.elems);
    for (const auto& K : f.target->submodule_list()) {
      if (!K.proper()) continue;
      ++rep.instances;
      if (!ker_ok) continue;
      if (!pred(f.target, K, SubKind::QuasiJ)) continue;
      ++rep.hits;
      if (!ker.zero()) ++rep.nontrivial;
      Submodule pre = preimage_submodule(f, K);
      Verdict v = submodule_predicate(*f.source, pre, SubKind::QuasiJ);
      if (!v.holds)
        vio(rep, f.kind + " " + f.source->label + " -> " + f.target->label + ", K=" + K.to_string(),
            "preimage " + pre.to_string() + " not quasi-J: " + wit_str(v));
    }
  }
}

// -------------------------------------------------------------- products

struct ProductView {
  const Corpus::ProductEntry* entry;
  std::unordered_map<DenseSet, bool, DenseSetHash> quasi_j;

  bool lookup(const DenseSet& elems) const {
    auto it = quasi_j.find(elems);
    return it != quasi_j.end() && it->second;
  }
};

ProductView view_of(const Corpus::ProductEntry& e) {
  ProductView v;
  v.entry = &e;
  for (const auto& N : e.prod->submodule_list())
    v.quasi_j.emplace(N.elems, N.proper() && pred(e.prod, N, SubKind::QuasiJ));
  return v;
}

void claim_prod_1(const Corpus& corpus, CheckReport& rep) {
  for (const auto& e : corpus.products) {
    ProductView pv = view_of(e);
    const size_t k = e.parts.size();
    std::vector<const std::vector<Submodule>*> lat;
    for (const auto& p : e.parts) lat.push_back(&p->submodule_list());
    std::vector<size_t> idx(k, 0);
    while (true) {
      bool some_proper = false;
      for (size_t i = 0; i < k; ++i)
        if ((*lat[i])[idx[i]].proper()) some_proper = true;
      if (some_proper) {
        ++rep.instances;
        std::vector<const DenseSet*> comps;
        for (size_t i = 0; i < k; ++i) comps.push_back(&(*lat[i])[idx[i]].elems);
        DenseSet set = product_set(e.prod->n, e.parts, comps);
        if (pv.lookup(set)) {
          ++rep.hits;
          ++rep.nontrivial;
          for (size_t i = 0; i < k; ++i) {
            const Submodule& Ni = (*lat[i])[idx[i]];
            if (!Ni.proper()) continue;
            Verdict v = submodule_predicate(*e.parts[i], Ni, SubKind::QuasiJ);
            if (!v.holds)
              vio(rep,
                  e.prod->label + ", factor " + std::to_string(i + 1) + " of N, N_i=" +
                      Ni.to_string(),
                  "factor not quasi-J: " + wit_str(v));
          }
        }
      }
      size_t d = k;
      while (d > 0) {
        --d;
        if (++idx[d] < lat[d]->size()) break;
        idx[d] = 0;
        if (d == 0) goto next_entry;
      }
    }
  next_entry:;
  }
}

void claim_prod_2(const Corpus& corpus, CheckReport& rep) {
  for (const auto& e : corpus.products) {
    ProductView pv = view_of(e);
    const size_t k = e.parts.size();
    for (size_t j = 0; j < k; ++j) {
      for (const auto& Nj : e.parts[j]->submodule_list()) {
        if (!Nj.proper()) continue;
        ++rep.instances;
        if (!pred(e.parts[j], Nj, SubKind::QuasiJ)) continue;
        ++rep.hits;
        ++rep.nontrivial;
        std::vector<const DenseSet*> comps;
        std::vector<DenseSet> full;
        full.reserve(k);
        for (size_t i = 0; i < k; ++i) full.push_back(e.parts[i]->full_sub().elems);
        for (size_t i = 0; i < k; ++i) comps.push_back(i == j ? &Nj.elems : &full[i]);
        DenseSet set = product_set(e.prod->n, e.parts, comps);
        if (!pv.lookup(set)) {
          Verdict v =
              submodule_predicate(*e.prod, submodule_from_set(e.prod, set), SubKind::QuasiJ);
          vio(rep,
              e.prod->label + ", j=" + std::to_string(j + 1) + ", N_j=" + Nj.to_string(),
              "assembled submodule not quasi-J in the product: " + wit_str(v));
        }
      }
    }
  }
  if (!rep.violations.empty())
    rep.note =
        "violations are genuine: the scalar gate (J(R)M : M) of a product module is the "
        "intersection of the factor gates, so a scalar outside the product gate may still lie "
        "inside the gate of the distinguished factor and act there unchecked; smallest case: "
        "0 x Z3 inside Z2 x Z3 over integer scalars fails via r=2 although 0 is quasi-J in Z2";
}

// ---------------------------------------------------------- localization

void for_each_localization(const Corpus& corpus,
                           const std::function<void(const ModulePtr&, const MultiplicativeSet&,
                                                    const LocalizedModule&, bool)>& body) {
  for (const auto& S : corpus.mult_sets) {
    if (S.has_zero()) continue;
    for (const auto& M : corpus.ring_modules) {
      if (M->ring != S.ring) continue;
      if (M->n > corpus.spec.hom_carrier_bound) continue;
      LocalizedModule LM = localize_module(M, S);
      if (LM.degenerate()) continue;
      Ideal jac = jacobson_ideal(S.ring);
      bool standing = LM.loc.push_ideal(jac).elems == LM.loc.ring->invariants().jacobson;
      body(M, S, LM, standing);
    }
  }
}

void claim_loc_1(const Corpus& corpus, CheckReport& rep) {
  for_each_localization(corpus, [&](const ModulePtr& M, const MultiplicativeSet& S,
                                    const LocalizedModule& LM, bool standing) {
    for (const auto& N : M->submodule_list()) {
      if (!N.proper()) continue;
      ++rep.instances;
      if (!standing) continue;
      if (!pred(M, N, SubKind::QuasiJ)) continue;
      Submodule pushed = LM.push_submodule(N);
      if (!pushed.proper()) continue;
      ++rep.hits;
      if (LM.loc.ring->n < M->ring->n || LM.module->n < M->n) ++rep.nontrivial;
      Verdict v = submodule_predicate(*LM.module, pushed, SubKind::QuasiJ);
      if (!v.holds)
        vio(rep, M->label + " at S=" + S.to_string() + ", N=" + N.to_string(),
            "localized submodule " + pushed.to_string() + " not quasi-J: " + wit_str(v));
    }
  });
}

void claim_loc_2(const Corpus& corpus, CheckReport& rep) {
  for_each_localization(corpus, [&](const ModulePtr& M, const MultiplicativeSet& S,
                                    const LocalizedModule& LM, bool standing) {
    const DenseSet z_jr = ideal_zero_divisor_set(M->invariants().jr);
    for (const auto& N : M->submodule_list()) {
      if (!N.proper()) continue;
      ++rep.instances;
      if (!standing) continue;
      Submodule pushed = LM.push_submodule(N);
      if (!pushed.proper()) continue;
      if (!pred(LM.module, pushed, SubKind::QuasiJ)) continue;
      if ((S.elems & z_jr).any()) continue;
      if ((S.elems & submodule_zero_divisor_scalars(*M, M->m_rad(N))).any()) continue;
      ++rep.hits;
      if (LM.loc.ring->n < M->ring->n || LM.module->n < M->n) ++rep.nontrivial;
      Verdict v = submodule_predicate(*M, N, SubKind::QuasiJ);
      if (!v.holds)
        vio(rep, M->label + " at S=" + S.to_string() + ", N=" + N.to_string(),
            "contraction fails quasi-J: " + wit_str(v));
    }
  });
}

// ------------------------------------------------------------ quasi-primary

void claim_qp5(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.modules()) {
    for (const auto& N : M->submodule_list()) {
      if (!N.proper()) continue;
      ++rep.instances;
      if (!pred(M, N, SubKind::QuasiPrimary)) continue;
      Ideal res = residual_ideal(*M, N);
      bool inside_j;
      if (M->adapter())
        inside_j = false;  // kZ with k >= 1 never lies inside J(Z) = 0Z
      else
        inside_j = M->ring->invariants().jacobson.contains(res.elems);
      if (!inside_j) continue;
      ++rep.hits;
      ++rep.nontrivial;
      Verdict v = submodule_predicate(*M, N, SubKind::QuasiJ);
      if (!v.holds) vio(rep, sub_inst(M, N), "not quasi-J: " + wit_str(v));
    }
  }
}

void claim_qp5_cor(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.modules()) {
    for (const auto& N : M->submodule_list()) {
      if (!N.proper()) continue;
      ++rep.instances;
      if (!pred(M, N, SubKind::QuasiPrimary)) continue;
      if (!ipred(residual_ideal(*M, N), IdealKind::QuasiJ)) continue;
      ++rep.hits;
      ++rep.nontrivial;
      Verdict v = submodule_predicate(*M, N, SubKind::QuasiJ);
      if (!v.holds) vio(rep, sub_inst(M, N), "not quasi-J: " + wit_str(v));
    }
  }
}

// ------------------------------------------------------------------ pure

void claim_pure(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.modules()) {
    bool jr_regular;
    if (M->adapter())
      jr_regular = false;  // eZ contains 0, which is never regular
    else
      jr_regular = M->ring->invariants().regular.contains(M->invariants().jr.elems);
    for (const auto& N : M->submodule_list()) {
      if (!N.proper()) continue;
      ++rep.instances;
      if (!jr_regular) continue;
      if (!pred(M, N, SubKind::Divisible)) continue;
      if (!pred(M, N, SubKind::J)) continue;
      ++rep.hits;
      ++rep.nontrivial;
      Verdict v = submodule_predicate(*M, N, SubKind::Pure);
      if (!v.holds) vio(rep, sub_inst(M, N), "not pure: " + wit_str(v));
    }
  }
  rep.note = "vacuous by convention: 0 lies in (J(R)M:M) and 0 is never a regular element, so "
             "(J(R)M:M) <= Reg(R) has no instances";
}

// ----------------------------------------------------------------- avoid

void claim_avoid(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.modules()) {
    if (M->adapter()) continue;  // J(Z) = 0Z never equals (J(Z)M:M) = eZ with e >= 1
    const RingPtr& R = M->ring;
    Ideal jac = jacobson_ideal(R);
    if (!jac.same_as(M->invariants().jr)) continue;
    if (!ipred(jac, IdealKind::QuasiJ)) continue;
    const auto& subs = M->submodule_list();
    const int s = int(subs.size());
    std::vector<bool> is_j(s), is_qj(s), res_out(s);
    for (int i = 0; i < s; ++i) {
      is_j[i] = subs[i].proper() && pred(M, subs[i], SubKind::J);
      is_qj[i] = subs[i].proper() && pred(M, subs[i], SubKind::QuasiJ);
      res_out[i] = !R->invariants().jacobson.contains(residual_ideal(*M, subs[i]).elems);
    }
    long budget = corpus.spec.avoid_sample_cap;
    for (int k = 1; k <= 3 && budget > 0; ++k) {
      std::vector<int> pick(k, 0);
      while (budget > 0) {
        for (int n_i = 0; n_i < s && budget > 0; ++n_i) {
          const Submodule& N = subs[n_i];
          for (int j = 0; j < k && budget > 0; ++j) {
            --budget;
            ++rep.instances;
            DenseSet cover(M->n), rest(M->n);
            bool others_out = true;
            for (int i = 0; i < k; ++i) {
              cover |= subs[pick[i]].elems;
              if (i != j) {
                rest |= subs[pick[i]].elems;
                if (!res_out[pick[i]]) others_out = false;
              }
            }
            if (!cover.contains(N.elems)) continue;
            if (rest.contains(N.elems)) continue;
            if (!others_out) continue;
            bool hit = false;
            if (is_j[pick[j]]) {
              hit = true;
              if (!subs[pick[j]].elems.contains(N.elems))
                vio(rep, M->label + ", N=" + N.to_string() + ", N_j=" + subs[pick[j]].to_string(),
                    "N escapes the J-submodule cover member");
            }
            if (is_qj[pick[j]]) {
              hit = true;
              if (!M->m_rad(subs[pick[j]]).elems.contains(N.elems))
                vio(rep, M->label + ", N=" + N.to_string() + ", N_j=" + subs[pick[j]].to_string(),
                    "N escapes M-rad of the quasi-J cover member");
            }
            if (hit) {
              ++rep.hits;
              if (k >= 2) ++rep.nontrivial;
            }
          }
        }
        int d = k;
        while (d > 0) {
          --d;
          if (++pick[d] < s) break;
          pick[d] = 0;
          if (d == 0) goto next_k;
        }
      }
    next_k:;
    }
  }
  rep.note = "cover size k >= 2 cannot fire on finite corpora: the ring hypothesis forces a local "
             "ring, where every (N_i:M) with proper N_i falls inside J(R); only the k = 1 "
             "degenerate shape hits";
}

// ------------------------------------------------------- presimplifiable

void claim_tp(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.modules()) {
    const DenseSet& jrm = M->invariants().jrm;
    for (const auto& N : M->submodule_list()) {
      if (!N.proper()) continue;
      if (!jrm.contains(N.elems)) continue;
      ++rep.instances;
      ++rep.hits;
      ++rep.nontrivial;
      QuotientModule Q = quotient_module(M, N);
      bool lhs_q = pred(M, N, SubKind::QuasiJ);
      bool rhs_q = presimplifiable(*Q.module, PresimplKind::QuasiJ).holds;
      bool lhs_j = pred(M, N, SubKind::J);
      bool rhs_j = presimplifiable(*Q.module, PresimplKind::J).holds;
      if (lhs_q != rhs_q)
        vio(rep, sub_inst(M, N),
            "quasi_J(N)=" + std::string(lhs_q ? "true" : "false") +
                " but quotient quasi-J-presimplifiable=" + (rhs_q ? "true" : "false"));
      if (lhs_j != rhs_j)
        vio(rep, sub_inst(M, N),
            "J(N)=" + std::string(lhs_j ? "true" : "false") +
                " but quotient J-presimplifiable=" + (rhs_j ? "true" : "false"));
    }
  }
}

void claim_tp_cor(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.modules()) {
    if (M->adapter()) continue;  // (J(Z)M:M) = eZ never equals J(Z) = 0Z
    if (!(M->invariants().jr.elems == M->ring->invariants().jacobson)) continue;
    const DenseSet& jrm = M->invariants().jrm;
    for (const auto& N : M->submodule_list()) {
      if (!N.proper()) continue;
      if (!jrm.contains(N.elems)) continue;
      ++rep.instances;
      ++rep.hits;
      ++rep.nontrivial;
      QuotientModule Q = quotient_module(M, N);
      bool q1 = pred(M, N, SubKind::QuasiJ);
      bool q2 = presimplifiable(*Q.module, PresimplKind::QuasiJ).holds;
      bool q3 = presimplifiable(*Q.module, PresimplKind::Quasi).holds;
      bool j1 = pred(M, N, SubKind::J);
      bool j2 = presimplifiable(*Q.module, PresimplKind::J).holds;
      bool j3 = presimplifiable(*Q.module, PresimplKind::Plain).holds;
      if (q1 != q2 || q2 != q3)
        vio(rep, sub_inst(M, N),
            "quasi chain broken: " + std::string(q1 ? "t" : "f") + "/" + (q2 ? "t" : "f") + "/" +
                (q3 ? "t" : "f"));
      if (j1 != j2 || j2 != j3)
        vio(rep, sub_inst(M, N),
            "J chain broken: " + std::string(j1 ? "t" : "f") + "/" + (j2 ? "t" : "f") + "/" +
                (j3 ? "t" : "f"));
    }
  }
}

void claim_rT(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.modules()) {
    if (M->n == 1) continue;
    bool m_jpre = presimplifiable(*M, PresimplKind::J).holds;
    const DenseSet& torsion = M->invariants().torsion;
    const DenseSet& jrm = M->invariants().jrm;
    for (const auto& N : M->submodule_list()) {
      if (!N.proper()) continue;
      ++rep.instances;
      bool hyp1 = m_jpre && pred(M, N, SubKind::R);
      bool hyp2 = pred(M, N, SubKind::Sr) && torsion == N.elems && jrm.contains(N.elems);
      if (!hyp1 && !hyp2) continue;
      ++rep.hits;
      ++rep.nontrivial;
      Verdict vj = submodule_predicate(*M, N, SubKind::J);
      Verdict vq = submodule_predicate(*M, N, SubKind::QuasiJ);
      if (!vj.holds)
        vio(rep, sub_inst(M, N),
            std::string(hyp1 ? "r-submodule" : "sr-submodule") + " case, not a J-submodule: " +
                wit_str(vj));
      if (!vq.holds)
        vio(rep, sub_inst(M, N),
            std::string(hyp1 ? "r-submodule" : "sr-submodule") + " case, not quasi-J: " +
                wit_str(vq));
    }
  }
}

// ----------------------------------------------------------- fgfm lemmas

void claim_lem9(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.ring_modules) {
    if (!is_fgfm(M)) continue;
    const auto& subs = M->submodule_list();
    const auto ideals = all_ideals(M->ring);
    for (const auto& N : subs) {
      if (!N.proper()) continue;
      Ideal res = residual_ideal(*M, N);
      bool rad_ok = M->m_rad(N).elems == ideal_action(radical_of_ideal(res), *M).elems;
      for (const auto& I : ideals) {
        ++rep.instances;
        ++rep.hits;
        ++rep.nontrivial;
        if (!rad_ok) {
          vio(rep, sub_inst(M, N), "M-rad(N) differs from sqrt(N:M)M");
          rad_ok = true;  // report once per N
        }
        Submodule IM = ideal_action(I, *M);
        if (!residual_ideal(*M, IM).same_as(I))
          vio(rep, M->label + ", I=" + I.to_string(), "(IM:M) differs from I");
        Submodule IN = ideal_on_sub(M, I, N);
        if (!residual_ideal(*M, IN).same_as(ideal_product(I, res)))
          vio(rep, M->label + ", N=" + N.to_string() + ", I=" + I.to_string(),
              "(IN:M) differs from I(N:M)");
      }
    }
  }
}

void claim_thm1_1(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.ring_modules) {
    if (!is_fgfm(M)) continue;
    for (const auto& I : all_ideals(M->ring)) {
      ++rep.instances;
      ++rep.hits;
      if (I.proper()) ++rep.nontrivial;
      bool lhs = ipred(I, IdealKind::QuasiJ);
      Submodule IM = ideal_action(I, *M);
      bool rhs = pred(M, IM, SubKind::QuasiJ);
      if (lhs != rhs)
        vio(rep, M->label + ", I=" + I.to_string(),
            "quasi_J(I)=" + std::string(lhs ? "true" : "false") + " but quasi_J(IM)=" +
                (rhs ? "true" : "false"));
    }
  }
}

void claim_thm1_2(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.ring_modules) {
    if (!is_fgfm(M)) continue;
    for (const auto& N : M->submodule_list()) {
      ++rep.instances;
      ++rep.hits;
      if (N.proper()) ++rep.nontrivial;
      bool lhs = pred(M, N, SubKind::QuasiJ);
      bool rhs = ipred(residual_ideal(*M, N), IdealKind::QuasiJ);
      if (lhs != rhs)
        vio(rep, sub_inst(M, N),
            "quasi_J(N)=" + std::string(lhs ? "true" : "false") + " but quasi_J((N:M))=" +
                (rhs ? "true" : "false"));
    }
  }
}

void claim_thm1_3(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.ring_modules) {
    if (!is_fgfm(M)) continue;
    const auto ideals = all_ideals(M->ring);
    for (const auto& N : M->submodule_list()) {
      if (!N.proper()) continue;
      ++rep.instances;
      ++rep.hits;
      bool lhs = pred(M, N, SubKind::QuasiJ);
      if (lhs) ++rep.nontrivial;
      bool rhs = false;
      for (const auto& I : ideals)
        if (ipred(I, IdealKind::QuasiJ) && ideal_action(I, *M).elems == N.elems) {
          rhs = true;
          break;
        }
      if (lhs != rhs)
        vio(rep, sub_inst(M, N),
            "quasi_J(N)=" + std::string(lhs ? "true" : "false") +
                " but quasi-J generating ideal " + (rhs ? "exists" : "does not exist"));
    }
  }
}

void claim_thm1_4(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.ring_modules) {
    if (!is_fgfm(M)) continue;
    for (const auto& I : all_ideals(M->ring)) {
      if (!ipred(I, IdealKind::QuasiJ)) continue;
      for (const auto& N : M->submodule_list()) {
        ++rep.instances;
        if (!N.proper() || !pred(M, N, SubKind::QuasiJ)) continue;
        ++rep.hits;
        ++rep.nontrivial;
        Submodule IN = ideal_on_sub(M, I, N);
        Verdict v = submodule_predicate(*M, IN, SubKind::QuasiJ);
        if (!v.holds)
          vio(rep, M->label + ", I=" + I.to_string() + ", N=" + N.to_string(),
              "IN=" + IN.to_string() + " not quasi-J: " + wit_str(v));
      }
    }
  }
}

// multiplication test for an ideal viewed inside R: every subideal J of I
// must equal (J : I) I
bool mult_ideal(const RingPtr& R, const Ideal& I) {
  for (const auto& J : all_ideals(R)) {
    if (!I.contains_ideal(J)) continue;
    DenseSet colon(R->n);
    for (int r = 0; r < R->n; ++r) {
      bool in = true;
      I.elems.for_each([&](int a) {
        if (in && !J.elems.test(R->mulv(r, a))) in = false;
      });
      if (in) colon.set(r);
    }
    if (!ideal_product(ideal_from_set(R, colon), I).same_as(J)) return false;
  }
  return true;
}

bool faithful_ideal(const RingPtr& R, const Ideal& I) {
  for (int r = 0; r < R->n; ++r) {
    if (r == R->zero) continue;
    bool kills = true;
    I.elems.for_each([&](int a) {
      if (kills && R->mulv(r, a) != R->zero) kills = false;
    });
    if (kills) return false;
  }
  return true;
}

void claim_IN(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.ring_modules) {
    if (M->adapter() || !M->invariants().faithful || !is_mult(M)) continue;
    const RingPtr& R = M->ring;
    for (const auto& I : all_ideals(R)) {
      if (!faithful_ideal(R, I) || !mult_ideal(R, I)) continue;
      Ideal radI = radical_of_ideal(I);
      bool rad_mult = mult_ideal(R, radI);
      for (const auto& N : M->submodule_list()) {
        ++rep.instances;
        Submodule IN = ideal_on_sub(M, I, N);
        bool hyp1 = IN.proper() && pred(M, IN, SubKind::J);
        Submodule radIN = ideal_on_sub(M, radI, N);
        bool hyp2 = rad_mult && radIN.proper() && pred(M, radIN, SubKind::QuasiJ);
        if (!hyp1 && !hyp2) continue;
        ++rep.hits;
        if (I.proper()) ++rep.nontrivial;
        if (hyp1 && !(ipred(I, IdealKind::J) || (N.proper() && pred(M, N, SubKind::J))))
          vio(rep, M->label + ", I=" + I.to_string() + ", N=" + N.to_string(),
              "IN is a J-submodule but neither disjunct holds");
        if (hyp2 && !(ipred(I, IdealKind::QuasiJ) || (N.proper() && pred(M, N, SubKind::QuasiJ))))
          vio(rep, M->label + ", I=" + I.to_string() + ", N=" + N.to_string(),
              "sqrt(I)N is quasi-J but neither disjunct holds");
      }
    }
  }
  rep.note = kNoFaithfulIdeal;
}

void claim_thm3(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.ring_modules) {
    if (!is_fgfm(M)) continue;
    const auto& jac = M->ring->invariants().jacobson;
    for (const auto& N : M->submodule_list()) {
      if (!N.proper()) continue;
      ++rep.instances;
      ++rep.hits;
      Submodule rad = M->m_rad(N);
      bool s1 = pred(M, N, SubKind::QuasiJ);
      bool s2 = pred(M, rad, SubKind::QuasiJ);
      bool s3 = pred(M, rad, SubKind::J);
      bool s4 = true;
      for (int r = 0; r < M->ring->n && s4; ++r) {
        if (jac.test(r)) continue;
        DenseSet scal(M->ring->n);
        scal.set(r);
        if (!(colon_by_set(*M, rad, scal).elems == rad.elems)) s4 = false;
      }
      if (s1) ++rep.nontrivial;
      if (s1 != s2 || s2 != s3 || s3 != s4)
        vio(rep, sub_inst(M, N),
            "equivalence chain broken: " + std::string(s1 ? "t" : "f") + "/" + (s2 ? "t" : "f") +
                "/" + (s3 ? "t" : "f") + "/" + (s4 ? "t" : "f"));
    }
  }
}

void claim_prop7(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.ring_modules) {
    if (!is_fgfm(M)) continue;
    for (const auto& N : M->submodule_list()) {
      ++rep.instances;
      ++rep.hits;
      Ideal res = residual_ideal(*M, N);
      Ideal rad = radical_of_ideal(res);
      bool s1 = pred(M, N, SubKind::QuasiJ);
      bool s2 = ipred(rad, IdealKind::J);
      bool s3 = ipred(rad, IdealKind::QuasiJ);
      bool s4 = ipred(res, IdealKind::QuasiJ);
      if (s1) ++rep.nontrivial;
      if (s1 != s2 || s2 != s3 || s3 != s4)
        vio(rep, sub_inst(M, N),
            "equivalence chain broken: " + std::string(s1 ? "t" : "f") + "/" + (s2 ? "t" : "f") +
                "/" + (s3 ? "t" : "f") + "/" + (s4 ? "t" : "f"));
    }
  }
}

void claim_ikil(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.modules()) {
    if (M->adapter()) continue;
    const RingPtr& R = M->ring;
    const Ideal& jr = M->invariants().jr;
    const auto& subs = M->submodule_list();
    std::vector<int> qj;
    for (int i = 0; i < int(subs.size()); ++i)
      if (subs[i].proper() && pred(M, subs[i], SubKind::QuasiJ)) qj.push_back(i);
    const bool fg = is_fgfm(M);
    for (const auto& I : all_ideals(R)) {
      if (jr.contains_ideal(I)) continue;
      std::unordered_map<int, Submodule> acted;
      auto act_on = [&](int i) -> const Submodule& {
        auto it = acted.find(i);
        if (it == acted.end()) it = acted.emplace(i, ideal_on_sub(M, I, subs[i])).first;
        return it->second;
      };
      for (int a : qj)
        for (int b : qj) {
          ++rep.instances;
          if (!(act_on(a).elems == act_on(b).elems)) continue;
          ++rep.hits;
          if (a != b) ++rep.nontrivial;
          if (!(M->m_rad(subs[a]).elems == M->m_rad(subs[b]).elems))
            vio(rep, M->label + ", I=" + I.to_string() + ", K=" + subs[a].to_string() +
                         ", L=" + subs[b].to_string(),
                "IK = IL but M-rad(K) != M-rad(L)");
        }
      if (fg) {
        for (int i = 0; i < int(subs.size()); ++i) {
          if (!subs[i].proper()) continue;
          ++rep.instances;
          const Submodule& IN = act_on(i);
          if (!IN.proper() || !pred(M, IN, SubKind::QuasiJ)) continue;
          ++rep.hits;
          ++rep.nontrivial;
          Verdict v = submodule_predicate(*M, subs[i], SubKind::QuasiJ);
          if (!v.holds)
            vio(rep, M->label + ", I=" + I.to_string() + ", N=" + subs[i].to_string(),
                "IN quasi-J but N is not: " + wit_str(v));
        }
      }
    }
  }
  rep.note = "ideal-quantified, so adapter modules are exercised through their finite scalar "
             "classes elsewhere; part (2) needs the fgfm filter";
}

void claim_lem2(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.ring_modules) {
    if (M->adapter() || !M->invariants().faithful || !is_mult(M)) continue;
    const RingPtr& R = M->ring;
    for (const auto& I : all_ideals(R)) {
      if (!faithful_ideal(R, I) || !mult_ideal(R, I)) continue;
      Submodule IM = ideal_action(I, *M);
      for (const auto& N : M->submodule_list()) {
        if (!IM.elems.contains(N.elems)) continue;
        ++rep.instances;
        ++rep.hits;
        if (I.proper()) ++rep.nontrivial;
        Submodule colon = colon_submodule(*M, N, I);
        Submodule lhs = M->m_rad(N);  // I = R is the only faithful case, so (IM)-rad = M-rad
        Submodule rhs = ideal_on_sub(M, I, M->m_rad(colon));
        if (!(lhs.elems == rhs.elems))
          vio(rep, M->label + ", I=" + I.to_string() + ", N=" + N.to_string(),
              "(IM)-rad(N) differs from I(M-rad(N:I))");
        Submodule IN = ideal_on_sub(M, I, N);
        if (!(colon_submodule(*M, IN, I).elems == N.elems))
          vio(rep, M->label + ", I=" + I.to_string() + ", N=" + N.to_string(),
              "N differs from (IN : I)");
      }
    }
  }
  rep.note = kNoFaithfulIdeal;
}

void claim_colonI(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.ring_modules) {
    if (M->adapter() || !M->invariants().faithful || !is_mult(M)) continue;
    const RingPtr& R = M->ring;
    const bool local = R->maximal_ideal_indices().size() == 1;
    for (const auto& I : all_ideals(R)) {
      if (!faithful_ideal(R, I) || !mult_ideal(R, I)) continue;
      for (const auto& N : M->submodule_list()) {
        if (!N.proper()) continue;
        ++rep.instances;
        // with I = R the inner module IM is M itself
        bool fwd_hyp = pred(M, N, SubKind::QuasiJ);
        Submodule colon = colon_submodule(*M, N, I);
        if (fwd_hyp) {
          ++rep.hits;
          if (I.proper()) ++rep.nontrivial;
          Verdict v = submodule_predicate(*M, colon, SubKind::QuasiJ);
          if (!v.holds)
            vio(rep, M->label + ", I=" + I.to_string() + ", N=" + N.to_string(),
                "(N : I) not quasi-J: " + wit_str(v));
        }
        if (local && colon.proper() && pred(M, colon, SubKind::QuasiJ)) {
          if (!pred(M, N, SubKind::QuasiJ))
            vio(rep, M->label + ", I=" + I.to_string() + ", N=" + N.to_string(),
                "(N : I) quasi-J over a local ring but N is not");
        }
      }
    }
  }
  rep.note = kNoFaithfulIdeal;
}

void claim_small(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.ring_modules) {
    if (!is_fgfm(M)) continue;
    for (const auto& N : M->submodule_list()) {
      if (!N.proper()) continue;
      ++rep.instances;
      if (!pred(M, N, SubKind::QuasiJ)) continue;
      ++rep.hits;
      ++rep.nontrivial;
      Verdict v = submodule_predicate(*M, N, SubKind::Small);
      if (!v.holds) vio(rep, sub_inst(M, N), "not small: " + wit_str(v));
    }
  }
}

void claim_jN(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.ring_modules) {
    if (!is_fgfm(M)) continue;
    const DenseSet& jm = M->invariants().j_m;
    for (const auto& N : M->submodule_list()) {
      if (!N.proper()) continue;
      ++rep.instances;
      if (!pred(M, N, SubKind::J)) continue;
      ++rep.hits;
      ++rep.nontrivial;
      bool s1 = pred(M, N, SubKind::QuasiJ);
      bool s2 = jm.contains(N.elems);
      if (s2) {
        Ideal gate = residual_ideal(*M, M->j_over(N));
        Submodule rad = M->m_rad(N);
        for (int r = 0; r < M->ring->n && s2; ++r) {
          if (gate.contains(r)) continue;
          for (int m = 0; m < M->n; ++m)
            if (N.elems.test(M->actv(r, m)) && !rad.elems.test(m)) {
              s2 = false;
              break;
            }
        }
      }
      if (s1 != s2)
        vio(rep, sub_inst(M, N),
            "quasi_J(N)=" + std::string(s1 ? "true" : "false") +
                " but the J(N)-gated characterization gives " + (s2 ? "true" : "false"));
    }
  }
}

void claim_klchar(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.ring_modules) {
    if (!is_fgfm(M)) continue;
    const DenseSet& jm = M->invariants().j_m;
    const auto& subs = M->submodule_list();
    const size_t s = subs.size();
    std::vector<Ideal> res;
    res.reserve(s);
    for (const auto& K : subs) res.push_back(residual_ideal(*M, K));
    std::vector<std::vector<DenseSet>> prod_act(s, std::vector<DenseSet>(s));
    for (size_t a = 0; a < s; ++a)
      for (size_t b = a; b < s; ++b) {
        prod_act[a][b] = ideal_action(ideal_product(res[a], res[b]), *M).elems;
        prod_act[b][a] = prod_act[a][b];
      }
    std::vector<int> elem_sub(M->n);
    for (int m = 0; m < M->n; ++m) {
      Submodule cyc = submodule_generated(M, {m});
      for (int i = 0; i < int(s); ++i)
        if (subs[i].elems == cyc.elems) {
          elem_sub[m] = i;
          break;
        }
    }
    for (const auto& N : subs) {
      if (!N.proper()) continue;
      ++rep.instances;
      ++rep.hits;
      Submodule rad = M->m_rad(N);
      bool s1 = pred(M, N, SubKind::QuasiJ);
      if (s1) ++rep.nontrivial;
      bool s2 = true;
      for (size_t a = 0; a < s && s2; ++a)
        for (size_t b = 0; b < s; ++b) {
          if (N.elems.contains(prod_act[a][b]) && !jm.contains(subs[a].elems) &&
              !rad.elems.contains(subs[b].elems)) {
            s2 = false;
            break;
          }
        }
      bool s3 = true;
      for (int m1 = 0; m1 < M->n && s3; ++m1)
        for (int m2 = 0; m2 < M->n; ++m2) {
          if (N.elems.contains(prod_act[elem_sub[m1]][elem_sub[m2]]) && !jm.test(m1) &&
              !rad.elems.test(m2)) {
            s3 = false;
            break;
          }
        }
      if (s1 != s2)
        vio(rep, sub_inst(M, N), "submodule-pair characterization disagrees with quasi_J");
      if (s1 != s3)
        vio(rep, sub_inst(M, N), "elementwise characterization disagrees with quasi_J");
    }
  }
}

void claim_colonS(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.ring_modules) {
    if (!is_fgfm(M)) continue;
    const RingPtr& R = M->ring;
    const auto& jac = R->invariants().jacobson;
    std::vector<DenseSet> sets;
    for (int r = 0; r < R->n; ++r) {
      DenseSet s(R->n);
      s.set(r);
      sets.push_back(std::move(s));
    }
    for (const auto& S : corpus.mult_sets)
      if (S.ring == R) sets.push_back(S.elems);
    for (const auto& N : M->submodule_list()) {
      if (!N.proper()) continue;
      bool n_qj = pred(M, N, SubKind::QuasiJ);
      for (const auto& S : sets) {
        ++rep.instances;
        if (jac.contains(S)) continue;
        if (!n_qj) continue;
        ++rep.hits;
        ++rep.nontrivial;
        Submodule colon = colon_by_set(*M, N, S);
        Verdict v = submodule_predicate(*M, colon, SubKind::QuasiJ);
        if (!v.holds)
          vio(rep, sub_inst(M, N) + ", S=" + set_to_string(*M->ring, S),
              "(N : S) not quasi-J: " + wit_str(v));
      }
    }
  }
}

void claim_max(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.modules()) {
    const auto maximal = quasi_J_maximal_set(*M);
    const bool fg = is_fgfm(M);
    for (const auto& N : M->submodule_list()) {
      if (!N.proper()) continue;
      ++rep.instances;
      if (!pred(M, N, SubKind::QuasiJ)) continue;
      ++rep.hits;
      ++rep.nontrivial;
      bool below = false;
      for (const auto& K : maximal)
        if (K.elems.contains(N.elems)) {
          below = true;
          break;
        }
      if (!below) vio(rep, sub_inst(M, N), "no maximal quasi-J submodule above N");
    }
    if (fg)
      for (const auto& K : maximal) {
        Verdict v = submodule_predicate(*M, K, SubKind::J);
        if (!v.holds)
          vio(rep, M->label + ", K=" + K.to_string(),
              "maximal quasi-J submodule is not a J-submodule: " + wit_str(v));
      }
  }
}

void claim_corJ(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.ring_modules) {
    if (!is_fgfm(M)) continue;
    ++rep.instances;
    ++rep.hits;
    Submodule jm = submodule_from_set(M, M->invariants().j_m);
    bool s1 = pred(M, jm, SubKind::J);
    bool s2 = pred(M, jm, SubKind::QuasiJ);
    bool s3 = pred(M, jm, SubKind::Prime);
    if (s1 || s2 || s3) ++rep.nontrivial;
    if (s1 != s2 || s2 != s3)
      vio(rep, M->label + ", J(M)=" + jm.to_string(),
          "equivalence broken: J=" + std::string(s1 ? "t" : "f") + ", quasi-J=" +
              (s2 ? "t" : "f") + ", prime=" + (s3 ? "t" : "f"));
  }
}

void claim_closure(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.modules()) {
    if (!is_mult(M)) continue;
    const auto& subs = M->submodule_list();
    std::vector<int> qj;
    for (int i = 0; i < int(subs.size()); ++i)
      if (subs[i].proper() && pred(M, subs[i], SubKind::QuasiJ)) qj.push_back(i);
    auto product_of = [&](const std::vector<int>& picks) {
      Submodule p = subs[picks[0]];
      for (size_t t = 1; t < picks.size(); ++t) p = submodule_product(*M, p, subs[picks[t]]);
      return p;
    };
    auto check_tuple = [&](const std::vector<int>& picks) {
      ++rep.instances;
      ++rep.hits;
      ++rep.nontrivial;
      Submodule inter = subs[picks[0]];
      for (size_t t = 1; t < picks.size(); ++t)
        inter = submodule_intersect(inter, subs[picks[t]]);
      Verdict vi = submodule_predicate(*M, inter, SubKind::QuasiJ);
      if (!vi.holds)
        vio(rep, M->label + ", intersection of " + std::to_string(picks.size()) + " quasi-J",
            inter.to_string() + " not quasi-J: " + wit_str(vi));
      Submodule prod = product_of(picks);
      Verdict vp = submodule_predicate(*M, prod, SubKind::QuasiJ);
      if (!vp.holds)
        vio(rep, M->label + ", product of " + std::to_string(picks.size()) + " quasi-J",
            prod.to_string() + " not quasi-J: " + wit_str(vp));
    };
    for (size_t a = 0; a < qj.size(); ++a)
      for (size_t b = a; b < qj.size(); ++b) check_tuple({qj[a], qj[b]});
    for (size_t a = 0; a < qj.size(); ++a)
      for (size_t b = a; b < qj.size(); ++b)
        for (size_t d = b; d < qj.size(); ++d) check_tuple({qj[a], qj[b], qj[d]});
  }
}

void claim_qpconv(const Corpus& corpus, CheckReport& rep) {
  for (const auto& M : corpus.ring_modules) {
    if (!is_fgfm(M)) continue;
    const auto& subs = M->submodule_list();
    std::vector<int> qp;
    for (int i = 0; i < int(subs.size()); ++i)
      if (subs[i].proper() && pred(M, subs[i], SubKind::QuasiPrimary)) qp.push_back(i);
    std::vector<Ideal> rads;
    rads.reserve(subs.size());
    for (const auto& K : subs) rads.push_back(radical_of_ideal(residual_ideal(*M, K)));
    auto incomparable = [&](const std::vector<int>& picks) {
      for (size_t x = 0; x < picks.size(); ++x)
        for (size_t y = x + 1; y < picks.size(); ++y)
          if (rads[picks[x]].contains_ideal(rads[picks[y]]) ||
              rads[picks[y]].contains_ideal(rads[picks[x]]))
            return false;
      return true;
    };
    auto check_tuple = [&](const std::vector<int>& picks) {
      ++rep.instances;
      if (!incomparable(picks)) return;
      Submodule inter = subs[picks[0]];
      Ideal prod_res = residual_ideal(*M, subs[picks[0]]);
      for (size_t t = 1; t < picks.size(); ++t) {
        inter = submodule_intersect(inter, subs[picks[t]]);
        prod_res = ideal_product(prod_res, residual_ideal(*M, subs[picks[t]]));
      }
      Submodule prod = ideal_action(prod_res, *M);
      bool hyp = (inter.proper() && pred(M, inter, SubKind::QuasiJ)) ||
                 (prod.proper() && pred(M, prod, SubKind::QuasiJ));
      if (!hyp) return;
      ++rep.hits;
      ++rep.nontrivial;
      for (int i : picks) {
        Verdict v = submodule_predicate(*M, subs[i], SubKind::QuasiJ);
        if (!v.holds)
          vio(rep, M->label + ", N_i=" + subs[i].to_string(),
              "member of the tuple not quasi-J: " + wit_str(v));
      }
    };
    for (size_t a = 0; a < qp.size(); ++a)
      for (size_t b = a + 1; b < qp.size(); ++b) check_tuple({qp[a], qp[b]});
    for (size_t a = 0; a < qp.size(); ++a)
      for (size_t b = a + 1; b < qp.size(); ++b)
        for (size_t d = b + 1; d < qp.size(); ++d) check_tuple({qp[a], qp[b], qp[d]});
  }
  rep.note = "no finite instance satisfies the hypotheses: incomparable radicals need a "
             "non-local ring, while a quasi-J intersection or product forces a local one";
}

// ------------------------------------------------------------ idealization

void claim_thm6(const Corpus& corpus, CheckReport& rep) {
  for (const auto& A : corpus.idealizations) {
    const RingPtr& R = A.base;
    const ModulePtr& M = A.mod;

    DenseSet expect_j(A.ring->n);
    R->invariants().jacobson.for_each(
        [&](int r) { for (int m = 0; m < M->n; ++m) expect_j.set(A.pair_index(r, m)); });
    if (!(A.ring->invariants().jacobson == expect_j))
      vio(rep, A.ring->label, "J of the extension is not J(R)(+)M");

    for (const auto& I : all_ideals(R)) {
      Submodule IM = ideal_action(I, *M);
      for (const auto& N : M->submodule_list()) {
        if (!N.elems.contains(IM.elems)) continue;
        ++rep.instances;
        ++rep.hits;
        if (I.proper()) ++rep.nontrivial;
        Ideal P = pair_ideal(A, I, N);
        bool lhs = ipred(P, IdealKind::QuasiJ);
        bool rhs = ipred(I, IdealKind::QuasiJ);
        if (lhs != rhs)
          vio(rep, A.ring->label + ", I=" + I.to_string() + ", N=" + N.to_string(),
              "quasi_J(I(+)N)=" + std::string(lhs ? "true" : "false") + " but quasi_J(I)=" +
                  (rhs ? "true" : "false"));
        DenseSet expect_rad(A.ring->n);
        radical_of_ideal(I).elems.for_each(
            [&](int r) { for (int m = 0; m < M->n; ++m) expect_rad.set(A.pair_index(r, m)); });
        if (!(radical_of_ideal(P).elems == expect_rad))
          vio(rep, A.ring->label + ", I=" + I.to_string() + ", N=" + N.to_string(),
              "sqrt(I(+)N) is not sqrt(I)(+)M");
      }
    }
  }
}

void claim_thm6_cor(const Corpus& corpus, CheckReport& rep) {
  for (const auto& A : corpus.idealizations) {
    if (A.mod->adapter() || !A.mod->invariants().faithful || !is_mult(A.mod)) continue;
    const RingPtr& R = A.base;
    const ModulePtr& M = A.mod;
    for (const auto& I : all_ideals(R)) {
      ++rep.instances;
      Submodule IM = ideal_action(I, *M);
      if (!IM.proper() || !pred(M, IM, SubKind::QuasiJ)) continue;
      ++rep.hits;
      ++rep.nontrivial;
      for (const auto& N : M->submodule_list()) {
        if (!N.elems.contains(IM.elems)) continue;
        Ideal P = pair_ideal(A, I, N);
        if (!ipred(P, IdealKind::QuasiJ))
          vio(rep, A.ring->label + ", I=" + I.to_string() + ", N=" + N.to_string(),
              "I(+)N not quasi-J although IM is a quasi-J submodule");
      }
    }
  }
}

std::vector<Claim> make_claims() {
  std::vector<Claim> v;
  auto add = [&](const char* id, const char* anchor,
                 std::function<void(const Corpus&, CheckReport&)> fn) {
    v.push_back({id, anchor, std::move(fn)});
  };

  add("eq1",
      "proper N: N quasi-J <=> (rK <= N, r outside (J(R)M:M) => K <= M-rad(N)) <=> (AK <= N, A "
      "not inside (J(R)M:M) => K <= M-rad(N))",
      claim_eq1);
  add("hom.img", "f epi, N quasi-J in the source, ker f <= N => f(N) quasi-J in the target",
      claim_hom_img);
  add("hom.pre",
      "f epi, K quasi-J in the target, ker f <= J(R)M over the source => f^-1(K) quasi-J",
      claim_hom_pre);
  add("prod.1",
      "N = N_1 x ... x N_k quasi-J in M_1 x ... x M_k over one ring => each proper N_i quasi-J "
      "in M_i",
      claim_prod_1);
  add("prod.2",
      "N_j quasi-J in M_j => M_1 x ... x N_j x ... x M_k quasi-J in the product over one ring",
      claim_prod_2);
  add("loc.1",
      "S^-1 J(R) = J(S^-1 R), N quasi-J, S^-1 N proper => S^-1 N quasi-J in S^-1 M",
      claim_loc_1);
  add("loc.2",
      "S^-1 J(R) = J(S^-1 R), S^-1 N quasi-J, S misses Z_{(J(R)M:M)}(R) and Z_{M-rad(N)}(M) => "
      "N quasi-J",
      claim_loc_2);
  add("qp5", "N quasi-primary, (N:M) <= J(R) => N quasi-J", claim_qp5);
  add("qp5.cor", "N quasi-primary, (N:M) a quasi-J ideal => N quasi-J", claim_qp5_cor);
  add("pure", "N a divisible J-submodule, (J(R)M:M) <= Reg(R) => N pure", claim_pure);
  add("avoid",
      "J(R) = (J(R)M:M) a quasi-J ideal, N <= union of N_1..N_k, N_j (quasi-)J, (N_i:M) outside "
      "J(R) for i != j, N outside the union over i != j => N <= N_j (resp. <= M-rad(N_j)); "
      "k <= 3 with a sampling cap",
      claim_avoid);
  add("tp",
      "N <= J(R)M proper: N quasi-J (resp. J) <=> M/N nonzero quasi-J-presimplifiable (resp. "
      "J-presimplifiable)",
      claim_tp);
  add("tp.cor",
      "N <= J(R)M proper, (J(R)M:M) = J(R): (quasi-)J submodule <=> M/N nonzero "
      "(quasi-)J-presimplifiable <=> M/N nonzero (quasi-)presimplifiable",
      claim_tp_cor);
  add("rT",
      "(1) M J-presimplifiable, N proper r-submodule => N J- and quasi-J; (2) N sr-submodule, "
      "T(M) = N <= J(R)M => same",
      claim_rT);
  add("lem9",
      "fgfm M, proper N, any I: M-rad(N) = sqrt(N:M)M, (IM:M) = I, (IN:M) = I(N:M)", claim_lem9);
  add("thm1.1", "fgfm M: I quasi-J ideal <=> IM quasi-J submodule", claim_thm1_1);
  add("thm1.2", "fgfm M: N quasi-J submodule <=> (N:M) quasi-J ideal", claim_thm1_2);
  add("thm1.3", "fgfm M: N quasi-J <=> N = IM for some quasi-J ideal I", claim_thm1_3);
  add("thm1.4", "fgfm M: I quasi-J ideal, N quasi-J submodule => IN quasi-J", claim_thm1_4);
  add("IN",
      "faithful multiplication M, I fg faithful multiplication ideal: IN J-submodule => I J-ideal "
      "or N J-submodule; sqrt(I) fg multiplication, sqrt(I)N quasi-J => I quasi-J or N quasi-J",
      claim_IN);
  add("thm3",
      "fgfm M, proper N: N quasi-J <=> M-rad(N) quasi-J <=> M-rad(N) J-submodule <=> "
      "(M-rad(N) : <r>) = M-rad(N) for all r outside J(R)",
      claim_thm3);
  add("prop7",
      "fgfm M: N quasi-J <=> sqrt(N:M) J-ideal <=> sqrt(N:M) quasi-J ideal <=> (N:M) quasi-J "
      "ideal",
      claim_prop7);
  add("ikil",
      "I outside (J(R)M:M): K, L quasi-J with IK = IL => M-rad(K) = M-rad(L); on fgfm M, IN "
      "quasi-J => N quasi-J",
      claim_ikil);
  add("lem2",
      "I faithful multiplication ideal, M faithful multiplication: (IM)-rad(N) = I(M-rad(N:I)) "
      "for N <= IM; I fg => N = (IN:I)",
      claim_lem2);
  add("colonI",
      "I faithful multiplication ideal, M faithful multiplication: N quasi-J in IM => (N:I) "
      "quasi-J in M; converse over a local ring",
      claim_colonI);
  add("small", "fgfm M: every quasi-J submodule is small", claim_small);
  add("jN",
      "fgfm M, N a J-submodule: N quasi-J <=> N <= J(M) and (rm in N, r outside (J(N):M) => m "
      "in M-rad(N))",
      claim_jN);
  add("klchar",
      "fgfm M, proper N: N quasi-J <=> (KL <= N => K <= J(M) or L <= M-rad(N)); elementwise "
      "over cyclic submodules",
      claim_klchar);
  add("colonS", "fgfm M, S subset of R outside J(R), N quasi-J => (N:S) quasi-J", claim_colonS);
  add("max",
      "every quasi-J submodule lies under a maximal quasi-J submodule; on fgfm M each maximal "
      "quasi-J submodule is a J-submodule",
      claim_max);
  add("corJ", "fgfm M: J(M) J-submodule <=> J(M) quasi-J <=> J(M) prime", claim_corJ);
  add("closure",
      "multiplication M: N_1..N_k quasi-J => intersection and product quasi-J (k = 2, 3)",
      claim_closure);
  add("qpconv",
      "fgfm M, N_i quasi-primary with pairwise incomparable sqrt(N_i:M): intersection or product "
      "quasi-J => each N_i quasi-J",
      claim_qpconv);
  add("thm6",
      "I(+)N quasi-J ideal of R(+)M <=> I quasi-J ideal of R; J(R(+)M) = J(R)(+)M and "
      "sqrt(I(+)N) = sqrt(I)(+)M checked by enumeration",
      claim_thm6);
  add("thm6.cor",
      "fgfm M, IM quasi-J submodule => I(+)N quasi-J ideal of R(+)M for every legal N",
      claim_thm6_cor);
  return v;
}

}  // namespace

const std::vector<Claim>& all_claims() {
  static const std::vector<Claim> claims = make_claims();
  return claims;
}

CheckReport check_claim(const std::string& id, const Corpus& corpus) {
  for (const auto& c : all_claims()) {
    if (c.id != id) continue;
    CheckReport rep;
    rep.id = c.id;
    rep.anchor = c.anchor;
    c.run(corpus, rep);
    rep.status = !rep.violations.empty()
                     ? ClaimStatus::Fail
                     : (rep.nontrivial > 0 ? ClaimStatus::Pass : ClaimStatus::Vacuous);
    return rep;
  }
  throw Error(Errc::UnknownClaim, "unknown claim id '" + id + "'");
}

std::vector<CheckReport> run_claims(const std::vector<std::string>& ids, const Corpus& corpus) {
  std::vector<CheckReport> reports;
  reports.reserve(ids.size());
  for (const auto& id : ids) reports.push_back(check_claim(id, corpus));
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
  return reports;
}

std::vector<CheckReport> run_all(const Corpus& corpus) {
  std::vector<std::string> ids;
  for (const auto& c : all_claims()) ids.push_back(c.id);
  return run_claims(ids, corpus);
}

std::string render_reports_text(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << r.id << ": " << to_string(r.status) << " (instances=" << r.instances
        << ", hits=" << r.hits << ", nontrivial=" << r.nontrivial << ")\n";
    out << "  anchor: " << r.anchor << "\n";
    if (!r.note.empty()) out << "  note: " << r.note << "\n";
    for (const auto& v : r.violations)
      out << "  violation: " << v.instance << " | " << v.witness << "\n";
  }
  return out.str();
}

std::string render_reports_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j;
    j["id"] = r.id;
    j["anchor"] = r.anchor;
    j["status"] = to_string(r.status);
    j["instances"] = r.instances;
    j["hits"] = r.hits;
    j["nontrivial"] = r.nontrivial;
    j["witnesses"] = nlohmann::json::array();
    for (const auto& v : r.violations)
      j["witnesses"].push_back({{"instance", v.instance}, {"witness", v.witness}});
    if (!r.note.empty()) j["note"] = r.note;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

bool any_failure(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == ClaimStatus::Fail) return true;
  return false;
}

}  // namespace modrad
