#include <sstream>

#include "json.hpp"
#include "modrad/config.hpp"
#include "modrad/harness.hpp"

namespace modrad {
namespace {

std::string wit_text(const Verdict& v) {
  std::string out;
  for (const auto& p : v.witness) {
    if (!out.empty()) out += ", ";
    out += p.role + "=" + p.text;
  }
  return out;
}

// quasi-J submodule that fails to be a J-submodule
void search_quasij_not_j(const Corpus& corpus, SearchReport& rep) {
  for (const auto& M : corpus.modules()) {
    for (const auto& N : M->submodule_list()) {
      if (!N.proper()) continue;
      ++rep.scanned;
      if (!submodule_predicate(*M, N, SubKind::QuasiJ).holds) continue;
      Verdict vj = submodule_predicate(*M, N, SubKind::J);
      if (vj.holds) continue;
      rep.found = true;
      rep.instance = M->label + ", N=" + N.to_string();
      rep.witness = wit_text(vj);
      rep.replayed = replay_submodule_witness(*M, N, SubKind::J, vj);
      return;
    }
  }
}

// factorwise quasi-J tuple whose product submodule is not quasi-J
void search_product(const Corpus& corpus, SearchReport& rep) {
  for (const auto& e : corpus.products) {
    const size_t k = e.parts.size();
    std::vector<std::vector<const Submodule*>> qj(k);
    bool usable = true;
    for (size_t i = 0; i < k; ++i) {
      for (const auto& N : e.parts[i]->submodule_list())
        if (N.proper() && submodule_predicate(*e.parts[i], N, SubKind::QuasiJ).holds)
          qj[i].push_back(&N);
      if (qj[i].empty()) usable = false;
    }
    if (!usable) continue;
    std::vector<size_t> idx(k, 0);
    while (true) {
      ++rep.scanned;
      std::vector<const DenseSet*> comps;
      for (size_t i = 0; i < k; ++i) comps.push_back(&qj[i][idx[i]]->elems);
      Submodule N = submodule_from_set(e.prod, product_set(e.prod->n, e.parts, comps));
      if (N.proper()) {
        Verdict v = submodule_predicate(*e.prod, N, SubKind::QuasiJ);
        if (!v.holds) {
          rep.found = true;
          std::string tuple;
          for (size_t i = 0; i < k; ++i) {
            if (i) tuple += " x ";
            tuple += qj[i][idx[i]]->to_string();
          }
          rep.instance = e.prod->label + ", N=" + tuple;
          rep.witness = wit_text(v);
          rep.replayed = replay_submodule_witness(*e.prod, N, SubKind::QuasiJ, v);
          return;
        }
      }
      size_t d = k;
      while (d > 0) {
        --d;
        if (++idx[d] < qj[d].size()) break;
        idx[d] = 0;
        if (d == 0) goto next_entry;
      }
    }
  next_entry:;
  }
}

// quasi-primary ideal of the integers that is not quasi-J
void search_quasi_primary(const Corpus&, SearchReport& rep) {
  for (long n = 2; n <= 64; ++n) {
    ++rep.scanned;
    if (!symbolic_Z_ideal_predicate(n, IdealKind::QuasiPrimary).holds) continue;
    Verdict v = symbolic_Z_ideal_predicate(n, IdealKind::QuasiJ);
    if (v.holds) continue;
    rep.found = true;
    rep.instance = std::to_string(n) + "Z in Z";
    rep.witness = wit_text(v);
    rep.replayed = replay_symbolic_Z_witness(n, IdealKind::QuasiJ, v);
    return;
  }
}

// submodule whose residual (N:M) is quasi-J while N itself is not
void search_residual(const Corpus& corpus, SearchReport& rep) {
  for (const auto& M : corpus.modules()) {
    for (const auto& N : M->submodule_list()) {
      if (!N.proper()) continue;
      ++rep.scanned;
      Ideal res = residual_ideal(*M, N);
      bool res_qj = res.symbolic() ? symbolic_Z_ideal_predicate(res.sym, IdealKind::QuasiJ).holds
                                   : ideal_predicate(res, IdealKind::QuasiJ).holds;
      if (!res_qj) continue;
      Verdict v = submodule_predicate(*M, N, SubKind::QuasiJ);
      if (v.holds) continue;
      rep.found = true;
      rep.instance = M->label + ", N=" + N.to_string();
      rep.witness = wit_text(v);
      rep.replayed = replay_submodule_witness(*M, N, SubKind::QuasiJ, v);
      return;
    }
  }
  rep.note =
      "no finite instance exists: a quasi-J residual forces a local scalar ring, and over a "
      "local ring every proper submodule is quasi-J; separating examples such as 2Z x 0 inside "
      "Z x Z need a free rank-two module over the integers, which has no finite carrier";
}

// pair ideal I(+)N that is quasi-J while proper N is not quasi-J in M
void search_pair_ideal(const Corpus& corpus, SearchReport& rep) {
  for (const auto& A : corpus.idealizations) {
    for (const auto& I : all_ideals(A.base)) {
      Submodule IM = ideal_action(I, *A.mod);
      for (const auto& N : A.mod->submodule_list()) {
        if (!N.proper()) continue;
        if (!N.elems.contains(IM.elems)) continue;
        ++rep.scanned;
        Ideal P = pair_ideal(A, I, N);
        if (!ideal_predicate(P, IdealKind::QuasiJ).holds) continue;
        Verdict v = submodule_predicate(*A.mod, N, SubKind::QuasiJ);
        if (v.holds) continue;
        rep.found = true;
        rep.instance = A.ring->label + ", I=" + I.to_string() + ", N=" + N.to_string();
        rep.witness = wit_text(v);
        rep.replayed = replay_submodule_witness(*A.mod, N, SubKind::QuasiJ, v);
        return;
      }
    }
  }
  rep.note =
      "no finite instance exists: a quasi-J pair ideal forces a quasi-J component ideal, hence a "
      "local base ring, and over a local ring every proper submodule is quasi-J; the separation "
      "0(+)0 inside the extension of the integers by a six-element cyclic module needs the "
      "integers themselves as the base";
}

}  // namespace

const std::vector<SearchTarget>& all_search_targets() {
  static const std::vector<SearchTarget> targets = {
      {"quasiJ⇒J", "a quasi-J submodule need not be a J-submodule", true},
      {"product-of-quasiJ⇒quasiJ",
       "a product of quasi-J submodules need not be quasi-J in the product module", true},
      {"quasiPrimary⇒quasiJ", "a quasi-primary ideal of the integers need not be quasi-J", true},
      {"resid-quasiJ⇒quasiJ",
       "a quasi-J residual (N:M) does not make N a quasi-J submodule outside the finitely "
       "generated faithful multiplication setting",
       false},
      {"pairideal-quasiJ⇒N-quasiJ",
       "a quasi-J pair ideal I(+)N does not make N a quasi-J submodule", false},
  };
  return targets;
}

SearchReport run_search(const std::string& id, const Corpus& corpus) {
  const SearchTarget* target = nullptr;
  for (const auto& t : all_search_targets())
    if (t.id == id) target = &t;
  if (!target) throw Error(Errc::UnknownClaim, "unknown search target '" + id + "'");
  SearchReport rep;
  rep.id = target->id;
  rep.statement = target->statement;
  if (id == "quasiJ⇒J")
    search_quasij_not_j(corpus, rep);
  else if (id == "product-of-quasiJ⇒quasiJ")
    search_product(corpus, rep);
  else if (id == "quasiPrimary⇒quasiJ")
    search_quasi_primary(corpus, rep);
  else if (id == "resid-quasiJ⇒quasiJ")
    search_residual(corpus, rep);
  else
    search_pair_ideal(corpus, rep);
  return rep;
}

std::string render_search_text(const SearchReport& rep) {
  std::ostringstream out;
  out << "search " << rep.id << ": "
      << (rep.found ? (rep.replayed ? "FOUND (witness replayed)" : "FOUND (replay FAILED)")
                    : "NOT FOUND")
      << "\n";
  out << "  statement: " << rep.statement << "\n";
  out << "  scanned: " << rep.scanned << "\n";
  if (rep.found) {
    out << "  instance: " << rep.instance << "\n";
    out << "  witness: " << rep.witness << "\n";
  }
  if (!rep.note.empty()) out << "  note: " << rep.note << "\n";
  return out.str();
}

std::string render_search_json(const SearchReport& rep) {
  nlohmann::json j;
  j["id"] = rep.id;
  j["statement"] = rep.statement;
  j["found"] = rep.found;
  j["replayed"] = rep.replayed;
  j["scanned"] = rep.scanned;
  if (rep.found) {
    j["instance"] = rep.instance;
    j["witness"] = rep.witness;
  }
  if (!rep.note.empty()) j["note"] = rep.note;
  return j.dump(2) + "\n";
}

}  // namespace modrad
