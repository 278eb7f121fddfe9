#include "modrad/cli.hpp"

#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "modrad/expr.hpp"
#include "modrad/harness.hpp"

namespace modrad {
namespace cli {
namespace {

using nlohmann::json;

json witness_json(const Verdict& v) {
  json arr = json::array();
  for (const auto& p : v.witness)
    arr.push_back({{"role", p.role}, {"index", p.index}, {"text", p.text}});
  return arr;
}

std::string witness_text(const Verdict& v) {
  std::string out;
  for (const auto& p : v.witness) {
    if (!out.empty()) out += ", ";
    out += p.role + "=" + p.text;
  }
  return out;
}

int do_info(const expr::Value& v, bool machine, std::ostream& out) {
  json j;
  if (v.kind == expr::ValueKind::Ring) {
    if (!v.ring) {
      if (machine) {
        j["object"] = v.text;
        j["degenerate"] = true;
        out << j.dump(2) << "\n";
      } else {
        out << v.text << ": degenerate localization, the set meets zero and the ring collapses\n";
      }
      return 0;
    }
    const RingPtr& R = v.ring;
    const auto& inv = R->invariants();
    int maximal = int(R->maximal_ideal_indices().size());
    if (machine) {
      j["object"] = v.text;
      j["kind"] = "ring";
      j["label"] = R->label;
      j["carrier"] = R->n;
      j["units"] = set_to_string(*R, inv.units);
      j["jacobson"] = set_to_string(*R, inv.jacobson);
      j["nilradical"] = set_to_string(*R, inv.nilradical);
      j["zero_divisors"] = set_to_string(*R, inv.zero_divisors);
      j["ideals"] = long(R->ideal_list().size());
      j["maximal_ideals"] = maximal;
      j["local"] = (maximal == 1);
      out << j.dump(2) << "\n";
    } else {
      out << "ring " << R->label << ", carrier " << R->n << "\n";
      out << "  units: " << set_to_string(*R, inv.units) << "\n";
      out << "  J: " << set_to_string(*R, inv.jacobson) << "\n";
      out << "  N: " << set_to_string(*R, inv.nilradical) << "\n";
      out << "  Z: " << set_to_string(*R, inv.zero_divisors) << "\n";
      out << "  ideals: " << R->ideal_list().size() << " (" << maximal << " maximal"
          << (maximal == 1 ? ", local" : "") << ")\n";
    }
    return 0;
  }
  if (v.kind == expr::ValueKind::Module) {
    const ModulePtr& M = v.module;
    const auto& inv = M->invariants();
    bool mult = is_multiplication(*M).holds;
    if (machine) {
      j["object"] = v.text;
      j["kind"] = "module";
      j["label"] = M->label;
      j["carrier"] = M->n;
      j["scalars"] = M->adapter() ? std::string("Z") : M->ring->label;
      if (M->adapter()) j["exponent"] = M->exponent;
      j["annihilator"] = inv.annihilator.to_string();
      j["jr_ideal"] = inv.jr.to_string();
      j["faithful"] = inv.faithful;
      j["multiplication"] = mult;
      j["submodules"] = long(M->submodule_list().size());
      j["torsion"] = set_to_string(*M, inv.torsion);
      j["nil"] = set_to_string(*M, inv.nil);
      j["j_m"] = set_to_string(*M, inv.j_m);
      out << j.dump(2) << "\n";
    } else {
      out << "module " << M->label << ", carrier " << M->n << ", scalars "
          << (M->adapter() ? std::string("Z") : M->ring->label) << "\n";
      if (M->adapter()) out << "  exponent: " << M->exponent << "\n";
      out << "  annihilator: " << inv.annihilator.to_string() << "\n";
      out << "  (J(R)M:M): " << inv.jr.to_string() << "\n";
      out << "  faithful: " << (inv.faithful ? "true" : "false")
          << ", multiplication: " << (mult ? "true" : "false") << "\n";
      out << "  submodules: " << M->submodule_list().size() << "\n";
      out << "  T(M): " << set_to_string(*M, inv.torsion) << "\n";
      out << "  Nil(M): " << set_to_string(*M, inv.nil) << "\n";
      out << "  J(M): " << set_to_string(*M, inv.j_m) << "\n";
    }
    return 0;
  }
  if (v.kind == expr::ValueKind::Ideal) {
    const Ideal& I = *v.ideal;
    Ideal rad = radical_of_ideal(I);
    if (machine) {
      j["object"] = v.text;
      j["kind"] = "ideal";
      j["value"] = I.to_string();
      j["proper"] = I.proper();
      j["radical"] = rad.to_string();
      out << j.dump(2) << "\n";
    } else {
      out << "ideal " << I.to_string() << " of "
          << (I.symbolic() ? std::string("Z") : I.ring->label) << "\n";
      out << "  proper: " << (I.proper() ? "true" : "false") << "\n";
      out << "  radical: " << rad.to_string() << "\n";
    }
    return 0;
  }
  const Submodule& N = *v.sub;
  const ModulePtr& M = v.module;
  Ideal res = residual_ideal(*M, N);
  Submodule rad = M->m_rad(N);
  if (machine) {
    j["object"] = v.text;
    j["kind"] = "submodule";
    j["module"] = M->label;
    j["value"] = N.to_string();
    j["proper"] = N.proper();
    j["residual"] = res.to_string();
    j["m_rad"] = rad.to_string();
    out << j.dump(2) << "\n";
  } else {
    out << "submodule " << N.to_string() << " of " << M->label << "\n";
    out << "  proper: " << (N.proper() ? "true" : "false") << "\n";
    out << "  (N:M): " << res.to_string() << "\n";
    out << "  M-rad(N): " << rad.to_string() << "\n";
  }
  return 0;
}

int do_check(const std::string& predicate, const expr::Value& v, bool show_witness, bool machine,
             std::ostream& out) {
  Verdict verdict;
  if (v.kind == expr::ValueKind::Submodule) {
    auto k = sub_kind_from(predicate);
    if (!k)
      throw Error(Errc::UnknownPredicate, "unknown submodule predicate '" + predicate + "'");
    verdict = submodule_predicate(*v.module, *v.sub, *k);
  } else if (v.kind == expr::ValueKind::Ideal) {
    auto k = ideal_kind_from(predicate);
    if (!k) throw Error(Errc::UnknownPredicate, "unknown ideal predicate '" + predicate + "'");
    verdict = v.ideal->symbolic() ? symbolic_Z_ideal_predicate(v.ideal->sym, *k)
                                  : ideal_predicate(*v.ideal, *k);
  } else if (v.kind == expr::ValueKind::Module) {
    if (predicate == "multiplication") {
      verdict = is_multiplication(*v.module);
    } else {
      auto k = presimpl_kind_from(predicate);
      if (!k)
        throw Error(Errc::UnknownPredicate,
                    "unknown module predicate '" + predicate + "' (presimplifiable variants: "
                    "plain, quasi, J, quasi_J; or multiplication)");
      verdict = presimplifiable(*v.module, *k);
    }
  } else {
    throw Error(Errc::UnknownPredicate,
                "rings have no direct predicates; wrap the object with ideal(...)");
  }
  if (machine) {
    json j;
    j["predicate"] = predicate;
    j["object"] = v.text;
    j["holds"] = verdict.holds;
    if (!verdict.flag.empty()) j["flag"] = verdict.flag;
    if (show_witness) j["witness"] = witness_json(verdict);
    out << j.dump(2) << "\n";
  } else {
    out << (verdict.holds ? "true" : "false");
    if (!verdict.flag.empty()) out << " (" << verdict.flag << ")";
    out << "\n";
    if (show_witness && !verdict.witness.empty())
      out << "  witness: " << witness_text(verdict) << "\n";
  }
  return verdict.holds ? 0 : 1;
}

int do_rad(const expr::Value& v, bool machine, std::ostream& out) {
  std::string kind, value;
  if (v.kind == expr::ValueKind::Submodule) {
    kind = "m_rad";
    value = v.module->m_rad(*v.sub).to_string();
  } else if (v.kind == expr::ValueKind::Ideal) {
    kind = "radical";
    value = radical_of_ideal(*v.ideal).to_string();
  } else if (v.kind == expr::ValueKind::Module) {
    kind = "nil";
    value = set_to_string(*v.module, v.module->invariants().nil);
  } else {
    if (!v.ring)
      throw Error(Errc::DegenerateLocalization, "degenerate localization has no nilradical");
    kind = "nilradical";
    value = set_to_string(*v.ring, v.ring->invariants().nilradical);
  }
  if (machine) {
    json j;
    j["object"] = v.text;
    j["kind"] = kind;
    j["value"] = value;
    out << j.dump(2) << "\n";
  } else {
    out << kind << ": " << value << "\n";
  }
  return 0;
}

int do_verify(const std::vector<std::string>& ids, const std::string& corpus_name, bool machine,
              std::ostream& out) {
  Corpus corpus = build_corpus(corpus_preset(corpus_name));
  std::vector<CheckReport> reports = ids.empty() ? run_all(corpus) : run_claims(ids, corpus);
  out << (machine ? render_reports_json(reports) : render_reports_text(reports));
  return any_failure(reports) ? 1 : 0;
}

int do_search(const std::string& id, const std::string& corpus_name, bool machine,
              std::ostream& out) {
  Corpus corpus = build_corpus(corpus_preset(corpus_name));
  SearchReport rep = run_search(id, corpus);
  out << (machine ? render_search_json(rep) : render_search_text(rep));
  bool expect = true;
  for (const auto& t : all_search_targets())
    if (t.id == id) expect = t.expect_witness;
  bool ok = expect ? (rep.found && rep.replayed) : !rep.found;
  return ok ? 0 : 1;
}

int do_list_claims(bool machine, std::ostream& out) {
  if (machine) {
    json j;
    j["claims"] = json::array();
    for (const auto& c : all_claims()) j["claims"].push_back({{"id", c.id}, {"anchor", c.anchor}});
    j["searches"] = json::array();
    for (const auto& t : all_search_targets())
      j["searches"].push_back(
          {{"id", t.id}, {"statement", t.statement}, {"expect_witness", t.expect_witness}});
    out << j.dump(2) << "\n";
  } else {
    out << "claims:\n";
    for (const auto& c : all_claims()) out << "  " << c.id << ": " << c.anchor << "\n";
    out << "searches:\n";
    for (const auto& t : all_search_targets())
      out << "  " << t.id << (t.expect_witness ? "" : " (absence expected)") << ": "
          << t.statement << "\n";
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite workbench for radical-gated ideal and submodule predicates"};
  app.name("modrad");
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "text";
  std::string corpus_name = "default";
  int max_carrier = 0;
  long seed = 0;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--corpus", corpus_name, "corpus preset for verify/search");
  app.add_option("--max-carrier", max_carrier, "override the carrier cap");
  app.add_option("--seed", seed, "reserved; corpora are deterministic");

  std::string info_expr, check_pred, check_expr, rad_expr, search_id;
  bool show_witness = false;
  std::vector<std::string> claim_ids;

  CLI::App* info = app.add_subcommand("info", "print invariants of an object");
  info->add_option("expr", info_expr, "object expression")->required();

  CLI::App* check = app.add_subcommand("check", "evaluate a predicate on an object");
  check->add_option("predicate", check_pred, "predicate name")->required();
  check->add_option("expr", check_expr, "object expression")->required();
  check->add_flag("--witness", show_witness, "print the stored witness");

  CLI::App* rad = app.add_subcommand("rad", "radical of an object");
  rad->add_option("expr", rad_expr, "object expression")->required();

  CLI::App* verify = app.add_subcommand("verify", "run claim checks over a corpus");
  verify->add_option("--claim", claim_ids, "claim id, repeatable; all claims when absent");

  CLI::App* search = app.add_subcommand("search", "scan for a negation witness");
  search->add_option("id", search_id, "search target id")->required();

  CLI::App* list = app.add_subcommand("list-claims", "list claim and search ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const bool machine = format == "machine";
  if (max_carrier > 0) caps().carrier = max_carrier;

  try {
    if (info->parsed()) return do_info(expr::eval_object(info_expr), machine, out);
    if (check->parsed())
      return do_check(check_pred, expr::eval_object(check_expr), show_witness, machine, out);
    if (rad->parsed()) return do_rad(expr::eval_object(rad_expr), machine, out);
    if (verify->parsed()) return do_verify(claim_ids, corpus_name, machine, out);
    if (search->parsed()) return do_search(search_id, corpus_name, machine, out);
    if (list->parsed()) return do_list_claims(machine, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace cli
}  // namespace modrad
