#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "modrad/cli.hpp"
#include "modrad/harness.hpp"

using namespace modrad;

namespace {

const Corpus& small_corpus() {
  static Corpus c = build_corpus(corpus_preset("small"));
  return c;
}

int run_cli(std::vector<const char*> args, std::string* text = nullptr) {
  std::vector<const char*> argv{"modrad"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  int rc = cli::run(int(argv.size()), argv.data(), out, err);
  if (text) *text = out.str() + err.str();
  return rc;
}

}  // namespace

TEST_CASE("corpus presets") {
  CorpusSpec dflt = corpus_preset("default");
  CHECK(dflt.max_residue == 36);
  CHECK(dflt.hom_carrier_bound == 24);
  CorpusSpec small = corpus_preset("small");
  CHECK(small.max_residue == 16);
  CHECK(small.idealization_budget == 64);
  CHECK_THROWS_AS((void)corpus_preset("bogus"), Error);
}

TEST_CASE("corpus construction is deterministic and z-modules come first") {
  const Corpus& c = small_corpus();
  CHECK_FALSE(c.rings.empty());
  CHECK_FALSE(c.z_modules.empty());
  CHECK_FALSE(c.ring_modules.empty());
  CHECK_FALSE(c.products.empty());
  CHECK_FALSE(c.idealizations.empty());
  CHECK_FALSE(c.mult_sets.empty());

  auto mods = c.modules();
  CHECK(mods.size() == c.z_modules.size() + c.ring_modules.size());
  CHECK(mods.front()->adapter());

  Corpus again = build_corpus(corpus_preset("small"));
  REQUIRE(again.z_modules.size() == c.z_modules.size());
  for (size_t i = 0; i < c.z_modules.size(); ++i)
    CHECK(again.z_modules[i]->label == c.z_modules[i]->label);
}

TEST_CASE("claim registry") {
  CHECK(all_claims().size() == 35);
  CHECK_THROWS_AS((void)check_claim("nope", small_corpus()), Error);
  try {
    (void)check_claim("nope", small_corpus());
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownClaim);
  }

  Corpus empty;
  CheckReport r = check_claim("eq1", empty);
  CHECK(r.status == ClaimStatus::Vacuous);
  CHECK(r.instances == 0);
}

TEST_CASE("claim statuses on the small corpus") {
  auto reports = run_all(small_corpus());
  REQUIRE(reports.size() == 35);
  for (size_t i = 1; i < reports.size(); ++i) CHECK(reports[i - 1].id < reports[i].id);

  std::map<std::string, const CheckReport*> by_id;
  for (const auto& r : reports) by_id[r.id] = &r;

  const char* vacuous[] = {"IN", "avoid", "colonI", "lem2", "pure", "qpconv"};
  for (const char* id : vacuous) {
    CAPTURE(id);
    CHECK(by_id.at(id)->status == ClaimStatus::Vacuous);
    CHECK_FALSE(by_id.at(id)->note.empty());
  }

  CHECK(by_id.at("prod.2")->status == ClaimStatus::Fail);
  CHECK_FALSE(by_id.at("prod.2")->violations.empty());
  CHECK_FALSE(by_id.at("prod.2")->note.empty());

  for (const auto& r : reports) {
    if (std::string(r.id) == "prod.2") continue;
    CAPTURE(r.id);
    CHECK(r.violations.empty());
    bool vac = false;
    for (const char* id : vacuous) vac = vac || r.id == id;
    CHECK(r.status == (vac ? ClaimStatus::Vacuous : ClaimStatus::Pass));
    if (r.status == ClaimStatus::Pass) CHECK(r.nontrivial > 0);
  }

  CHECK(any_failure(reports));
  CHECK(by_id.at("lem9")->hits >= 300);
}

TEST_CASE("report rendering") {
  auto reports = run_claims({"thm3", "eq1"}, small_corpus());
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].id == "eq1");
  CHECK(reports[1].id == "thm3");
  CHECK_FALSE(any_failure(reports));

  std::string text = render_reports_text(reports);
  CHECK(text.find("eq1: PASS") != std::string::npos);
  CHECK(text.find("thm3: PASS") != std::string::npos);

  auto arr = nlohmann::json::parse(render_reports_json(reports));
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 2);
  for (const auto& o : arr) {
    CHECK(o.contains("id"));
    CHECK(o.contains("anchor"));
    CHECK(o.contains("status"));
    CHECK(o.contains("instances"));
    CHECK(o.contains("hits"));
    CHECK(o.contains("nontrivial"));
    CHECK(o.contains("witnesses"));
  }

  auto again = run_claims({"thm3", "eq1"}, small_corpus());
  CHECK(render_reports_text(again) == text);
}

TEST_CASE("search targets") {
  CHECK(all_search_targets().size() == 5);
  CHECK_THROWS_AS((void)run_search("nope", small_corpus()), Error);

  SearchReport hit = run_search("quasiJ⇒J", small_corpus());
  CHECK(hit.found);
  CHECK(hit.replayed);
  CHECK(hit.instance.find("Z4") != std::string::npos);

  SearchReport absent = run_search("resid-quasiJ⇒quasiJ", small_corpus());
  CHECK_FALSE(absent.found);
  CHECK(absent.scanned > 0);
  CHECK_FALSE(absent.note.empty());

  auto js = nlohmann::json::parse(render_search_json(hit));
  CHECK(js.contains("id"));
  CHECK(js.contains("found"));
  CHECK(js.contains("witness"));
}

TEST_CASE("cli exit codes and output") {
  std::string out;

  CHECK(run_cli({"check", "quasi_J", "sub(Zmod(4),[])"}, &out) == 0);
  CHECK(out.find("true") != std::string::npos);

  CHECK(run_cli({"check", "J", "sub(Zmod(4),[])", "--witness"}, &out) == 1);
  CHECK(out.find("witness") != std::string::npos);
  CHECK(out.find("2̄") != std::string::npos);

  CHECK(run_cli({"rad", "sub(Zmod(4),[])"}, &out) == 0);
  CHECK(out.find("2̄") != std::string::npos);
  CHECK(run_cli({"rad", "ideal(Zn(12),[4])"}, &out) == 0);
  CHECK(run_cli({"rad", "Zn(12)"}, &out) == 0);
  CHECK(out.find("6") != std::string::npos);

  CHECK(run_cli({"info", "Zmod(4)"}) == 0);
  CHECK(run_cli({"info", "loc(Zn(12),[6])"}) == 0);
  CHECK(run_cli({"check", "prime", "ideal(Zn(12),[2])"}) == 0);
  CHECK(run_cli({"check", "prime", "Zn(12)"}, &out) == 2);
  CHECK(out.find("ideal(") != std::string::npos);
  CHECK(run_cli({"check", "bogus", "Zmod(4)"}) == 2);

  CHECK(run_cli({"verify", "--claim", "lem9", "--corpus", "small"}, &out) == 0);
  CHECK(out.find("lem9: PASS") != std::string::npos);
  CHECK(run_cli({"verify", "--claim", "prod.2", "--corpus", "small"}) == 1);
  CHECK(run_cli({"verify", "--claim", "nope", "--corpus", "small"}) == 2);

  CHECK(run_cli({"search", "quasiJ⇒J", "--corpus", "small"}) == 0);
  CHECK(run_cli({"search", "resid-quasiJ⇒quasiJ", "--corpus", "small"}) == 0);
  CHECK(run_cli({"search", "bogus"}) == 2);

  CHECK(run_cli({"list-claims"}) == 0);
  CHECK(run_cli({}) == 2);
  CHECK(run_cli({"info", "Zn("}) == 2);
  CHECK(run_cli({"info", "Zmod(4)", "--format", "yaml"}) == 2);
}

TEST_CASE("cli machine output is valid json") {
  std::string out;
  CHECK(run_cli({"check", "quasi_J", "sub(Zmod(4),[])", "--format", "machine"}, &out) == 0);
  CHECK(nlohmann::json::parse(out).contains("holds"));

  CHECK(run_cli({"list-claims", "--format", "machine"}, &out) == 0);
  auto listing = nlohmann::json::parse(out);
  CHECK(listing["claims"].is_array());
  CHECK(listing["claims"].size() == 35);
  CHECK(listing["searches"].size() == 5);

  CHECK(run_cli({"search", "quasiJ⇒J", "--corpus", "small", "--format", "machine"}, &out) == 0);
  CHECK(nlohmann::json::parse(out).contains("found"));

  CHECK(run_cli({"info", "sub(prod(Zmod(2),Zmod(3)),[(1,0)])", "--format", "machine"}, &out) ==
        0);
  CHECK_FALSE(nlohmann::json::parse(out).empty());
}

TEST_CASE("cli carrier flag") {
  Caps saved = caps();
  CHECK(run_cli({"info", "Zn(100)", "--max-carrier", "50"}) == 2);
  CHECK(run_cli({"info", "Zn(100)", "--max-carrier", "200"}) == 0);
  caps() = saved;
}
