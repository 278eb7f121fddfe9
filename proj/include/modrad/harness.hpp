#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "modrad/constructions.hpp"

namespace modrad {

struct CorpusSpec {
  std::string name = "default";
  int max_residue = 36;        // Z_n scalar rings
  int max_product_factor = 6;  // Z_a x Z_b factor bound
  long max_zmod_carrier = 72;  // Z-module invariant-factor products
  int square_ring_bound = 9;   // R x R kept while |R| stays below this
  int mult_set_ring_bound = 24;
  long idealization_budget = 128;  // |R| * |M|
  int hom_carrier_bound = 24;
  long avoid_sample_cap = 10000;
};

CorpusSpec corpus_preset(const std::string& name);

struct Corpus {
  CorpusSpec spec;
  std::vector<RingPtr> rings;
  std::vector<ModulePtr> z_modules;     // scanned before ring modules everywhere
  std::vector<ModulePtr> ring_modules;  // each ring over itself, quotients, squares
  std::vector<ModulePtr> modules() const;
  std::vector<Idealization> idealizations;
  std::vector<MultiplicativeSet> mult_sets;
  std::vector<ModulePtr> hom_sources;  // small carriers only

  // a same-ring product module together with its factor list
  struct ProductEntry {
    ModulePtr prod;
    std::vector<ModulePtr> parts;
  };
  std::vector<ProductEntry> products;
};

Corpus build_corpus(const CorpusSpec& spec);

enum class ClaimStatus { Pass, Fail, Vacuous };
const char* to_string(ClaimStatus s);

struct Violation {
  std::string instance;
  std::string witness;
};

struct CheckReport {
  std::string id;
  std::string anchor;
  ClaimStatus status = ClaimStatus::Vacuous;
  long instances = 0;
  long hits = 0;        // instances satisfying the hypotheses
  long nontrivial = 0;  // hits that exercise more than a degenerate shape
  std::vector<Violation> violations;
  std::string note;
};

struct Claim {
  std::string id;
  std::string anchor;
  std::function<void(const Corpus&, CheckReport&)> run;
};

const std::vector<Claim>& all_claims();
CheckReport check_claim(const std::string& id, const Corpus& corpus);
std::vector<CheckReport> run_claims(const std::vector<std::string>& ids, const Corpus& corpus);
std::vector<CheckReport> run_all(const Corpus& corpus);

struct SearchTarget {
  std::string id;
  std::string statement;
  bool expect_witness = true;
};

struct SearchReport {
  std::string id;
  std::string statement;
  bool found = false;
  bool replayed = false;
  std::string instance;
  std::string witness;
  long scanned = 0;
  std::string note;
};

const std::vector<SearchTarget>& all_search_targets();
SearchReport run_search(const std::string& id, const Corpus& corpus);

std::string render_reports_text(const std::vector<CheckReport>& reports);
std::string render_reports_json(const std::vector<CheckReport>& reports);
std::string render_search_text(const SearchReport& report);
std::string render_search_json(const SearchReport& report);

bool any_failure(const std::vector<CheckReport>& reports);

}  // namespace modrad
