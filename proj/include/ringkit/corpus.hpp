#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace ringkit {

// Bundled example suite: each item pairs recorded claims with freshly
// computed checks and reconciles them (match | mismatch-flag | ill-posed).
// The run is "expected" when every claim lands on its recorded status;
// recorded mismatches are themselves part of the contract.
struct CorpusOutcome {
  nlohmann::json report;  // schema-1 report with one entry per item
  bool expected = true;
};

std::vector<std::string> corpus_item_ids();

// dir holds one declaration file per item id: <dir>/<id>.ring
CorpusOutcome run_corpus(const std::string& dir);

}  // namespace ringkit
