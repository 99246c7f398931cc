#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linearr/latin.hpp"
#include "linearr/lattice.hpp"

namespace linearr {

struct ExpectedNet {
  int k;
  std::vector<std::vector<int>> classes;  // 0-based line indices
  std::vector<int> internal_triples;      // triple points inside each class
  std::optional<LatinSquare> main_class_of;
};

struct CorpusEntry {
  std::string name;
  std::string note;
  Arrangement arrangement;
  Census expected_census;
  std::optional<ExpectedNet> expected_net;
};

/// Mismatches between an entry and its expected data; empty when it checks.
std::vector<std::string> verify_entry(const CorpusEntry& e);

/// Built and verified on first use; throws std::logic_error if any entry
/// fails its own expectations.
const std::vector<CorpusEntry>& corpus();
/// Throws DataError for unknown names.
const CorpusEntry& corpus_entry(const std::string& name);
const CorpusEntry* find_corpus_entry(const std::string& name);

struct FamilyInstance {
  Arrangement arrangement;
  std::vector<std::string> warnings;
};

/// Families: "generic" (n), "pencil" (n), "near-pencil" (n) and "pappus" (b),
/// the nine-line (3,3)-net with one internal triple point. For "pappus" the
/// census is compared with two random parameters and a warning is attached
/// when they differ. Throws DataError on an excluded parameter.
FamilyInstance instantiate_family(const std::string& family, const Scalar& param);
std::vector<std::string> family_names();

/// "name:value", e.g. "generic:7" or "pappus:1/2".
FamilyInstance instantiate_family_spec(const std::string& spec);

}  // namespace linearr
