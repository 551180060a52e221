#pragma once

// The example catalog: builds each Manin triple candidate from its id and
// parameters.

#include <optional>
#include <string>
#include <vector>

#include "manin/manin.hpp"

namespace manin {

struct ExampleSpec {
  std::string id;                  // one of catalog_ids()
  int n = 2;                       // matrix size, or N = 2n odd variables for 2.3 / 2.3p
  std::optional<int> window;       // truncation M (defaults: 2 for 2.5.x, 1 for 2.6)
  std::optional<std::string> k;    // ζ coefficients, e.g. "i,0,0"
  std::string basis_file;          // Example 2.4 data; empty selects the shipped candidate
  std::string base = "2.1";        // base example for 2.6
};

const std::vector<std::string>& catalog_ids();
bool is_catalog_id(const std::string& id);

/// Path of the Example 2.4 candidate basis file shipped in data/.
std::string default_basis_file();

/// Throws std::invalid_argument (or InvalidZeta) for invalid parameters.
ManinTriple build_example(const ExampleSpec& spec);

/// An algebra named on the command line, with its invariant form if it has one.
struct Target {
  std::string description;
  AlgebraPtr algebra;
  std::optional<BilinearForm> form;
};

/// words[0] is a catalog id (the ambient 𝔤 and form of that triple, built
/// from `spec`) or a family: gl m n, sl m n, psl n, q n, psq n, pe n, spe n,
/// po N, h N, sh N, psh N, k N (window from spec, default 2).
Target resolve_target(const std::vector<std::string>& words, const ExampleSpec& spec);

struct CatalogRow {
  std::string id;
  VerificationReport report;
};

/// Certifies each id with the shared parameters in `defaults`; rows follow
/// catalog order. Window defaults to 2 when unset.
std::vector<CatalogRow> run_catalog(const std::vector<std::string>& ids, const ExampleSpec& defaults);
json catalog_to_json(const std::vector<CatalogRow>& rows);
std::string catalog_to_text(const std::vector<CatalogRow>& rows);

}  // namespace manin
