#pragma once

// Manin triple verification, the Lie bialgebra structure a triple induces on
// 𝔞, and the double / Olshansky-type classification of 𝔞.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "manin/json_io.hpp"
#include "manin/lie.hpp"

namespace manin {

using Params = std::vector<std::pair<std::string, std::string>>;

struct ManinTriple {
  std::string example;
  Params params;
  AlgebraPtr g;
  BilinearForm form;
  std::shared_ptr<const SubalgebraHandle> a;
  std::shared_ptr<const SubalgebraHandle> a_star;
  std::string status;  // e.g. "UNVERIFIED-SOURCE" for externally supplied bases

  bool truncated() const { return g->truncated(); }
};

struct VerificationReport {
  std::string example;
  Params params;
  std::string status;
  std::string window;  // "[lo, hi]" for truncated algebras
  std::vector<CheckReport> checks;
  std::vector<std::pair<std::string, std::string>> info;

  bool failed() const;
  /// "PASS", "FAIL" or "certified within window [lo, hi]".
  std::string verdict() const;
  json to_json() const;
  std::string to_text() const;
};

/// Checks, in order: (1) B even, parity-consistent, supersymmetric, invariant,
/// nondegenerate; (2) closure of 𝔞 and 𝔞*; (3) isotropy; (4) 𝔤 = 𝔞 ⊕ 𝔞*;
/// (5) nondegeneracy of the pairing 𝔞 × 𝔞*. An odd form stops after (1).
VerificationReport verify_triple(const ManinTriple& t);

/// Degree bookkeeping for truncated triples. Ungraded triples use a single
/// block of degree 0 on which everything is known.
struct WindowModel {
  bool graded = false;
  std::vector<int> degree;  // per basis element of 𝔞
  int lo = 0, hi = 0, pair_sum = 0;
  std::vector<int> shifts{0};
  std::pair<int, int> support{0, 0};       // degrees occupied by untruncated 𝔞
  std::pair<int, int> star_support{0, 0};  // same for 𝔞*

  int deg(uint32_t i) const { return graded ? degree[i] : 0; }
  bool in_window(int d) const { return !graded || (d >= lo && d <= hi); }
  bool in_support(int d) const { return !graded || (d >= support.first && d <= support.second); }
  bool in_star_support(int d) const {
    return !graded || (d >= star_support.first && d <= star_support.second);
  }
  /// An 𝔞-element of degree d has its dual inside the window.
  bool resolved(int d) const { return !graded || (in_window(d) && in_window(pair_sum - d)); }
  /// δ(z) can have components on a_i ⊗ a_j only if this holds.
  bool block_possible(int dz, int di, int dj) const;
  bool delta_known(int dz, int di, int dj) const {
    return !graded || resolved(dz) || !block_possible(dz, di, dj);
  }
  std::vector<int> resolved_degrees() const;
};

struct TensorTerm {
  uint32_t i, j;
  Scalar c;
  friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
};

/// Dual-basis data shared by the derivation and the round-trip check.
struct Pairing {
  std::vector<Vector> rows;           // rows[k]: B(a_k, β_m) over 𝔞*'s basis β
  std::vector<Vector> dual;           // dual[k] = b^k in β-coordinates (resolved k only)
  std::vector<uint8_t> star_resolved; // per β
};

/// Cobracket δ: 𝔞 → 𝔞⊗𝔞 in the basis {a_k} of 𝔞's induced algebra, defined by
/// ⟨δ(a_k), b^i⊗b^j⟩ = B(a_k, [b^i, b^j]) with {b^i} ⊂ 𝔞* dual to {a_k} and
/// the pairing ⟨x⊗y, ξ⊗η⟩ = (−1)^{p(y)p(ξ)} B(x,ξ) B(y,η). Hence
/// δ(a_k) = Σ (−1)^{p_i p_j} B(a_k, [b^i, b^j]) a_i⊗a_j.
///
/// Only components on resolved indices are stored; window.delta_known tells
/// which of them (and of the implied zeros) are exact.
struct Cobracket {
  std::vector<std::vector<TensorTerm>> delta;  // sorted by (i, j)
  std::vector<Parity> parity;
  std::vector<uint8_t> resolved;
  WindowModel window;
  Pairing pairing;
  const SuperSpace* labels = nullptr;  // 𝔞's basis labels, for witnesses
};

WindowModel window_model(const ManinTriple& t);
Pairing pairing_data(const ManinTriple& t, const WindowModel& w);
Cobracket derive_cobracket(const ManinTriple& t);

/// Koszul co-antisymmetry δ^{ij} = −(−1)^{p_i p_j} δ^{ji} and parity additivity.
CheckReport check_coantisymmetry(const Cobracket& d);
/// δ([x,y]) = x·δ(y) − (−1)^{p(x)p(y)} y·δ(x), over pairs x <= y.
CheckReport check_cocycle(const LieSuperAlgebra& a, const Cobracket& d);

struct CoJacobiResult {
  CheckReport direct;  // (1 + τ + τ²)(δ⊗1)δ = 0
  CheckReport routes;  // agreement with super-Jacobi of 𝔞* through duality
};
CoJacobiResult check_cojacobi(const ManinTriple& t, const Cobracket& d);

/// Rebuilds 𝔞*'s structure constants from δ and compares them exactly.
CheckReport check_round_trip(const ManinTriple& t, const Cobracket& d);

struct Classification {
  std::string type;  // "double-type", "olshansky-type" or "inconclusive"
  size_t solutions = 0;
  size_t best_rank = 0;
  size_t dim = 0;
  std::string note;
};
/// Solves for even supersymmetric invariant forms on 𝔞 and asks whether one
/// of them is nondegenerate.
Classification double_classification(const ManinTriple& t);

struct SimplicityInfo {
  bool scanned = false;
  size_t center_dim = 0;
  size_t derived_dim = 0;
  size_t smallest_basis_ideal = 0;  // smallest ideal generated by one basis vector
  std::string summary() const;
};
/// Informational ideal scan (center, derived algebra, ideals generated by
/// basis vectors) for untruncated 𝔞 of dimension <= 64.
SimplicityInfo simplicity_scan(const LieSuperAlgebra& a);

/// verify_triple, then (if it passed) the bialgebra checks, classification
/// and simplicity data.
VerificationReport certify(const ManinTriple& t);

}  // namespace manin
