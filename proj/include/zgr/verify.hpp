#ifndef ZGR_VERIFY_HPP
#define ZGR_VERIFY_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zgr/config.hpp"
#include "zgr/theorems.hpp"

namespace zgr {

struct SuiteResult {
  std::string suite;
  std::vector<Verdict> verdicts;
  std::vector<std::string> failures;  // consistency violations; empty = suite passed
  bool ok() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

/// Rank formulas and the strict rank gap over all prime pairs p < q <= q_max.
SuiteResult verify_rank(int q_max = 23, const Config& cfg = {});

/// Terminating-filtration classifier over the catalog, with cut/rank
/// cross-checks for abelian entries and D_3 evidence for the K8 x E shape.
SuiteResult verify_terminating(int max_order, const Config& cfg = {});

/// Trivial-residue classifier over the catalog; a positive here must imply
/// a clean order-pq scan.
SuiteResult verify_trivial_residue(int max_order, const Config& cfg = {});

/// Order-pq scan over the catalog, checked against the classifier implication.
SuiteResult verify_order_pq(int max_order, const Config& cfg = {});

/// Torsion probes and orders modulo delta powers for every nontrivial Bass
/// and bicyclic unit on catalog groups up to max_order (default 16).
SuiteResult verify_unit_torsion(int max_order, const Config& cfg = {});

/// Square-zero searches and the units they induce on direct products,
/// including the coprime-order depth checks.
SuiteResult verify_nilpotent_units(const Config& cfg = {});

/// kp residues on sym(3), the discrimination examples, and the commutator
/// residue witness.
SuiteResult verify_discrimination(const Config& cfg = {});

/// Recomputes the defining predicate (or re-derives holds from evidence) for
/// a single verdict; false when the stored verdict does not match.
bool revalidate_verdict(const Verdict& v, const Config& cfg = {});

/// Runs revalidate_verdict over a suite, appending failures for mismatches.
void revalidate_suite(SuiteResult& result, const Config& cfg = {});

}  // namespace zgr

#endif
