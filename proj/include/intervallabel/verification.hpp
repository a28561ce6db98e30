#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "intervallabel/graph.hpp"
#include "intervallabel/labeling.hpp"
#include "intervallabel/representation.hpp"

namespace intervallabel {

// L1: q applies at distance exactly two. L2: q applies to pairs with a common
// neighbor. L3: q applies at distance one or two.
enum class Variant { kL1, kL2, kL3 };

std::string_view variant_name(Variant v);
Variant parse_variant(std::string_view name);

enum class ViolationKind { kAdjacent, kDistance2, kCommonNeighbor };

std::string_view violation_kind_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  Vertex u;
  Vertex v;
  std::int64_t required;
  std::int64_t observed;
};

// Empty result iff `lab` is a valid labeling of `g` under `variant`. Every
// failing clause of every pair is reported. Throws Error(kInvalidArgument)
// when a vertex has no label.
std::vector<Violation> validate(const Graph& g, const Labeling& lab, LpqParams params,
                                Variant variant = Variant::kL1);

inline constexpr int kDefaultLambdaCap = 12;
inline constexpr int kDefaultChiCap = 10;

// Minimum span of an L(p,q) labeling (L1 variant), by exhaustive search
// per connected component. Throws Error(kTooLarge) when n > n_cap or a
// component has more than 16 vertices.
std::int64_t exact_lambda(const Graph& g, LpqParams params, int n_cap = kDefaultLambdaCap);

// Chromatic number of the square of g by exact coloring search. Throws
// Error(kTooLarge) when n > n_cap.
int chi_square_exact(const Graph& g, int n_cap = kDefaultChiCap);

struct BoundReport {
  RepClass cls = RepClass::kInterval;
  LpqParams params;
  std::int64_t formula_value = 0;
  std::int64_t achieved_span = 0;
  bool holds = false;
  GraphStats stats;
  std::string note;
  // Classes outside the theorems' reach (see bound_report): a failed bound
  // is reported but is not an error.
  bool report_only = false;
  // Circular-arc only.
  std::optional<int> clique_size;
  std::optional<std::int64_t> construction_bound;
  bool construction_holds = true;
};

// Builds the report for a labeling of derive_graph(rep). ω is computed
// exactly when n <= omega_cap; otherwise the circular-arc formula uses the
// split clique size in its place and says so in `note`.
BoundReport bound_report(const Representation& rep, const Labeling& lab,
                         int omega_cap = kDefaultOmegaCap);

// True when the report represents an error: a violated bound that is not
// report-only. For circular arcs the construction bound is always enforced
// and the formula bound only when p >= q.
bool is_hard_failure(const BoundReport& report);

enum class Claim {
  kIntervalLemma,          // interval reps
  kContainmentNesting,     // containment reps
  kCointervalMinimal,      // interval-order reps
  kCointervalEquivalence,  // interval-order reps
};

std::string_view claim_tag(Claim c);
Claim parse_claim(std::string_view tag);
RepClass claim_class(Claim c);

struct ClaimCheck {
  // False when the instance fails the hypotheses the claim needs.
  bool applicable = true;
  // One entry per violation: the vertices that witness it.
  std::vector<std::vector<Vertex>> witnesses;
  std::vector<std::string> details;

  bool holds() const noexcept { return witnesses.empty(); }
};

// Throws Error(kNotApplicable) when rep is not of claim_class(claim).
ClaimCheck check_claim(Claim claim, const Representation& rep);

// Every claim that applies to the representation's class.
std::vector<std::pair<Claim, ClaimCheck>> check_structural_claims(const Representation& rep);

struct ClaimReport {
  std::string claim;
  int instances_checked = 0;
  int not_applicable = 0;
  struct Entry {
    std::uint64_t seed;
    std::vector<Vertex> witness;
    std::string detail;
  };
  std::vector<Entry> violations;

  void add(std::uint64_t seed, const ClaimCheck& check);
};

}  // namespace intervallabel
