#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "ssc/pattern.hpp"
#include "ssc/sgraph.hpp"

namespace ssc {

/// The four pattern conditions:
///   G1  every nonempty V of states is singled out by some vertex
///       (time-invariant controllability, zero-eigenvalue part).
///   G2  as G1, but only for V with V <= Pre(V) and with the singling
///       vertex taken outside V (nonzero-eigenvalue part).
///   G3  as G1 on the graph of the horizon pattern K (discrete
///       time-varying controllability over a length-T window).
///   G4  as G1 with the singling vertex outside V, for every nonempty V
///       (continuous time-varying controllability).
enum class Condition { g1, g2, g3, g4 };

std::string_view to_string(Condition c);

/// One iteration of the set-reduction loop.
struct ReduceStep {
  VertexSet tset;     ///< singleton-successor candidates after the mode filter
  Vertex picked = 0;  ///< vertex chosen this iteration
  VertexSet removed;  ///< vertices dropped from V
  bool via_no_predecessor = false;  ///< picked from V \ Pre(V) instead of tset
};

struct ReduceResult {
  VertexSet residual;  ///< empty iff the condition holds
  std::vector<ReduceStep> steps;
};

/// Strategy for choosing a vertex from a nonempty candidate set. Must return
/// a member of the set.
using PickStrategy = std::function<Vertex(const VertexSet&)>;

Vertex pick_smallest(const VertexSet& candidates);

/// Reproducible random pick; each call site should construct its own.
PickStrategy seeded_pick(std::uint64_t seed);

/// Set-reduction decision procedure. mode 0 decides G1, mode 1 decides G2:
///
///   V := {1..n}
///   while V nonempty:
///     T := { v in Pre(V) : exactly one successor of v lies in V }
///     if mode = 1: T := T \ V
///     if mode = 0 or V <= Pre(V):
///       stop if T empty, else pick v in T and remove Post({v}) from V
///     else:
///       pick v in V \ Pre(V) and remove it from V
///
/// The residual is empty iff the respective condition holds; a nonempty
/// residual is itself a set for which the condition fails. Runs at most n
/// iterations (every iteration strictly shrinks V), for any pick strategy.
ReduceResult reduce(const SystemGraph& g, int mode,
                    const PickStrategy& pick = pick_smallest);

/// Outcome of one condition check. When the condition fails, `witness` holds
/// a nonempty vertex set violating it (certified via violates() before being
/// returned).
struct Verdict {
  Condition condition = Condition::g1;
  bool holds = false;
  std::optional<VertexSet> witness;
  std::vector<ReduceStep> trace;
};

Verdict check_g1(const Pattern& a, const Pattern& b,
                 const PickStrategy& pick = pick_smallest);
Verdict check_g2(const Pattern& a, const Pattern& b,
                 const PickStrategy& pick = pick_smallest);

/// G3 for a window of length `horizon` >= 1, decided by the mode-0 reduction
/// on the graph whose state part is the all-zero nT x nT pattern and whose
/// input part is the horizon pattern K. Witness vertices refer to rows of K.
/// Refuses horizons with more than 4096 K rows.
Verdict check_g3(const Pattern& a, const Pattern& b, int horizon,
                 const PickStrategy& pick = pick_smallest);

/// G4, decided as G2 on the loop-augmented pair (identity + a, b); the
/// witness carries over unchanged.
Verdict check_g4(const Pattern& a, const Pattern& b,
                 const PickStrategy& pick = pick_smallest);

/// True iff `v` is a counterexample to the stated condition on (a, b) —
/// for G3, on the horizon pattern built from (a, b, *horizon). `v` must be a
/// nonempty subset of the relevant state-vertex range.
bool violates(Condition c, const Pattern& a, const Pattern& b,
              std::optional<int> horizon, const VertexSet& v);

/// Exhaustive check over all nonempty state subsets, by increasing
/// cardinality and lexicographically within a cardinality, so a reported
/// witness has minimal size. Refuses graphs with more than 20 state
/// vertices.
Verdict brute_check(Condition c, const Pattern& a, const Pattern& b,
                    std::optional<int> horizon = std::nullopt);

}  // namespace ssc
