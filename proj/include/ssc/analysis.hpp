#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ssc/conditions.hpp"
#include "ssc/pattern.hpp"
#include "ssc/sgraph.hpp"

namespace ssc {

enum class TimeDomain { discrete, continuous };
enum class Variation { time_invariant, time_varying };
enum class Direction { controllability, observability };

/// guaranteed      every system of the pattern has the property
/// not_guaranteed  some system of the pattern lacks it (witness available)
/// undecided       reserved for the short-horizon time-invariant question,
///                 which no public query currently reaches
enum class Answer { guaranteed, not_guaranteed, undecided };

std::string_view to_string(TimeDomain d);
std::string_view to_string(Variation v);
std::string_view to_string(Direction d);
std::string_view to_string(Answer a);

/// Process exit status used by the command-line front end: 0 guaranteed,
/// 2 not-guaranteed, 3 undecided.
int answer_exit_code(Answer a);

/// What is being asked. A horizon (window length T = t1 - t0) is only
/// meaningful, and only allowed, for discrete time-varying queries.
struct Query {
  TimeDomain domain = TimeDomain::discrete;
  Variation variation = Variation::time_invariant;
  Direction direction = Direction::controllability;
  std::optional<int> horizon;
};

struct Report {
  Query query;
  std::vector<Verdict> verdicts;
  Answer answer = Answer::not_guaranteed;
  std::vector<std::string> notes;
};

/// (a, c) -> (a*, c*): observability of the output pair reduces to
/// controllability of the transposed pair.
std::pair<Pattern, Pattern> dualize(const Pattern& a, const Pattern& c);

/// Decide the query against the right condition set:
///   time-invariant (either domain)       G1 and G2
///   discrete time-varying, horizon T     G3 (plus G1/G2 when T >= n)
///   continuous time-varying              G4
Report analyze_controllability(const Pattern& a, const Pattern& b,
                               const Query& q);

/// Same decisions applied to dualize(a, c).
Report analyze_observability(const Pattern& a, const Pattern& c,
                             const Query& q);

/// Stable-key-order JSON: {query, answer, verdicts, notes}. Traces are
/// included only when verbose.
nlohmann::ordered_json report_to_json(const Report& report,
                                      bool verbose = false);

/// Human-oriented rendering with the graph edge list and reduction traces.
std::string report_to_text(const Report& report, const SystemGraph& graph);

}  // namespace ssc
