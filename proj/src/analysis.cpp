#include "ssc/analysis.hpp"

#include <sstream>
#include <stdexcept>

namespace ssc {

std::string_view to_string(TimeDomain d) {
  return d == TimeDomain::discrete ? "discrete" : "continuous";
}

std::string_view to_string(Variation v) {
  return v == Variation::time_invariant ? "time-invariant" : "time-varying";
}

std::string_view to_string(Direction d) {
  return d == Direction::controllability ? "controllability" : "observability";
}

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::guaranteed: return "guaranteed";
    case Answer::not_guaranteed: return "not-guaranteed";
    case Answer::undecided: return "undecided";
  }
  throw std::invalid_argument("unknown answer tag");
}

int answer_exit_code(Answer a) {
  switch (a) {
    case Answer::guaranteed: return 0;
    case Answer::not_guaranteed: return 2;
    case Answer::undecided: return 3;
  }
  throw std::invalid_argument("unknown answer tag");
}

std::pair<Pattern, Pattern> dualize(const Pattern& a, const Pattern& c) {
  if (!a.square())
    throw std::invalid_argument("dualize: state pattern must be square, got " +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()));
  if (c.cols() != a.rows())
    throw std::invalid_argument("dualize: output pattern has " +
                                std::to_string(c.cols()) +
                                " columns, expected " +
                                std::to_string(a.rows()));
  return {a.transposed(), c.transposed()};
}

namespace {

void validate_query(const Query& q) {
  if (q.horizon && !(q.domain == TimeDomain::discrete &&
                     q.variation == Variation::time_varying))
    throw std::invalid_argument(
        "query: a horizon is only allowed for discrete time-varying queries");
  if (q.horizon && *q.horizon < 1)
    throw std::invalid_argument("query: horizon must be >= 1, got " +
                                std::to_string(*q.horizon));
}

Report decide(const Pattern& a, const Pattern& b, const Query& q) {
  validate_query(q);
  Report report;
  report.query = q;

  const int n = static_cast<int>(a.rows());
  if (q.variation == Variation::time_invariant) {
    report.verdicts.push_back(check_g1(a, b));
    report.verdicts.push_back(check_g2(a, b));
  } else if (q.domain == TimeDomain::discrete) {
    if (!q.horizon)
      throw std::invalid_argument(
          "query: discrete time-varying analysis requires a horizon");
    const int horizon = *q.horizon;
    report.verdicts.push_back(check_g3(a, b, horizon));
    if (horizon >= n) {
      // On windows at least as long as the state dimension the time-varying
      // and time-invariant verdicts coincide; record both condition sets.
      report.verdicts.push_back(check_g1(a, b));
      report.verdicts.push_back(check_g2(a, b));
      report.notes.push_back(
          "window length >= state dimension: the time-varying verdict "
          "coincides with the time-invariant one (G1 and G2 recorded "
          "alongside G3)");
    } else {
      const bool g3_holds = report.verdicts.front().holds;
      if (!g3_holds && check_g1(a, b).holds && check_g2(a, b).holds) {
        report.notes.push_back(
            "window shorter than the state dimension: this verdict covers "
            "time-varying systems only; whether every time-invariant system "
            "of the pattern is controllable on so short a window is "
            "undecided");
      }
    }
  } else {
    report.verdicts.push_back(check_g4(a, b));
  }

  bool all_hold = true;
  for (const Verdict& v : report.verdicts) all_hold = all_hold && v.holds;
  report.answer = all_hold ? Answer::guaranteed : Answer::not_guaranteed;
  return report;
}

}  // namespace

Report analyze_controllability(const Pattern& a, const Pattern& b,
                               const Query& q) {
  if (q.direction != Direction::controllability)
    throw std::invalid_argument(
        "analyze_controllability: query direction mismatch");
  return decide(a, b, q);
}

Report analyze_observability(const Pattern& a, const Pattern& c,
                             const Query& q) {
  if (q.direction != Direction::observability)
    throw std::invalid_argument(
        "analyze_observability: query direction mismatch");
  auto [a_dual, b_dual] = dualize(a, c);
  Query dual_query = q;
  dual_query.direction = Direction::controllability;
  Report report = decide(a_dual, b_dual, dual_query);
  report.query = q;
  report.notes.push_back(
      "observability decided on the transposed pair: the output pair is "
      "observable for every realization iff the transposed pair is "
      "controllable for every realization");
  report.notes.push_back(
      "this duality is about pattern-level (universally quantified) "
      "verdicts; an individual system and its entrywise-transposed "
      "counterpart need not share the property");
  return report;
}

namespace {

nlohmann::ordered_json vertex_set_json(const VertexSet& s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (Vertex v : s) arr.push_back(v);
  return arr;
}

nlohmann::ordered_json trace_json(const std::vector<ReduceStep>& steps) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ReduceStep& step : steps) {
    nlohmann::ordered_json item;
    item["candidates"] = vertex_set_json(step.tset);
    item["picked"] = step.picked;
    item["removed"] = vertex_set_json(step.removed);
    item["via"] = step.via_no_predecessor ? "no-predecessor" : "singleton";
    arr.push_back(std::move(item));
  }
  return arr;
}

}  // namespace

nlohmann::ordered_json report_to_json(const Report& report, bool verbose) {
  nlohmann::ordered_json out;
  nlohmann::ordered_json query;
  query["domain"] = std::string(to_string(report.query.domain));
  query["variation"] = std::string(to_string(report.query.variation));
  query["direction"] = std::string(to_string(report.query.direction));
  if (report.query.horizon) query["horizon"] = *report.query.horizon;
  out["query"] = std::move(query);
  out["answer"] = std::string(to_string(report.answer));

  nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
  for (const Verdict& v : report.verdicts) {
    nlohmann::ordered_json item;
    item["condition"] = std::string(to_string(v.condition));
    item["holds"] = v.holds;
    if (v.witness) item["witness"] = vertex_set_json(*v.witness);
    if (verbose) item["trace"] = trace_json(v.trace);
    verdicts.push_back(std::move(item));
  }
  out["verdicts"] = std::move(verdicts);

  nlohmann::ordered_json notes = nlohmann::ordered_json::array();
  for (const std::string& note : report.notes) notes.push_back(note);
  out["notes"] = std::move(notes);
  return out;
}

std::string report_to_text(const Report& report, const SystemGraph& graph) {
  std::ostringstream out;
  out << "query: " << to_string(report.query.domain) << " "
      << to_string(report.query.variation) << " "
      << to_string(report.query.direction);
  if (report.query.horizon) out << ", horizon " << *report.query.horizon;
  out << "\n";
  out << "graph: " << graph.state_count() << " state + "
      << graph.input_count() << " input vertices, " << graph.edge_count()
      << " edges\n";
  out << "edges:\n";
  std::istringstream edges(graph.edge_list());
  for (std::string line; std::getline(edges, line);)
    out << "  " << line << "\n";

  for (const Verdict& v : report.verdicts) {
    out << "condition " << to_string(v.condition) << ": "
        << (v.holds ? "holds" : "fails");
    if (v.witness) out << ", witness " << v.witness->to_string();
    out << "\n";
    for (std::size_t i = 0; i < v.trace.size(); ++i) {
      const ReduceStep& step = v.trace[i];
      out << "  step " << (i + 1) << ": candidates "
          << step.tset.to_string() << ", picked " << step.picked << " via "
          << (step.via_no_predecessor ? "no-predecessor" : "singleton")
          << ", removed " << step.removed.to_string() << "\n";
    }
  }

  out << "answer: " << to_string(report.answer) << "\n";
  if (!report.notes.empty()) {
    out << "notes:\n";
    for (const std::string& note : report.notes) out << "  - " << note << "\n";
  }
  return out.str();
}

}  // namespace ssc
