#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "amb/reduce.hpp"
#include "amb/term.hpp"
#include "amb/value.hpp"

namespace amb {

// A scheduling decision at one reduction step. Budgets reduce the two
// arguments of an Amb node by the given numbers of deterministic steps
// (at least one in total); the picks project a side that has reached
// weak head normal form.
struct ChoiceDecision {
  enum class Kind : std::uint8_t { HeadStep, Budgets, PickLeft, PickRight };
  Kind kind = Kind::HeadStep;
  unsigned left_steps = 0;
  unsigned right_steps = 0;

  static ChoiceDecision head_step() { return {Kind::HeadStep, 0, 0}; }
  static ChoiceDecision budgets(unsigned l, unsigned r) {
    return {Kind::Budgets, l, r};
  }
  static ChoiceDecision pick_left() { return {Kind::PickLeft, 0, 0}; }
  static ChoiceDecision pick_right() { return {Kind::PickRight, 0, 0}; }
};

std::string render_decision(const ChoiceDecision& d);

// Position of an Amb node: child indices along the data-constructor spine
// from the root. Choice never descends through Amb arguments, so spines
// are the only routes to live Amb nodes.
using AmbPath = std::vector<int>;

std::string render_path(const AmbPath& p);

// One step of the choice relation. `error` is non-empty when the decision's
// side conditions fail (the step is stuck).
struct ChoiceOutcome {
  TermPtr term;
  std::string error;

  bool stuck() const { return term == nullptr; }
};

ChoiceOutcome step_choice(const TermPtr& t, const ChoiceDecision& d);

// A decision source. run_fair and drive_stream consult it at every live
// Amb node; everything else is forced.
struct Scheduler {
  virtual ~Scheduler() = default;
  virtual ChoiceDecision decide(std::size_t step_index, const AmbPath& path,
                                const TermPtr& left, const TermPtr& right) = 0;
};

struct RecordedDecision {
  AmbPath path;
  ChoiceDecision decision;
};

// Round robin: budgets (1,1) while both sides run, and a side is projected
// as soon as it is a whnf, left first. Fair by construction.
std::unique_ptr<Scheduler> make_round_robin_scheduler();

// Uniformly random among the legal decisions at each node; fair with
// probability one. The seed fully determines the run.
std::unique_ptr<Scheduler> make_random_scheduler(std::uint64_t seed);

// Replays an explicit decision list; throws std::runtime_error when the
// list is exhausted or a recorded decision does not match its node.
std::unique_ptr<Scheduler> make_recorded_scheduler(std::vector<RecordedDecision> ds);

// Wraps another scheduler and logs every decision it takes.
class RecordingScheduler : public Scheduler {
 public:
  explicit RecordingScheduler(Scheduler& inner) : inner_(inner) {}
  ChoiceDecision decide(std::size_t step_index, const AmbPath& path,
                        const TermPtr& left, const TermPtr& right) override;
  const std::vector<RecordedDecision>& log() const { return log_; }

 private:
  Scheduler& inner_;
  std::vector<RecordedDecision> log_;
};

// Top-level rule of one parallel step.
enum class ParRule : std::uint8_t { PI, PII, PIII };

const char* par_rule_name(ParRule r);

struct TraceStep {
  TermPtr term;
  ValuePtr snapshot;
  ParRule rule;
  std::vector<RecordedDecision> decisions;
};

struct Trace {
  TermPtr initial;
  ValuePtr initial_snapshot;
  std::vector<TraceStep> steps;
  // Cumulative deterministic steps fed to the two sides of each Amb node,
  // for fairness audits.
  std::map<AmbPath, std::pair<std::uint64_t, std::uint64_t>> side_steps;

  // Category once the classification has stabilized: 'a' if the last step
  // was a choice step, 'b' under a data constructor, 'c' at a lambda.
  char category() const;

  ValuePtr last_snapshot() const {
    return steps.empty() ? initial_snapshot : steps.back().snapshot;
  }
};

// One parallel step: data-constructor arguments all advance, lambdas are
// stationary, everything else takes one choice step (scheduler-directed at
// Amb nodes). Every closed term has a successor.
TermPtr step_par(const TermPtr& t, Scheduler& sched, std::size_t step_index,
                 std::vector<RecordedDecision>* decisions_out = nullptr,
                 ParRule* rule_out = nullptr);

// Runs `fuel` parallel steps, snapshotting the committed data after each.
Trace run_fair(TermPtr t, std::size_t fuel, Scheduler& sched);

// Line-delimited trace export: step index, rule tag, decisions, snapshot.
std::string trace_to_jsonl(const Trace& trace);

// Digit-by-digit driving of a stream-typed term: resolves the head cell
// (through Amb nodes via the scheduler), emits the fully evaluated head,
// and continues on the tail.
struct StreamResult {
  std::vector<ValuePtr> digits;
  bool out_of_fuel = false;
  TermPtr stalled;  // head term that failed to resolve
  std::vector<RecordedDecision> decisions;
  std::vector<std::string> trace_lines;
};

StreamResult drive_stream(TermPtr t, std::size_t digits, std::size_t fuel_per_digit,
                          Scheduler& sched, bool want_trace = false);

// Bounded breadth-first enumeration of all parallel-step successors with
// budgets restricted to (1,0), (0,1), (1,1); returns the maximal committed
// snapshots reached.
struct ExploreResult {
  std::vector<ValuePtr> maximal;    // sorted
  std::size_t states_seen = 0;
  bool truncated = false;
};

ExploreResult explore(const TermPtr& t, std::size_t fuel, std::size_t width);

}  // namespace amb
