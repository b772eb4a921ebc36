#include "amb/engine.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace amb {

std::string render_decision(const ChoiceDecision& d) {
  switch (d.kind) {
    case ChoiceDecision::Kind::HeadStep: return "head";
    case ChoiceDecision::Kind::Budgets:
      return "budgets(" + std::to_string(d.left_steps) + "," +
             std::to_string(d.right_steps) + ")";
    case ChoiceDecision::Kind::PickLeft: return "pick-left";
    case ChoiceDecision::Kind::PickRight: return "pick-right";
  }
  return "?";
}

std::string render_path(const AmbPath& p) {
  if (p.empty()) return ".";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(p[i]);
  }
  return s;
}

namespace {

// Exactly l deterministic steps; fails when the term runs out of redexes
// first (it reached a whnf).
ChoiceOutcome det_steps(TermPtr t, unsigned l) {
  for (unsigned i = 0; i < l; ++i) {
    if (is_whnf(t))
      return {nullptr, "argument reached whnf before its budget was spent"};
    t = step_det(t).next;
  }
  return {std::move(t), {}};
}

}  // namespace

ChoiceOutcome step_choice(const TermPtr& t, const ChoiceDecision& d) {
  switch (d.kind) {
    case ChoiceDecision::Kind::HeadStep: {
      if (is_whnf(t)) return {nullptr, "head step on a whnf"};
      return {step_det(t).next, {}};
    }
    case ChoiceDecision::Kind::Budgets: {
      if (t->kind != TermKind::Amb) return {nullptr, "budgets on a non-Amb term"};
      if (d.left_steps + d.right_steps == 0)
        return {nullptr, "budgets must spend at least one step"};
      ChoiceOutcome l = det_steps(t->kids[0], d.left_steps);
      if (l.stuck()) return l;
      ChoiceOutcome r = det_steps(t->kids[1], d.right_steps);
      if (r.stuck()) return r;
      return {mk_amb(std::move(l.term), std::move(r.term)), {}};
    }
    case ChoiceDecision::Kind::PickLeft: {
      if (t->kind != TermKind::Amb) return {nullptr, "pick on a non-Amb term"};
      if (!is_whnf(t->kids[0])) return {nullptr, "pick-left: left side is not a whnf"};
      return {t->kids[0], {}};
    }
    case ChoiceDecision::Kind::PickRight: {
      if (t->kind != TermKind::Amb) return {nullptr, "pick on a non-Amb term"};
      if (!is_whnf(t->kids[1])) return {nullptr, "pick-right: right side is not a whnf"};
      return {t->kids[1], {}};
    }
  }
  return {nullptr, "unknown decision"};
}

namespace {

struct RoundRobin : Scheduler {
  ChoiceDecision decide(std::size_t, const AmbPath&, const TermPtr& left,
                        const TermPtr& right) override {
    if (is_whnf(left)) return ChoiceDecision::pick_left();
    if (is_whnf(right)) return ChoiceDecision::pick_right();
    return ChoiceDecision::budgets(1, 1);
  }
};

struct RandomSched : Scheduler {
  std::mt19937_64 rng;
  explicit RandomSched(std::uint64_t seed) : rng(seed) {}

  ChoiceDecision decide(std::size_t, const AmbPath&, const TermPtr& left,
                        const TermPtr& right) override {
    std::vector<ChoiceDecision> options;
    bool lw = is_whnf(left), rw = is_whnf(right);
    if (lw) options.push_back(ChoiceDecision::pick_left());
    if (rw) options.push_back(ChoiceDecision::pick_right());
    if (!lw) options.push_back(ChoiceDecision::budgets(1, 0));
    if (!rw) options.push_back(ChoiceDecision::budgets(0, 1));
    if (!lw && !rw) options.push_back(ChoiceDecision::budgets(1, 1));
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    return options[pick(rng)];
  }
};

struct Recorded : Scheduler {
  std::vector<RecordedDecision> ds;
  std::size_t next = 0;
  explicit Recorded(std::vector<RecordedDecision> d) : ds(std::move(d)) {}

  ChoiceDecision decide(std::size_t, const AmbPath& path, const TermPtr&,
                        const TermPtr&) override {
    if (next >= ds.size())
      throw std::runtime_error("recorded schedule exhausted");
    const RecordedDecision& d = ds[next++];
    if (d.path != path)
      throw std::runtime_error("recorded schedule diverges: expected node " +
                               render_path(d.path) + ", reached " +
                               render_path(path));
    return d.decision;
  }
};

}  // namespace

std::unique_ptr<Scheduler> make_round_robin_scheduler() {
  return std::make_unique<RoundRobin>();
}

std::unique_ptr<Scheduler> make_random_scheduler(std::uint64_t seed) {
  return std::make_unique<RandomSched>(seed);
}

std::unique_ptr<Scheduler> make_recorded_scheduler(std::vector<RecordedDecision> ds) {
  return std::make_unique<Recorded>(std::move(ds));
}

ChoiceDecision RecordingScheduler::decide(std::size_t step_index, const AmbPath& path,
                                          const TermPtr& left, const TermPtr& right) {
  ChoiceDecision d = inner_.decide(step_index, path, left, right);
  log_.push_back({path, d});
  return d;
}

const char* par_rule_name(ParRule r) {
  switch (r) {
    case ParRule::PI: return "p-i";
    case ParRule::PII: return "p-ii";
    case ParRule::PIII: return "p-iii";
  }
  return "?";
}

namespace {

TermPtr rebuild_data(const TermPtr& t, std::vector<TermPtr> kids) {
  switch (t->kind) {
    case TermKind::Nil: return t;
    case TermKind::Left: return mk_left(kids[0]);
    case TermKind::Right: return mk_right(kids[0]);
    case TermKind::Pair: return mk_pair(kids[0], kids[1]);
    default: throw std::logic_error("rebuild_data: not a data constructor");
  }
}

TermPtr apply_decision_or_throw(const TermPtr& t, const ChoiceDecision& d) {
  ChoiceOutcome out = step_choice(t, d);
  if (out.stuck()) throw std::runtime_error("scheduler decision is stuck: " + out.error);
  return out.term;
}

struct ParState {
  Scheduler& sched;
  std::size_t step_index;
  std::vector<RecordedDecision>* decisions;

  TermPtr go(const TermPtr& t, AmbPath& path) {
    if (t->kind == TermKind::Lam) return t;  // p-iii
    if (is_data_constructor(t->kind)) {      // p-ii
      std::vector<TermPtr> kids;
      kids.reserve(t->kids.size());
      for (std::size_t i = 0; i < t->kids.size(); ++i) {
        path.push_back(static_cast<int>(i));
        kids.push_back(go(t->kids[i], path));
        path.pop_back();
      }
      return rebuild_data(t, std::move(kids));
    }
    // p-i: one choice step
    if (t->kind == TermKind::Amb) {
      ChoiceDecision d = sched.decide(step_index, path, t->kids[0], t->kids[1]);
      if (decisions) decisions->push_back({path, d});
      return apply_decision_or_throw(t, d);
    }
    return step_det(t).next;  // c-i, forced
  }
};

}  // namespace

TermPtr step_par(const TermPtr& t, Scheduler& sched, std::size_t step_index,
                 std::vector<RecordedDecision>* decisions_out, ParRule* rule_out) {
  if (rule_out) {
    if (t->kind == TermKind::Lam) *rule_out = ParRule::PIII;
    else if (is_data_constructor(t->kind)) *rule_out = ParRule::PII;
    else *rule_out = ParRule::PI;
  }
  ParState st{sched, step_index, decisions_out};
  AmbPath path;
  return st.go(t, path);
}

char Trace::category() const {
  if (steps.empty()) return 'a';
  switch (steps.back().rule) {
    case ParRule::PII: return 'b';
    case ParRule::PIII: return 'c';
    default: return 'a';
  }
}

Trace run_fair(TermPtr t, std::size_t fuel, Scheduler& sched) {
  Trace trace;
  trace.initial = t;
  trace.initial_snapshot = project(t);
  for (std::size_t i = 0; i < fuel; ++i) {
    TraceStep step;
    step.rule = ParRule::PI;
    t = step_par(t, sched, i, &step.decisions, &step.rule);
    step.term = t;
    step.snapshot = project(t);
    for (const auto& rd : step.decisions)
      if (rd.decision.kind == ChoiceDecision::Kind::Budgets) {
        auto& c = trace.side_steps[rd.path];
        c.first += rd.decision.left_steps;
        c.second += rd.decision.right_steps;
      }
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string trace_to_jsonl(const Trace& trace) {
  std::ostringstream os;
  os << "{\"step\":0,\"rule\":\"init\",\"decisions\":[],\"snapshot\":\""
     << json_escape(render_value(trace.initial_snapshot)) << "\"}\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    os << "{\"step\":" << (i + 1) << ",\"rule\":\"" << par_rule_name(s.rule)
       << "\",\"decisions\":[";
    for (std::size_t j = 0; j < s.decisions.size(); ++j) {
      if (j) os << ",";
      os << "{\"path\":\"" << render_path(s.decisions[j].path) << "\",\"decision\":\""
         << render_decision(s.decisions[j].decision) << "\"}";
    }
    os << "],\"snapshot\":\"" << json_escape(render_value(s.snapshot)) << "\"}\n";
  }
  return os.str();
}

StreamResult drive_stream(TermPtr t, std::size_t digits, std::size_t fuel_per_digit,
                          Scheduler& sched, bool want_trace) {
  StreamResult res;
  RecordingScheduler rec(sched);
  std::size_t global_step = 0;
  auto trace_line = [&](const char* rule, const std::string& decision,
                        const TermPtr& cur) {
    if (!want_trace) return;
    std::ostringstream os;
    os << "{\"step\":" << global_step << ",\"rule\":\"" << rule
       << "\",\"decision\":\"" << decision << "\",\"snapshot\":\""
       << json_escape(render_value(project(cur))) << "\"}";
    res.trace_lines.push_back(os.str());
  };

  for (std::size_t i = 0; i < digits; ++i) {
    std::size_t ticks = 0;
    while (true) {
      if (ticks > fuel_per_digit) {
        res.out_of_fuel = true;
        res.stalled = t;
        res.decisions = rec.log();
        return res;
      }
      if (!is_whnf(t)) {
        DetStep s = step_det(t);
        t = s.next;
        ++ticks;
        ++global_step;
        trace_line("c-i", det_rule_name(s.rule), t);
        continue;
      }
      if (t->kind == TermKind::Amb) {
        ChoiceDecision d = rec.decide(global_step, {}, t->kids[0], t->kids[1]);
        t = apply_decision_or_throw(t, d);
        ++ticks;
        ++global_step;
        const char* rule = d.kind == ChoiceDecision::Kind::Budgets ? "c-ii"
                           : d.kind == ChoiceDecision::Kind::PickLeft ? "c-iii"
                                                                      : "c-iii'";
        trace_line(rule, render_decision(d), t);
        continue;
      }
      if (t->kind == TermKind::Pair) {
        ValuePtr head = denote_finitary(t->kids[0], fuel_per_digit);
        res.digits.push_back(head);
        if (want_trace) {
          std::ostringstream os;
          os << "{\"step\":" << global_step << ",\"rule\":\"emit\",\"decision\":\"digit "
             << i << "\",\"snapshot\":\"" << json_escape(render_value(head)) << "\"}";
          res.trace_lines.push_back(os.str());
        }
        t = t->kids[1];
        break;
      }
      throw std::runtime_error(
          "drive_stream: head resolved to a non-stream value");
    }
  }
  res.decisions = rec.log();
  return res;
}

namespace {

void add_unique(std::vector<TermPtr>& out, TermPtr t) {
  for (const auto& u : out)
    if (term_eq(u, t)) return;
  out.push_back(std::move(t));
}

// All one-step parallel successors with budgets in {(1,0),(0,1),(1,1)}.
std::vector<TermPtr> par_successors(const TermPtr& t, std::size_t cap,
                                    bool* hit_cap) {
  std::vector<TermPtr> out;
  if (t->kind == TermKind::Lam) {
    out.push_back(t);
    return out;
  }
  if (is_data_constructor(t->kind)) {
    if (t->kids.empty()) {
      out.push_back(t);
      return out;
    }
    std::vector<std::vector<TermPtr>> per_kid;
    per_kid.reserve(t->kids.size());
    for (const auto& k : t->kids) per_kid.push_back(par_successors(k, cap, hit_cap));
    std::vector<std::size_t> idx(t->kids.size(), 0);
    while (true) {
      std::vector<TermPtr> kids;
      kids.reserve(idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) kids.push_back(per_kid[i][idx[i]]);
      add_unique(out, rebuild_data(t, std::move(kids)));
      if (out.size() >= cap) {
        if (hit_cap) *hit_cap = true;
        return out;
      }
      std::size_t i = 0;
      for (; i < idx.size(); ++i) {
        if (++idx[i] < per_kid[i].size()) break;
        idx[i] = 0;
      }
      if (i == idx.size()) break;
    }
    return out;
  }
  if (t->kind == TermKind::Amb) {
    const TermPtr& l = t->kids[0];
    const TermPtr& r = t->kids[1];
    bool lw = is_whnf(l), rw = is_whnf(r);
    if (lw) add_unique(out, l);
    if (rw) add_unique(out, r);
    if (!lw) {
      ChoiceOutcome o = step_choice(t, ChoiceDecision::budgets(1, 0));
      add_unique(out, o.term);
    }
    if (!rw) {
      ChoiceOutcome o = step_choice(t, ChoiceDecision::budgets(0, 1));
      add_unique(out, o.term);
    }
    if (!lw && !rw) {
      ChoiceOutcome o = step_choice(t, ChoiceDecision::budgets(1, 1));
      add_unique(out, o.term);
    }
    return out;
  }
  out.push_back(step_det(t).next);
  return out;
}

struct ValueLess {
  bool operator()(const ValuePtr& a, const ValuePtr& b) const {
    return value_cmp(a, b) < 0;
  }
};

}  // namespace

ExploreResult explore(const TermPtr& t, std::size_t fuel, std::size_t width) {
  ExploreResult res;
  auto term_less = [](const TermPtr& a, const TermPtr& b) {
    return term_cmp(a, b) < 0;
  };
  std::vector<TermPtr> frontier{t};
  std::set<ValuePtr, ValueLess> snapshots;
  snapshots.insert(project(t));
  res.states_seen = 1;
  for (std::size_t level = 0; level < fuel; ++level) {
    std::vector<TermPtr> next;
    for (const auto& u : frontier) {
      bool hit = false;
      for (auto& v : par_successors(u, width + 1, &hit)) next.push_back(std::move(v));
      if (hit) res.truncated = true;
      if (next.size() > 64 * (width + 1)) {
        // interim dedupe to bound memory
        std::sort(next.begin(), next.end(), term_less);
        next.erase(std::unique(next.begin(), next.end(),
                               [](const TermPtr& a, const TermPtr& b) {
                                 return term_eq(a, b);
                               }),
                   next.end());
      }
    }
    std::sort(next.begin(), next.end(), term_less);
    next.erase(std::unique(next.begin(), next.end(),
                           [](const TermPtr& a, const TermPtr& b) {
                             return term_eq(a, b);
                           }),
               next.end());
    if (next.size() > width) {
      next.resize(width);
      res.truncated = true;
    }
    res.states_seen += next.size();
    for (const auto& u : next) snapshots.insert(project(u));
    frontier = std::move(next);
  }
  // keep only the maximal snapshots
  std::vector<ValuePtr> all(snapshots.begin(), snapshots.end());
  for (const auto& v : all) {
    bool dominated = false;
    for (const auto& w : all) {
      if (!value_eq(v, w) && leq(v, w)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) res.maximal.push_back(v);
  }
  return res;
}

}  // namespace amb
