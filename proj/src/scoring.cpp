#include "scratchpad/scoring.hpp"

#include "scratchpad/errors.hpp"
#include "scratchpad/pysub_frontend.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace scratchpad {

using pysub::Trace;

bool semantic_value_eq(const Value& a, const Value& b) {
    // Parsed values are already normalized, so typed structural equality is
    // the semantic one. Kinds never cross: 24 vs "24" and 1 vs true differ.
    return a == b;
}

bool frame_semantic_eq(const Frame& a, const Frame& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [name, value] : a.bindings()) {
        const Value* other = b.find(name);
        if (!other || !semantic_value_eq(value, *other)) return false;
    }
    return true;
}

std::string normalize_line(std::string_view line) {
    std::string out;
    bool in_run = true;  // swallow leading whitespace
    for (char c : line) {
        if (c == ' ' || c == '\t') {
            if (!in_run) out += ' ';
            in_run = true;
        } else {
            out += c;
            in_run = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

bool output_correct(const Trace& pred, const Value& expected, MatchMode mode,
                    const std::string& return_var) {
    const Trace::Entry* final_state = pred.final_state();
    if (!final_state) throw MissingFinalState("predicted trace has no state entry");
    Frame frame;
    try {
        frame = parse_state(final_state->text);
    } catch (const ValueParseError&) {
        return false;
    }
    if (const Value* out = frame.find("output")) {
        if (semantic_value_eq(*out, expected)) return true;
    }
    if (mode == MatchMode::lenient && !return_var.empty()) {
        if (const Value* out = frame.find(return_var)) {
            if (semantic_value_eq(*out, expected)) return true;
        }
    }
    return false;
}

bool trace_exact_match(const Trace& pred, const Trace& gold, LineCompare line_compare) {
    if (pred.entries.size() != gold.entries.size()) return false;
    if (pred.error_text.has_value() != gold.error_text.has_value()) return false;
    if (pred.error_text && normalize_line(*pred.error_text) != normalize_line(*gold.error_text)) {
        return false;
    }
    for (std::size_t i = 0; i < pred.entries.size(); ++i) {
        const Trace::Entry& p = pred.entries[i];
        const Trace::Entry& g = gold.entries[i];
        if (p.kind != g.kind) return false;
        if (p.kind == Trace::Entry::Kind::line) {
            if (line_compare == LineCompare::strict_bytes) {
                if (p.text != g.text) return false;
            } else if (normalize_line(p.text) != normalize_line(g.text)) {
                return false;
            }
        } else {
            Frame pf, gf;
            try {
                pf = parse_state(p.text);
                gf = parse_state(g.text);
            } catch (const ValueParseError&) {
                return false;
            }
            if (!frame_semantic_eq(pf, gf)) return false;
        }
    }
    return true;
}

std::string return_variable(const TaskBundle& task) {
    pysub::Program prog;
    try {
        prog = pysub::parse_program(task.source);
    } catch (const std::exception&) {
        return "";
    }
    // First `return <var>` of the task's function, searched in source order.
    std::string found;
    auto scan = [&found](const std::vector<pysub::StmtPtr>& body, auto&& self) -> void {
        for (const pysub::StmtPtr& stmt : body) {
            if (!found.empty()) return;
            if (const auto* ret = stmt->get<pysub::Stmt::Return>()) {
                if (ret->value) {
                    if (const auto* var = ret->value->get<pysub::Expr::Var>()) {
                        found = var->name;
                        return;
                    }
                }
            } else if (const auto* def = stmt->get<pysub::Stmt::FuncDef>()) {
                self(def->body, self);
            } else if (const auto* ifs = stmt->get<pysub::Stmt::If>()) {
                for (const auto& arm : ifs->arms) self(arm.body, self);
                self(ifs->else_body, self);
            } else if (const auto* wh = stmt->get<pysub::Stmt::While>()) {
                self(wh->body, self);
            } else if (const auto* fr = stmt->get<pysub::Stmt::ForRange>()) {
                self(fr->body, self);
            }
        }
    };
    scan(prog.body, scan);
    return found;
}

namespace {

std::string format_ratio(const Ratio& r) {
    std::ostringstream os;
    os << r.num << "/" << r.den << " (";
    os.precision(6);
    os << std::fixed << r.fraction() << ")";
    return os.str();
}

}  // namespace

std::string ScoreReport::to_text() const {
    std::ostringstream os;
    os << "per-task execution acc: " << format_ratio(per_task_exec) << "\n"
       << "per-task trace acc: " << format_ratio(per_task_trace) << "\n"
       << "per-example execution acc: " << format_ratio(per_example_exec) << "\n"
       << "per-example trace acc: " << format_ratio(per_example_trace) << "\n"
       << "missing predictions: " << missing_predictions << "\n"
       << "malformed predictions: " << malformed_predictions << "\n";
    return os.str();
}

ScoreReport score_dataset(const std::vector<PredictionRecord>& preds,
                          const std::vector<TaskBundle>& golds, const ScoreOptions& opts) {
    std::map<std::pair<std::string, int>, const PredictionRecord*> by_key;
    for (const PredictionRecord& p : preds) {
        auto key = std::make_pair(p.task_id, p.example_index);
        if (!by_key.emplace(key, &p).second) {
            throw DuplicatePrediction("duplicate prediction for task '" + p.task_id +
                                      "' example " + std::to_string(p.example_index));
        }
    }

    ScoreReport report;
    for (const TaskBundle& task : golds) {
        const std::string ret_var = opts.mode == MatchMode::lenient ? return_variable(task) : "";
        bool task_exec = !task.examples.empty();
        bool task_trace = !task.examples.empty();
        for (std::size_t i = 0; i < task.examples.size(); ++i) {
            const TaskExample& ex = task.examples[i];
            bool exec_ok = false;
            bool trace_ok = false;
            auto it = by_key.find(std::make_pair(task.task_id, static_cast<int>(i)));
            if (it == by_key.end()) {
                ++report.missing_predictions;
            } else {
                const PredictionRecord& pred = *it->second;
                if (pred.mode == RecordMode::direct) {
                    // Direct answers carry a value, not a trace.
                    if (ex.output) {
                        try {
                            exec_ok = semantic_value_eq(parse_value(pred.predicted_text), *ex.output);
                        } catch (const ValueParseError&) {
                        }
                    }
                } else {
                    try {
                        const Trace pred_trace = pysub::parse_trace(pred.predicted_text);
                        const Trace gold_trace = pysub::parse_trace(ex.trace_text);
                        trace_ok = trace_exact_match(pred_trace, gold_trace, opts.line_compare);
                        if (ex.output) {
                            try {
                                exec_ok = output_correct(pred_trace, *ex.output, opts.mode, ret_var);
                            } catch (const MissingFinalState&) {
                            }
                        } else {
                            // Gold run faulted: execution is right when the
                            // prediction ends in the same error line.
                            exec_ok = pred_trace.error_text.has_value() &&
                                      gold_trace.error_text.has_value() &&
                                      normalize_line(*pred_trace.error_text) ==
                                          normalize_line(*gold_trace.error_text);
                        }
                    } catch (const MalformedTrace&) {
                        ++report.malformed_predictions;
                    }
                }
            }
            report.per_example_exec.num += exec_ok ? 1 : 0;
            report.per_example_trace.num += trace_ok ? 1 : 0;
            ++report.per_example_exec.den;
            ++report.per_example_trace.den;
            task_exec = task_exec && exec_ok;
            task_trace = task_trace && trace_ok;
        }
        report.per_task_exec.num += task_exec ? 1 : 0;
        report.per_task_trace.num += task_trace ? 1 : 0;
        ++report.per_task_exec.den;
        ++report.per_task_trace.den;
    }
    return report;
}

}  // namespace scratchpad
