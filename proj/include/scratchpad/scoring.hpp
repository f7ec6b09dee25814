#pragma once

#include "scratchpad/pysub_trace.hpp"
#include "scratchpad/record.hpp"
#include "scratchpad/task.hpp"
#include "scratchpad/value.hpp"

#include <string>
#include <vector>

namespace scratchpad {

enum class MatchMode { strict, lenient };
enum class LineCompare { normalized, strict_bytes };

// Typed value equality: ints by value, strings exact, lists elementwise,
// callables by name. Kinds never cross (24 != "24", 1 != true).
bool semantic_value_eq(const Value& a, const Value& b);

// State comparison: same key set, semantically equal values, key order
// ignored.
bool frame_semantic_eq(const Frame& a, const Frame& b);

// Leading/trailing whitespace trimmed, inner runs collapsed to one space.
std::string normalize_line(std::string_view line);

// Did the predicted trace end with the right value? strict requires `output`
// in the final state; lenient additionally accepts return_var (the variable
// the traced function returns, e.g. "v0"). Throws MissingFinalState when the
// trace has no state entry.
bool output_correct(const pysub::Trace& pred, const Value& expected, MatchMode mode,
                    const std::string& return_var = "");

// Entry counts equal, line sequences equal under the chosen comparison,
// states pairwise semantically equal, terminal error lines equal if present.
bool trace_exact_match(const pysub::Trace& pred, const pysub::Trace& gold,
                       LineCompare line_compare = LineCompare::normalized);

struct PredictionRecord {
    std::string task_id;
    int example_index = 0;
    RecordMode mode = RecordMode::trace;
    std::string predicted_text;
};

struct Ratio {
    long long num = 0;
    long long den = 0;

    double fraction() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Ratio&) const = default;
};

struct ScoreReport {
    Ratio per_example_exec;
    Ratio per_example_trace;
    Ratio per_task_exec;
    Ratio per_task_trace;
    long long missing_predictions = 0;
    long long malformed_predictions = 0;

    std::string to_text() const;
};

struct ScoreOptions {
    MatchMode mode = MatchMode::strict;
    LineCompare line_compare = LineCompare::normalized;
};

// Table-style metrics: per-example accuracies count examples, per-task
// accuracies require every example of a task to be correct. Missing
// predictions score as incorrect. Throws DuplicatePrediction if two
// predictions address one example.
ScoreReport score_dataset(const std::vector<PredictionRecord>& preds,
                          const std::vector<TaskBundle>& golds, const ScoreOptions& opts = {});

// Name of the variable a task's function returns (for lenient scoring);
// empty when the return expression is not a plain variable.
std::string return_variable(const TaskBundle& task);

}  // namespace scratchpad
