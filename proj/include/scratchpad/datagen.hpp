#pragma once

#include "scratchpad/budget.hpp"
#include "scratchpad/polynomial.hpp"
#include "scratchpad/pysub_ops.hpp"
#include "scratchpad/record.hpp"
#include "scratchpad/rng.hpp"
#include "scratchpad/task.hpp"

#include <map>
#include <string>
#include <vector>

namespace scratchpad {

// Synthetic-program generator config (`def f(v0):` bodies built from small
// constants, aug-assigns, counted while loops and if statements).
struct GenConfig {
    std::uint64_t seed = 0;
    int min_ops = 2;  // generated body statements before the final return
    int max_ops = 6;
    std::vector<long long> constants = {0, 1, 2};
    int var_pool = 10;  // v0..v9
    std::vector<long long> loop_bounds = {1, 2};
    int input_min = 0;
    int input_max = 9;
    int inputs_per_program = 3;
    int train_size = 400;
    int valid_size = 100;
    int test_size = 200;
    int attempt_cap = 1000;  // resamples allowed per program slot
    pysub::Limits limits;
    BudgetPolicy budget;
};

std::string gen_synthetic_program(Rng& rng, const GenConfig& cfg);

struct ProgramDataset {
    std::vector<TaskBundle> train;
    std::vector<TaskBundle> valid;
    std::vector<TaskBundle> test;
};

// Unique programs split train/valid/test, three inputs each, gold outputs and
// traces attached; bundles whose trace records exceed the budget are
// regenerated. Deterministic under cfg.seed. Throws GenerationExhausted.
ProgramDataset gen_program_dataset(const GenConfig& cfg);

// Records for one bundle: trace mode and direct mode, one per example.
// input_text is "{source}\n\n{harness}".
std::vector<ExampleRecord> task_trace_records(const TaskBundle& task);
std::vector<ExampleRecord> task_direct_records(const TaskBundle& task);

struct AdditionGenConfig {
    std::uint64_t seed = 0;
    int train_size = 100000;
    int test_size = 10000;
    int ood_size = 1000;  // per out-of-distribution digit length
    int min_digits = 1;
    int max_digits = 8;
    std::vector<int> ood_digits = {9, 10};
};

struct AdditionSplit {
    std::string name;  // "train", "test", "ood9", "ood10"
    std::vector<ExampleRecord> scratchpad_records;
    std::vector<ExampleRecord> direct_records;
};

std::vector<AdditionSplit> gen_addition_dataset(const AdditionGenConfig& cfg);

struct PolyGenConfig {
    std::uint64_t seed = 0;
    int train_size = 10000;
    int test_size = 2000;
    PolySampleConfig sample;
};

struct PolySplit {
    std::string name;  // "train", "test"
    std::vector<ExampleRecord> scratchpad_records;
    std::vector<ExampleRecord> direct_records;
    long long attempts = 0;  // total draws, for the acceptance rate
};

std::vector<PolySplit> gen_polynomial_dataset(const PolyGenConfig& cfg);

// Single-line transformation records:
//   state: b = 15; code: b = b // 2; output: b = 7;
// split as input_text = "state: ...; code: ...;" and target_text =
// "output: ...;". Keys sort alphabetically; values use the repr encoding.
struct SingleLineGenConfig {
    std::uint64_t seed = 0;
    int min_vars = 1;
    int max_vars = 4;
    long long int_min = -100;
    long long int_max = 100;
    int max_list_len = 6;
    int max_str_len = 8;
    int attempt_cap = 1000;  // resamples allowed per record
    pysub::Limits limits;
};

// Record text assembly from already-encoded bindings (sorted by name here).
std::string format_single_line(std::vector<std::pair<std::string, std::string>> state_bindings,
                               const std::string& code,
                               std::vector<std::pair<std::string, std::string>> output_bindings);

// Bindings of a frame as (name, repr text) pairs.
std::vector<std::pair<std::string, std::string>> repr_bindings(const Frame& frame);

std::vector<ExampleRecord> gen_single_line_dataset(Rng& rng, const SingleLineGenConfig& cfg, int n);

enum class AugmentMode { discard_errors, keep_error_traces };

struct AugmentStats {
    int candidates_seen = 0;
    int unparseable = 0;
    int over_cap = 0;
    int faulting_discarded = 0;
    int kept = 0;
};

// Re-executes candidate programs on each task's original inputs to mint new
// bundles (tagged augmented). discard_errors drops candidates with any fault
// run; keep_error_traces keeps fault runs as error-terminated traces. At most
// max_candidates_per_task candidates are taken per task.
std::vector<TaskBundle> augment(const std::vector<TaskBundle>& tasks,
                                const std::map<std::string, std::vector<std::string>>& candidates,
                                AugmentMode mode, const pysub::Limits& limits = {},
                                int max_candidates_per_task = 80, AugmentStats* stats = nullptr);

// Built-in candidate source: perturbs a gold program (constant or operator
// swap) so the augmentation pipeline can run offline.
std::string mutate_program(Rng& rng, const std::string& source);

}  // namespace scratchpad
