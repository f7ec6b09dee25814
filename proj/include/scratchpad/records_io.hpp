#pragma once

#include "scratchpad/record.hpp"
#include "scratchpad/scoring.hpp"
#include "scratchpad/task.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace scratchpad {

// Line-delimited JSON files, one object per line.
// Record schema: {"id", "task_id", "mode", "input_text", "target_text", "metadata"}.
// Task schema: {"task_id", "source", "provenance", "examples": [{"inputs":
// [..], "output", "fault", "trace"}]} with values carried as canonical encoded
// text (arbitrary-precision safe).
// Prediction schema: {"task_id", "example_index", "mode", "predicted_text"}.

std::string records_to_jsonl(const std::vector<ExampleRecord>& records);
std::vector<ExampleRecord> records_from_jsonl(std::string_view text);  // throws SchemaError

void write_records(const std::filesystem::path& path, const std::vector<ExampleRecord>& records);
std::vector<ExampleRecord> read_records(const std::filesystem::path& path);

std::string tasks_to_jsonl(const std::vector<TaskBundle>& tasks);
std::vector<TaskBundle> tasks_from_jsonl(std::string_view text);

void write_tasks(const std::filesystem::path& path, const std::vector<TaskBundle>& tasks);
std::vector<TaskBundle> read_tasks(const std::filesystem::path& path);

std::vector<PredictionRecord> read_predictions(const std::filesystem::path& path);
void write_predictions(const std::filesystem::path& path,
                       const std::vector<PredictionRecord>& preds);

// Candidate-program file: each block starts with a "### <task_id>" delimiter
// line; the lines until the next delimiter are one candidate program.
std::map<std::string, std::vector<std::string>> read_candidate_file(
    const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);    // throws IoError
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace scratchpad
