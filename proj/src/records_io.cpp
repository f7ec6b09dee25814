#include "scratchpad/records_io.hpp"

#include "scratchpad/errors.hpp"

#include <fstream>
#include <sstream>

namespace scratchpad {

using nlohmann::json;

std::string to_string(RecordMode mode) {
    switch (mode) {
        case RecordMode::direct: return "direct";
        case RecordMode::scratchpad: return "scratchpad";
        case RecordMode::trace: return "trace";
        case RecordMode::single_line: return "single_line";
    }
    return "direct";
}

RecordMode record_mode_from_string(std::string_view text) {
    if (text == "direct") return RecordMode::direct;
    if (text == "scratchpad") return RecordMode::scratchpad;
    if (text == "trace") return RecordMode::trace;
    if (text == "single_line") return RecordMode::single_line;
    throw std::invalid_argument("unknown record mode: " + std::string(text));
}

std::string to_string(Provenance p) {
    return p == Provenance::original ? "original" : "augmented";
}

Provenance provenance_from_string(std::string_view text) {
    if (text == "original") return Provenance::original;
    if (text == "augmented") return Provenance::augmented;
    throw std::invalid_argument("unknown provenance: " + std::string(text));
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

json parse_line(const std::string& line, int line_no) {
    json obj = json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
        throw SchemaError(line_no, "not a JSON object");
    }
    return obj;
}

const json& require(const json& obj, const char* key, int line_no) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(line_no, std::string("missing field '") + key + "'");
    return *it;
}

std::string require_string(const json& obj, const char* key, int line_no) {
    const json& v = require(obj, key, line_no);
    if (!v.is_string()) throw SchemaError(line_no, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

}  // namespace

std::string records_to_jsonl(const std::vector<ExampleRecord>& records) {
    std::string out;
    for (const ExampleRecord& rec : records) {
        json obj = {
            {"id", rec.id},
            {"task_id", rec.task_id},
            {"mode", to_string(rec.mode)},
            {"input_text", rec.input_text},
            {"target_text", rec.target_text},
            {"metadata", rec.metadata},
        };
        out += obj.dump();
        out += '\n';
    }
    return out;
}

std::vector<ExampleRecord> records_from_jsonl(std::string_view text) {
    std::vector<ExampleRecord> records;
    const std::vector<std::string> lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const int line_no = static_cast<int>(i) + 1;
        json obj = parse_line(lines[i], line_no);
        ExampleRecord rec;
        rec.id = require_string(obj, "id", line_no);
        rec.task_id = require_string(obj, "task_id", line_no);
        try {
            rec.mode = record_mode_from_string(require_string(obj, "mode", line_no));
        } catch (const std::invalid_argument& e) {
            throw SchemaError(line_no, e.what());
        }
        rec.input_text = require_string(obj, "input_text", line_no);
        rec.target_text = require_string(obj, "target_text", line_no);
        if (rec.input_text.empty()) throw SchemaError(line_no, "input_text must be non-empty");
        if (rec.target_text.empty()) throw SchemaError(line_no, "target_text must be non-empty");
        if (auto it = obj.find("metadata"); it != obj.end()) {
            if (!it->is_object()) throw SchemaError(line_no, "metadata must be an object");
            rec.metadata = *it;
        }
        records.push_back(std::move(rec));
    }
    // id uniqueness within a file
    std::map<std::string, int> seen;
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto [it, fresh] = seen.emplace(records[i].id, static_cast<int>(i) + 1);
        if (!fresh) {
            throw SchemaError(static_cast<int>(i) + 1, "duplicate record id '" + records[i].id + "'");
        }
    }
    return records;
}

namespace {

json value_to_text_json(const Value& v) { return json(encode_value(v)); }

Value value_from_text_json(const json& j, int line_no) {
    if (!j.is_string()) throw SchemaError(line_no, "encoded value must be a string");
    try {
        return parse_value(j.get<std::string>());
    } catch (const ValueParseError& e) {
        throw SchemaError(line_no, e.what());
    }
}

}  // namespace

std::string tasks_to_jsonl(const std::vector<TaskBundle>& tasks) {
    std::string out;
    for (const TaskBundle& task : tasks) {
        json examples = json::array();
        for (const TaskExample& ex : task.examples) {
            json inputs = json::array();
            for (const Value& in : ex.inputs) inputs.push_back(value_to_text_json(in));
            json jex = {
                {"inputs", inputs},
                {"output", ex.output ? value_to_text_json(*ex.output) : json(nullptr)},
                {"fault", ex.fault ? json({{"kind", ex.fault->kind}, {"message", ex.fault->message}})
                                   : json(nullptr)},
                {"trace", ex.trace_text},
            };
            examples.push_back(std::move(jex));
        }
        json obj = {
            {"task_id", task.task_id},
            {"source", task.source},
            {"provenance", to_string(task.provenance)},
            {"examples", examples},
        };
        out += obj.dump();
        out += '\n';
    }
    return out;
}

std::vector<TaskBundle> tasks_from_jsonl(std::string_view text) {
    std::vector<TaskBundle> tasks;
    const std::vector<std::string> lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const int line_no = static_cast<int>(i) + 1;
        json obj = parse_line(lines[i], line_no);
        TaskBundle task;
        task.task_id = require_string(obj, "task_id", line_no);
        task.source = require_string(obj, "source", line_no);
        try {
            task.provenance = provenance_from_string(require_string(obj, "provenance", line_no));
        } catch (const std::invalid_argument& e) {
            throw SchemaError(line_no, e.what());
        }
        const json& examples = require(obj, "examples", line_no);
        if (!examples.is_array()) throw SchemaError(line_no, "examples must be an array");
        for (const json& jex : examples) {
            if (!jex.is_object()) throw SchemaError(line_no, "example must be an object");
            TaskExample ex;
            const json& inputs = require(jex, "inputs", line_no);
            if (!inputs.is_array()) throw SchemaError(line_no, "inputs must be an array");
            for (const json& in : inputs) ex.inputs.push_back(value_from_text_json(in, line_no));
            if (auto it = jex.find("output"); it != jex.end() && !it->is_null()) {
                ex.output = value_from_text_json(*it, line_no);
            }
            if (auto it = jex.find("fault"); it != jex.end() && !it->is_null()) {
                if (!it->is_object()) throw SchemaError(line_no, "fault must be an object");
                pysub::Fault fault;
                fault.kind = require_string(*it, "kind", line_no);
                fault.message = require_string(*it, "message", line_no);
                ex.fault = std::move(fault);
            }
            ex.trace_text = require_string(jex, "trace", line_no);
            task.examples.push_back(std::move(ex));
        }
        tasks.push_back(std::move(task));
    }
    return tasks;
}

std::vector<PredictionRecord> read_predictions(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    std::vector<PredictionRecord> preds;
    const std::vector<std::string> lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const int line_no = static_cast<int>(i) + 1;
        json obj = parse_line(lines[i], line_no);
        PredictionRecord pred;
        pred.task_id = require_string(obj, "task_id", line_no);
        const json& idx = require(obj, "example_index", line_no);
        if (!idx.is_number_integer()) {
            throw SchemaError(line_no, "example_index must be an integer");
        }
        pred.example_index = idx.get<int>();
        try {
            pred.mode = record_mode_from_string(require_string(obj, "mode", line_no));
        } catch (const std::invalid_argument& e) {
            throw SchemaError(line_no, e.what());
        }
        pred.predicted_text = require_string(obj, "predicted_text", line_no);
        preds.push_back(std::move(pred));
    }
    return preds;
}

void write_predictions(const std::filesystem::path& path,
                       const std::vector<PredictionRecord>& preds) {
    std::string out;
    for (const PredictionRecord& pred : preds) {
        json obj = {
            {"task_id", pred.task_id},
            {"example_index", pred.example_index},
            {"mode", to_string(pred.mode)},
            {"predicted_text", pred.predicted_text},
        };
        out += obj.dump();
        out += '\n';
    }
    write_text_file(path, out);
}

std::map<std::string, std::vector<std::string>> read_candidate_file(
    const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    std::map<std::string, std::vector<std::string>> candidates;
    std::string current_task;
    std::string current_program;
    auto flush = [&]() {
        if (current_task.empty()) return;
        while (current_program.ends_with("\n")) current_program.pop_back();
        if (!current_program.empty()) {
            candidates[current_task].push_back(current_program + "\n");
        }
        current_program.clear();
    };
    for (const std::string& line : split_lines(text)) {
        if (line.starts_with("### ")) {
            flush();
            current_task = line.substr(4);
            continue;
        }
        if (line == "###") {  // separator within the same task
            flush();
            continue;
        }
        current_program += line;
        current_program += '\n';
    }
    flush();
    return candidates;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file for reading: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + path.string());
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

void write_records(const std::filesystem::path& path, const std::vector<ExampleRecord>& records) {
    write_text_file(path, records_to_jsonl(records));
}

std::vector<ExampleRecord> read_records(const std::filesystem::path& path) {
    return records_from_jsonl(read_text_file(path));
}

void write_tasks(const std::filesystem::path& path, const std::vector<TaskBundle>& tasks) {
    write_text_file(path, tasks_to_jsonl(tasks));
}

std::vector<TaskBundle> read_tasks(const std::filesystem::path& path) {
    return tasks_from_jsonl(read_text_file(path));
}

}  // namespace scratchpad
