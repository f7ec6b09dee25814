#include "scratchpad/datagen.hpp"

#include "scratchpad/addition.hpp"
#include "scratchpad/errors.hpp"
#include "scratchpad/pysub_frontend.hpp"
#include "scratchpad/pysub_interp.hpp"
#include "scratchpad/pysub_tracer.hpp"

#include <algorithm>
#include <set>

namespace scratchpad {

using pysub::Limits;
using pysub::RunResult;
using pysub::Trace;

// ---------------------------------------------------------------------------
// synthetic programs
// ---------------------------------------------------------------------------

namespace {

struct ProgramBuilder {
    Rng& rng;
    const GenConfig& cfg;
    std::vector<std::string> lines{"def f(v0):"};
    std::vector<std::string> live{"v0"};   // initialized variables
    std::vector<std::string> fresh;        // unused names from the pool

    explicit ProgramBuilder(Rng& rng_, const GenConfig& cfg_) : rng(rng_), cfg(cfg_) {
        for (int i = 1; i < cfg.var_pool; ++i) fresh.push_back("v" + std::to_string(i));
    }

    std::string take_fresh() {
        const auto idx = static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int64_t>(fresh.size()) - 1));
        std::string name = fresh[idx];
        fresh.erase(fresh.begin() + static_cast<std::ptrdiff_t>(idx));
        live.push_back(name);
        return name;
    }

    std::string aug_stmt(const std::string& exclude = "") {
        std::string target;
        do {
            target = rng.pick(live);
        } while (target == exclude && live.size() > 1);
        if (target == exclude) target = "v0";
        static const char* ops[] = {"+=", "-=", "*="};
        const char* op = ops[rng.uniform(0, 2)];
        const long long c = rng.pick(cfg.constants);
        return target + " " + op + " " + std::to_string(c);
    }

    void emit_aug() { lines.push_back("  " + aug_stmt()); }

    void emit_init() {
        lines.push_back("  " + take_fresh() + " = " + std::to_string(rng.pick(cfg.constants)));
    }

    void emit_while() {
        const std::string counter = take_fresh();
        lines.push_back("  " + counter + " = " + std::to_string(rng.pick(cfg.loop_bounds)));
        lines.push_back("  while " + counter + " > 0:");
        lines.push_back("    " + counter + " -= 1");
        if (rng.chance(0.7)) lines.push_back("    " + aug_stmt(counter));
    }

    void emit_if() {
        static const char* cmps[] = {"<", ">", "<=", ">=", "==", "!="};
        const std::string var = rng.pick(live);
        const char* cmp = cmps[rng.uniform(0, 5)];
        const long long c = rng.pick(cfg.constants);
        lines.push_back("  if " + var + " " + std::string(cmp) + " " + std::to_string(c) + ":");
        const int body = static_cast<int>(rng.uniform(1, 2));
        for (int i = 0; i < body; ++i) lines.push_back("    " + aug_stmt());
    }

    std::string build() {
        const int budget = static_cast<int>(rng.uniform(cfg.min_ops, cfg.max_ops));
        int used = 0;
        while (used < budget) {
            const int roll = static_cast<int>(rng.uniform(0, 99));
            if (roll < 35) {
                emit_aug();
                used += 1;
            } else if (roll < 55 && !fresh.empty()) {
                emit_init();
                used += 1;
            } else if (roll < 80 && !fresh.empty() && budget - used >= 2) {
                emit_while();
                used += 2;
            } else if (roll < 95) {
                emit_if();
                used += 1;
            } else {
                emit_aug();
                used += 1;
            }
        }
        lines.push_back("  return v0");
        std::string out;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (i > 0) out += '\n';
            out += lines[i];
        }
        return out;
    }
};

}  // namespace

std::string gen_synthetic_program(Rng& rng, const GenConfig& cfg) {
    return ProgramBuilder(rng, cfg).build();
}

namespace {

TaskBundle build_bundle(const std::string& task_id, const std::string& source,
                        const std::vector<long long>& inputs, const Limits& limits) {
    const pysub::Program prog = pysub::parse_program(source);
    TaskBundle bundle;
    bundle.task_id = task_id;
    bundle.source = source;
    for (long long input : inputs) {
        TaskExample ex;
        ex.inputs.push_back(Value::of_int(input));
        const RunResult direct = pysub::run_direct(prog, "f", ex.inputs, limits);
        if (direct.ok()) {
            ex.output = direct.value;
        } else {
            ex.fault = direct.fault;
        }
        ex.trace_text = pysub::render_trace(pysub::trace(prog, "f", ex.inputs, limits));
        bundle.examples.push_back(std::move(ex));
    }
    return bundle;
}

bool bundle_fits_budget(const TaskBundle& bundle, const BudgetPolicy& policy) {
    for (const ExampleRecord& rec : task_trace_records(bundle)) {
        if (!fits_budget(rec, policy)) return false;
    }
    return true;
}

}  // namespace

ProgramDataset gen_program_dataset(const GenConfig& cfg) {
    const Rng base(cfg.seed);
    std::set<std::string> seen;
    ProgramDataset out;

    struct SplitPlan {
        const char* name;
        int size;
        std::vector<TaskBundle>* dest;
    };
    std::vector<SplitPlan> plan = {
        {"train", cfg.train_size, &out.train},
        {"valid", cfg.valid_size, &out.valid},
        {"test", cfg.test_size, &out.test},
    };

    std::uint64_t slot = 0;
    for (const SplitPlan& split : plan) {
        for (int i = 0; i < split.size; ++i, ++slot) {
            const Rng slot_rng(base.child(slot).seed());
            bool placed = false;
            for (int attempt = 0; attempt < cfg.attempt_cap; ++attempt) {
                Rng r = slot_rng.child(static_cast<std::uint64_t>(attempt));
                const std::string source = gen_synthetic_program(r, cfg);
                if (seen.contains(source)) continue;
                std::vector<long long> inputs;
                for (int k = 0; k < cfg.inputs_per_program; ++k) {
                    inputs.push_back(r.uniform(cfg.input_min, cfg.input_max));
                }
                char task_id[32];
                std::snprintf(task_id, sizeof task_id, "%s-%04d", split.name, i);
                TaskBundle bundle = build_bundle(task_id, source, inputs, cfg.limits);
                bool all_ok = true;
                for (const TaskExample& ex : bundle.examples) all_ok = all_ok && ex.output.has_value();
                if (!all_ok || !bundle_fits_budget(bundle, cfg.budget)) continue;
                seen.insert(source);
                split.dest->push_back(std::move(bundle));
                placed = true;
                break;
            }
            if (!placed) {
                throw GenerationExhausted("could not place a unique in-budget program for slot " +
                                          std::to_string(slot));
            }
        }
    }
    return out;
}

namespace {

std::string task_input_text(const TaskBundle& task, const TaskExample& ex) {
    return task.source + "\n\n" + pysub::harness_line("f", ex.inputs);
}

}  // namespace

std::vector<ExampleRecord> task_trace_records(const TaskBundle& task) {
    std::vector<ExampleRecord> records;
    for (std::size_t i = 0; i < task.examples.size(); ++i) {
        const TaskExample& ex = task.examples[i];
        ExampleRecord rec;
        rec.id = task.task_id + "-ex" + std::to_string(i);
        rec.task_id = task.task_id;
        rec.mode = RecordMode::trace;
        rec.input_text = task_input_text(task, ex);
        rec.target_text = ex.trace_text;
        rec.metadata = {{"provenance", to_string(task.provenance)}};
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<ExampleRecord> task_direct_records(const TaskBundle& task) {
    std::vector<ExampleRecord> records;
    for (std::size_t i = 0; i < task.examples.size(); ++i) {
        const TaskExample& ex = task.examples[i];
        if (!ex.output) continue;  // fault runs have no direct answer
        ExampleRecord rec;
        rec.id = task.task_id + "-ex" + std::to_string(i);
        rec.task_id = task.task_id;
        rec.mode = RecordMode::direct;
        rec.input_text = task_input_text(task, ex);
        rec.target_text = encode_value(*ex.output);
        rec.metadata = {{"provenance", to_string(task.provenance)}};
        records.push_back(std::move(rec));
    }
    return records;
}

// ---------------------------------------------------------------------------
// addition dataset
// ---------------------------------------------------------------------------

namespace {

DigitString random_digits(Rng& rng, int length) {
    std::vector<std::uint8_t> digits;
    for (int i = 0; i < length; ++i) {
        const int lo = (i == 0 && length > 1) ? 1 : 0;
        digits.push_back(static_cast<std::uint8_t>(rng.uniform(lo, 9)));
    }
    return DigitString::from_digits(std::move(digits));
}

void fill_addition_split(AdditionSplit& split, Rng rng, int count, int min_digits, int max_digits) {
    for (int i = 0; i < count; ++i) {
        const int len_a = static_cast<int>(rng.uniform(min_digits, max_digits));
        const int len_b = static_cast<int>(rng.uniform(min_digits, max_digits));
        const DigitString a = random_digits(rng, len_a);
        const DigitString b = random_digits(rng, len_b);
        const std::string id = "add-" + split.name + "-" + std::to_string(i);
        nlohmann::json meta = {{"len_a", len_a}, {"len_b", len_b}};

        ExampleRecord sp = render_addition_scratchpad(a, b);
        sp.id = id;
        sp.task_id = id;
        sp.metadata = meta;
        split.scratchpad_records.push_back(std::move(sp));

        ExampleRecord direct = render_addition_direct(a, b);
        direct.id = id;
        direct.task_id = id;
        direct.metadata = meta;
        split.direct_records.push_back(std::move(direct));
    }
}

}  // namespace

std::vector<AdditionSplit> gen_addition_dataset(const AdditionGenConfig& cfg) {
    const Rng base(cfg.seed);
    std::vector<AdditionSplit> splits;

    AdditionSplit train{"train", {}, {}};
    fill_addition_split(train, base.child(0), cfg.train_size, cfg.min_digits, cfg.max_digits);
    splits.push_back(std::move(train));

    AdditionSplit test{"test", {}, {}};
    fill_addition_split(test, base.child(1), cfg.test_size, cfg.min_digits, cfg.max_digits);
    splits.push_back(std::move(test));

    for (std::size_t k = 0; k < cfg.ood_digits.size(); ++k) {
        const int digits = cfg.ood_digits[k];
        AdditionSplit ood{"ood" + std::to_string(digits), {}, {}};
        fill_addition_split(ood, base.child(2 + k), cfg.ood_size, digits, digits);
        splits.push_back(std::move(ood));
    }
    return splits;
}

// ---------------------------------------------------------------------------
// polynomial dataset
// ---------------------------------------------------------------------------

std::vector<PolySplit> gen_polynomial_dataset(const PolyGenConfig& cfg) {
    const Rng base(cfg.seed);
    std::vector<PolySplit> splits;
    struct Plan {
        const char* name;
        int size;
        std::uint64_t stream;
    };
    for (const Plan& plan : {Plan{"train", cfg.train_size, 0}, Plan{"test", cfg.test_size, 1}}) {
        PolySplit split;
        split.name = plan.name;
        Rng rng = base.child(plan.stream);
        for (int i = 0; i < plan.size; ++i) {
            const PolyEvalExample ex = sample_polynomial(rng, cfg.sample, &split.attempts);
            const std::string id = "poly-" + split.name + "-" + std::to_string(i);
            nlohmann::json meta = {{"x", ex.x},
                                   {"total", ex.total.convert_to<long long>()},
                                   {"degree", ex.poly.degree()}};

            ExampleRecord sp = eval_scratchpad(ex.poly, ex.x, cfg.sample.elide_unit_coeffs);
            sp.id = id;
            sp.task_id = id;
            sp.metadata = meta;
            split.scratchpad_records.push_back(std::move(sp));

            ExampleRecord direct = eval_direct(ex.poly, ex.x, cfg.sample.elide_unit_coeffs);
            direct.id = id;
            direct.task_id = id;
            direct.metadata = meta;
            split.direct_records.push_back(std::move(direct));
        }
        splits.push_back(std::move(split));
    }
    return splits;
}

// ---------------------------------------------------------------------------
// single-line transformations
// ---------------------------------------------------------------------------

namespace {

std::string bindings_segment(const char* label,
                             const std::vector<std::pair<std::string, std::string>>& bindings) {
    std::string out = label;
    for (const auto& [name, value] : bindings) {
        out += ' ';
        out += name;
        out += " = ";
        out += value;
        out += ';';
    }
    return out;
}

struct SingleLineSampler {
    Rng& rng;
    const SingleLineGenConfig& cfg;

    Value random_int() { return Value::of_int(rng.uniform(cfg.int_min, cfg.int_max)); }

    Value random_value() {
        const int roll = static_cast<int>(rng.uniform(0, 99));
        if (roll < 60) return random_int();
        if (roll < 85) {
            ValueList items;
            const int len = static_cast<int>(rng.uniform(2, cfg.max_list_len));
            for (int i = 0; i < len; ++i) items.push_back(random_int());
            return Value::of_list(std::move(items));
        }
        std::string s;
        const int len = static_cast<int>(rng.uniform(3, cfg.max_str_len));
        for (int i = 0; i < len; ++i) s += static_cast<char>('a' + rng.uniform(0, 4));
        return Value::of_str(std::move(s));
    }

    Frame random_frame() {
        static const std::string pool = "abcdefghijklmnopqrstuvwxyz";
        const int n = static_cast<int>(rng.uniform(cfg.min_vars, cfg.max_vars));
        std::set<char> names;
        while (static_cast<int>(names.size()) < n) {
            names.insert(pool[static_cast<std::size_t>(rng.uniform(0, 25))]);
        }
        Frame frame("<single-line>");
        for (char c : names) frame.set(std::string(1, c), random_value());
        return frame;
    }

    std::string var_of_kind(const Frame& frame, Value::Kind kind) {
        std::vector<std::string> matches;
        for (const auto& [name, value] : frame.bindings()) {
            if (value.kind() == kind) matches.push_back(name);
        }
        if (matches.empty()) return "";
        return rng.pick(matches);
    }

    std::string any_var(const Frame& frame) {
        return frame.bindings()[static_cast<std::size_t>(
                                    rng.uniform(0, static_cast<std::int64_t>(frame.size()) - 1))]
            .first;
    }

    std::string int_operand(const Frame& frame) {
        const std::string var = var_of_kind(frame, Value::Kind::int_v);
        if (!var.empty() && rng.chance(0.6)) return var;
        return std::to_string(rng.uniform(cfg.int_min, cfg.int_max));
    }

    // One candidate statement; empty string when the form needs a variable
    // kind the frame lacks.
    std::string statement(const Frame& frame) {
        static const char* arith[] = {"+", "-", "*", "//", "%"};
        static const char* augops[] = {"+=", "-=", "*="};
        static const char* cmps[] = {"<", ">", "<=", ">=", "==", "!="};
        const std::string target = any_var(frame);
        switch (rng.uniform(0, 9)) {
            case 0:
                return target + " = " + int_operand(frame) + " " + arith[rng.uniform(0, 4)] + " " +
                       int_operand(frame);
            case 1: {
                const std::string var = var_of_kind(frame, Value::Kind::int_v);
                if (var.empty()) return "";
                return var + " " + augops[rng.uniform(0, 2)] + " " + int_operand(frame);
            }
            case 2: {
                std::string seq = var_of_kind(frame, Value::Kind::list_v);
                if (seq.empty()) seq = var_of_kind(frame, Value::Kind::str_v);
                if (seq.empty()) return "";
                return target + " = " + seq + "[" + int_operand(frame) + "]";
            }
            case 3: {
                std::string seq = var_of_kind(frame, Value::Kind::list_v);
                if (seq.empty()) seq = var_of_kind(frame, Value::Kind::str_v);
                if (seq.empty()) return "";
                return target + " = len(" + seq + ")";
            }
            case 4: {
                const std::string s = var_of_kind(frame, Value::Kind::str_v);
                if (s.empty()) return "";
                return target + " = " + s + " + " + s;
            }
            case 5: {
                const std::string l = var_of_kind(frame, Value::Kind::list_v);
                if (l.empty()) return "";
                return target + " = " + l + " + " + l;
            }
            case 6:
                return target + " = " + any_var(frame);
            case 7:
                return target + " = " + int_operand(frame) + " " + cmps[rng.uniform(0, 5)] + " " +
                       int_operand(frame);
            case 8: {
                const std::string l = var_of_kind(frame, Value::Kind::list_v);
                if (l.empty()) return "";
                return l + "[" + int_operand(frame) + "] = " + int_operand(frame);
            }
            case 9: {
                std::string seq = var_of_kind(frame, Value::Kind::list_v);
                if (seq.empty()) seq = var_of_kind(frame, Value::Kind::str_v);
                if (seq.empty()) return "";
                return target + " = " + seq + " * " + std::to_string(rng.uniform(0, 3));
            }
        }
        return "";
    }
};

}  // namespace

std::string format_single_line(std::vector<std::pair<std::string, std::string>> state_bindings,
                               const std::string& code,
                               std::vector<std::pair<std::string, std::string>> output_bindings) {
    std::sort(state_bindings.begin(), state_bindings.end());
    std::sort(output_bindings.begin(), output_bindings.end());
    return bindings_segment("state:", state_bindings) + " code: " + code + "; " +
           bindings_segment("output:", output_bindings);
}

std::vector<std::pair<std::string, std::string>> repr_bindings(const Frame& frame) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [name, value] : frame.bindings()) {
        out.emplace_back(name, repr_value(value));
    }
    return out;
}

std::vector<ExampleRecord> gen_single_line_dataset(Rng& rng, const SingleLineGenConfig& cfg,
                                                   int n) {
    SingleLineSampler sampler{rng, cfg};
    std::vector<ExampleRecord> records;
    records.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < cfg.attempt_cap && !placed; ++attempt) {
            const Frame frame = sampler.random_frame();
            const std::string code = sampler.statement(frame);
            if (code.empty()) continue;
            const pysub::StepOutcome outcome = pysub::single_line_step(frame, code, cfg.limits);
            if (!outcome.ok()) continue;  // faulting statements are discarded

            auto state_bindings = repr_bindings(frame);
            auto output_bindings = repr_bindings(*outcome.frame);
            std::sort(state_bindings.begin(), state_bindings.end());
            std::sort(output_bindings.begin(), output_bindings.end());

            ExampleRecord rec;
            rec.id = "sl-" + std::to_string(i);
            rec.task_id = rec.id;
            rec.mode = RecordMode::single_line;
            rec.input_text = bindings_segment("state:", state_bindings) + " code: " + code + ";";
            rec.target_text = bindings_segment("output:", output_bindings);
            records.push_back(std::move(rec));
            placed = true;
        }
        if (!placed) {
            throw GenerationExhausted("could not sample a fault-free single-line statement");
        }
    }
    return records;
}

// ---------------------------------------------------------------------------
// augmentation
// ---------------------------------------------------------------------------

namespace {

std::string last_function_name(const pysub::Program& prog) {
    std::string name;
    for (const pysub::StmtPtr& stmt : prog.body) {
        if (const auto* def = stmt->get<pysub::Stmt::FuncDef>()) name = def->name;
    }
    return name;
}

}  // namespace

std::vector<TaskBundle> augment(const std::vector<TaskBundle>& tasks,
                                const std::map<std::string, std::vector<std::string>>& candidates,
                                AugmentMode mode, const Limits& limits,
                                int max_candidates_per_task, AugmentStats* stats) {
    AugmentStats local;
    AugmentStats& st = stats ? *stats : local;
    std::vector<TaskBundle> out;

    for (const TaskBundle& task : tasks) {
        auto it = candidates.find(task.task_id);
        if (it == candidates.end()) continue;
        int considered = 0;
        int minted = 0;
        for (const std::string& source : it->second) {
            if (considered == max_candidates_per_task) {
                st.over_cap += 1;
                continue;
            }
            ++considered;
            ++st.candidates_seen;

            pysub::Program prog;
            std::string fn;
            try {
                prog = pysub::parse_program(source);
                fn = last_function_name(prog);
            } catch (const std::exception&) {
                ++st.unparseable;
                continue;
            }
            if (fn.empty()) {
                ++st.unparseable;  // no function to call
                continue;
            }

            TaskBundle bundle;
            bundle.task_id = task.task_id + "-aug" + std::to_string(minted);
            bundle.source = source;
            bundle.provenance = Provenance::augmented;
            bool any_fault = false;
            for (const TaskExample& orig : task.examples) {
                TaskExample ex;
                ex.inputs = orig.inputs;
                const RunResult run = pysub::run_direct(prog, fn, ex.inputs, limits);
                if (run.ok()) {
                    ex.output = run.value;
                } else {
                    ex.fault = run.fault;
                    any_fault = true;
                }
                ex.trace_text = pysub::render_trace(pysub::trace(prog, fn, ex.inputs, limits));
                bundle.examples.push_back(std::move(ex));
            }
            if (any_fault && mode == AugmentMode::discard_errors) {
                ++st.faulting_discarded;
                continue;
            }
            ++minted;
            ++st.kept;
            out.push_back(std::move(bundle));
        }
    }
    return out;
}

std::string mutate_program(Rng& rng, const std::string& source) {
    std::vector<pysub::Token> tokens;
    try {
        tokens = pysub::tokenize(source);
    } catch (const std::exception&) {
        return source;
    }
    struct Edit {
        int line;
        int col;
        std::string old_text;
        std::string new_text;
    };
    std::vector<Edit> edits;
    static const char* augops[] = {"+=", "-=", "*="};
    for (const pysub::Token& tok : tokens) {
        if (tok.kind == pysub::TokKind::int_lit) {
            const std::string alt = std::to_string(rng.uniform(0, 2));
            if (alt != tok.text) edits.push_back({tok.line, tok.col, tok.text, alt});
        } else if (tok.kind == pysub::TokKind::op) {
            for (const char* op : augops) {
                if (tok.text == op) {
                    const char* alt = augops[rng.uniform(0, 2)];
                    if (tok.text != alt) edits.push_back({tok.line, tok.col, tok.text, alt});
                    break;
                }
            }
        }
    }
    if (edits.empty()) return source;
    const Edit& edit = edits[static_cast<std::size_t>(
        rng.uniform(0, static_cast<std::int64_t>(edits.size()) - 1))];

    const std::vector<std::string> lines = pysub::split_source_lines(source);
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string line = lines[i];
        if (static_cast<int>(i) + 1 == edit.line) {
            line.replace(static_cast<std::size_t>(edit.col) - 1, edit.old_text.size(),
                         edit.new_text);
        }
        out += line;
        if (i + 1 < lines.size()) out += '\n';
    }
    return out;
}

}  // namespace scratchpad
