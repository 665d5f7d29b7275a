// tj — token jumping solver CLI.
//
// Exit status contract (scripts depend on it):
//   0  YES / valid / success
//   1  NO / invalid (a determinate negative answer)
//   2  usage or parse error
//   3  resource exhaustion (configuration search budget)

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tokenjump/detour.hpp"
#include "tokenjump/families.hpp"
#include "tokenjump/io.hpp"
#include "tokenjump/oracle.hpp"
#include "tokenjump/solver.hpp"
#include "tokenjump/witness.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct CommonFlags {
    std::string mode = "planar";
    int t = 0;  // 0 = take t from the instance file
    std::string format = "text";
    std::uint64_t budget = 50'000'000;
    bool skip_check = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_budget = true) {
    cmd->add_option("--mode", flags.mode, "planar or general")
        ->check(CLI::IsMember({"planar", "general"}));
    cmd->add_option("--t", flags.t, "forbiddance parameter override (general mode)");
    cmd->add_option("--format", flags.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_budget)
        cmd->add_option("--budget", flags.budget, "configuration search node budget");
    cmd->add_flag("--skip-check", flags.skip_check,
                  "skip the forbiddance check (unsafe; for pre-validated corpora)");
}

tj::Instance load(const std::string& path, const CommonFlags& flags) {
    tj::ReadOptions opts;
    opts.mode = tj::mode_from_name(flags.mode);
    if (flags.t > 0) opts.t_override = flags.t;
    opts.check_forbidden = !flags.skip_check;
    return tj::read_instance_file(path, opts);
}

bool json_output(const CommonFlags& flags) { return flags.format == "json"; }

void print_sequence_text(const tj::ReconfigSequence& seq, std::ostream& out) {
    out << "length " << seq.length() << "\n";
    for (const tj::Move& mv : seq.moves) out << mv.from << " -> " << mv.to << "\n";
}

int run_decide(const std::string& path, const CommonFlags& flags) {
    tj::Instance inst = load(path, flags);
    tj::SolveOptions opts;
    opts.oracle_node_budget = flags.budget;
    tj::SolveOutcome outcome = tj::solve(inst, opts);

    if (outcome.answer == tj::Answer::yes) {
        // never report YES without a verified sequence
        if (!outcome.sequence || !tj::verify_sequence(inst, *outcome.sequence).ok)
            throw std::logic_error("solver produced an unverified YES");
    }
    if (json_output(flags)) {
        std::cout << tj::outcome_to_json(outcome) << "\n";
    } else {
        std::cout << tj::answer_name(outcome.answer) << " (decided at "
                  << tj::decided_at_name(outcome.decided_at) << ")\n";
        if (outcome.sequence) print_sequence_text(*outcome.sequence, std::cout);
        if (outcome.kernel)
            std::cout << "kernel order " << outcome.kernel->order() << " ("
                      << outcome.deleted.size() << " vertices deleted)\n";
    }
    return outcome.answer == tj::Answer::yes ? kExitYes : kExitNo;
}

int run_shortest(const std::string& path, const CommonFlags& flags, bool decide_only) {
    tj::Instance inst = load(path, flags);
    tj::OracleOptions opts;
    opts.node_budget = flags.budget;
    auto seq = tj::shortest_sequence(inst.graph, inst.start, inst.target, opts);
    if (seq && !tj::verify_sequence(inst, *seq).ok)
        throw std::logic_error("oracle produced an unverified sequence");

    if (json_output(flags)) {
        nlohmann::json doc;
        doc["reachable"] = seq.has_value();
        if (seq && !decide_only) {
            doc["length"] = seq->length();
            doc["sequence"] = nlohmann::json::parse(tj::sequence_to_json(*seq));
        }
        std::cout << doc.dump() << "\n";
    } else if (!seq) {
        std::cout << "unreachable\n";
    } else if (decide_only) {
        std::cout << "reachable\n";
    } else {
        print_sequence_text(*seq, std::cout);
    }
    return seq ? kExitYes : kExitNo;
}

int run_verify(const std::string& inst_path, const std::string& seq_path,
               const CommonFlags& flags) {
    tj::Instance inst = load(inst_path, flags);
    std::ifstream in(seq_path);
    if (!in) throw tj::input_error("cannot open " + seq_path);
    std::stringstream buf;
    buf << in.rdbuf();
    tj::ReconfigSequence seq = tj::sequence_from_json(buf.str());

    tj::VerifyReport report = tj::verify_sequence(inst, seq);
    if (json_output(flags)) {
        nlohmann::json doc;
        doc["valid"] = report.ok;
        if (!report.ok) {
            doc["index"] = report.index;
            doc["violation"] = std::string(tj::violation_name(*report.kind));
            doc["detail"] = report.detail;
        }
        std::cout << doc.dump() << "\n";
    } else if (report.ok) {
        std::cout << "valid (" << seq.length() << " moves)\n";
    } else {
        std::cout << "invalid at move " << report.index << ": "
                  << tj::violation_name(*report.kind) << " (" << report.detail << ")\n";
    }
    return report.ok ? kExitYes : kExitNo;
}

int run_kernel(const std::string& path, const CommonFlags& flags) {
    tj::Instance inst = load(path, flags);
    tj::KernelizeOutcome ko = tj::kernelize(inst);
    if (json_output(flags)) {
        nlohmann::json doc;
        doc["thresholds"] = {{"alpha", ko.thresholds.alpha},
                             {"beta", ko.thresholds.beta},
                             {"mode", std::string(tj::mode_name(ko.thresholds.mode))},
                             {"t", ko.thresholds.t}};
        if (ko.early) {
            doc["decided_at"] = std::string(tj::decided_at_name(ko.early->decided_at));
            doc["answer"] = std::string(tj::answer_name(ko.early->answer));
        } else {
            doc["kernel"] = {{"order", ko.kernel.order()}, {"vertices", ko.kernel.vertices()}};
            doc["deleted"] = ko.deleted;
            doc["bound"] = tj::kernel_size_bound(inst.k(), inst.mode, inst.t);
        }
        std::cout << doc.dump() << "\n";
    } else if (ko.early) {
        std::cout << "decided " << tj::answer_name(ko.early->answer) << " at "
                  << tj::decided_at_name(ko.early->decided_at) << "; no kernel produced\n";
    } else {
        std::cout << "kernel order " << ko.kernel.order() << ", " << ko.deleted.size()
                  << " vertices deleted, bound "
                  << tj::kernel_size_bound(inst.k(), inst.mode, inst.t) << "\n";
    }
    return kExitYes;
}

int run_check_forbidden(const std::string& path, const CommonFlags& flags) {
    // load without the up-front check; this command IS the check
    CommonFlags local = flags;
    local.skip_check = true;
    tj::Instance inst = load(path, local);
    const int t = inst.forbiddance_t();
    auto witness = tj::find_k3t_witness(inst.graph, t);

    if (json_output(flags)) {
        nlohmann::json doc;
        doc["t"] = t;
        doc["forbidden"] = !witness.has_value();
        if (witness) {
            doc["witness"] = {{"left", std::vector<int>(witness->left.begin(), witness->left.end())},
                              {"right", witness->right}};
        }
        std::cout << doc.dump() << "\n";
    } else if (!witness) {
        std::cout << "K_{3," << t << "}-forbidden\n";
    } else {
        std::cout << "contains K_{3," << t << "}: left";
        for (tj::Vertex v : witness->left) std::cout << " " << v;
        std::cout << ", right";
        for (tj::Vertex v : witness->right) std::cout << " " << v;
        std::cout << "\n";
    }
    return witness ? kExitNo : kExitYes;
}

int run_gen(const std::string& spec_text, const std::string& out_path) {
    std::ostringstream body;
    if (spec_text.rfind("family=detour", 0) == 0) {
        auto kv = tj::parse_kv_spec(spec_text);
        tj::DetourSearch search;
        if (auto it = kv.find("max-n"); it != kv.end()) search.max_n = std::stoi(it->second);
        if (auto it = kv.find("k"); it != kv.end()) search.k = std::stoi(it->second);
        if (auto it = kv.find("seed"); it != kv.end()) search.seed = std::stoull(it->second);
        auto found = tj::find_detour_instance(search);
        if (!found) {
            std::cerr << "no detour instance found within the trial budget\n";
            return kExitNo;
        }
        body << "# detour: shortest=" << found->shortest_len
             << " lower-bound=" << found->lower_bound << " frozen="
             << (found->frozen_reachable ? std::to_string(found->frozen_len) : "unreachable")
             << "\n";
        tj::write_instance(found->instance, body);
    } else {
        tj::Instance inst = tj::generate(tj::parse_family_spec(spec_text));
        tj::write_instance(inst, body);
    }

    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw tj::input_error("cannot open " + out_path + " for writing");
        out << body.str();
    }
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"token jumping reconfiguration solver"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string inst_path, seq_path, spec_text, out_path;

    auto* decide = app.add_subcommand("decide", "run the fixed-parameter solver");
    decide->add_option("instance", inst_path, "instance file")->required();
    add_common(decide, flags);

    auto* shortest = app.add_subcommand("shortest", "shortest sequence by configuration search");
    shortest->add_option("instance", inst_path, "instance file")->required();
    add_common(shortest, flags);

    auto* oracle = app.add_subcommand("oracle", "reachability by configuration search");
    oracle->add_option("instance", inst_path, "instance file")->required();
    add_common(oracle, flags);

    auto* verify = app.add_subcommand("verify", "replay a sequence against an instance");
    verify->add_option("instance", inst_path, "instance file")->required();
    verify->add_option("sequence", seq_path, "sequence JSON file")->required();
    add_common(verify, flags, /*with_budget=*/false);

    auto* kernel = app.add_subcommand("kernel", "kernelize (steps 1-3) and report");
    kernel->add_option("instance", inst_path, "instance file")->required();
    add_common(kernel, flags, /*with_budget=*/false);

    auto* check = app.add_subcommand("check-forbidden", "test K_{3,t}-forbiddance");
    check->add_option("instance", inst_path, "instance file")->required();
    add_common(check, flags, /*with_budget=*/false);

    auto* gen = app.add_subcommand("gen", "generate an instance from a family spec");
    gen->add_option("spec", spec_text, "e.g. family=grid,rows=4,cols=4,k=3,seed=7")->required();
    gen->add_option("-o,--output", out_path, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitYes : kExitUsage;
    }

    try {
        if (decide->parsed()) return run_decide(inst_path, flags);
        if (shortest->parsed()) return run_shortest(inst_path, flags, false);
        if (oracle->parsed()) return run_shortest(inst_path, flags, true);
        if (verify->parsed()) return run_verify(inst_path, seq_path, flags);
        if (kernel->parsed()) return run_kernel(inst_path, flags);
        if (check->parsed()) return run_check_forbidden(inst_path, flags);
        if (gen->parsed()) return run_gen(spec_text, out_path);
    } catch (const tj::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
