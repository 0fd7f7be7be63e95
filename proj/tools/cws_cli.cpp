// Command-line front end over the C API. Reads JSON documents from a file
// argument or stdin, writes JSON to --output or stdout. Exit codes: 0 on
// success, 1 on domain errors, 2 on malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "condorcet/cws.h"

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        std::exit(2);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot open " << path << " for writing\n";
        std::exit(2);
    }
    out << payload << "\n";
}

// cws_last_error messages are "Code: detail".
int emit_error(cws_status status, const std::string& output_path) {
    std::string message = cws_last_error();
    std::string code = "Error";
    std::string detail = message;
    auto sep = message.find(": ");
    if (sep != std::string::npos) {
        code = message.substr(0, sep);
        detail = message.substr(sep + 2);
    }
    write_output(output_path, json{{"error", code}, {"detail", detail}}.dump());
    return status == CWS_ERR_PARSE ? 2 : 1;
}

struct ProfileHandle {
    cws_profile* ptr = nullptr;
    ~ProfileHandle() { cws_profile_free(ptr); }
};

struct ElectionHandle {
    cws_election* ptr = nullptr;
    ~ElectionHandle() { cws_election_free(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { cws_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

int finish(cws_status status, const StringHandle& out, const std::string& output_path) {
    if (status != CWS_OK) return emit_error(status, output_path);
    write_output(output_path, out.str());
    return 0;
}

json generator_json(const std::string& generator, int m, int n, int space_dim,
                    const std::string& box, const std::string& norm) {
    if (generator == "ic" || generator == "impartial-culture")
        return json{{"type", "impartial-culture"}, {"m", m}, {"n", n}};
    if (generator == "spatial") {
        json g{{"type", "spatial"}, {"m", m}, {"n", n}, {"dimension", space_dim}, {"norm", norm}};
        try {
            g["box"] = std::stoll(box);
        } catch (...) {
            g["box"] = box;
        }
        return g;
    }
    std::cerr << "unknown generator: " << generator << " (use ic or spatial)\n";
    std::exit(2);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Condorcet winning sets in spatial elections"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    int threads = 1;
    if (const char* env = std::getenv("CWS_THREADS")) threads = std::atoi(env);
    app.add_option("--threads", threads, "worker threads for experiment commands");

    auto add_io = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input) cmd->add_option("input", input, "input JSON file (default stdin)");
        cmd->add_option("-o,--output", output, "output file (default stdout)");
    };

    std::string norm;
    int k_max = 0;
    std::string set_spec;
    bool dot = false;
    std::string construction = "candidate-simplex";
    std::string generator = "ic";
    int gen_m = 3, gen_n = 3, space_dim = 2;
    std::string box = "100";
    std::string gen_norm = "1";
    int instances = 100;
    uint64_t seed = 0;
    int target = 4;
    std::string config_path;

    auto* derive = app.add_subcommand("derive", "derive a preference profile from a spatial election");
    add_io(derive);
    derive->add_option("--norm", norm, "p-norm: a rational >= 1, or inf");

    auto* dim = app.add_subcommand("dim", "exact Condorcet dimension of a profile");
    add_io(dim);
    dim->add_option("--k-max", k_max, "search bound (default ceil(log2 m))");

    auto* check = app.add_subcommand("check-set", "verify a candidate set as a Condorcet winning set");
    add_io(check);
    check->add_option("--set", set_spec, "comma-separated candidate ids")->required();

    auto* tournament = app.add_subcommand("tournament", "majority digraph of a profile");
    add_io(tournament);
    tournament->add_flag("--dot", dot, "emit DOT instead of JSON");

    auto* dominate = app.add_subcommand("dominate", "greedy logarithmic dominating set");
    add_io(dominate);

    auto* planar = app.add_subcommand("planar-set", "size <= 3 winning set for a planar election");
    add_io(planar);
    planar->add_option("--norm", norm, "1 or inf");

    auto* embed = app.add_subcommand("embed", "embed a profile into a spatial election");
    add_io(embed);
    embed->add_option("--construction", construction, "candidate-simplex or voter-simplex");
    embed->add_option("--norm", norm, "p-norm: a rational >= 1, or inf")->required();

    auto* lemma4 = app.add_subcommand("lemma4", "the fixed planar lower-bound instance");
    add_io(lemma4, false);

    auto add_experiment_flags = [&](CLI::App* cmd) {
        add_io(cmd, false);
        cmd->add_option("--config", config_path, "config JSON file overriding the flags");
        cmd->add_option("--generator", generator, "ic or spatial");
        cmd->add_option("--m", gen_m, "candidate count");
        cmd->add_option("--n", gen_n, "voter count");
        cmd->add_option("--space-dim", space_dim, "spatial dimension D");
        cmd->add_option("--box", box, "coordinate bound for spatial generation");
        cmd->add_option("--norm", gen_norm, "norm for spatial generation");
        cmd->add_option("--instances", instances, "instance budget");
        cmd->add_option("--seed", seed, "rng seed");
        cmd->add_option("--k-max", k_max, "dimension search bound (default ceil(log2 m))");
    };

    auto* survey = app.add_subcommand("survey", "dimension survey over random elections");
    add_experiment_flags(survey);

    auto* hunt = app.add_subcommand("hunt", "search for a high-Condorcet-dimension witness");
    add_experiment_flags(hunt);
    hunt->add_option("--target", target, "dimension threshold (default 4)");

    CLI11_PARSE(app, argc, argv);

    auto load_profile = [&](ProfileHandle& h) -> int {
        cws_status s = cws_profile_from_json(read_input(input).c_str(), &h.ptr);
        return s == CWS_OK ? -1 : emit_error(s, output);
    };
    auto load_election = [&](ElectionHandle& h) -> int {
        cws_status s = cws_election_from_json(read_input(input).c_str(), &h.ptr);
        return s == CWS_OK ? -1 : emit_error(s, output);
    };
    auto config_doc = [&]() -> std::string {
        if (!config_path.empty()) return read_input(config_path);
        return json{{"generator", generator_json(generator, gen_m, gen_n, space_dim, box, gen_norm)},
                    {"instances", instances},
                    {"seed", seed},
                    {"k_max", k_max}}
            .dump();
    };

    if (derive->parsed()) {
        ElectionHandle e;
        if (int rc = load_election(e); rc >= 0) return rc;
        StringHandle out;
        return finish(cws_derive_profile(e.ptr, norm.c_str(), &out.ptr), out, output);
    }
    if (dim->parsed()) {
        ProfileHandle p;
        if (int rc = load_profile(p); rc >= 0) return rc;
        StringHandle out;
        return finish(cws_condorcet_dimension(p.ptr, k_max, &out.ptr), out, output);
    }
    if (check->parsed()) {
        ProfileHandle p;
        if (int rc = load_profile(p); rc >= 0) return rc;
        std::vector<int> ids;
        std::stringstream ss(set_spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                ids.push_back(std::stoi(tok));
            } catch (...) {
                std::cerr << "bad candidate id: " << tok << "\n";
                return 2;
            }
        }
        StringHandle out;
        return finish(cws_check_winning_set(p.ptr, ids.data(), ids.size(), &out.ptr), out, output);
    }
    if (tournament->parsed()) {
        ProfileHandle p;
        if (int rc = load_profile(p); rc >= 0) return rc;
        StringHandle out;
        cws_status s = dot ? cws_majority_digraph_dot(p.ptr, &out.ptr)
                           : cws_majority_digraph_json(p.ptr, &out.ptr);
        if (s != CWS_OK) return emit_error(s, output);
        write_output(output, out.str());
        return 0;
    }
    if (dominate->parsed()) {
        ProfileHandle p;
        if (int rc = load_profile(p); rc >= 0) return rc;
        StringHandle out;
        return finish(cws_greedy_dominating_set(p.ptr, &out.ptr), out, output);
    }
    if (planar->parsed()) {
        ElectionHandle e;
        if (int rc = load_election(e); rc >= 0) return rc;
        StringHandle out;
        return finish(cws_planar_winning_set(e.ptr, norm.c_str(), &out.ptr), out, output);
    }
    if (embed->parsed()) {
        ProfileHandle p;
        if (int rc = load_profile(p); rc >= 0) return rc;
        StringHandle out;
        return finish(cws_embed(p.ptr, construction.c_str(), norm.c_str(), &out.ptr), out, output);
    }
    if (lemma4->parsed()) {
        StringHandle out;
        return finish(cws_lemma4_instance(&out.ptr), out, output);
    }
    if (survey->parsed()) {
        StringHandle out;
        return finish(cws_run_survey(config_doc().c_str(), threads, &out.ptr), out, output);
    }
    if (hunt->parsed()) {
        StringHandle out;
        return finish(cws_hunt(config_doc().c_str(), target, &out.ptr), out, output);
    }
    return 2;
}
