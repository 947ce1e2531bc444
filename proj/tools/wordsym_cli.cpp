#include "wordsym/analysis.hpp"
#include "wordsym/errors.hpp"
#include "wordsym/rauzy.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <string>

namespace {

using namespace wordsym;

void emit(const AnalysisConfig& cfg, const std::string& content) {
    if (cfg.out_path.empty())
        std::cout << content;
    else
        write_text_file(cfg.out_path, content);
}

void add_common(CLI::App* cmd, AnalysisConfig& cfg, std::string& mode) {
    cmd->add_option("--word", cfg.word_name, "built-in corpus word (example, fibonacci, thue_morse)");
    cmd->add_option("--morphism", cfg.morphism_path, "morphism file, one '<letter> -> <image>' rule per line");
    cmd->add_option("--group", cfg.group_path, "symmetry group file, one generator per line");
    cmd->add_option("--seed", cfg.seed_letter, "seed letter for the fixed point");
    cmd->add_option("--n-max", cfg.n_max, "largest factor length analyzed")->capture_default_str();
    cmd->add_option("--mode", mode, "arithmetic mode: exact or approx")->capture_default_str();
    cmd->add_option("--tolerance", cfg.tolerance, "approx-mode comparison tolerance");
    cmd->add_option("--prefix-floor", cfg.prefix_floor, "minimum prefix length for empirical checks")
        ->capture_default_str();
    cmd->add_option("--format", cfg.format, "output format: json or csv")->capture_default_str();
    cmd->add_option("--out", cfg.out_path, "output path (default: stdout)");
}

void finish_config(AnalysisConfig& cfg, const std::string& mode) {
    if (mode == "exact")
        cfg.mode = FrequencyMode::exact;
    else if (mode == "approx")
        cfg.mode = FrequencyMode::approx;
    else
        throw ParseError("unknown mode '" + mode + "'");
    if (cfg.format != "json" && cfg.format != "csv")
        throw ParseError("unknown format '" + cfg.format + "'");
}

int run_analyze(AnalysisConfig cfg) {
    AnalysisSession session(cfg);
    std::string content = cfg.format == "csv" ? session.report_csv(1, cfg.n_max - 1)
                                              : session.report_json(1, cfg.n_max - 1);
    emit(cfg, content);
    for (int n = 1; n <= cfg.n_max - 1; ++n)
        if (!session.report(n).holds()) return 4;
    return 0;
}

int run_graph(AnalysisConfig cfg, int n, bool reduced, bool labels) {
    AnalysisSession session(cfg);
    RauzyGraph g = labels ? build_rauzy(session.language(), n, session.engine())
                          : build_rauzy(session.language(), n);
    std::string dot;
    if (reduced) {
        ReducedRauzyGraph rg = labels ? reduce(g, session.language(), session.engine())
                                      : reduce(g, session.language());
        dot = export_dot(rg, session.morphism().alphabet(), labels);
    } else {
        dot = export_dot(g, session.morphism().alphabet(), labels);
    }
    emit(cfg, dot);
    return 0;
}

int run_freqs(AnalysisConfig cfg, int n) {
    AnalysisSession session(cfg);
    emit(cfg, session.freq_table(n));
    return 0;
}

int run_verify(AnalysisConfig cfg) {
    AnalysisSession session(cfg);
    auto verdicts = session.verify();
    bool all_pass = true;
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : verdicts) {
            nlohmann::json j;
            j["check"] = v.check;
            j["pass"] = v.pass;
            j["detail"] = v.detail;
            arr.push_back(std::move(j));
            all_pass = all_pass && v.pass;
        }
        emit(cfg, arr.dump(2) + "\n");
    } else {
        std::string text;
        for (const auto& v : verdicts) {
            text += (v.pass ? "PASS " : "FAIL ") + v.check;
            if (!v.detail.empty()) text += " (" + v.detail + ")";
            text += "\n";
            all_pass = all_pass && v.pass;
        }
        emit(cfg, text);
    }
    return all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"factor frequencies, symmetries, and Rauzy graphs of substitution fixed points"};
    app.require_subcommand(1);

    AnalysisConfig cfg;
    std::string mode = "exact";
    int graph_n = 1;
    bool reduced = false;
    bool no_labels = false;
    int freq_n = 1;

    CLI::App* analyze = app.add_subcommand("analyze", "per-order bound report");
    add_common(analyze, cfg, mode);

    CLI::App* graph = app.add_subcommand("graph", "export a Rauzy graph as DOT");
    add_common(graph, cfg, mode);
    graph->add_option("--n", graph_n, "graph order")->required();
    graph->add_flag("--reduced", reduced, "export the reduced graph");
    graph->add_flag("--no-labels", no_labels, "omit frequency labels");

    CLI::App* freqs = app.add_subcommand("freqs", "frequency table for one length");
    add_common(freqs, cfg, mode);
    freqs->add_option("--n", freq_n, "factor length")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the full invariant battery");
    add_common(verify, cfg, mode);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        finish_config(cfg, mode);
        if (analyze->parsed()) return run_analyze(std::move(cfg));
        if (graph->parsed()) return run_graph(std::move(cfg), graph_n, reduced, !no_labels);
        if (freqs->parsed()) return run_freqs(std::move(cfg), freq_n);
        if (verify->parsed()) return run_verify(std::move(cfg));
        return 2;
    } catch (const wordsym::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wordsym::HypothesisError& e) {
        std::cerr << "hypothesis error: " << e.what() << "\n";
        return 3;
    } catch (const wordsym::InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
