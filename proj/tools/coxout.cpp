// coxout: classify outer automorphism groups of graph products of finite
// cyclic groups from their labelled defining graphs, build and simplify
// presentations of Out^0 factor images, and machine-check the supporting
// lemmas on random graphs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <coxout/classify.hpp>
#include <coxout/oracle.hpp>
#include <coxout/presentation.hpp>

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw coxout::InputError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::uint64_t seed_or_env(const CLI::Option* opt, std::uint64_t value) {
    if (opt->count() > 0) return value;
    if (const char* env = std::getenv("COXOUT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw coxout::InputError("COXOUT_SEED is not an integer");
        }
    }
    return value;
}

void emit_json(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"outer automorphism classifier for graph products of finite cyclic groups"};
    app.require_subcommand(1);

    std::string input = "-";
    bool as_json = false;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--input,-i", input, "graph file (text or JSON), '-' for stdin");
        cmd->add_flag("--json", as_json, "emit JSON instead of text");
    };

    auto* cmd_classify = app.add_subcommand("classify", "decide finite / virtually abelian / large");
    add_io(cmd_classify);

    auto* cmd_witness = app.add_subcommand("witness", "print the first STIL/FSIL/non-Coxeter SIL");
    add_io(cmd_witness);

    auto* cmd_sils = app.add_subcommand("sils", "list all SILs of the graph");
    add_io(cmd_sils);

    std::string stil_csv;
    std::string kill_csv;
    bool simplify = false;
    auto* cmd_pres = app.add_subcommand("presentation",
                                        "Muehlherr-style presentation of Out^0 or of a STIL "
                                        "factor image");
    add_io(cmd_pres);
    cmd_pres->add_option("--stil", stil_csv,
                         "x1,x2,x3,x4: build the factor-image presentation for this STIL");
    cmd_pres->add_option("--kill", kill_csv, "generators to kill (quotient) before simplifying");
    cmd_pres->add_flag("--simplify", simplify, "apply Tietze simplification and name the form");

    std::string suite;
    int trials = 100;
    std::uint64_t seed = 0;
    int max_vertices = 6;
    int min_vertices = 3;
    double edge_prob = 0.4;
    std::string labels_csv = "2";
    int out_bound = 8;
    auto* cmd_verify = app.add_subcommand("verify", "run a lemma verification suite");
    cmd_verify->add_option("--suite", suite, "suite name")->required();
    cmd_verify->add_option("--trials", trials, "number of admitted random graphs");
    auto* verify_seed = cmd_verify->add_option("--seed", seed, "sampler seed");
    cmd_verify->add_option("--max-vertices", max_vertices, "largest sampled graph");
    cmd_verify->add_option("--min-vertices", min_vertices, "smallest sampled graph");
    cmd_verify->add_option("--edge-prob", edge_prob, "edge probability");
    cmd_verify->add_option("--labels", labels_csv, "comma list of vertex orders to sample");
    cmd_verify->add_option("--out-bound", out_bound, "conjugator-length bound for Out equality");
    cmd_verify->add_flag("--json", as_json, "emit JSON instead of text");

    auto* cmd_random = app.add_subcommand("random-graph", "sample a labelled graph");
    auto* random_seed = cmd_random->add_option("--seed", seed, "sampler seed");
    cmd_random->add_option("--max-vertices", max_vertices, "largest sampled graph");
    cmd_random->add_option("--min-vertices", min_vertices, "smallest sampled graph");
    cmd_random->add_option("--edge-prob", edge_prob, "edge probability");
    cmd_random->add_option("--labels", labels_csv, "comma list of vertex orders to sample");
    cmd_random->add_flag("--json", as_json, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cmd_classify->parsed()) {
            const auto g = coxout::parse_graph(read_input(input));
            const auto c = coxout::classify(g);
            if (as_json) {
                emit_json(coxout::to_json(c));
            } else {
                std::cout << coxout::verdict_name(c.verdict) << "\n";
                if (c.witness) std::cout << "witness: " << coxout::describe(*c.witness) << "\n";
                for (const auto& line : c.justification) std::cout << "  " << line << "\n";
            }
        } else if (cmd_witness->parsed()) {
            const auto g = coxout::parse_graph(read_input(input));
            const auto w = coxout::find_witness(g);
            if (as_json) {
                emit_json(w ? coxout::to_json(*w) : nlohmann::json(nullptr));
            } else {
                std::cout << (w ? coxout::describe(*w) : std::string("none")) << "\n";
            }
        } else if (cmd_sils->parsed()) {
            const auto g = coxout::parse_graph(read_input(input));
            const auto sils = coxout::enumerate_sils(g);
            if (as_json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& s : sils) arr.push_back(coxout::to_json(s));
                emit_json(arr);
            } else {
                for (const auto& s : sils) std::cout << coxout::describe(s) << "\n";
            }
        } else if (cmd_pres->parsed()) {
            const auto g = coxout::parse_graph(read_input(input));
            coxout::Presentation p;
            if (!stil_csv.empty()) {
                const auto vs = split_csv(stil_csv);
                if (vs.size() != 4)
                    throw coxout::InputError("--stil needs exactly four vertices x1,x2,x3,x4");
                const auto w = coxout::is_stil(g, vs[0], vs[1], vs[2], vs[3]);
                if (!w)
                    throw coxout::InputError("--stil: (" + stil_csv + ") is not a STIL of the graph");
                p = coxout::factor_image_presentation(g, *w);
            } else {
                p = coxout::muehlherr_out0(g);
            }
            if (!kill_csv.empty()) p = coxout::quotient_by(p, split_csv(kill_csv));
            std::string form;
            if (simplify) {
                const auto tag = coxout::recognize_form(p);
                p = tag.normalized;
                form = coxout::form_name(tag.kind);
            }
            if (as_json) {
                auto j = coxout::to_json(p);
                if (simplify) j["form"] = form;
                emit_json(j);
            } else {
                std::cout << coxout::presentation_to_text(p);
                if (simplify) std::cout << "form: " << form << "\n";
            }
        } else if (cmd_verify->parsed()) {
            coxout::GraphSampler s;
            s.min_vertices = min_vertices;
            s.max_vertices = max_vertices;
            s.edge_prob = edge_prob;
            s.seed = seed_or_env(verify_seed, seed);
            s.label_weights.clear();
            for (const auto& l : split_csv(labels_csv))
                s.label_weights.emplace_back(std::stoll(l), 1.0);
            const auto rep = coxout::run_suite(suite, s, trials, out_bound);
            if (as_json) {
                emit_json(coxout::to_json(rep));
            } else {
                std::cout << coxout::report_table(rep);
                for (const auto& f : rep.failures)
                    std::cout << "FAILURE " << f.tuple << ": " << f.detail << "\n";
                for (const auto& note : rep.inconclusive_notes)
                    std::cout << "INCONCLUSIVE " << note << "\n";
            }
            if (!rep.failures.empty()) return 2;
        } else if (cmd_random->parsed()) {
            coxout::GraphSampler s;
            s.min_vertices = min_vertices;
            s.max_vertices = max_vertices;
            s.edge_prob = edge_prob;
            s.seed = seed_or_env(random_seed, seed);
            s.label_weights.clear();
            for (const auto& l : split_csv(labels_csv))
                s.label_weights.emplace_back(std::stoll(l), 1.0);
            const auto g = coxout::sample_graph(s);
            if (as_json)
                emit_json(coxout::graph_to_json(g));
            else
                std::cout << coxout::graph_to_text(g);
        }
    } catch (const coxout::LemmaViolation& e) {
        std::cerr << "lemma violation (this is a bug witness): " << e.what() << "\n";
        return 2;
    } catch (const coxout::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
