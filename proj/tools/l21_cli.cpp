#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "l21/generators.hpp"
#include "l21/graph.hpp"
#include "l21/io.hpp"
#include "l21/labeler.hpp"
#include "l21/selftest.hpp"
#include "l21/solver.hpp"

namespace {

struct GraphInput {
    std::string graph6;
    std::string file;
    bool from_stdin = false;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("--graph6", in.graph6, "graph6 string");
    cmd->add_option("-f,--file", in.file, "input file (edge list or graph6)");
    cmd->add_flag_callback("--stdin", [&in]() { in.from_stdin = true; }, "read from standard input");
    cmd->allow_extras();  // accept a bare "-" positional
}

bool wants_stdin(const CLI::App* cmd, const GraphInput& in) {
    if (in.from_stdin) return true;
    for (const auto& e : cmd->remaining())
        if (e == "-") return true;
    return in.graph6.empty() && in.file.empty();
}

std::string slurp(std::istream& is) {
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

/// Edge list if the first meaningful line holds two integers, otherwise
/// graph6; JSON objects are searched for a "graph6" member.
l21::Graph graph_from_text(const std::string& text) {
    size_t i = 0;
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '#')) {
        if (text[i] == '#')
            while (i < text.size() && text[i] != '\n') ++i;
        else
            ++i;
    }
    if (i < text.size() && text[i] == '{') {
        auto j = nlohmann::json::parse(text);
        if (!j.contains("graph6")) throw l21::ParseError("JSON input lacks a graph6 member");
        return l21::graph6_decode(j["graph6"].get<std::string>());
    }
    size_t eol = text.find('\n', i);
    std::string first = text.substr(i, eol == std::string::npos ? std::string::npos : eol - i);
    if (first.find(' ') != std::string::npos || first.find('\t') != std::string::npos)
        return l21::parse_edge_list(text);
    while (!first.empty() && (first.back() == '\r' || first.back() == ' ')) first.pop_back();
    return l21::graph6_decode(first);
}

l21::Graph read_graph(const CLI::App* cmd, const GraphInput& in) {
    if (!in.graph6.empty()) return l21::graph6_decode(in.graph6);
    if (!in.file.empty()) {
        std::ifstream fs(in.file);
        if (!fs) throw l21::ParseError("cannot open file: " + in.file);
        return graph_from_text(slurp(fs));
    }
    if (wants_stdin(cmd, in)) return graph_from_text(slurp(std::cin));
    throw l21::ParseError("no graph input given");
}

l21::Mode parse_mode(const std::string& s) {
    if (s == "paper") return l21::Mode::PaperCases;
    if (s == "search") return l21::Mode::CertifiedSearch;
    if (s == "hybrid") return l21::Mode::Hybrid;
    throw CLI::ValidationError("--strategy", "must be paper, search or hybrid");
}

int run(int argc, char** argv) {
    CLI::App app{"L(2,1)-labelings of outerplanar graphs with maximum degree 3"};
    app.require_subcommand(1);

    GraphInput label_in, lambda_in, verify_in;
    std::string format = "json";
    std::string strategy = "hybrid";
    long long budget = 1000000000LL;
    int kopt = -1;

    auto* label = app.add_subcommand("label", "produce a span-<=6 labeling");
    add_graph_options(label, label_in);
    label->add_option("--format", format, "json, dot or text");
    label->add_option("--strategy", strategy, "paper, search or hybrid");

    auto* lambda = app.add_subcommand("lambda", "exact minimum span");
    add_graph_options(lambda, lambda_in);
    lambda->add_option("--budget", budget, "search node budget");
    lambda->add_option("--k", kopt, "decide k-feasibility instead");
    lambda->add_option("--format", format, "json or text");

    auto* verify = app.add_subcommand("verify", "check a labeling");
    add_graph_options(verify, verify_in);
    std::string labels_path;
    verify->add_option("--labels", labels_path, "labeling JSON file (default: stdin JSON)");

    auto* gen = app.add_subcommand("gen", "generate a graph family member");
    std::string family;
    int param = 0;
    std::uint64_t seed = 0;
    gen->add_option("family", family, "gl, cycle, path or random")->required();
    gen->add_option("param", param, "family parameter")->required();
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--format", format, "edgelist, graph6 or dot");

    auto* enumerate = app.add_subcommand("enumerate", "all 2-connected members on n vertices");
    int en = 0;
    enumerate->add_option("n", en, "vertex count")->required();

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    bool quick = false;
    selftest->add_flag("--quick", quick, "reduced ranges");

    CLI11_PARSE(app, argc, argv);

    if (label->parsed()) {
        l21::Graph g = read_graph(label, label_in);
        l21::Strategy strat;
        strat.mode = parse_mode(strategy);
        l21::Labeling f = l21::label_graph(g, strat);
        if (format == "json") {
            auto j = nlohmann::json::parse(l21::labeling_to_json(f));
            j["graph6"] = l21::graph6_encode(g);
            std::cout << j.dump() << "\n";
        } else if (format == "dot") {
            std::cout << l21::to_dot(g, &f);
        } else {
            for (int v = 0; v < g.n(); ++v) std::cout << v << " " << f.labels[v] << "\n";
        }
        return 0;
    }
    if (lambda->parsed()) {
        l21::Graph g = read_graph(lambda, lambda_in);
        if (kopt >= 0) {
            auto r = l21::k_feasible(g, kopt, 2, 1, budget);
            std::cout << (r.feasible() ? "feasible" : "infeasible") << "\n";
            return 0;
        }
        auto r = l21::lambda_exact(g, 2, 1, budget);
        if (format == "json") {
            nlohmann::json j;
            j["lambda"] = r.lambda;
            j["witness"] = nlohmann::json::parse(l21::labeling_to_json(r.witness));
            if (r.has_certificate) {
                j["certificate"]["k_tested"] = r.certificate.k_tested;
                j["certificate"]["nodes_explored"] = r.certificate.nodes_explored;
            }
            std::cout << j.dump() << "\n";
        } else {
            std::cout << r.lambda << "\n";
        }
        return 0;
    }
    if (verify->parsed()) {
        std::string text;
        if (!labels_path.empty()) {
            std::ifstream fs(labels_path);
            if (!fs) throw l21::ParseError("cannot open file: " + labels_path);
            text = slurp(fs);
        } else {
            text = slurp(std::cin);
        }
        l21::Labeling f = l21::labeling_from_json(text);
        l21::Graph g = [&]() {
            if (!verify_in.graph6.empty() || !verify_in.file.empty())
                return read_graph(verify, verify_in);
            return graph_from_text(text);  // combined JSON from `label`
        }();
        auto violations = l21::verify(g, f);
        for (const auto& v : violations)
            std::cout << "violation: vertices " << v.u << "," << v.v << " at distance " << v.distance
                      << " labeled " << v.label_u << "," << v.label_v << "\n";
        if (violations.empty()) {
            std::cout << "ok: span " << f.span() << "\n";
            return 0;
        }
        return 1;
    }
    if (gen->parsed()) {
        l21::Graph g = [&]() {
            if (family == "gl") return l21::gen_gl(param);
            if (family == "random") return l21::random_outerplanar(param, seed);
            if (family == "cycle" || family == "path") {
                if (param < (family == "cycle" ? 3 : 1))
                    throw CLI::ValidationError("param", "too small for family");
                l21::Graph h(param);
                for (int i = 0; i + 1 < param; ++i) h.add_edge(i, i + 1);
                if (family == "cycle") h.add_edge(0, param - 1);
                return h;
            }
            throw CLI::ValidationError("family", "unknown family: " + family);
        }();
        if (format == "graph6")
            std::cout << l21::graph6_encode(g) << "\n";
        else if (format == "dot") {
            if (family == "gl") {
                auto names = l21::gen_gl_names(param);
                std::cout << l21::to_dot(g, nullptr, &names);
            } else {
                std::cout << l21::to_dot(g);
            }
        } else
            std::cout << l21::to_edge_list(g);
        return 0;
    }
    if (enumerate->parsed()) {
        for (const auto& g : l21::enumerate_2conn_outerplanar(en))
            std::cout << l21::graph6_encode(g) << "\n";
        return 0;
    }
    if (selftest->parsed()) {
        bool all = true;
        for (const auto& c : l21::run_acceptance(quick)) {
            all = all && c.pass;
            std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name << " (" << c.seconds << "s) "
                      << c.details << "\n";
        }
        std::cout << (all ? "selftest passed" : "selftest FAILED") << "\n";
        return all ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const l21::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const l21::NotOuterplanar& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const l21::MaxDegreeExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const l21::NoExtension& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const l21::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
