#include <CLI11.hpp>

#include <nutgraph/catalog.hpp>
#include <nutgraph/construct.hpp>
#include <nutgraph/format.hpp>
#include <nutgraph/generate.hpp>
#include <nutgraph/graph.hpp>
#include <nutgraph/nutcheck.hpp>
#include <nutgraph/search.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nutgraph::Graph;
using nutgraph::IntVector;

std::string slurp(const std::string& path) {
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin),
                std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + path);
    return {std::istreambuf_iterator<char>(in),
            std::istreambuf_iterator<char>()};
}

std::string first_line(const std::string& text) {
    const size_t begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return {};
    size_t end = text.find_first_of("\r\n", begin);
    if (end == std::string::npos)
        end = text.size();
    return text.substr(begin, end - begin);
}

Graph read_graph(const std::string& path, const std::string& format) {
    const std::string text = slurp(path);
    if (format == "g6")
        return nutgraph::decode_graph6(first_line(text));
    if (format == "dict")
        return nutgraph::parse_adjacency_dict(text);
    return nutgraph::parse_edge_list(text);
}

std::string join_kernel(const IntVector& v) {
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i > 0)
            out += ",";
        out += v[i].str();
    }
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

void emit_graph(const Graph& g, const std::string& out) {
    if (out == "g6") {
        std::cout << nutgraph::encode_graph6(g) << "\n";
    } else if (out == "dot") {
        std::cout << nutgraph::format_dot(g);
    } else if (out == "lines") {
        std::cout << nutgraph::format_edge_list(g);
    } else {
        std::cout << "order=" << g.order() << " edges=" << g.edge_count()
                  << "\n";
        for (int v = 0; v < g.order(); ++v) {
            std::cout << v << ":";
            const auto& row = g.neighbors(v);
            for (size_t u = row.find_first();
                 u != boost::dynamic_bitset<>::npos; u = row.find_next(u))
                std::cout << " " << u;
            std::cout << "\n";
        }
    }
}

void print_verdict(const nutgraph::NutVerdict& verdict) {
    switch (verdict.outcome) {
        case nutgraph::NutOutcome::IsNut:
            std::cout << "NUT kernel=" << join_kernel(verdict.kernel) << "\n";
            break;
        case nutgraph::NutOutcome::Nonsingular:
            std::cout << "NOT_NUT reason=nonsingular\n";
            break;
        case nutgraph::NutOutcome::NullityAtLeastTwo:
            std::cout << "NOT_NUT nullity=" << verdict.nullity << "\n";
            break;
        case nutgraph::NutOutcome::KernelHasZeroEntry: {
            std::string zeros;
            for (size_t i = 0; i < verdict.zero_positions.size(); ++i) {
                if (i > 0)
                    zeros += ",";
                zeros += std::to_string(verdict.zero_positions[i]);
            }
            std::cout << "NOT_NUT zeros=" << zeros << "\n";
            break;
        }
    }
}

std::pair<int, int> parse_pair(const std::string& text) {
    const size_t comma = text.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == text.size())
        throw std::invalid_argument("expected a vertex pair u,v: " + text);
    size_t used1 = 0;
    size_t used2 = 0;
    const int u = std::stoi(text.substr(0, comma), &used1);
    const int v = std::stoi(text.substr(comma + 1), &used2);
    if (used1 != comma || used2 != text.size() - comma - 1)
        throw std::invalid_argument("expected a vertex pair u,v: " + text);
    return {u, v};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, verify, and search for nut graphs"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string in_format = "g6";
    std::string out_format = "human";
    const auto format_check = CLI::IsMember({"g6", "dict", "edges"});
    const auto out_check = CLI::IsMember({"human", "lines", "g6", "dot"});

    // check
    auto* check_cmd = app.add_subcommand("check", "Verdict for one graph");
    std::string check_file;
    check_cmd->add_option("--format", in_format)->check(format_check);
    check_cmd->add_option("file", check_file, "input file or -")->required();
    check_cmd->callback([&] {
        print_verdict(nutgraph::is_nut(read_graph(check_file, in_format)));
    });

    // circulant
    auto* circ_cmd = app.add_subcommand("circulant", "Emit a circulant graph");
    int circ_n = 0;
    std::vector<int> circ_jumps;
    circ_cmd->add_option("--n", circ_n)->required();
    circ_cmd->add_option("--jumps", circ_jumps)->required()->delimiter(',');
    circ_cmd->add_option("--out", out_format)->check(out_check);
    circ_cmd->callback([&] {
        emit_graph(nutgraph::circulant({circ_n, circ_jumps}), out_format);
    });

    // fowler
    auto* fowler_cmd =
        app.add_subcommand("fowler", "Extend a nut graph at one vertex");
    int fowler_vertex = 0;
    std::string fowler_file;
    fowler_cmd->add_option("--vertex", fowler_vertex)->required();
    fowler_cmd->add_option("--format", in_format)->check(format_check);
    fowler_cmd->add_option("--out", out_format)->check(out_check);
    fowler_cmd->add_option("file", fowler_file)->required();
    fowler_cmd->callback([&] {
        const Graph g = read_graph(fowler_file, in_format);
        const auto result = nutgraph::fowler_extend(g, fowler_vertex);
        emit_graph(result.graph, out_format);
        std::cout << "order=" << result.graph.order() << "\n";
        print_verdict(nutgraph::is_nut(result.graph));
    });

    // scan
    auto* scan_cmd =
        app.add_subcommand("scan", "Scan circulants of one order and degree");
    int scan_n = 0;
    int scan_d = 0;
    int scan_jobs = 1;
    std::string scan_method = "auto";
    scan_cmd->add_option("--n", scan_n)->required();
    scan_cmd->add_option("--d", scan_d)->required();
    scan_cmd->add_option("--jobs", scan_jobs);
    scan_cmd->add_option("--method", scan_method)
        ->check(CLI::IsMember({"auto", "spectral", "elimination"}));
    scan_cmd->callback([&] {
        nutgraph::ScanOptions options;
        options.jobs = scan_jobs;
        options.method = scan_method == "spectral"
                             ? nutgraph::ScanMethod::spectral
                         : scan_method == "elimination"
                             ? nutgraph::ScanMethod::elimination
                             : nutgraph::ScanMethod::automatic;
        const auto result = nutgraph::scan_circulants(scan_n, scan_d, options);
        for (const auto& spec : result.hits)
            std::cout << "hit jumps=" << join_ints(spec.jumps) << "\n";
        std::cout << "hits=" << result.hits.size()
                  << " examined=" << result.examined << "\n";
    });

    // survey
    auto* survey_cmd =
        app.add_subcommand("survey", "Existence table for 12-regular nuts");
    int survey_d = 12;
    int survey_from = 0;
    int survey_to = 0;
    survey_cmd->add_option("--d", survey_d);
    survey_cmd->add_option("--from", survey_from)->required();
    survey_cmd->add_option("--to", survey_to)->required();
    survey_cmd->callback([&] {
        for (const auto& row :
             nutgraph::survey(survey_d, survey_from, survey_to))
            std::cout << "n=" << row.n << " verdict="
                      << (row.exists ? "EXISTS" : "NONE")
                      << " witness=" << row.note << "\n";
    });

    // verify-appendix
    auto* verify_cmd = app.add_subcommand(
        "verify-appendix", "Re-verify the published fixtures");
    verify_cmd->callback([&] {
        for (const auto& check : nutgraph::verify_appendix()) {
            std::cout << "order=" << check.order << " "
                      << (check.pass() ? "PASS" : "FAIL") << "\n";
            if (!check.pass())
                exit_code = 1;
        }
    });

    // witness
    auto* witness_cmd = app.add_subcommand(
        "witness", "Null-space witness for a consecutive-jump circulant");
    std::string witness_kind;
    int witness_n = 0;
    int witness_t = 0;
    int witness_k = 0;
    witness_cmd->add_option("--kind", witness_kind)
        ->required()
        ->check(CLI::IsMember({"shift", "blocks"}));
    witness_cmd->add_option("--n", witness_n)->required();
    witness_cmd->add_option("--t", witness_t)->required();
    witness_cmd->add_option("--k", witness_k);
    witness_cmd->callback([&] {
        IntVector b;
        if (witness_kind == "shift") {
            b = nutgraph::null_witness_shift(witness_n, witness_t);
        } else {
            if (witness_k == 0)
                throw std::invalid_argument("witness: blocks needs --k");
            b = nutgraph::null_witness_blocks(witness_n, witness_t, witness_k);
        }
        std::vector<int> jumps(static_cast<size_t>(witness_t));
        for (int i = 0; i < witness_t; ++i)
            jumps[static_cast<size_t>(i)] = i + 1;
        const Graph g = nutgraph::circulant({witness_n, jumps});
        std::cout << join_kernel(b) << "\n";
        if (nutgraph::is_zero_vector(
                nutgraph::mat_vec_mul(nutgraph::adjacency_matrix(g), b))) {
            std::cout << "Ab=0 confirmed\n";
        } else {
            std::cout << "Ab=0 FAILED\n";
            exit_code = 1;
        }
    });

    // rewire
    auto* rewire_cmd =
        app.add_subcommand("rewire", "Apply one two-switch rewiring move");
    std::vector<std::string> remove_pairs;
    std::vector<std::string> add_pairs;
    std::string rewire_file;
    rewire_cmd->add_option("--remove", remove_pairs)
        ->required()
        ->expected(2);
    rewire_cmd->add_option("--add", add_pairs)->required()->expected(2);
    rewire_cmd->add_option("--format", in_format)->check(format_check);
    rewire_cmd->add_option("--out", out_format)->check(out_check);
    rewire_cmd->add_option("file", rewire_file)->required();
    rewire_cmd->callback([&] {
        const auto e1 = parse_pair(remove_pairs[0]);
        const auto e2 = parse_pair(remove_pairs[1]);
        const auto a1 = parse_pair(add_pairs[0]);
        const auto a2 = parse_pair(add_pairs[1]);
        const auto norm = [](std::pair<int, int> p) {
            return p.first < p.second ? p : std::pair<int, int>{p.second,
                                                                p.first};
        };
        const std::pair<int, int> want1 = norm({e1.first, e2.second});
        const std::pair<int, int> want2 = norm({e2.first, e1.second});
        const std::pair<int, int> got1 = norm(a1);
        const std::pair<int, int> got2 = norm(a2);
        const bool match = (got1 == want1 && got2 == want2) ||
                           (got1 == want2 && got2 == want1);
        if (!match)
            throw std::invalid_argument(
                "rewire: --add pairs do not match the two-switch of the "
                "--remove pairs");
        const Graph g = read_graph(rewire_file, in_format);
        emit_graph(nutgraph::rewire(g, {e1, e2}), out_format);
    });

    // rewire-search
    auto* search_cmd = app.add_subcommand(
        "rewire-search", "Randomized rewiring search for a nut graph");
    long long search_budget = 10000;
    int search_restarts = 4;
    std::uint64_t search_seed = 0;
    std::string search_file;
    search_cmd->add_option("--budget", search_budget);
    search_cmd->add_option("--restarts", search_restarts);
    search_cmd->add_option("--seed", search_seed);
    search_cmd->add_option("--format", in_format)->check(format_check);
    search_cmd->add_option("--out", out_format)->check(out_check);
    search_cmd->add_option("file", search_file)->required();
    search_cmd->callback([&] {
        const Graph seed_graph = read_graph(search_file, in_format);
        const auto result = nutgraph::rewiring_search(
            seed_graph, {search_budget, search_restarts, search_seed});
        if (result.found()) {
            emit_graph(*result.graph, out_format);
            std::cout << "result=FOUND proposals=" << result.proposals
                      << " restarts=" << result.restarts_used << "\n";
        } else {
            std::cout << "result=EXHAUSTED proposals=" << result.proposals
                      << " restarts=" << result.restarts_used << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const nutgraph::IntegrityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nutgraph::ParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.byte_offset >= 0)
            std::cerr << " (byte " << e.byte_offset << ")";
        std::cerr << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
