#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rppc/crystal_graph.hpp"
#include "rppc/enumerate.hpp"
#include "rppc/errors.hpp"
#include "rppc/reading.hpp"
#include "rppc/rpp_crystal.hpp"
#include "rppc/symfunc.hpp"
#include "rppc/verify.hpp"
#include "rppc/word_crystal.hpp"

namespace {

using namespace rppc;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void run_enumerate(const std::string& shape_text, int max_entry, bool ssyt,
                   bool elegant, const std::string& format) {
    SkewShape shape = SkewShape::parse(shape_text);
    std::vector<Filling> all;
    if (elegant)
        all = all_elegant(shape.outer(), shape.inner());
    else if (ssyt)
        all = all_ssyt(shape, max_entry);
    else
        all = all_rpp(shape, max_entry);
    if (format == "json") {
        for (const Filling& t : all) std::cout << to_json(t) << "\n";
        std::cout << "{\"count\":" << all.size() << "}\n";
    } else {
        for (const Filling& t : all) std::cout << t.to_text() << "\n";
        std::cout << "count: " << all.size() << "\n";
    }
}

void run_word(const std::string& tableau_path) {
    Filling t = filling_from_json(read_input(tableau_path));
    Word w = reading_word(t);
    std::cout << "word: " << word_to_string(w) << "\n";
    if (t.max_entry() <= 9) std::cout << "compact: " << word_to_compact(w) << "\n";
    std::cout << "heights: " << word_to_string(height_vector(t)) << "\n";
}

int run_reconstruct(const std::string& shape_text, const std::string& word_text,
                    const std::string& heights_text, int max_entry) {
    SkewShape shape = SkewShape::parse(shape_text);
    auto t = reconstruct(shape, parse_word(word_text), parse_word(heights_text),
                         max_entry);
    if (!t) {
        std::cout << "none\n";
        return 1;
    }
    std::cout << to_json(*t) << "\n";
    return 0;
}

void run_crystal_op(const std::string& op, int index,
                    const std::string& tableau_path) {
    if (op != "e" && op != "f")
        throw ValidationError("--op must be e or f");
    if (index < 1) throw ValidationError("--index must be at least 1");
    Filling t = filling_from_json(read_input(tableau_path));
    auto result = op == "e" ? raise_rpp(t, index) : lower_rpp(t, index);
    if (result)
        std::cout << to_json(*result) << "\n";
    else
        std::cout << "0\n";
}

void run_graph(const std::string& shape_text, int max_entry, bool dot) {
    CrystalGraph g = build_crystal_graph(SkewShape::parse(shape_text), max_entry);
    if (dot)
        std::cout << to_dot(g);
    else
        std::cout << component_summary(g) << "\n";
}

int run_expand(const std::string& shape_text, int max_entry, bool refined,
               const std::string& format) {
    SkewShape shape = SkewShape::parse(shape_text);
    SchurExpansion h = h_coeffs(shape, max_entry);
    SchurExpansion oracle = expand_in_schur(g_poly(shape, max_entry), max_entry);
    bool ok = h == oracle;

    RefinedExpansion table;
    if (refined) {
        table = h_coeffs_refined(shape, max_entry);
        SchurExpansion marginal;
        for (const auto& [key, c] : table) marginal[key.first] += c;
        ok = ok && marginal == h;

        SparsePoly target = g_refined(shape, max_entry);
        SparsePoly sum(max_entry, target.t_count());
        for (const auto& [key, c] : table) {
            Exponent mono(max_entry + target.t_count(), 0);
            for (std::size_t k = 0; k < key.second.size(); ++k)
                mono[max_entry + k] = key.second[k];
            sum += schur(key.first, max_entry)
                       .with_t_count(target.t_count())
                       .times(mono, c);
        }
        ok = ok && sum == target;
    }

    const char* verdict = ok ? "match" : "MISMATCH";
    if (format == "json") {
        nlohmann::json doc;
        doc["coeffs"] = nlohmann::json::parse(expansion_to_json(h));
        if (refined) doc["refined"] = nlohmann::json::parse(refined_to_json(table));
        doc["oracle"] = verdict;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << expansion_to_string(h);
        if (refined) {
            std::cout << "refined:\n";
            std::cout << refined_to_string(table);
        }
        std::cout << "oracle: " << verdict << "\n";
    }
    return ok ? 0 : 1;
}

int run_verify(const std::string& suite, const VerifyOptions& opts) {
    std::vector<std::string> names;
    if (suite == "all")
        names = verify_suite_names();
    else
        names.push_back(suite);
    int status = 0;
    for (const std::string& name : names) {
        VerifyReport report = run_verify_suite(name, opts);
        std::cout << "suite: " << report.suite << "\n";
        std::cout << "cases: " << report.cases << "\n";
        if (!report.passed) {
            std::cout << "witness: " << report.witness << "\n";
            status = 1;
        }
        std::cout << "result: " << (report.passed ? "pass" : "FAIL") << "\n";
    }
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"crystal operators and Schur expansions for skew-shape fillings"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string en_shape, en_format = "text";
    int en_max = 1;
    bool en_ssyt = false, en_elegant = false;
    auto* enumerate = app.add_subcommand("enumerate", "list all fillings of a shape");
    enumerate->add_option("--shape", en_shape, "skew shape, e.g. \"4,4,3/2,1\"")
        ->required();
    enumerate->add_option("--max-entry", en_max, "largest allowed entry")
        ->check(CLI::PositiveNumber);
    auto* ssyt_flag = enumerate->add_flag("--ssyt", en_ssyt, "strict columns");
    auto* elegant_flag = enumerate->add_flag(
        "--elegant", en_elegant, "strict columns and row-r entries below r");
    ssyt_flag->excludes(elegant_flag);
    elegant_flag->excludes(ssyt_flag);
    enumerate->add_option("--format", en_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    enumerate->callback(
        [&]() { run_enumerate(en_shape, en_max, en_ssyt, en_elegant, en_format); });

    std::string word_tableau;
    auto* word = app.add_subcommand("word", "reading word and height vector");
    word->add_option("--tableau", word_tableau, "tableau JSON file, - for stdin")
        ->required();
    word->callback([&]() { run_word(word_tableau); });

    std::string rc_shape, rc_word, rc_heights;
    int rc_max = 0;
    auto* recon = app.add_subcommand(
        "reconstruct", "rebuild a filling from its word and heights");
    recon->add_option("--shape", rc_shape)->required();
    recon->add_option("--word", rc_word, "letters, e.g. \"3,4,2\" or \"342\"")
        ->required();
    recon->add_option("--heights", rc_heights, "row indices, same grammar")
        ->required();
    recon->add_option("--max-entry", rc_max, "entry bound (default: largest letter)")
        ->check(CLI::NonNegativeNumber);
    recon->callback([&]() {
        exit_code = run_reconstruct(rc_shape, rc_word, rc_heights, rc_max);
    });

    std::string cr_op, cr_tableau;
    int cr_index = 0;
    auto* crystal =
        app.add_subcommand("crystal", "apply an operator or build the graph");
    crystal->add_option("--op", cr_op, "e (raise) or f (lower)");
    crystal->add_option("--index", cr_index, "operator index i");
    crystal->add_option("--tableau", cr_tableau, "tableau JSON file, - for stdin");

    std::string gr_shape;
    int gr_max = 1;
    bool gr_dot = false;
    auto* graph = crystal->add_subcommand("graph", "full operator graph of a shape");
    graph->add_option("--shape", gr_shape)->required();
    graph->add_option("--max-entry", gr_max)->required()->check(CLI::PositiveNumber);
    graph->add_flag("--dot", gr_dot, "emit Graphviz instead of the summary");
    graph->callback([&]() { run_graph(gr_shape, gr_max, gr_dot); });
    crystal->callback([&]() {
        if (graph->parsed()) return;
        if (cr_op.empty() || cr_tableau.empty())
            throw ValidationError(
                "crystal needs --op, --index and --tableau (or the graph subcommand)");
        run_crystal_op(cr_op, cr_index, cr_tableau);
    });

    std::string ex_shape, ex_format = "text";
    int ex_max = 1;
    bool ex_refined = false;
    auto* expand =
        app.add_subcommand("expand", "Schur-basis coefficients of a shape");
    expand->add_option("--shape", ex_shape)->required();
    expand->add_option("--max-entry", ex_max)->check(CLI::PositiveNumber);
    expand->add_flag("--refined", ex_refined, "split counts by the ceq statistic");
    expand->add_option("--format", ex_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    expand->callback([&]() {
        exit_code = run_expand(ex_shape, ex_max, ex_refined, ex_format);
    });

    std::string vf_suite;
    VerifyOptions vf_opts;
    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("--suite", vf_suite, "suite name or all")->required();
    verify->add_option("--max-cells", vf_opts.max_cells, "outer partition size bound")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--max-entry", vf_opts.max_entry)->check(CLI::PositiveNumber);
    verify->add_option("--seed", vf_opts.seed, "base seed for randomized orders");
    verify->callback([&]() { exit_code = run_verify(vf_suite, vf_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const rppc::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rppc::InternalInvariant& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
