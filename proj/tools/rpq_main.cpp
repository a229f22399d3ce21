#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <string>

#include "rpq/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"rpq - regular path queries with all-shortest-paths semantics"};

    rpq::CliConfig config;
    std::string mode = "reach";
    std::string format = "text";
    uint64_t limit = 0;

    app.add_option("--graph", config.graph_path, "graph file (src<TAB>label<TAB>dst per line)")
        ->required();
    app.add_option("--source", config.source, "source node name");
    app.add_flag("--all-sources", config.all_sources,
                 "run the query from every node of the graph");
    app.add_option("--regex", config.regex, "regular expression over edge labels")
        ->required();
    app.add_option("--mode", mode, "one of: reach, one, all, count")
        ->check(CLI::IsMember({"reach", "one", "all", "count"}));
    app.add_option("--limit", limit, "maximum number of paths per answer")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "output format: text or jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));
    app.add_flag("--dump-automaton", config.dump_automaton,
                 "dump the compiled query automaton to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    static const std::map<std::string, rpq::QueryMode> kModes{
        {"reach", rpq::QueryMode::Reach},
        {"one", rpq::QueryMode::One},
        {"all", rpq::QueryMode::All},
        {"count", rpq::QueryMode::Count},
    };
    config.mode = kModes.at(mode);
    config.format = format == "jsonl" ? rpq::OutputFormat::Jsonl
                                      : rpq::OutputFormat::Text;
    if (limit > 0) config.limit = limit;

    return rpq::run(config, std::cout, std::cerr);
}
