#include "rpq/cli.hpp"

#include <fstream>
#include <limits>

#include <json.hpp>

#include "rpq/engine.hpp"
#include "rpq/graph.hpp"

namespace rpq {

namespace {

using Json = nlohmann::ordered_json;

struct Emitter {
    const CliConfig& config;
    const LabelledGraph& g;
    std::ostream& out;
    std::string source_name;  // set per source when --all-sources

    std::string prefix() const {
        return config.all_sources ? source_name + "\t" : "";
    }

    void finish_json(Json& obj) {
        if (config.all_sources) obj["source"] = source_name;
        out << obj.dump() << '\n';
    }

    void reach(NodeId node) {
        if (config.format == OutputFormat::Text) {
            out << prefix() << g.nodes().name(node) << '\n';
        } else {
            Json obj;
            obj["node"] = g.nodes().name(node);
            finish_json(obj);
        }
    }

    static Json path_json(const LabelledGraph& g, const Path& path) {
        Json obj;
        obj["nodes"] = Json::array();
        for (NodeId n : path.nodes) obj["nodes"].push_back(g.nodes().name(n));
        obj["labels"] = Json::array();
        for (LabelId l : path.edge_labels) obj["labels"].push_back(g.labels().name(l));
        return obj;
    }

    void paths(NodeId node, uint32_t depth, const std::vector<Path>& witness,
               bool truncated) {
        if (config.format == OutputFormat::Text) {
            for (const Path& p : witness) {
                out << prefix() << g.nodes().name(node) << '\t' << depth << '\t'
                    << format_path(p, g) << '\n';
            }
        } else {
            Json obj;
            obj["node"] = g.nodes().name(node);
            obj["depth"] = depth;
            obj["paths"] = Json::array();
            for (const Path& p : witness) obj["paths"].push_back(path_json(g, p));
            if (truncated) obj["truncated"] = true;
            finish_json(obj);
        }
    }

    void count(NodeId node, uint32_t depth, const BigInt& value) {
        if (config.format == OutputFormat::Text) {
            out << prefix() << g.nodes().name(node) << '\t' << depth << '\t' << value
                << '\n';
        } else {
            // counts can exceed any fixed-width integer; splice the decimal
            // digits in as a raw JSON number
            Json obj;
            obj["node"] = g.nodes().name(node);
            obj["depth"] = depth;
            std::string line = obj.dump();
            line.pop_back();  // '}'
            line += ",\"count\":" + value.str();
            if (config.all_sources) {
                line += ",\"source\":" + Json(source_name).dump();
            }
            line += "}";
            out << line << '\n';
        }
    }
};

void run_query(const CliConfig& config, const LabelledGraph& g, const Rpq& q,
               Emitter& emit) {
    switch (config.mode) {
        case QueryMode::Reach:
            for (NodeId node : eval_reach(g, q)) emit.reach(node);
            break;
        case QueryMode::One:
            eval_single_path(g, q, [&](NodeId node, const Path& path) {
                emit.paths(node, static_cast<uint32_t>(path.edge_labels.size()),
                           {path}, false);
            });
            break;
        case QueryMode::All: {
            size_t cap = config.limit ? static_cast<size_t>(*config.limit)
                                      : std::numeric_limits<size_t>::max();
            eval_all_shortest(
                g, q,
                [&](NodeId node, uint32_t depth, const AnswerPaths& answer) {
                    std::vector<Path> witness;
                    bool complete = answer.for_each([&](const Path& p) {
                        if (witness.size() == cap) return false;
                        witness.push_back(p);
                        return true;
                    });
                    emit.paths(node, depth, witness, !complete);
                });
            break;
        }
        case QueryMode::Count:
            eval_count(g, q, [&](NodeId node, uint32_t depth, const BigInt& c) {
                emit.count(node, depth, c);
            });
            break;
    }
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    if (config.limit && *config.limit < 1) {
        err << "error: --limit must be >= 1\n";
        return 2;
    }
    if (!config.all_sources && config.source.empty()) {
        err << "error: either a source node or --all-sources is required\n";
        return 2;
    }

    std::ifstream file(config.graph_path);
    if (!file) {
        err << "error: cannot open graph file '" << config.graph_path << "'\n";
        return 1;
    }

    try {
        LabelledGraph g = load_labelled_graph(file);
        RegexPtr ast = parse_regex(config.regex);

        std::vector<NodeId> sources;
        if (config.all_sources) {
            sources.resize(g.node_count());
            for (NodeId n = 0; n < g.node_count(); ++n) sources[n] = n;
        } else {
            auto id = g.nodes().find(config.source);
            if (!id) {
                err << "error: source node '" << config.source << "' not in graph\n";
                return 1;
            }
            sources.push_back(*id);
        }

        if (sources.empty()) return 0;  // empty graph, --all-sources

        Emitter emit{config, g, out, ""};
        Rpq q = compile_rpq(g, sources.front(), std::move(ast));
        if (config.dump_automaton) dump_dfa(q.dfa, err);
        for (NodeId source : sources) {
            q.source = source;  // graph and automaton are shared across sources
            emit.source_name = g.nodes().name(source);
            run_query(config, g, q, emit);
        }
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace rpq
