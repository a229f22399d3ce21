#ifndef RPQ_CLI_HPP
#define RPQ_CLI_HPP

#include <optional>
#include <ostream>
#include <string>

namespace rpq {

enum class QueryMode { Reach, One, All, Count };
enum class OutputFormat { Text, Jsonl };

struct CliConfig {
    std::string graph_path;
    std::string source;          // node name; ignored when all_sources is set
    bool all_sources = false;
    std::string regex;
    QueryMode mode = QueryMode::Reach;
    std::optional<uint64_t> limit;  // max paths per answer, >= 1
    OutputFormat format = OutputFormat::Text;
    bool dump_automaton = false;
};

// Exit status: 0 success, 1 runtime error (missing node, unreadable file),
// 2 usage or parse error. Diagnostics go to err.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace rpq

#endif
