#ifndef RPQ_AUTOMATON_HPP
#define RPQ_AUTOMATON_HPP

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "rpq/regex.hpp"

namespace rpq {

// States and transitions are over a local alphabet interning the symbol
// strings that occur in the regex.
struct Nfa {
    uint32_t state_count = 0;
    uint32_t initial = 0;
    std::vector<bool> finals;
    std::vector<std::array<uint32_t, 3>> transitions;  // (state, label, state)
    Interner alphabet;
};

struct Dfa {
    uint32_t state_count = 0;
    uint32_t initial = 0;
    std::vector<bool> finals;
    Interner alphabet;

    static constexpr int32_t kNoState = -1;

    // row-major [state * alphabet_size + label], kNoState when undefined
    std::vector<int32_t> table;

    int32_t next(uint32_t state, uint32_t label) const {
        return table[static_cast<size_t>(state) * alphabet.size() + label];
    }
};

// Position automaton: one state per symbol occurrence plus an initial state
// with no incoming transitions; epsilon-free by construction.
Nfa glushkov(const RegexAst& ast);

// Subset construction over reachable subsets; states numbered in breadth-first
// discovery order from the initial subset, labels scanned in alphabet order.
Dfa determinize(const Nfa& nfa);

// Run the word (symbol strings); symbols outside the alphabet or missing
// transitions reject.
bool accepts(const Dfa& dfa, const std::vector<std::string>& word);

// Line-oriented debug dump: header lines, then state<TAB>label<TAB>state.
void dump_dfa(const Dfa& dfa, std::ostream& out);

}  // namespace rpq

#endif
