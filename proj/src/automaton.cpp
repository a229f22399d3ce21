#include "rpq/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace rpq {

namespace {

// first/last/follow over linearized symbol positions 1..m; position 0 is the
// added initial state.
struct GlushkovSets {
    bool nullable = false;
    std::vector<uint32_t> first;
    std::vector<uint32_t> last;
};

struct GlushkovBuilder {
    std::vector<std::string> position_symbol{""};     // index 0 unused
    std::vector<std::vector<uint32_t>> follow{{}};    // per position

    static void merge(std::vector<uint32_t>& into, const std::vector<uint32_t>& from) {
        for (uint32_t p : from) {
            if (std::find(into.begin(), into.end(), p) == into.end()) into.push_back(p);
        }
    }

    void add_follow(const std::vector<uint32_t>& lasts, const std::vector<uint32_t>& firsts) {
        for (uint32_t p : lasts) merge(follow[p], firsts);
    }

    GlushkovSets build(const RegexAst& ast) {
        switch (ast.kind) {
            case RegexKind::Symbol: {
                uint32_t p = static_cast<uint32_t>(position_symbol.size());
                position_symbol.push_back(ast.symbol);
                follow.emplace_back();
                return {false, {p}, {p}};
            }
            case RegexKind::Epsilon:
                return {true, {}, {}};
            case RegexKind::Concat: {
                GlushkovSets l = build(*ast.left);
                GlushkovSets r = build(*ast.right);
                add_follow(l.last, r.first);
                GlushkovSets out;
                out.nullable = l.nullable && r.nullable;
                out.first = l.first;
                if (l.nullable) merge(out.first, r.first);
                out.last = r.last;
                if (r.nullable) merge(out.last, l.last);
                return out;
            }
            case RegexKind::Union: {
                GlushkovSets l = build(*ast.left);
                GlushkovSets r = build(*ast.right);
                GlushkovSets out;
                out.nullable = l.nullable || r.nullable;
                out.first = l.first;
                merge(out.first, r.first);
                out.last = l.last;
                merge(out.last, r.last);
                return out;
            }
            case RegexKind::Star:
            case RegexKind::Plus: {
                GlushkovSets c = build(*ast.left);
                add_follow(c.last, c.first);
                c.nullable = ast.kind == RegexKind::Star || c.nullable;
                return c;
            }
            case RegexKind::Optional: {
                GlushkovSets c = build(*ast.left);
                c.nullable = true;
                return c;
            }
        }
        return {};
    }
};

}  // namespace

Nfa glushkov(const RegexAst& ast) {
    GlushkovBuilder builder;
    GlushkovSets root = builder.build(ast);

    Nfa nfa;
    nfa.state_count = static_cast<uint32_t>(builder.position_symbol.size());
    nfa.initial = 0;
    nfa.finals.assign(nfa.state_count, false);
    for (uint32_t p : root.last) nfa.finals[p] = true;
    if (root.nullable) nfa.finals[0] = true;

    for (uint32_t p = 1; p < nfa.state_count; ++p) {
        nfa.alphabet.intern(builder.position_symbol[p]);
    }
    for (uint32_t p : root.first) {
        nfa.transitions.push_back({0, *nfa.alphabet.find(builder.position_symbol[p]), p});
    }
    for (uint32_t p = 1; p < nfa.state_count; ++p) {
        for (uint32_t q : builder.follow[p]) {
            nfa.transitions.push_back({p, *nfa.alphabet.find(builder.position_symbol[q]), q});
        }
    }
    return nfa;
}

Dfa determinize(const Nfa& nfa) {
    // successor sets per (state, label)
    std::vector<std::vector<std::vector<uint32_t>>> succ(
        nfa.state_count, std::vector<std::vector<uint32_t>>(nfa.alphabet.size()));
    for (const auto& t : nfa.transitions) succ[t[0]][t[1]].push_back(t[2]);

    Dfa dfa;
    dfa.alphabet = nfa.alphabet;

    std::map<std::vector<uint32_t>, uint32_t> subset_id;
    std::vector<std::vector<uint32_t>> subsets;
    std::deque<uint32_t> queue;

    auto get_id = [&](std::vector<uint32_t> subset) {
        auto [it, inserted] = subset_id.try_emplace(subset, static_cast<uint32_t>(subsets.size()));
        if (inserted) {
            subsets.push_back(std::move(subset));
            queue.push_back(it->second);
        }
        return it->second;
    };

    get_id({nfa.initial});
    std::vector<std::array<uint32_t, 3>> transitions;
    while (!queue.empty()) {
        uint32_t id = queue.front();
        queue.pop_front();
        for (uint32_t label = 0; label < nfa.alphabet.size(); ++label) {
            std::vector<uint32_t> next;
            for (uint32_t s : subsets[id]) {
                for (uint32_t t : succ[s][label]) next.push_back(t);
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            if (next.empty()) continue;
            transitions.push_back({id, label, get_id(std::move(next))});
        }
    }

    dfa.state_count = static_cast<uint32_t>(subsets.size());
    dfa.initial = 0;
    dfa.finals.assign(dfa.state_count, false);
    for (uint32_t id = 0; id < dfa.state_count; ++id) {
        for (uint32_t s : subsets[id]) {
            if (nfa.finals[s]) dfa.finals[id] = true;
        }
    }
    dfa.table.assign(static_cast<size_t>(dfa.state_count) * dfa.alphabet.size(),
                     Dfa::kNoState);
    for (const auto& t : transitions) {
        dfa.table[static_cast<size_t>(t[0]) * dfa.alphabet.size() + t[1]] =
            static_cast<int32_t>(t[2]);
    }
    return dfa;
}

bool accepts(const Dfa& dfa, const std::vector<std::string>& word) {
    int32_t state = static_cast<int32_t>(dfa.initial);
    for (const auto& symbol : word) {
        auto label = dfa.alphabet.find(symbol);
        if (!label) return false;
        state = dfa.next(static_cast<uint32_t>(state), *label);
        if (state == Dfa::kNoState) return false;
    }
    return dfa.finals[static_cast<uint32_t>(state)];
}

void dump_dfa(const Dfa& dfa, std::ostream& out) {
    out << "# states\t" << dfa.state_count << '\n';
    out << "# initial\t" << dfa.initial << '\n';
    out << "# finals";
    for (uint32_t s = 0; s < dfa.state_count; ++s) {
        if (dfa.finals[s]) out << '\t' << s;
    }
    out << '\n';
    for (uint32_t s = 0; s < dfa.state_count; ++s) {
        for (uint32_t label = 0; label < dfa.alphabet.size(); ++label) {
            int32_t t = dfa.next(s, label);
            if (t != Dfa::kNoState) {
                out << s << '\t' << dfa.alphabet.name(label) << '\t' << t << '\n';
            }
        }
    }
}

}  // namespace rpq
