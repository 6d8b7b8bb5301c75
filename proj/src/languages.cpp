#include "locald/languages.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "locald/enumerate.hpp"
#include "locald/error.hpp"

namespace locald {

namespace {

// Union-find for the spanning-tree check.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

bool leader_bit(const Bitstring& x) {
    if (x.str() == "1") return true;
    if (x.str() == "0") return false;
    fail(errc::malformed_input, "expected a single leader/membership bit, got '" + x.str() + "'");
}

bool member_unique_leader(const Configuration& c) {
    int leaders = 0;
    for (const Bitstring& x : c.inputs)
        if (leader_bit(x)) ++leaders;
    return leaders <= 1;
}

bool member_coloring(const Configuration& c) {
    for (int u = 0; u < c.n(); ++u)
        for (int v : c.graph.adj[static_cast<std::size_t>(u)])
            if (u < v && c.input(u) == c.input(v)) return false;
    return true;
}

bool member_mis(const Configuration& c) {
    std::vector<bool> in_set(static_cast<std::size_t>(c.n()));
    for (int v = 0; v < c.n(); ++v) in_set[static_cast<std::size_t>(v)] = leader_bit(c.input(v));
    for (int u = 0; u < c.n(); ++u)
        for (int v : c.graph.adj[static_cast<std::size_t>(u)])
            if (u < v && in_set[static_cast<std::size_t>(u)] && in_set[static_cast<std::size_t>(v)]) return false;
    for (int v = 0; v < c.n(); ++v) {
        if (in_set[static_cast<std::size_t>(v)]) continue;
        bool dominated = false;
        for (int w : c.graph.adj[static_cast<std::size_t>(v)]) dominated = dominated || in_set[static_cast<std::size_t>(w)];
        if (!dominated) return false;  // not maximal
    }
    return true;
}

bool member_consensus(const Configuration& c) {
    // inputs are pairs (proposed, decided)
    std::vector<Bitstring> proposed, decided;
    for (const Bitstring& x : c.inputs) {
        auto [a, b] = decode_pair(x);
        proposed.push_back(a);
        decided.push_back(b);
    }
    for (const Bitstring& d : decided)
        if (!(d == decided.front())) return false;
    return std::find(proposed.begin(), proposed.end(), decided.front()) != proposed.end();
}

bool member_spanning_tree(const Configuration& c) {
    // inputs are pairs (name, head); T = all edges (v,w) with head(v)=name(w)
    std::vector<Bitstring> name, head;
    for (const Bitstring& x : c.inputs) {
        auto [a, b] = decode_pair(x);
        name.push_back(a);
        head.push_back(b);
    }
    std::set<std::pair<int, int>> tree_edges;
    for (auto [u, v] : c.graph.edges()) {
        if (head[static_cast<std::size_t>(u)] == name[static_cast<std::size_t>(v)] ||
            head[static_cast<std::size_t>(v)] == name[static_cast<std::size_t>(u)])
            tree_edges.insert({u, v});
    }
    if (static_cast<int>(tree_edges.size()) != c.n() - 1) return false;
    Dsu dsu(c.n());
    for (auto [u, v] : tree_edges)
        if (!dsu.unite(u, v)) return false;  // cycle
    return true;
}

bool member_tree(const Configuration& c) {
    for (const Bitstring& x : c.inputs)
        if (!x.empty()) return false;
    return c.graph.edge_count() == c.n() - 1;  // connected by invariant
}

bool member_inp_eq_size(const Configuration& c) {
    const Bitstring size = Bitstring::of_nat(static_cast<std::uint64_t>(c.n()));
    for (const Bitstring& x : c.inputs)
        if (!(x == size)) return false;
    return true;
}

std::vector<Bitstring> element_set(const Configuration& c, std::vector<CoverInput>* parsed_out) {
    std::vector<Bitstring> elements;
    for (const Bitstring& x : c.inputs) {
        CoverInput in = decode_cover_input(x);
        elements.push_back(in.element);
        if (parsed_out != nullptr) parsed_out->push_back(std::move(in));
    }
    std::sort(elements.begin(), elements.end(), [](const Bitstring& a, const Bitstring& b) { return canonical_less(a, b); });
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return elements;
}

}  // namespace

bool member_cover(const Configuration& c) {
    std::vector<CoverInput> parsed;
    const std::vector<Bitstring> elements = element_set(c, &parsed);
    for (const CoverInput& in : parsed)
        for (const auto& set : in.sets)
            if (set == elements) return true;
    return false;
}

bool member_containment(const Configuration& c) {
    std::vector<CoverInput> parsed;
    const std::vector<Bitstring> elements = element_set(c, &parsed);
    for (const CoverInput& in : parsed) {
        for (const auto& set : in.sets) {
            const bool superset = std::includes(
                set.begin(), set.end(), elements.begin(), elements.end(),
                [](const Bitstring& a, const Bitstring& b) { return canonical_less(a, b); });
            if (superset) return true;
        }
    }
    return false;
}

CoverInput canonical_cover_input(CoverInput raw) {
    auto less = [](const Bitstring& a, const Bitstring& b) { return canonical_less(a, b); };
    for (auto& set : raw.sets) {
        std::sort(set.begin(), set.end(), less);
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    std::sort(raw.sets.begin(), raw.sets.end(), [&](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), less);
    });
    raw.sets.erase(std::unique(raw.sets.begin(), raw.sets.end()), raw.sets.end());
    return raw;
}

Bitstring encode_cover_input(const CoverInput& input) {
    const CoverInput canon = canonical_cover_input(input);
    BitWriter w;
    w.field(canon.element);
    w.nat(canon.sets.size());
    for (const auto& set : canon.sets) w.field(encode_list(set));
    return w.take();
}

CoverInput decode_cover_input(const Bitstring& encoded) {
    BitReader r(encoded);
    CoverInput out;
    out.element = r.field();
    const std::uint64_t count = r.nat();
    if (count > static_cast<std::uint64_t>(encoded.size())) fail(errc::malformed_input, "set count exceeds payload");
    for (std::uint64_t i = 0; i < count; ++i) out.sets.push_back(decode_list(r.field()));
    r.expect_done();
    return canonical_cover_input(std::move(out));
}

bool member(const Language& lang, const Configuration& config) {
    return lang.member(config);
}

const std::vector<std::string>& language_names() {
    static const std::vector<std::string> names = {
        "unique-leader", "consensus", "coloring", "mis",       "spanning-tree", "tree",
        "cycle-free",    "inp-eq-size", "cover",  "containment", "planar",       "interval"};
    return names;
}

const Language& language(std::string_view name) {
    static const std::map<std::string, Language, std::less<>> table = [] {
        std::map<std::string, Language, std::less<>> t;
        t["unique-leader"] = {"unique-leader", true, member_unique_leader};
        t["consensus"] = {"consensus", false, member_consensus};
        t["coloring"] = {"coloring", true, member_coloring};
        t["mis"] = {"mis", false, member_mis};
        t["spanning-tree"] = {"spanning-tree", false, member_spanning_tree};
        t["tree"] = {"tree", true, member_tree};
        t["cycle-free"] = {"cycle-free", true, member_tree};
        t["inp-eq-size"] = {"inp-eq-size", false, member_inp_eq_size};
        t["cover"] = {"cover", false, member_cover};
        t["containment"] = {"containment", false, member_containment};
        t["planar"] = {"planar", true, [](const Configuration&) -> bool {
                           fail(errc::unsupported, "planar recognition is not implemented");
                       }};
        t["interval"] = {"interval", true, [](const Configuration&) -> bool {
                             fail(errc::unsupported, "interval recognition is not implemented");
                         }};
        return t;
    }();
    const auto it = table.find(name);
    if (it == table.end()) fail(errc::unknown_language, "no language named '" + std::string(name) + "'");
    return it->second;
}

HereditaryReport check_hereditary(const Language& lang, int node_cap, const std::vector<Bitstring>& alphabet) {
    if (node_cap > 6) fail(errc::graph_too_large, "hereditary check capped at 6 nodes");
    if (alphabet.empty()) fail(errc::malformed_input, "hereditary check needs a nonempty alphabet");

    HereditaryReport report;
    for (int n = 1; n <= node_cap && report.hereditary; ++n) {
        for (const SmallGraph& sg : connected_graphs(n)) {
            const Graph graph = to_graph(sg);
            std::vector<int> digits(static_cast<std::size_t>(n), 0);
            do {
                std::vector<Bitstring> inputs;
                inputs.reserve(static_cast<std::size_t>(n));
                for (int d : digits) inputs.push_back(alphabet[static_cast<std::size_t>(d)]);
                Configuration config{graph, std::move(inputs)};
                ++report.configs_checked;
                if (!lang.member(config)) continue;
                // every connected proper subset must stay a member
                for (std::uint32_t subset = 1; subset + 1 < (1u << n); ++subset) {
                    std::vector<int> keep;
                    std::vector<char> in_set(static_cast<std::size_t>(n), 0);
                    for (int v = 0; v < n; ++v) {
                        if ((subset >> v) & 1u) {
                            keep.push_back(v);
                            in_set[static_cast<std::size_t>(v)] = 1;
                        }
                    }
                    if (!subset_connected(config.graph, in_set)) continue;
                    if (!lang.member(prefix(config, keep))) {
                        report.hereditary = false;
                        report.counterexample = HereditaryCounterexample{config, keep};
                        break;
                    }
                }
                if (!report.hereditary) break;
            } while (report.hereditary && next_assignment(digits, static_cast<int>(alphabet.size())));
            if (!report.hereditary) break;
        }
        if (!report.hereditary) break;
    }
    return report;
}

std::vector<Bitstring> default_alphabet(const Language& lang, int node_cap) {
    if (lang.name == "coloring")
        return {Bitstring::raw("0"), Bitstring::raw("1"), Bitstring::raw("10")};
    if (lang.name == "unique-leader" || lang.name == "mis")
        return {Bitstring::raw("0"), Bitstring::raw("1")};
    if (lang.name == "tree" || lang.name == "cycle-free")
        return {Bitstring()};
    if (lang.name == "inp-eq-size") {
        std::vector<Bitstring> sizes;
        for (int n = 1; n <= node_cap; ++n) sizes.push_back(Bitstring::of_nat(static_cast<std::uint64_t>(n)));
        return sizes;
    }
    if (lang.name == "consensus") {
        std::vector<Bitstring> out;
        for (const char* a : {"0", "1"})
            for (const char* b : {"0", "1"})
                out.push_back(encode_pair(Bitstring::raw(a), Bitstring::raw(b)));
        return out;
    }
    fail(errc::unsupported, "no default alphabet for language '" + lang.name + "'");
}

}  // namespace locald
