#include "locald/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "locald/error.hpp"

namespace locald {

int edge_bit(int i, int j) {
    // colex: (0,1)=0, (0,2)=1, (1,2)=2, (0,3)=3, ...
    return j * (j - 1) / 2 + i;
}

bool mask_has_edge(std::uint32_t mask, int i, int j) {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return (mask >> edge_bit(i, j)) & 1u;
}

bool mask_connected(int n, std::uint32_t mask) {
    if (n <= 0) return false;
    std::uint32_t reached = 1u;
    std::uint32_t frontier = 1u;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v) {
            if (!((frontier >> v) & 1u)) continue;
            for (int w = 0; w < n; ++w) {
                if (((reached >> w) & 1u) == 0 && mask_has_edge(mask, v, w)) next |= 1u << w;
            }
        }
        reached |= next;
        frontier = next;
    }
    return reached == (n == 32 ? ~0u : ((1u << n) - 1u));
}

namespace {

std::uint32_t apply_perm(int n, std::uint32_t mask, const std::array<int, 8>& perm) {
    std::uint32_t out = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask_has_edge(mask, i, j)) {
                int a = perm[static_cast<std::size_t>(i)], b = perm[static_cast<std::size_t>(j)];
                if (a > b) std::swap(a, b);
                out |= 1u << edge_bit(a, b);
            }
    return out;
}

// Ordered-partition refinement: cells split by the multiset of edge counts
// into every current cell, iterated to a fixpoint.
struct Refiner {
    int n;
    std::uint32_t mask;
    std::uint32_t best;
    bool have_best = false;

    void search(std::vector<std::vector<int>> cells) {
        refine(cells);
        int branch_cell = -1;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() > 1) {
                branch_cell = static_cast<int>(c);
                break;
            }
        }
        if (branch_cell < 0) {
            std::array<int, 8> perm{};
            for (std::size_t c = 0; c < cells.size(); ++c) perm[static_cast<std::size_t>(cells[c][0])] = static_cast<int>(c);
            const std::uint32_t code = apply_perm(n, mask, perm);
            if (!have_best || code < best) {
                best = code;
                have_best = true;
            }
            return;
        }
        for (int v : cells[static_cast<std::size_t>(branch_cell)]) {
            auto next = cells;
            auto& cell = next[static_cast<std::size_t>(branch_cell)];
            cell.erase(std::find(cell.begin(), cell.end(), v));
            next.insert(next.begin() + branch_cell, {v});
            search(std::move(next));
        }
    }

    void refine(std::vector<std::vector<int>>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() <= 1) continue;
                // signature: edge count into each cell
                std::map<std::vector<int>, std::vector<int>> groups;
                for (int v : cells[c]) {
                    std::vector<int> sig;
                    sig.reserve(cells.size());
                    for (const auto& other : cells) {
                        int count = 0;
                        for (int w : other)
                            if (mask_has_edge(mask, v, w)) ++count;
                        sig.push_back(count);
                    }
                    groups[std::move(sig)].push_back(v);
                }
                if (groups.size() > 1) {
                    std::vector<std::vector<int>> split;
                    for (auto& [sig, members] : groups) split.push_back(std::move(members));
                    cells.erase(cells.begin() + static_cast<long>(c));
                    cells.insert(cells.begin() + static_cast<long>(c), split.begin(), split.end());
                    changed = true;
                    break;
                }
            }
        }
    }
};

}  // namespace

std::uint32_t canonical_mask(int n, std::uint32_t mask) {
    if (n > 8) fail(errc::graph_too_large, "canonical form capped at 8 nodes");
    if (n <= 1) return 0;
    const std::uint32_t full = (1u << (n * (n - 1) / 2)) - 1u;
    if (mask == 0 || mask == full) return mask;
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    Refiner r{n, mask, 0, false};
    r.search({all});
    return r.best;
}

namespace {

// Grow from n-1: attach a new last vertex to every nonempty subset. Every
// connected graph has a non-cut vertex, so this covers all of them.
std::vector<SmallGraph> build_connected_graphs(int n, const std::vector<SmallGraph>& smaller) {
    if (n == 1) return {SmallGraph{1, 0}};
    std::unordered_set<std::uint32_t> seen;
    std::vector<SmallGraph> out;
    for (const SmallGraph& g : smaller) {
        for (std::uint32_t attach = 1; attach < (1u << (n - 1)); ++attach) {
            std::uint32_t mask = g.mask;
            for (int i = 0; i < n - 1; ++i)
                if ((attach >> i) & 1u) mask |= 1u << edge_bit(i, n - 1);
            const std::uint32_t canon = canonical_mask(n, mask);
            if (seen.insert(canon).second) out.push_back(SmallGraph{n, canon});
        }
    }
    std::sort(out.begin(), out.end(), [](const SmallGraph& a, const SmallGraph& b) { return a.mask < b.mask; });
    return out;
}

}  // namespace

const std::vector<SmallGraph>& connected_graphs(int n) {
    if (n < 1 || n > 8) fail(errc::graph_too_large, "graph enumeration capped at 8 nodes");
    static std::mutex lock;
    static std::array<std::vector<SmallGraph>, 9> cache;
    static int built = 0;
    const std::scoped_lock guard(lock);
    for (int k = built + 1; k <= n; ++k)
        cache[static_cast<std::size_t>(k)] = build_connected_graphs(k, cache[static_cast<std::size_t>(k - 1)]);
    built = std::max(built, n);
    return cache[static_cast<std::size_t>(n)];
}

Graph to_graph(const SmallGraph& g) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (mask_has_edge(g.mask, i, j)) edges.emplace_back(i, j);
    return make_graph(std::move(names), edges);
}

bool next_assignment(std::vector<int>& digits, int base) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < base) return true;
        digits[i] = 0;
    }
    return false;
}

std::vector<std::vector<std::uint64_t>> ordered_injections(const std::vector<std::uint64_t>& pool, int k) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> current;
    std::vector<char> used(pool.size(), 0);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (used[i]) continue;
            used[i] = 1;
            current.push_back(pool[i]);
            self(self);
            current.pop_back();
            used[i] = 0;
        }
    };
    if (k <= static_cast<int>(pool.size())) rec(rec);
    return out;
}

std::vector<Bitstring> all_bitstrings_up_to(int max_len) {
    std::vector<Bitstring> out;
    out.push_back(Bitstring());
    for (int len = 1; len <= max_len; ++len) {
        std::vector<int> digits(static_cast<std::size_t>(len), 0);
        do {
            std::string s;
            s.reserve(static_cast<std::size_t>(len));
            for (int d : digits) s.push_back(d != 0 ? '1' : '0');
            out.push_back(Bitstring::raw(std::move(s)));
        } while (next_assignment(digits, 2));
    }
    return out;
}

}  // namespace locald
