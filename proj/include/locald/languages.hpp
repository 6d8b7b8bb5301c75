#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locald/config.hpp"

namespace locald {

/// A distributed language: a decidable, id-independent set of
/// configurations. The membership oracle is centralized ground truth that
/// deciders and verifiers are tested against; it never sees ids.
struct Language {
    std::string name;
    bool hereditary_hint = false;
    std::function<bool(const Configuration&)> member;
};

/// Registry lookup by name: unique-leader, consensus, coloring, mis,
/// spanning-tree, tree (alias cycle-free), inp-eq-size, cover, containment,
/// planar, interval. Throws unknown_language.
const Language& language(std::string_view name);
const std::vector<std::string>& language_names();

bool member(const Language& lang, const Configuration& config);

// ---------------------------------------------------------------------------
// cover / containment inputs.
// ---------------------------------------------------------------------------

/// Per-node input for cover/containment: an element E(v) and a finite
/// collection of finite sets S(v). Canonical form keeps every set sorted
/// and de-duplicated (length-then-lex), and the collection itself sorted,
/// so equality of encodings is equality of set families.
struct CoverInput {
    Bitstring element;
    std::vector<std::vector<Bitstring>> sets;
};

CoverInput canonical_cover_input(CoverInput raw);
Bitstring encode_cover_input(const CoverInput& input);
CoverInput decode_cover_input(const Bitstring& encoded);  // malformed_input

/// True iff some node holds a set equal to { E(u) : u in V } (as a set).
bool member_cover(const Configuration& config);
/// True iff some node holds a superset of { E(u) : u in V }.
bool member_containment(const Configuration& config);

// ---------------------------------------------------------------------------
// Hereditary checking.
// ---------------------------------------------------------------------------

struct HereditaryCounterexample {
    Configuration config;
    std::vector<int> prefix_nodes;
};

struct HereditaryReport {
    bool hereditary = true;
    std::optional<HereditaryCounterexample> counterexample;
    long configs_checked = 0;
};

/// Exhaustively verifies that every connected prefix of every member
/// configuration (graphs up to isomorphism, inputs over `alphabet`, at most
/// node_cap nodes) is a member. Returns the first counterexample otherwise.
/// node_cap > 6 throws graph_too_large.
HereditaryReport check_hereditary(const Language& lang, int node_cap, const std::vector<Bitstring>& alphabet);

/// A sensible input alphabet per language for hereditary checks (colors for
/// coloring, level markers for unique-leader/mis, sizes for inp-eq-size...).
std::vector<Bitstring> default_alphabet(const Language& lang, int node_cap);

}  // namespace locald
