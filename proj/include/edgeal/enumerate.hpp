#pragma once

#include <functional>
#include <vector>

#include "edgeal/graph.hpp"

namespace edgeal {

inline constexpr int kMaxEnumerationOrder = 8;

/// Streams graphs on n vertices. Without dedupe every labelled graph is
/// produced, ordered by adjacency_key. With dedupe one canonical
/// representative per isomorphism class is produced, ordered by graph6 of
/// the canonical form. Throws std::invalid_argument unless 1 <= n <= 8.
void for_each_graph(int n, bool dedupe_iso, const std::function<void(const Graph&)>& visit);

std::vector<Graph> enumerate_graphs(int n, bool dedupe_iso);

/// Canonical representatives for every order 1..max_n, concatenated.
std::vector<Graph> enumerate_graphs_up_to(int max_n);

}  // namespace edgeal
