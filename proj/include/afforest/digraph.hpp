/*
 * Copyright 2026 The afforest authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "afforest/coalition.hpp"
#include "afforest/errors.hpp"

namespace afforest {

struct arc {
  node_id from = 0;
  node_id to = 0;
  friend auto operator<=>(const arc&, const arc&) = default;
};

/// A labelled digraph without directed circuits. Undirected cycles are
/// allowed. Immutable after construction and safe to share across threads.
///
/// Validation, degree queries, topological data and forest counting work for
/// any n; queries whose results are coalitions (sources, transitive sets,
/// weak components, local digraphs) require n <= 64.
class org_structure {
 public:
  /// Validates and builds the structure from user-facing labels and
  /// label pairs. Throws DuplicateLabel, UnknownNode, SelfLoop,
  /// DuplicateArc or circuit_error (with a witness circuit).
  static org_structure build(std::vector<std::string> labels,
                             const std::vector<std::pair<std::string, std::string>>& arc_labels) {
    if (labels.empty()) {
      throw error(errc::schema_error, "node list must be non-empty");
    }
    std::unordered_map<std::string, node_id> index;
    index.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i].empty()) {
        throw error(errc::duplicate_label, "empty node label at position " + std::to_string(i));
      }
      if (!index.emplace(labels[i], static_cast<node_id>(i)).second) {
        throw error(errc::duplicate_label, "label '" + labels[i] + "' appears more than once");
      }
    }
    std::vector<arc> arcs;
    arcs.reserve(arc_labels.size());
    for (const auto& [from, to] : arc_labels) {
      auto fi = index.find(from);
      if (fi == index.end()) {
        throw error(errc::unknown_node, "arc endpoint '" + from + "' is not a node");
      }
      auto ti = index.find(to);
      if (ti == index.end()) {
        throw error(errc::unknown_node, "arc endpoint '" + to + "' is not a node");
      }
      arcs.push_back({fi->second, ti->second});
    }
    return org_structure(std::move(labels), std::move(index), std::move(arcs));
  }

  /// Convenience builder with labels "1".."n".
  static org_structure from_indices(std::size_t n, std::vector<arc> arcs) {
    std::vector<std::string> labels;
    labels.reserve(n);
    std::unordered_map<std::string, node_id> index;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::to_string(i + 1));
      index.emplace(labels.back(), static_cast<node_id>(i));
    }
    if (labels.empty()) {
      throw error(errc::schema_error, "node list must be non-empty");
    }
    return org_structure(std::move(labels), std::move(index), std::move(arcs));
  }

  std::size_t node_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  const std::string& label(node_id i) const {
    check_node(i);
    return labels_[i];
  }

  std::optional<node_id> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  node_id node(std::string_view label) const {
    auto found = find(label);
    if (!found) {
      throw error(errc::unknown_node, "no node labelled '" + std::string(label) + "'");
    }
    return *found;
  }

  /// Arcs in ascending (from, to) index order.
  const std::vector<arc>& arcs() const { return arcs_; }

  bool has_arc(node_id i, node_id j) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), arc{i, j});
  }

  std::size_t in_degree(node_id i) const {
    check_node(i);
    return preds_[i].size();
  }

  /// Immediate predecessors of i, ascending.
  const std::vector<node_id>& immediate_predecessors(node_id i) const {
    check_node(i);
    return preds_[i];
  }

  /// Immediate successors of i, ascending.
  const std::vector<node_id>& immediate_successors(node_id i) const {
    check_node(i);
    return succs_[i];
  }

  /// Nodes in a topological order (arc tails precede heads); deterministic
  /// (smallest admissible index first).
  const std::vector<node_id>& topological_order() const { return topo_; }

  /// Nodes with in-degree > 0, ascending.
  const std::vector<node_id>& non_sources() const { return non_sources_; }

  std::size_t source_count() const { return node_count() - non_sources_.size(); }

  /// Nodes with in-degree 0; never empty for a circuit-free digraph.
  coalition sources() const {
    coalition s(node_count());
    for (node_id i = 0; i < node_count(); ++i) {
      if (preds_[i].empty()) s.insert(i);
    }
    return s;
  }

  /// Strict predecessor set P(i): nodes with a path to i.
  coalition predecessors(node_id i) const {
    check_node(i);
    require_masks();
    return coalition(node_count(), pred_closure_[i]);
  }

  /// Strict successor set S(i): nodes reachable from i.
  coalition successors(node_id i) const {
    check_node(i);
    require_masks();
    return coalition(node_count(), succ_closure_[i]);
  }

  /// True iff j is a (strict) successor of i.
  bool reaches(node_id i, node_id j) const {
    check_node(i);
    check_node(j);
    if (has_masks_) return (succ_closure_[i] >> j) & 1u;
    // Unbounded-width fallback.
    std::vector<bool> seen(node_count(), false);
    std::vector<node_id> stack{i};
    while (!stack.empty()) {
      node_id u = stack.back();
      stack.pop_back();
      for (node_id v : succs_[u]) {
        if (v == j) return true;
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    return false;
  }

  /// Maximal chain-connected subsets (arc orientation ignored), ordered by
  /// smallest member; blocks partition the node set.
  std::vector<coalition> weak_components() const {
    const std::size_t n = node_count();
    std::vector<node_id> parent(n);
    for (node_id i = 0; i < n; ++i) parent[i] = i;
    auto root_of = [&](node_id x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const arc& a : arcs_) {
      node_id ra = root_of(a.from), rb = root_of(a.to);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<coalition> blocks;
    std::unordered_map<node_id, std::size_t> slot;
    for (node_id i = 0; i < n; ++i) {
      node_id r = root_of(i);
      auto [it, fresh] = slot.emplace(r, blocks.size());
      if (fresh) blocks.emplace_back(n);
      blocks[it->second].insert(i);
    }
    return blocks;  // roots are minimal members and appear in ascending order
  }

  struct connectivity {
    bool quasi_strongly_connected = false;
    std::optional<node_id> root;
  };

  /// Quasi-strong connectivity: a root reaching every other node exists.
  /// For a circuit-free digraph this holds exactly when there is a unique
  /// source, which is then the root.
  connectivity quasi_strong_connectivity() const {
    if (source_count() != 1) return {};
    for (node_id i = 0; i < node_count(); ++i) {
      if (preds_[i].empty()) return {true, i};
    }
    return {};
  }

 private:
  org_structure(std::vector<std::string> labels, std::unordered_map<std::string, node_id> index,
                std::vector<arc> arcs)
      : labels_(std::move(labels)), index_(std::move(index)), arcs_(std::move(arcs)) {
    const std::size_t n = labels_.size();
    for (const arc& a : arcs_) {
      if (a.from >= n || a.to >= n) {
        throw error(errc::unknown_node, "arc endpoint index out of range");
      }
      if (a.from == a.to) {
        throw error(errc::self_loop, "self-loop on node '" + labels_[a.from] + "'");
      }
    }
    std::sort(arcs_.begin(), arcs_.end());
    auto dup = std::adjacent_find(arcs_.begin(), arcs_.end());
    if (dup != arcs_.end()) {
      throw error(errc::duplicate_arc, "duplicate arc ('" + labels_[dup->from] + "', '" +
                                           labels_[dup->to] + "')");
    }
    preds_.assign(n, {});
    succs_.assign(n, {});
    for (const arc& a : arcs_) {
      preds_[a.to].push_back(a.from);
      succs_[a.from].push_back(a.to);
    }
    for (auto& p : preds_) std::sort(p.begin(), p.end());
    // succs_ already ascending because arcs_ is sorted by (from, to)

    find_circuit_or_topo();

    for (node_id i = 0; i < n; ++i) {
      if (!preds_[i].empty()) non_sources_.push_back(i);
    }

    if (n <= max_coalition_nodes) {
      has_masks_ = true;
      succ_closure_.assign(n, 0);
      pred_closure_.assign(n, 0);
      for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
        node_id u = *it;
        for (node_id v : succs_[u]) {
          succ_closure_[u] |= (std::uint64_t{1} << v) | succ_closure_[v];
        }
      }
      for (node_id u : topo_) {
        for (node_id v : preds_[u]) {
          pred_closure_[u] |= (std::uint64_t{1} << v) | pred_closure_[v];
        }
      }
    }
  }

  // DFS circuit search with witness extraction, then a canonical Kahn order.
  void find_circuit_or_topo() {
    const std::size_t n = labels_.size();
    std::vector<unsigned char> colour(n, 0);  // 0 white, 1 on stack, 2 done
    std::vector<node_id> path;
    std::vector<std::pair<node_id, std::size_t>> stack;
    for (node_id s = 0; s < n; ++s) {
      if (colour[s] != 0) continue;
      colour[s] = 1;
      path.push_back(s);
      stack.emplace_back(s, 0);
      while (!stack.empty()) {
        node_id u = stack.back().first;
        std::size_t& next = stack.back().second;
        if (next < succs_[u].size()) {
          node_id v = succs_[u][next++];
          if (colour[v] == 0) {
            colour[v] = 1;
            path.push_back(v);
            stack.emplace_back(v, 0);
          } else if (colour[v] == 1) {
            auto start = std::find(path.begin(), path.end(), v);
            std::vector<std::string> witness;
            for (auto it = start; it != path.end(); ++it) witness.push_back(labels_[*it]);
            witness.push_back(labels_[v]);
            std::string msg = "directed circuit ";
            for (std::size_t w = 0; w < witness.size(); ++w) {
              if (w > 0) msg += " -> ";
              msg += witness[w];
            }
            throw circuit_error(msg, std::move(witness));
          }
        } else {
          colour[u] = 2;
          path.pop_back();
          stack.pop_back();
        }
      }
    }

    std::vector<std::size_t> remaining(n);
    for (node_id i = 0; i < n; ++i) remaining[i] = preds_[i].size();
    std::vector<bool> placed(n, false);
    topo_.reserve(n);
    while (topo_.size() < n) {
      for (node_id i = 0; i < n; ++i) {
        if (!placed[i] && remaining[i] == 0) {
          placed[i] = true;
          topo_.push_back(i);
          for (node_id v : succs_[i]) --remaining[v];
          break;
        }
      }
    }
  }

  void check_node(node_id i) const {
    if (i >= labels_.size()) {
      throw error(errc::unknown_node, "node index " + std::to_string(i) + " out of range");
    }
  }
  void require_masks() const {
    if (!has_masks_) {
      throw error(errc::too_large, "operation requires at most " +
                                       std::to_string(max_coalition_nodes) + " nodes, structure has " +
                                       std::to_string(labels_.size()));
    }
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, node_id> index_;
  std::vector<arc> arcs_;
  std::vector<std::vector<node_id>> preds_;
  std::vector<std::vector<node_id>> succs_;
  std::vector<node_id> topo_;
  std::vector<node_id> non_sources_;
  bool has_masks_ = false;
  std::vector<std::uint64_t> succ_closure_;
  std::vector<std::uint64_t> pred_closure_;
};

struct neighbourhood {
  std::size_t in_degree = 0;
  coalition immediate_predecessors;
  coalition immediate_successors;
};

inline neighbourhood degrees_and_neighbourhoods(const org_structure& g, node_id i) {
  neighbourhood out;
  out.in_degree = g.in_degree(i);
  out.immediate_predecessors = coalition(g.node_count());
  out.immediate_successors = coalition(g.node_count());
  for (node_id p : g.immediate_predecessors(i)) out.immediate_predecessors.insert(p);
  for (node_id s : g.immediate_successors(i)) out.immediate_successors.insert(s);
  return out;
}

/// The part of the digraph that determines a node's AF value: the node with
/// its successors, every immediate predecessor of those successors, and
/// every arc whose head is a strict successor of the centre.
struct local_digraph {
  node_id center = 0;
  coalition vertices;
  std::vector<arc> arcs;
  friend bool operator==(const local_digraph&, const local_digraph&) = default;
};

inline local_digraph make_local_digraph(const org_structure& g, node_id k) {
  const std::size_t n = g.node_count();
  coalition succ = g.successors(k);
  coalition succ_bar = succ.with(k);
  coalition competitor_preds(n);
  for (node_id j : succ.members()) {
    for (node_id p : g.immediate_predecessors(j)) competitor_preds.insert(p);
  }
  local_digraph out;
  out.center = k;
  out.vertices = succ_bar | competitor_preds;
  for (const arc& a : g.arcs()) {
    bool inside = succ_bar.contains(a.from) && succ_bar.contains(a.to);
    bool into_successor = succ.contains(a.to);  // then a.from is one of its immediate predecessors
    if (inside || into_successor) out.arcs.push_back(a);
  }
  return out;
}

/// An arc (i, j) is inessential when i is no successor of j and some other
/// immediate successor i' of i (not itself led by i... i not in S(i')) leads
/// to j, so j stays reachable from i without the arc.
inline bool is_inessential_arc(const org_structure& g, node_id i, node_id j) {
  if (!g.has_arc(i, j)) {
    throw error(errc::arc_not_present,
                "arc ('" + g.label(i) + "', '" + g.label(j) + "') not in the digraph");
  }
  if (g.reaches(j, i)) return false;  // i in S(j); vacuous for circuit-free inputs
  for (node_id mid : g.immediate_successors(i)) {
    if (!g.reaches(mid, i) && g.reaches(mid, j)) return true;
  }
  return false;
}

/// Rebuilds the structure without the given arc.
inline org_structure delete_arc(const org_structure& g, node_id i, node_id j) {
  if (!g.has_arc(i, j)) {
    throw error(errc::arc_not_present,
                "arc ('" + g.label(i) + "', '" + g.label(j) + "') not in the digraph");
  }
  std::vector<arc> arcs;
  arcs.reserve(g.arcs().size() - 1);
  for (const arc& a : g.arcs()) {
    if (!(a.from == i && a.to == j)) arcs.push_back(a);
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(arcs.size());
  for (const arc& a : arcs) pairs.emplace_back(g.label(a.from), g.label(a.to));
  return org_structure::build(g.labels(), pairs);
}

/// Rebuilds the structure with the given arc added; refuses arcs that would
/// close a directed circuit.
inline org_structure add_arc(const org_structure& g, node_id i, node_id j) {
  if (i == j) {
    throw error(errc::self_loop, "self-loop on node '" + g.label(i) + "'");
  }
  if (g.has_arc(i, j)) {
    throw error(errc::arc_already_present,
                "arc ('" + g.label(i) + "', '" + g.label(j) + "') already present");
  }
  if (g.reaches(j, i)) {
    throw error(errc::would_create_circuit, "adding ('" + g.label(i) + "', '" + g.label(j) +
                                                "') closes a circuit: a path from '" + g.label(j) +
                                                "' to '" + g.label(i) + "' exists");
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(g.arcs().size() + 1);
  for (const arc& a : g.arcs()) pairs.emplace_back(g.label(a.from), g.label(a.to));
  pairs.emplace_back(g.label(i), g.label(j));
  return org_structure::build(g.labels(), pairs);
}

}  // namespace afforest
