// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "focal/matroid.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <utility>

#include "focal/focals.hpp"
#include "focal/varspace.hpp"

namespace focal {

std::size_t BipartiteGraph::add_right(std::string label) {
  labels_.push_back(std::move(label));
  return labels_.size() - 1;
}

void BipartiteGraph::add_edge(std::size_t left, std::size_t right) {
  if (left >= adjacency_.size() || right >= labels_.size()) throw std::out_of_range("BipartiteGraph: bad edge");
  adjacency_[left].push_back(right);
}

BipartiteGraph BipartiteGraph::joined(const BipartiteGraph& other) const {
  if (other.universe() != universe()) throw std::invalid_argument("BipartiteGraph: universe mismatch");
  BipartiteGraph out = *this;
  const std::size_t offset = labels_.size();
  for (const auto& l : other.labels_) out.labels_.push_back(l);
  for (std::size_t v = 0; v < universe(); ++v) {
    for (auto r : other.adjacency_[v]) out.adjacency_[v].push_back(r + offset);
  }
  return out;
}

std::vector<std::optional<std::size_t>> BipartiteGraph::max_matching(const VarSet& x) const {
  if (x.universe() != universe()) throw std::invalid_argument("BipartiteGraph: universe mismatch");
  std::vector<std::optional<std::size_t>> match_left(universe());
  std::vector<std::optional<std::size_t>> match_right(right_count());
  std::vector<char> seen(right_count());
  std::function<bool(std::size_t)> augment = [&](std::size_t v) {
    for (auto r : adjacency_[v]) {
      if (!match_right[r]) {
        match_right[r] = v;
        match_left[v] = r;
        return true;
      }
    }
    for (auto r : adjacency_[v]) {
      if (seen[r]) continue;
      seen[r] = 1;
      if (!match_right[r] || augment(*match_right[r])) {
        match_right[r] = v;
        match_left[v] = r;
        return true;
      }
    }
    return false;
  };
  for (auto v : x.elements()) {
    std::fill(seen.begin(), seen.end(), 0);
    augment(v);
  }
  return match_left;
}

std::size_t BipartiteGraph::matching_size(const VarSet& x) const {
  const auto m = max_matching(x);
  return static_cast<std::size_t>(std::count_if(m.begin(), m.end(), [](const auto& r) { return r.has_value(); }));
}

void Matroid::require_inside(const VarSet& x) const {
  if (x.universe() != ground_.universe() || !x.is_subset_of(ground_)) {
    throw std::invalid_argument("matroid: set is not contained in the ground set");
  }
}

std::size_t Matroid::rank(const VarSet& x) const {
  require_inside(x);
  return rank_unchecked(x);
}

bool Matroid::independent(const VarSet& x) const {
  require_inside(x);
  return independent_unchecked(x);
}

namespace {

std::string uniform_label(std::size_t k, std::size_t t) {
  if (k <= 3) return std::string(1, static_cast<char>('a' + t));
  return "u" + std::to_string(t + 1);
}

}  // namespace

std::size_t UniformMatroid::rank_unchecked(const VarSet& x) const { return std::min(x.size(), k_); }

std::optional<BipartiteGraph> UniformMatroid::transversal_presentation() const {
  BipartiteGraph g(universe());
  for (std::size_t t = 0; t < k_; ++t) {
    const auto r = g.add_right(uniform_label(k_, t));
    for (auto v : ground().elements()) g.add_edge(v, r);
  }
  return g;
}

PartitionMatroid::PartitionMatroid(VarSet ground, std::vector<Block> blocks)
    : Matroid(std::move(ground)), blocks_(std::move(blocks)) {
  VarSet seen(universe());
  for (const auto& b : blocks_) {
    if (b.elements.universe() != universe() || !b.elements.is_subset_of(this->ground())) {
      throw std::invalid_argument("PartitionMatroid: block outside the ground set");
    }
    if (b.elements.intersects(seen)) throw std::invalid_argument("PartitionMatroid: blocks overlap");
    seen = seen | b.elements;
  }
}

std::size_t PartitionMatroid::rank_unchecked(const VarSet& x) const {
  std::size_t r = 0;
  for (const auto& b : blocks_) r += std::min((x & b.elements).size(), b.rank);
  return r;
}

std::optional<BipartiteGraph> PartitionMatroid::transversal_presentation() const {
  BipartiteGraph g(universe());
  for (const auto& b : blocks_) {
    for (std::size_t t = 0; t < b.rank; ++t) {
      const auto r = g.add_right(b.rank == 1 ? b.label : b.label + "_" + std::to_string(t + 1));
      for (auto v : b.elements.elements()) g.add_edge(v, r);
    }
  }
  return g;
}

TransversalMatroid::TransversalMatroid(VarSet ground, BipartiteGraph graph)
    : Matroid(std::move(ground)), graph_(std::move(graph)) {
  if (graph_.universe() != universe()) throw std::invalid_argument("TransversalMatroid: universe mismatch");
}

namespace {

VarSet union_ground(const std::vector<MatroidPtr>& summands) {
  if (summands.empty()) throw std::invalid_argument("UnionMatroid: no summands");
  VarSet g = summands.front()->ground();
  for (const auto& m : summands) {
    if (m->universe() != g.universe()) throw std::invalid_argument("UnionMatroid: universe mismatch");
    g = g | m->ground();
  }
  return g;
}

}  // namespace

UnionMatroid::UnionMatroid(std::vector<MatroidPtr> summands)
    : Matroid(union_ground(summands)), summands_(std::move(summands)) {
  std::optional<BipartiteGraph> joined;
  for (const auto& m : summands_) {
    auto p = m->transversal_presentation();
    if (!p) return;
    joined = joined ? joined->joined(*p) : std::move(*p);
  }
  joined_ = std::move(joined);
}

std::size_t UnionMatroid::rank_unchecked(const VarSet& x) const {
  if (joined_) return joined_->matching_size(x);
  return rank_by_partition(x);
}

std::vector<VarSet> UnionMatroid::partition(const VarSet& x) const {
  const std::size_t r = summands_.size();
  std::vector<VarSet> parts(r, VarSet(universe()));
  std::vector<std::size_t> owner(universe(), r);
  auto fits = [&](std::size_t j, std::size_t y) { return summands_[j]->ground().contains(y); };
  for (auto e : x.elements()) {
    if (!ground().contains(e)) throw std::invalid_argument("UnionMatroid: element outside the ground set");
    // Breadth-first search for a shortest exchange path from e.
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent(universe());
    std::vector<char> visited(universe());
    std::deque<std::size_t> queue{e};
    visited[e] = 1;
    std::optional<std::pair<std::size_t, std::size_t>> end;
    while (!queue.empty() && !end) {
      const auto y = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < r && !end; ++j) {
        if (owner[y] == j || !fits(j, y)) continue;
        VarSet with = parts[j];
        with.insert(y);
        if (summands_[j]->independent(with)) {
          end = std::make_pair(y, j);
          break;
        }
        for (auto z : parts[j].elements()) {
          if (visited[z]) continue;
          with.erase(z);
          if (summands_[j]->independent(with)) {
            visited[z] = 1;
            parent[z] = std::make_pair(y, j);
            queue.push_back(z);
          }
          with.insert(z);
        }
      }
    }
    if (!end) continue;
    auto [y, j] = *end;
    if (owner[y] < r) parts[owner[y]].erase(y);
    parts[j].insert(y);
    owner[y] = j;
    while (y != e) {
      const auto [w, jp] = *parent[y];
      // y left part jp above; w takes its place.
      if (owner[w] < r) parts[owner[w]].erase(w);
      parts[jp].insert(w);
      owner[w] = jp;
      y = w;
    }
  }
  return parts;
}

std::size_t UnionMatroid::rank_by_partition(const VarSet& x) const {
  std::size_t total = 0;
  for (const auto& p : partition(x)) total += p.size();
  return total;
}

MinorMatroid::MinorMatroid(MatroidPtr base, const VarSet& deleted, const VarSet& contracted)
    : Matroid(base->ground() - deleted - contracted),
      base_(std::move(base)),
      contracted_(contracted),
      contracted_rank_(0) {
  if (deleted.intersects(contracted)) throw std::invalid_argument("matroid_minor: deleted and contracted sets meet");
  if (!deleted.is_subset_of(base_->ground()) || !contracted.is_subset_of(base_->ground())) {
    throw std::invalid_argument("matroid_minor: sets outside the ground set");
  }
  if (!base_->independent(contracted)) throw std::invalid_argument("matroid_minor: contracted set is dependent");
  contracted_rank_ = contracted.size();
}

std::size_t MinorMatroid::rank_unchecked(const VarSet& x) const {
  return base_->rank(x | contracted_) - contracted_rank_;
}

MatroidPtr matroid_minor(const MatroidPtr& m, const VarSet& deleted, const VarSet& contracted) {
  return std::make_shared<MinorMatroid>(m, deleted, contracted);
}

std::shared_ptr<const UnionMatroid> delta_matroid(int n) {
  const auto space = VarSpace::multiview(n);
  const auto all = VarSet::full(space.affine_size());
  std::vector<PartitionMatroid::Block> blocks;
  for (int i = 0; i < n; ++i) {
    VarSet b(space.affine_size());
    for (int j = 0; j < 3; ++j) b.insert(space.image(i, j));
    blocks.push_back({b, 1, "v" + std::to_string(i + 1)});
  }
  std::vector<MatroidPtr> summands{std::make_shared<UniformMatroid>(3, all),
                                   std::make_shared<PartitionMatroid>(all, std::move(blocks))};
  return std::make_shared<UnionMatroid>(std::move(summands));
}

std::shared_ptr<const UnionMatroid> delta_tilde_matroid(int n) {
  const auto space = VarSpace::universal(n);
  const auto all = VarSet::full(space.affine_size());
  std::vector<PartitionMatroid::Block> blocks;
  for (int i = 0; i < n; ++i) {
    VarSet b(space.affine_size());
    for (int j = 0; j < 3; ++j) {
      b.insert(space.image(i, j));
      for (int k = 0; k < 4; ++k) b.insert(space.camera(i, j, k));
    }
    blocks.push_back({b, 13, "v" + std::to_string(i + 1)});
  }
  std::vector<MatroidPtr> summands{std::make_shared<UniformMatroid>(3, all),
                                   std::make_shared<PartitionMatroid>(all, std::move(blocks))};
  return std::make_shared<UnionMatroid>(std::move(summands));
}

std::shared_ptr<const UnionMatroid> delta_tilde_matroid_rowwise(int n) {
  const auto space = VarSpace::universal(n);
  const auto all = VarSet::full(space.affine_size());
  BipartiteGraph g(space.affine_size());
  for (int i = 0; i < n; ++i) {
    const auto v = g.add_right("v" + std::to_string(i + 1));
    for (int j = 0; j < 3; ++j) {
      g.add_edge(space.image(i, j), v);
      for (int k = 0; k < 4; ++k) {
        const auto e = g.add_right("e" + std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(k + 1));
        g.add_edge(space.camera(i, j, k), e);
        g.add_edge(space.image(i, j), e);
      }
    }
  }
  std::vector<MatroidPtr> summands{std::make_shared<UniformMatroid>(3, all),
                                   std::make_shared<TransversalMatroid>(all, std::move(g))};
  return std::make_shared<UnionMatroid>(std::move(summands));
}

std::optional<std::map<std::size_t, std::string>> matching_witness(const BipartiteGraph& g, const VarSet& x) {
  const auto m = g.max_matching(x);
  std::map<std::size_t, std::string> out;
  for (auto v : x.elements()) {
    if (!m[v]) return std::nullopt;
    out[v] = g.label(*m[v]);
  }
  return out;
}

std::size_t count_bases(const Matroid& m) {
  const auto elems = m.ground().elements();
  const std::size_t r = m.full_rank();
  std::size_t count = 0;
  for (const auto& pick : combinations(static_cast<int>(elems.size()), static_cast<int>(r))) {
    VarSet s(m.universe());
    for (int t : pick) s.insert(elems[static_cast<std::size_t>(t)]);
    if (m.independent(s)) ++count;
  }
  return count;
}

}  // namespace focal
