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
#ifndef FOCAL_MATROID_HPP_
#define FOCAL_MATROID_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "focal/varset.hpp"

namespace focal {

// Left side: elements of a universe. Right side: labeled vertices.
class BipartiteGraph {
 public:
  explicit BipartiteGraph(std::size_t universe) : adjacency_(universe) {}

  std::size_t add_right(std::string label);
  void add_edge(std::size_t left, std::size_t right);

  std::size_t universe() const { return adjacency_.size(); }
  std::size_t right_count() const { return labels_.size(); }
  const std::string& label(std::size_t right) const { return labels_[right]; }
  const std::vector<std::size_t>& neighbors(std::size_t left) const { return adjacency_[left]; }

  // Disjoint union on the right side; both graphs share the left universe.
  BipartiteGraph joined(const BipartiteGraph& other) const;

  // Maximum matching of the elements of x by augmenting paths.
  // Entry v of the result is the right vertex matched to v, if any.
  std::vector<std::optional<std::size_t>> max_matching(const VarSet& x) const;
  std::size_t matching_size(const VarSet& x) const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::string> labels_;
};

class Matroid {
 public:
  explicit Matroid(VarSet ground) : ground_(std::move(ground)) {}
  virtual ~Matroid() = default;

  const VarSet& ground() const { return ground_; }
  std::size_t universe() const { return ground_.universe(); }

  // Both throw std::invalid_argument when x is not inside the ground set.
  std::size_t rank(const VarSet& x) const;
  bool independent(const VarSet& x) const;
  std::size_t full_rank() const { return rank(ground_); }

  // A bipartite graph whose matchable sets are exactly the independent
  // sets, when the matroid carries one.
  virtual std::optional<BipartiteGraph> transversal_presentation() const { return std::nullopt; }

 protected:
  virtual std::size_t rank_unchecked(const VarSet& x) const = 0;
  virtual bool independent_unchecked(const VarSet& x) const { return rank_unchecked(x) == x.size(); }

 private:
  void require_inside(const VarSet& x) const;

  VarSet ground_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

class UniformMatroid : public Matroid {
 public:
  UniformMatroid(std::size_t k, VarSet ground) : Matroid(std::move(ground)), k_(k) {}
  std::size_t k() const { return k_; }
  std::optional<BipartiteGraph> transversal_presentation() const override;

 protected:
  std::size_t rank_unchecked(const VarSet& x) const override;

 private:
  std::size_t k_;
};

// Direct sum of uniform matroids on disjoint blocks. Ground elements outside
// every block are loops.
class PartitionMatroid : public Matroid {
 public:
  struct Block {
    VarSet elements;
    std::size_t rank;
    std::string label;  // right-vertex label stem in the presentation
  };
  PartitionMatroid(VarSet ground, std::vector<Block> blocks);
  const std::vector<Block>& blocks() const { return blocks_; }
  std::optional<BipartiteGraph> transversal_presentation() const override;

 protected:
  std::size_t rank_unchecked(const VarSet& x) const override;

 private:
  std::vector<Block> blocks_;
};

class TransversalMatroid : public Matroid {
 public:
  TransversalMatroid(VarSet ground, BipartiteGraph graph);
  const BipartiteGraph& graph() const { return graph_; }
  std::optional<BipartiteGraph> transversal_presentation() const override { return graph_; }

 protected:
  std::size_t rank_unchecked(const VarSet& x) const override { return graph_.matching_size(x); }

 private:
  BipartiteGraph graph_;
};

// M_1 v ... v M_r on a common ground set. When every summand has a
// transversal presentation the union is answered by matching in the joined
// graph; otherwise by the matroid partition algorithm.
class UnionMatroid : public Matroid {
 public:
  explicit UnionMatroid(std::vector<MatroidPtr> summands);
  const std::vector<MatroidPtr>& summands() const { return summands_; }
  bool uses_graph() const { return joined_.has_value(); }
  std::optional<BipartiteGraph> transversal_presentation() const override { return joined_; }

  // Rank by greedy insertion with shortest exchange paths; never touches
  // the joined graph.
  std::size_t rank_by_partition(const VarSet& x) const;
  // A partition of a maximal partitionable subset of x: part i independent
  // in summand i.
  std::vector<VarSet> partition(const VarSet& x) const;

 protected:
  std::size_t rank_unchecked(const VarSet& x) const override;

 private:
  std::vector<MatroidPtr> summands_;
  std::optional<BipartiteGraph> joined_;
};

// (M \ deleted) / contracted, ground = ground(M) minus both sets.
class MinorMatroid : public Matroid {
 public:
  MinorMatroid(MatroidPtr base, const VarSet& deleted, const VarSet& contracted);

 protected:
  std::size_t rank_unchecked(const VarSet& x) const override;

 private:
  MatroidPtr base_;
  VarSet contracted_;
  std::size_t contracted_rank_;
};

// Throws std::invalid_argument when the sets meet or the contracted set is
// dependent.
MatroidPtr matroid_minor(const MatroidPtr& m, const VarSet& deleted, const VarSet& contracted);

// U_{3,3n} on all image variables joined with rank-1 blocks {x_i1, x_i2, x_i3}.
// Right vertices a, b, c, v1..vn.
std::shared_ptr<const UnionMatroid> delta_matroid(int n);
// U_{3,15n} on all variables joined with rank-13 blocks of the 15 variables
// of each camera. Every facet of the universal complex is a basis, but
// the 3- and 4-focal spreads are independent here too.
std::shared_ptr<const UnionMatroid> delta_tilde_matroid(int n);
// U_{3,15n} joined with a transversal matroid on each camera: one vertex
// v_i adjacent to x_i1, x_i2, x_i3 and, for every entry a_ijk, a vertex
// e_ijk adjacent to a_ijk and x_ij. Rank 13n+3; its independent sets are
// the faces of the universal complex.
std::shared_ptr<const UnionMatroid> delta_tilde_matroid_rowwise(int n);

// Matched right-vertex label for each element of x, or nullopt when x is
// dependent.
std::optional<std::map<std::size_t, std::string>> matching_witness(const BipartiteGraph& g, const VarSet& x);

// Number of bases, by testing every subset of size full_rank().
std::size_t count_bases(const Matroid& m);

}  // namespace focal

#endif  // FOCAL_MATROID_HPP_
