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
#ifndef FOCAL_VARSET_HPP_
#define FOCAL_VARSET_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace focal {

// Subset of a fixed universe of variable indices, stored as a bitset.
// Used for faces, spreads and matroid ground sets.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  template <class Range>
  static VarSet of(std::size_t universe, const Range& elements) {
    VarSet s(universe);
    for (auto v : elements) s.insert(static_cast<std::size_t>(v));
    return s;
  }
  static VarSet of(std::size_t universe, std::initializer_list<std::size_t> elements) {
    VarSet s(universe);
    for (auto v : elements) s.insert(v);
    return s;
  }
  static VarSet full(std::size_t universe) {
    VarSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(std::size_t v) const { return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1) != 0; }
  void insert(std::size_t v) {
    check(v);
    words_[v / 64] |= 1ULL << (v % 64);
  }
  void erase(std::size_t v) {
    check(v);
    words_[v / 64] &= ~(1ULL << (v % 64));
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool is_subset_of(const VarSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    }
    return true;
  }
  bool intersects(const VarSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & o.words_[i]) != 0) return true;
    }
    return false;
  }

  VarSet operator|(const VarSet& o) const { return combine(o, [](auto a, auto b) { return a | b; }); }
  VarSet operator&(const VarSet& o) const { return combine(o, [](auto a, auto b) { return a & b; }); }
  VarSet operator-(const VarSet& o) const { return combine(o, [](auto a, auto b) { return a & ~b; }); }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  // Low 64 bits; exact when universe <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL;
    return h;
  }

  bool operator==(const VarSet& o) const = default;
  // Lexicographic comparison of the ascending element lists.
  bool operator<(const VarSet& o) const {
    const auto a = elements();
    const auto b = o.elements();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  void check(std::size_t v) const {
    if (v >= universe_) throw std::out_of_range("VarSet: element outside universe");
  }
  void same_universe(const VarSet& o) const {
    if (universe_ != o.universe_) throw std::invalid_argument("VarSet: universe mismatch");
  }
  template <class Op>
  VarSet combine(const VarSet& o, Op op) const {
    same_universe(o);
    VarSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = op(words_[i], o.words_[i]);
    return out;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VarSetHash {
  std::size_t operator()(const VarSet& s) const { return s.hash(); }
};

}  // namespace focal

#endif  // FOCAL_VARSET_HPP_
