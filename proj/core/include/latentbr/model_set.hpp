// Copyright 2026 The latentbr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Sets of models over an n-atom universe, stored as a 2^n-bit bitset.
// Model m assigns atom i the value of bit i of m.

#ifndef LATENTBR_MODEL_SET_HPP_
#define LATENTBR_MODEL_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace latentbr {

using Model = std::uint32_t;

class ModelSet {
 public:
  using Word = std::uint64_t;

  ModelSet() = default;
  static ModelSet Empty(int atoms);
  static ModelSet Full(int atoms);
  // Models in which atom `index` is true.
  static ModelSet AtomTrue(int atoms, int index);

  int atoms() const { return atoms_; }
  std::size_t universe_models() const { return std::size_t{1} << atoms_; }

  bool contains(Model m) const {
    return (words_[m >> 6] >> (m & 63)) & 1U;
  }
  void insert(Model m) { words_[m >> 6] |= Word{1} << (m & 63); }
  void erase(Model m) { words_[m >> 6] &= ~(Word{1} << (m & 63)); }

  bool empty() const;
  bool full() const;
  std::size_t count() const;
  bool subset_of(const ModelSet& other) const;
  bool intersects(const ModelSet& other) const;

  ModelSet& operator&=(const ModelSet& other);
  ModelSet& operator|=(const ModelSet& other);
  ModelSet& operator-=(const ModelSet& other);
  ModelSet complement() const;

  friend ModelSet operator&(ModelSet a, const ModelSet& b) { return a &= b; }
  friend ModelSet operator|(ModelSet a, const ModelSet& b) { return a |= b; }
  friend ModelSet operator-(ModelSet a, const ModelSet& b) { return a -= b; }

  friend bool operator==(const ModelSet& a, const ModelSet& b) {
    return a.atoms_ == b.atoms_ && a.words_ == b.words_;
  }
  friend bool operator!=(const ModelSet& a, const ModelSet& b) {
    return !(a == b);
  }
  // Lexicographic on the word representation; only meaningful within one
  // universe size.
  friend bool operator<(const ModelSet& a, const ModelSet& b);

  std::size_t hash() const;

  std::vector<Model> models() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Model>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  // "10" style rendering of one model: atom 0 first.
  static std::string ModelString(Model m, int atoms);

 private:
  void Trim();

  int atoms_ = 0;
  boost::container::small_vector<Word, 4> words_;
};

struct ModelSetHash {
  std::size_t operator()(const ModelSet& s) const { return s.hash(); }
};

}  // namespace latentbr

#endif  // LATENTBR_MODEL_SET_HPP_
