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

#include "latentbr/model_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace latentbr {

namespace {

std::size_t WordCount(int atoms) {
  const std::size_t bits = std::size_t{1} << atoms;
  return (bits + 63) / 64;
}

ModelSet::Word TailMask(int atoms) {
  if (atoms >= 6) return ~ModelSet::Word{0};
  return (ModelSet::Word{1} << (1U << atoms)) - 1;
}

// Bit patterns of the first six atoms inside one 64-model word.
constexpr ModelSet::Word kLowPatterns[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

}  // namespace

ModelSet ModelSet::Empty(int atoms) {
  if (atoms < 0 || atoms > 24) throw std::out_of_range("atom count out of range");
  ModelSet s;
  s.atoms_ = atoms;
  s.words_.assign(WordCount(atoms), 0);
  return s;
}

ModelSet ModelSet::Full(int atoms) {
  ModelSet s = Empty(atoms);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.Trim();
  return s;
}

ModelSet ModelSet::AtomTrue(int atoms, int index) {
  if (index < 0 || index >= atoms) throw std::out_of_range("atom index out of range");
  ModelSet s = Empty(atoms);
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    if (index < 6) {
      s.words_[w] = kLowPatterns[index];
    } else {
      s.words_[w] = ((w >> (index - 6)) & 1U) ? ~Word{0} : Word{0};
    }
  }
  s.Trim();
  return s;
}

void ModelSet::Trim() {
  if (!words_.empty()) words_.back() &= TailMask(atoms_);
}

bool ModelSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool ModelSet::full() const { return count() == universe_models(); }

std::size_t ModelSet::count() const {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ModelSet::subset_of(const ModelSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool ModelSet::intersects(const ModelSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

ModelSet& ModelSet::operator&=(const ModelSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ModelSet& ModelSet::operator|=(const ModelSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ModelSet& ModelSet::operator-=(const ModelSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

ModelSet ModelSet::complement() const {
  ModelSet s = *this;
  for (Word& w : s.words_) w = ~w;
  s.Trim();
  return s;
}

bool operator<(const ModelSet& a, const ModelSet& b) {
  if (a.atoms_ != b.atoms_) return a.atoms_ < b.atoms_;
  return std::lexicographical_compare(a.words_.begin(), a.words_.end(),
                                      b.words_.begin(), b.words_.end());
}

std::size_t ModelSet::hash() const {
  std::size_t h = static_cast<std::size_t>(atoms_) * 0x9e3779b97f4a7c15ULL;
  for (Word w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<Model> ModelSet::models() const {
  std::vector<Model> out;
  out.reserve(count());
  for_each([&](Model m) { out.push_back(m); });
  return out;
}

std::string ModelSet::ModelString(Model m, int atoms) {
  std::string s(static_cast<std::size_t>(atoms), '0');
  for (int i = 0; i < atoms; ++i) {
    if ((m >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

}  // namespace latentbr
