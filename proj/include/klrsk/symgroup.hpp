#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "klrsk/combinatorics.hpp"

namespace klrsk {

// Permutation of {1..n} acting on the right: word[i-1] is the image of i,
// and a*b means "apply a, then b".
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation simple(int n, int i);  // s_i swaps i and i+1
  static Permutation longest(int n);
  // "(1 5 4 2)(3 6)" means 1 -> 5 -> 4 -> 2 -> 1
  static Permutation fromCycles(int n, std::string_view text);
  // one-line word "5,1,6,2,4,3" or cycle notation (then n is required)
  static Permutation parse(std::string_view text, int n = 0);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  int length() const;
  int sign() const { return length() % 2 ? -1 : 1; }
  bool isIdentity() const;
  // s_i w < w
  bool hasLeftDescent(int i) const { return word_[static_cast<std::size_t>(i - 1)] > word_[static_cast<std::size_t>(i)]; }
  // w s_i < w
  bool hasRightDescent(int i) const;
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, each starting at its least element

  std::string str() const;
  std::string cycleString() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.word_ <=> b.word_; }

 private:
  std::vector<int> word_;
};

Permutation multiply(const Permutation& a, const Permutation& b);
// indices i with w = s_{i_1} s_{i_2} ... s_{i_k}, k = length(w)
std::vector<int> reducedWord(const Permutation& w);
Permutation fromWord(int n, const std::vector<int>& generators);

bool bruhatLeq(const Permutation& y, const Permutation& w);
int longestDecreasingSubsequence(const Permutation& w);

// entry i replaced by i w
Tableau act(const Tableau& t, const Permutation& w);
Tabloid act(const Tabloid& t, const Permutation& w);

struct ParabolicData {
  Partition lambda;
  std::vector<int> generators;  // i with s_i in W_lambda
  Permutation w0;               // longest element of W_lambda
  std::vector<Permutation> distinguished;  // D_lambda, lexicographic
  Permutation wLambda;          // t^lambda w_lambda = t_lambda

  std::vector<Permutation> subgroupElements() const;
  bool isDistinguished(const Permutation& d) const;
};

ParabolicData parabolic(const Partition& lambda);

// x with w = x y and length(w) = length(x) + length(y); ordered by (length, word)
std::vector<Permutation> prefixes(const Permutation& w);

// Indexed copy of S_n with generator multiplication tables; built once per n.
class SymmetricGroup {
 public:
  using Index = std::uint32_t;

  static const SymmetricGroup& of(int n);

  int n() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(Index i) const { return elements_[i]; }
  Index index(const Permutation& w) const;
  Index identityIndex() const { return 0; }
  Index longestIndex() const { return static_cast<Index>(elements_.size() - 1); }
  int length(Index i) const { return length_[i]; }
  Index inverse(Index i) const { return inverse_[i]; }
  Index leftMul(int s, Index w) const { return left_[static_cast<std::size_t>(s - 1)][w]; }   // s w
  Index rightMul(Index w, int s) const { return right_[static_cast<std::size_t>(s - 1)][w]; }  // w s
  Index multiply(Index a, Index b) const;
  // all indices sorted by length, ties by index
  const std::vector<Index>& byLength() const { return byLength_; }
  // first right descent of w, 0 for the identity
  int firstRightDescent(Index w) const;
  int firstLeftDescent(Index w) const;
  bool bruhatLeq(Index y, Index w) const;

 private:
  explicit SymmetricGroup(int n);

  int n_;
  std::vector<Permutation> elements_;
  std::vector<int> length_;
  std::vector<Index> inverse_;
  std::vector<std::vector<Index>> left_, right_;
  std::vector<Index> byLength_;
};

}  // namespace klrsk
