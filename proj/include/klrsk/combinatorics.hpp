#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "klrsk/extnat.hpp"

namespace klrsk {

class Partition {
 public:
  Partition() = default;  // the empty partition of 0
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  // part i (0-based), zero past the end
  int operator[](int i) const { return i < rows() ? parts_[static_cast<std::size_t>(i)] : 0; }
  Partition transpose() const;

  std::string str() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

bool dominates(const Partition& mu, const Partition& lambda);
// partitions of n in reverse lexicographic order, (n) first
std::vector<Partition> partitionsOf(int n);
Partition lambdaND(int n, int d);

std::vector<std::vector<int>> hookLengths(const Partition& lambda);
std::uint64_t countStandard(const Partition& lambda);

class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  int at(int r, int c) const { return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  std::pair<int, int> position(int entry) const;

  bool isRowStandard() const;
  bool isColumnStandard() const;
  bool isStandard() const { return isRowStandard() && isColumnStandard(); }
  std::vector<int> readingWord() const;
  Tableau mapEntries(const std::function<int(int)>& f) const;

  // t^lambda: 1..n filled along rows; t_lambda: filled down columns
  static Tableau rowSuperstandard(const Partition& lambda);
  static Tableau columnSuperstandard(const Partition& lambda);

  std::string str() const;
  static Tableau parse(std::string_view text);

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

// t_lambda first, the rest in lexicographic order of reading words
std::vector<Tableau> enumerateStandard(const Partition& lambda);

class Tabloid {
 public:
  Tabloid() = default;
  explicit Tabloid(std::vector<std::vector<int>> rows);  // rows sorted on construction
  static Tabloid of(const Tableau& t);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Tabloid mapEntries(const std::function<int(int)>& f) const;
  std::string str() const;

  friend bool operator==(const Tabloid& a, const Tabloid& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const Tabloid& a, const Tabloid& b) { return a.rows_ <=> b.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

std::vector<Tabloid> enumerateTabloids(const Partition& lambda);

std::vector<int> betaSequence(const Partition& lambda);
Partition fromBetaSequence(const std::vector<int>& beta);
// extended count of standard tableaux indexed by an arbitrary beta-sequence
std::int64_t signedD(std::vector<int> beta);

struct PowerDiagram {
  Partition shape;
  std::vector<std::vector<int>> values;
};

int nuP(std::uint64_t h, const ExtNat& p);
int nuEP(std::uint64_t h, const ExtNat& e, const ExtNat& p);
PowerDiagram powerDiagram(const Partition& lambda, const ExtNat& e, const ExtNat& p);
bool carterCondition(const PowerDiagram& diagram);

}  // namespace klrsk
