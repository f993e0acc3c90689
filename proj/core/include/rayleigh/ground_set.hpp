#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "rayleigh/subsets.hpp"

namespace rayleigh {

/// An ordered set of distinct element labels. The order is fixed at
/// construction; subsets are bitmasks over element indices. Immutable.
class GroundSet {
 public:
  static constexpr int kMaxElements = 64;

  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int index) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Index of a label, or -1 if absent.
  int find(const std::string& label) const;
  /// Index of a label; throws Error naming the element if absent.
  int index_of(const std::string& label) const;

  /// Mask with all elements present.
  Subset full_mask() const;
  /// Mask of the given labels; throws on unknown labels.
  Subset mask_of(const std::vector<std::string>& labels) const;
  /// Labels of the elements of `s`, in ground order.
  std::vector<std::string> labels_of(Subset s) const;

  /// Ground set with element `index` removed, order otherwise preserved.
  GroundSet without(int index) const;

  bool operator==(const GroundSet& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

/// A ground set split into named, disjoint, covering blocks. This is the
/// partition datum for Young-subgroup symmetry (block-permutation
/// invariance) and for the Grace-Walsh-Szego variable collapse.
class PartitionedGroundSet {
 public:
  PartitionedGroundSet(GroundSet ground,
                       std::vector<std::pair<std::string, Subset>> blocks);

  const GroundSet& ground() const { return ground_; }
  const std::vector<std::pair<std::string, Subset>>& blocks() const {
    return blocks_;
  }

 private:
  GroundSet ground_;
  std::vector<std::pair<std::string, Subset>> blocks_;
};

}  // namespace rayleigh
