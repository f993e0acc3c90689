#include "rayleigh/ground_set.hpp"

#include "rayleigh/error.hpp"

namespace rayleigh {

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) > kMaxElements) {
    throw SizeError("ground set exceeds " + std::to_string(kMaxElements) +
                    " elements");
  }
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    const auto [it, inserted] = index_.emplace(labels_[i], i);
    if (!inserted) {
      throw Error("duplicate ground element '" + labels_[i] + "'");
    }
  }
}

const std::string& GroundSet::label(int index) const {
  return labels_.at(static_cast<std::size_t>(index));
}

int GroundSet::find(const std::string& label) const {
  const auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

int GroundSet::index_of(const std::string& label) const {
  const int i = find(label);
  if (i < 0) {
    throw Error("unknown ground element '" + label + "'");
  }
  return i;
}

Subset GroundSet::full_mask() const {
  return size() == kMaxElements ? ~Subset{0}
                                : (subset_bit(size()) - 1);
}

Subset GroundSet::mask_of(const std::vector<std::string>& labels) const {
  Subset s = 0;
  for (const auto& l : labels) {
    s |= subset_bit(index_of(l));
  }
  return s;
}

std::vector<std::string> GroundSet::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (int i : subset_indices(s)) {
    out.push_back(label(i));
  }
  return out;
}

GroundSet GroundSet::without(int index) const {
  std::vector<std::string> rest;
  rest.reserve(labels_.size() - 1);
  for (int i = 0; i < size(); ++i) {
    if (i != index) rest.push_back(labels_[static_cast<std::size_t>(i)]);
  }
  return GroundSet(std::move(rest));
}

PartitionedGroundSet::PartitionedGroundSet(
    GroundSet ground, std::vector<std::pair<std::string, Subset>> blocks)
    : ground_(std::move(ground)), blocks_(std::move(blocks)) {
  Subset seen = 0;
  for (const auto& [name, mask] : blocks_) {
    if (mask == 0) {
      throw Error("empty partition block '" + name + "'");
    }
    if ((mask & seen) != 0) {
      throw Error("partition blocks overlap at '" + name + "'");
    }
    if ((mask & ~ground_.full_mask()) != 0) {
      throw Error("partition block '" + name + "' leaves the ground set");
    }
    seen |= mask;
  }
  if (seen != ground_.full_mask()) {
    throw Error("partition blocks do not cover the ground set");
  }
}

}  // namespace rayleigh
