#ifndef RELSPACE_CARRIER_H_
#define RELSPACE_CARRIER_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace relspace {

// Position of an element inside its carrier.
using Index = std::uint32_t;

// A named finite ordered set of labels: the value set a wire ranges over.
// Element order is the canonical indexing used by every relation.
class Carrier {
 public:
  Carrier(std::string name, std::vector<std::string> labels);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::string& label(Index i) const { return labels_.at(i); }
  std::optional<Index> find(std::string_view label) const;
  // Throws kInvalidArgument when the label is absent.
  Index index_of(std::string_view label) const;

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.name_ == b.name_ && a.labels_ == b.labels_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> lookup_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

// Labels must be distinct.
CarrierPtr make_carrier(std::string name, std::vector<std::string> labels);

// Carrier with labels "0", "1", ..., "n-1".
CarrierPtr make_range_carrier(std::string name, std::size_t n);

bool same_carrier(const CarrierPtr& a, const CarrierPtr& b);

// Ordered list of carriers; the empty list is the monoidal unit {*}.
class PortType {
 public:
  PortType() = default;
  PortType(std::initializer_list<CarrierPtr> carriers) : carriers_(carriers) {}
  explicit PortType(std::vector<CarrierPtr> carriers)
      : carriers_(std::move(carriers)) {}

  std::size_t size() const { return carriers_.size(); }
  bool empty() const { return carriers_.empty(); }
  const CarrierPtr& operator[](std::size_t i) const { return carriers_[i]; }
  const std::vector<CarrierPtr>& carriers() const { return carriers_; }
  auto begin() const { return carriers_.begin(); }
  auto end() const { return carriers_.end(); }

  void push_back(CarrierPtr c) { carriers_.push_back(std::move(c)); }

  // Number of tuples of the product; saturates at SIZE_MAX.
  std::size_t cardinality() const;

  PortType slice(std::size_t begin, std::size_t end) const;
  std::string to_string() const;

  friend bool operator==(const PortType& a, const PortType& b);
  friend PortType operator+(const PortType& a, const PortType& b);

 private:
  std::vector<CarrierPtr> carriers_;
};

// n copies of the same bundle, concatenated.
PortType repeat(const PortType& t, std::size_t n);

}  // namespace relspace

#endif  // RELSPACE_CARRIER_H_
