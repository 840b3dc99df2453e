#include "relspace/carrier.h"

#include <limits>
#include <sstream>

#include "relspace/error.h"

namespace relspace {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTypeMismatch: return "TypeMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUnboundBox: return "UnboundBox";
    case ErrorCode::kUnboundRelation: return "UnboundRelation";
    case ErrorCode::kUnknownWord: return "UnknownWord";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kNoParse: return "NoParse";
    case ErrorCode::kLexicon: return "LexiconError";
    case ErrorCode::kScene: return "SceneError";
    case ErrorCode::kSizeBound: return "SizeBound";
    case ErrorCode::kMalformedDiagram: return "MalformedDiagram";
  }
  return "Error";
}

Carrier::Carrier(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)) {
  lookup_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = lookup_.emplace(labels_[i], static_cast<Index>(i));
    if (!inserted) {
      throw Error(ErrorCode::kInvalidArgument,
                  "carrier '" + name_ + "': duplicate label '" + labels_[i] +
                      "'");
    }
  }
}

std::optional<Index> Carrier::find(std::string_view label) const {
  auto it = lookup_.find(std::string(label));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Index Carrier::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorCode::kInvalidArgument, "carrier '" + name_ +
                                               "' has no element '" +
                                               std::string(label) + "'");
}

CarrierPtr make_carrier(std::string name, std::vector<std::string> labels) {
  return std::make_shared<const Carrier>(std::move(name), std::move(labels));
}

CarrierPtr make_range_carrier(std::string name, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return make_carrier(std::move(name), std::move(labels));
}

bool same_carrier(const CarrierPtr& a, const CarrierPtr& b) {
  return a == b || (a && b && *a == *b);
}

std::size_t PortType::cardinality() const {
  std::size_t n = 1;
  for (const auto& c : carriers_) {
    if (c->size() == 0) return 0;
    if (n > std::numeric_limits<std::size_t>::max() / c->size()) {
      return std::numeric_limits<std::size_t>::max();
    }
    n *= c->size();
  }
  return n;
}

PortType PortType::slice(std::size_t begin, std::size_t end) const {
  return PortType(std::vector<CarrierPtr>(carriers_.begin() + begin,
                                          carriers_.begin() + end));
}

std::string PortType::to_string() const {
  if (carriers_.empty()) return "{*}";
  std::ostringstream out;
  for (std::size_t i = 0; i < carriers_.size(); ++i) {
    if (i) out << " x ";
    out << carriers_[i]->name();
  }
  return out.str();
}

bool operator==(const PortType& a, const PortType& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_carrier(a[i], b[i])) return false;
  }
  return true;
}

PortType operator+(const PortType& a, const PortType& b) {
  std::vector<CarrierPtr> all(a.carriers_);
  all.insert(all.end(), b.carriers_.begin(), b.carriers_.end());
  return PortType(std::move(all));
}

PortType repeat(const PortType& t, std::size_t n) {
  PortType out;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& c : t) out.push_back(c);
  }
  return out;
}

}  // namespace relspace
