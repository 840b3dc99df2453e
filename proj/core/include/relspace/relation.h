#ifndef RELSPACE_RELATION_H_
#define RELSPACE_RELATION_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "relspace/carrier.h"

namespace relspace {

// A finite relation dom -> cod, stored as a sorted set of rows.  A row is the
// dom tuple followed by the cod tuple, each entry an element index into the
// corresponding carrier.  Rows are kept in lexicographic order without
// duplicates, so two relations are equal iff their types and row arrays are.
class Relation {
 public:
  // The empty relation of the given type.
  Relation(PortType dom, PortType cod);

  // Sorts and deduplicates.  `cells` holds rows back to back; every entry is
  // range-checked against its carrier.
  static Relation from_cells(PortType dom, PortType cod,
                             std::vector<Index> cells);
  // As above, for rows of zero arity: a scalar that is either true or false.
  static Relation scalar(bool value);

  const PortType& dom() const { return dom_; }
  const PortType& cod() const { return cod_; }
  std::size_t arity() const { return dom_.size() + cod_.size(); }
  std::size_t size() const { return rows_; }
  bool empty() const { return rows_ == 0; }

  bool is_state() const { return dom_.empty(); }
  bool is_test() const { return cod_.empty(); }
  bool is_scalar() const { return dom_.empty() && cod_.empty(); }

  std::span<const Index> row(std::size_t i) const {
    return {cells_.data() + i * arity(), arity()};
  }
  const std::vector<Index>& cells() const { return cells_; }

  bool contains(std::span<const Index> row) const;
  bool contains(std::initializer_list<Index> row) const {
    return contains(std::span<const Index>(row.begin(), row.size()));
  }

  // Same tuple set, split after the first `split` columns.  No caps or cups
  // are involved; see bend() for the diagrammatic route.
  Relation resplit(std::size_t split) const;

  // Same rows reinterpreted over structurally equal carriers.
  Relation retyped(PortType dom, PortType cod) const;

  std::string to_string() const;

  friend bool operator==(const Relation& a, const Relation& b);

 private:
  Relation(PortType dom, PortType cod, std::vector<Index> cells,
           std::size_t rows)
      : dom_(std::move(dom)), cod_(std::move(cod)), cells_(std::move(cells)),
        rows_(rows) {}

  PortType dom_;
  PortType cod_;
  std::vector<Index> cells_;
  std::size_t rows_ = 0;

  friend class RelationBuilder;
};

// Accumulates rows, then normalizes once.
class RelationBuilder {
 public:
  RelationBuilder(PortType dom, PortType cod);

  void add(std::span<const Index> row);
  void add(std::initializer_list<Index> row) {
    add(std::span<const Index>(row.begin(), row.size()));
  }
  void reserve(std::size_t rows) { cells_.reserve(rows * arity_); }
  std::size_t arity() const { return arity_; }

  Relation build() &&;

 private:
  PortType dom_;
  PortType cod_;
  std::size_t arity_;
  std::vector<Index> cells_;
  std::size_t rows_ = 0;
};

// Sorts the rows of a flat cell array of the given arity and removes
// duplicates.  Returns the resulting row count.
std::size_t normalize_rows(std::vector<Index>& cells, std::size_t arity,
                           std::size_t rows);

// ---------------------------------------------------------------------------
// Generators.

Relation identity(const PortType& t);
Relation unknown(const PortType& t);
Relation unknown(const CarrierPtr& x);

// cap: {*} -> t t, cup: t t -> {*}.  On a bundle, leg i of the second copy
// equals leg i of the first.
Relation cap(const PortType& t);
Relation cap(const CarrierPtr& x);
Relation cup(const PortType& t);
Relation cup(const CarrierPtr& x);

// All m inputs and n outputs carry the same value.  Each leg is a whole
// bundle `t`; legs are laid out one after the other.
Relation spider(const PortType& t, std::size_t m, std::size_t n);
Relation spider(const CarrierPtr& x, std::size_t m, std::size_t n);
Relation copy(const CarrierPtr& x);
Relation copy(const PortType& t);
Relation discard(const CarrierPtr& x);
Relation discard(const PortType& t);

// Wire permutation t -> t' with output wire i taken from input wire perm[i].
Relation permutation(const PortType& t, std::span<const std::size_t> perm);

// ---------------------------------------------------------------------------
// Composition.

// s after r: {(x, z) | exists y. r(x, y) and s(y, z)}.
Relation compose(const Relation& r, const Relation& s);
// Parallel composition; dom and cod are concatenated.
Relation tensor(const Relation& r, const Relation& s);
// The forward image of a state under a box.
Relation apply_state(const Relation& box, const Relation& state);
// Intersection of two states of the same type, wired through merging
// spiders.
Relation and_states(const Relation& q, const Relation& r);
// n-fold composite of an endo-relation; power(r, 0) is the identity.
Relation power(const Relation& r, std::size_t n);
// Moves the dom/cod split to `split` using caps and cups.
Relation bend(const Relation& r, std::size_t split);
// Swap of dom and cod.
Relation converse(const Relation& r);

// Reorders the columns of a relation: the result's columns are the input's
// columns `order` (dom and cod concatenated), the first `split` of them
// becoming the new dom.  `order` must be a permutation.
Relation permute_columns(const Relation& r, std::span<const std::size_t> order,
                         std::size_t split);

// Keeps the listed cod columns of a state, existentially dropping the rest.
// Columns may repeat.
Relation project(const Relation& state, std::span<const std::size_t> columns);

// Subset test on relations of identical type.
bool is_subset(const Relation& a, const Relation& b);

}  // namespace relspace

#endif  // RELSPACE_RELATION_H_
