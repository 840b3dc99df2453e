#include "relspace/relation.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "relspace/contraction.h"
#include "relspace/error.h"

namespace relspace {
namespace {

bool row_less(const Index* a, const Index* b, std::size_t n) {
  return std::lexicographical_compare(a, a + n, b, b + n);
}

void require_same(const PortType& a, const PortType& b, const char* what) {
  if (!(a == b)) {
    throw Error(ErrorCode::kTypeMismatch, std::string(what) + ": " +
                                              a.to_string() + " vs " +
                                              b.to_string());
  }
}

// Calls fn(tuple) for every tuple of the product type, in lexicographic
// order.
template <typename Fn>
void for_each_tuple(const PortType& t, Fn&& fn) {
  std::vector<Index> tuple(t.size(), 0);
  for (const auto& c : t) {
    if (c->empty()) return;
  }
  while (true) {
    fn(std::span<const Index>(tuple));
    std::size_t i = t.size();
    while (i > 0) {
      --i;
      if (++tuple[i] < t[i]->size()) break;
      tuple[i] = 0;
      if (i == 0) return;
    }
    if (t.size() == 0) return;
  }
}

}  // namespace

std::size_t normalize_rows(std::vector<Index>& cells, std::size_t arity,
                           std::size_t rows) {
  if (arity == 0) {
    cells.clear();
    return rows > 0 ? 1 : 0;
  }
  bool strictly_sorted = true;
  for (std::size_t i = 1; i < rows && strictly_sorted; ++i) {
    strictly_sorted = row_less(&cells[(i - 1) * arity], &cells[i * arity],
                               arity);
  }
  if (strictly_sorted) return rows;

  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), 0);
  const Index* base = cells.data();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return row_less(base + a * arity, base + b * arity, arity);
  });
  std::vector<Index> out;
  out.reserve(cells.size());
  std::size_t kept = 0;
  for (std::size_t k = 0; k < rows; ++k) {
    const Index* r = base + order[k] * arity;
    if (kept > 0 &&
        std::equal(r, r + arity, out.data() + (kept - 1) * arity)) {
      continue;
    }
    out.insert(out.end(), r, r + arity);
    ++kept;
  }
  cells.swap(out);
  return kept;
}

Relation::Relation(PortType dom, PortType cod)
    : dom_(std::move(dom)), cod_(std::move(cod)) {}

Relation Relation::from_cells(PortType dom, PortType cod,
                              std::vector<Index> cells) {
  RelationBuilder b(std::move(dom), std::move(cod));
  const std::size_t n = b.arity();
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "from_cells: use Relation::scalar for zero-arity relations");
  }
  if (cells.size() % n != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "from_cells: cell count is not a multiple of the arity");
  }
  for (std::size_t i = 0; i < cells.size(); i += n) {
    b.add(std::span<const Index>(cells.data() + i, n));
  }
  return std::move(b).build();
}

Relation Relation::scalar(bool value) {
  return Relation(PortType{}, PortType{}, {}, value ? 1 : 0);
}

bool Relation::contains(std::span<const Index> row) const {
  const std::size_t n = arity();
  if (row.size() != n) return false;
  if (n == 0) return rows_ > 0;
  std::size_t lo = 0, hi = rows_;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (row_less(cells_.data() + mid * n, row.data(), n)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < rows_ && std::equal(row.begin(), row.end(),
                                  cells_.data() + lo * n);
}

Relation Relation::resplit(std::size_t split) const {
  PortType all = dom_ + cod_;
  if (split > all.size()) {
    throw Error(ErrorCode::kInvalidArgument, "resplit: index out of range");
  }
  return Relation(all.slice(0, split), all.slice(split, all.size()), cells_,
                  rows_);
}

Relation Relation::retyped(PortType dom, PortType cod) const {
  require_same(dom_, dom, "retyped dom");
  require_same(cod_, cod, "retyped cod");
  return Relation(std::move(dom), std::move(cod), cells_, rows_);
}

std::string Relation::to_string() const {
  std::ostringstream out;
  out << dom_.to_string() << " -> " << cod_.to_string() << " {";
  const std::size_t d = dom_.size();
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", " : "") << "(";
    auto r = row(i);
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k) out << (k == d ? " ; " : " ");
      const auto& c = k < d ? dom_[k] : cod_[k - d];
      out << c->label(r[k]);
    }
    if (r.empty()) out << "*";
    out << ")";
  }
  out << "}";
  return out.str();
}

bool operator==(const Relation& a, const Relation& b) {
  return a.rows_ == b.rows_ && a.dom_ == b.dom_ && a.cod_ == b.cod_ &&
         a.cells_ == b.cells_;
}

RelationBuilder::RelationBuilder(PortType dom, PortType cod)
    : dom_(std::move(dom)), cod_(std::move(cod)),
      arity_(dom_.size() + cod_.size()) {}

void RelationBuilder::add(std::span<const Index> row) {
  if (row.size() != arity_) {
    throw Error(ErrorCode::kTypeMismatch, "row arity mismatch");
  }
  const std::size_t d = dom_.size();
  for (std::size_t k = 0; k < arity_; ++k) {
    const auto& c = k < d ? dom_[k] : cod_[k - d];
    if (row[k] >= c->size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "element index out of range for carrier '" + c->name() +
                      "'");
    }
  }
  cells_.insert(cells_.end(), row.begin(), row.end());
  ++rows_;
}

Relation RelationBuilder::build() && {
  std::size_t rows = normalize_rows(cells_, arity_, rows_);
  return Relation(std::move(dom_), std::move(cod_), std::move(cells_), rows);
}

// ---------------------------------------------------------------------------

Relation spider(const PortType& t, std::size_t m, std::size_t n) {
  RelationBuilder b(repeat(t, m), repeat(t, n));
  if (b.arity() == 0) {
    return Relation::scalar(t.cardinality() > 0);
  }
  std::vector<Index> row(b.arity());
  for_each_tuple(t, [&](std::span<const Index> x) {
    for (std::size_t leg = 0; leg < m + n; ++leg) {
      std::copy(x.begin(), x.end(), row.begin() + leg * t.size());
    }
    b.add(row);
  });
  return std::move(b).build();
}

Relation spider(const CarrierPtr& x, std::size_t m, std::size_t n) {
  return spider(PortType{x}, m, n);
}

Relation identity(const PortType& t) {
  if (t.empty()) return Relation::scalar(true);
  return spider(t, 1, 1);
}

Relation unknown(const PortType& t) {
  if (t.empty()) return Relation::scalar(true);
  return spider(t, 0, 1);
}
Relation unknown(const CarrierPtr& x) { return spider(x, 0, 1); }

Relation cap(const PortType& t) { return spider(t, 0, 2); }
Relation cap(const CarrierPtr& x) { return spider(x, 0, 2); }
Relation cup(const PortType& t) { return spider(t, 2, 0); }
Relation cup(const CarrierPtr& x) { return spider(x, 2, 0); }
Relation copy(const CarrierPtr& x) { return spider(x, 1, 2); }
Relation copy(const PortType& t) { return spider(t, 1, 2); }
Relation discard(const CarrierPtr& x) { return spider(x, 1, 0); }
Relation discard(const PortType& t) { return spider(t, 1, 0); }

Relation permutation(const PortType& t, std::span<const std::size_t> perm) {
  if (perm.size() != t.size()) {
    throw Error(ErrorCode::kInvalidArgument, "permutation: wrong length");
  }
  std::vector<bool> seen(t.size(), false);
  PortType out;
  for (std::size_t p : perm) {
    if (p >= t.size() || seen[p]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "permutation: not a permutation");
    }
    seen[p] = true;
    out.push_back(t[p]);
  }
  if (t.empty()) return Relation::scalar(true);
  RelationBuilder b(t, out);
  std::vector<Index> row(2 * t.size());
  for_each_tuple(t, [&](std::span<const Index> x) {
    std::copy(x.begin(), x.end(), row.begin());
    for (std::size_t i = 0; i < perm.size(); ++i) row[t.size() + i] = x[perm[i]];
    b.add(row);
  });
  return std::move(b).build();
}

Relation compose(const Relation& r, const Relation& s) {
  require_same(r.cod(), s.dom(), "compose");
  const std::size_t rd = r.dom().size(), k = r.cod().size();
  const std::size_t sc = s.cod().size();
  const std::size_t out_arity = rd + sc;
  std::vector<Index> cells;
  std::size_t rows = 0;
  const std::size_t sa = s.arity();
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto rrow = r.row(i);
    auto mid = rrow.subspan(rd, k);
    // Rows of s are sorted, so those starting with `mid` are contiguous.
    std::size_t lo = 0, hi = s.size();
    while (lo < hi) {
      std::size_t m = (lo + hi) / 2;
      if (std::lexicographical_compare(s.cells().data() + m * sa,
                                       s.cells().data() + m * sa + k,
                                       mid.begin(), mid.end())) {
        lo = m + 1;
      } else {
        hi = m;
      }
    }
    for (std::size_t j = lo; j < s.size(); ++j) {
      auto srow = s.row(j);
      if (!std::equal(mid.begin(), mid.end(), srow.begin())) break;
      cells.insert(cells.end(), rrow.begin(), rrow.begin() + rd);
      cells.insert(cells.end(), srow.begin() + k, srow.end());
      ++rows;
    }
  }
  if (out_arity == 0) return Relation::scalar(rows > 0);
  RelationBuilder b(r.dom(), s.cod());
  // Rows are already well-typed; normalize through the builder.
  b.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    b.add(std::span<const Index>(cells.data() + i * out_arity, out_arity));
  }
  return std::move(b).build();
}

Relation tensor(const Relation& r, const Relation& s) {
  const std::size_t rd = r.dom().size(), rc = r.cod().size();
  const std::size_t sd = s.dom().size(), scd = s.cod().size();
  PortType dom = r.dom() + s.dom();
  PortType cod = r.cod() + s.cod();
  if (dom.empty() && cod.empty()) {
    return Relation::scalar(!r.empty() && !s.empty());
  }
  RelationBuilder b(dom, cod);
  b.reserve(r.size() * s.size());
  std::vector<Index> row(b.arity());
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto a = r.row(i);
    for (std::size_t j = 0; j < s.size(); ++j) {
      auto c = s.row(j);
      auto it = std::copy(a.begin(), a.begin() + rd, row.begin());
      it = std::copy(c.begin(), c.begin() + sd, it);
      it = std::copy(a.begin() + rd, a.begin() + rd + rc, it);
      std::copy(c.begin() + sd, c.begin() + sd + scd, it);
      b.add(row);
    }
  }
  return std::move(b).build();
}

Relation apply_state(const Relation& box, const Relation& state) {
  if (!state.is_state()) {
    throw Error(ErrorCode::kTypeMismatch, "apply_state: not a state");
  }
  require_same(state.cod(), box.dom(), "apply_state");
  return compose(state, box);
}

Relation and_states(const Relation& q, const Relation& r) {
  if (!q.is_state() || !r.is_state()) {
    throw Error(ErrorCode::kTypeMismatch, "and: arguments must be states");
  }
  require_same(q.cod(), r.cod(), "and");
  // Both states feed the same merging spider on every wire; the spider legs
  // are one shared variable per wire.
  FactorGraph g;
  std::vector<FactorGraph::Var> wires;
  for (const auto& c : q.cod()) wires.push_back(g.add_variable(c));
  g.add_factor(wires, q);
  g.add_factor(wires, r);
  return g.solve(wires);
}

Relation power(const Relation& r, std::size_t n) {
  require_same(r.dom(), r.cod(), "power");
  Relation result = identity(r.dom());
  Relation base = r;
  while (n > 0) {
    if (n & 1) result = compose(result, base);
    n >>= 1;
    if (n) base = compose(base, base);
  }
  return result;
}

Relation bend(const Relation& r, std::size_t split) {
  const std::size_t a = r.dom().size();
  const std::size_t total = r.arity();
  if (split > total) {
    throw Error(ErrorCode::kInvalidArgument, "bend: split out of range");
  }
  if (split == a) return r;
  if (split < a) {
    // Bend the trailing dom wires M down into the cod with caps:
    //   D' --(id x cap_M)--> D' M M --(r x id_M)--> C M --perm--> M C
    PortType keep = r.dom().slice(0, split);
    PortType moved = r.dom().slice(split, a);
    Relation step = tensor(identity(keep), cap(moved));
    Relation applied = compose(step, tensor(r, identity(moved)));
    const std::size_t c = r.cod().size(), m = moved.size();
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < m; ++i) perm.push_back(c + i);
    for (std::size_t i = 0; i < c; ++i) perm.push_back(i);
    return compose(applied, permutation(r.cod() + moved, perm));
  }
  // Bend the leading cod wires N up into the dom with cups:
  //   D N --(r x id_N)--> N C' N --perm--> N N C' --(cup_N x id)--> C'
  const std::size_t nlen = split - a;
  PortType moved = r.cod().slice(0, nlen);
  PortType rest = r.cod().slice(nlen, r.cod().size());
  Relation applied = tensor(r, identity(moved));
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < nlen; ++i) perm.push_back(i);
  for (std::size_t i = 0; i < nlen; ++i) perm.push_back(r.cod().size() + i);
  for (std::size_t i = nlen; i < r.cod().size(); ++i) perm.push_back(i);
  Relation permuted = compose(applied, permutation(r.cod() + moved, perm));
  return compose(permuted, tensor(cup(moved), identity(rest)));
}

Relation converse(const Relation& r) {
  const std::size_t d = r.dom().size(), c = r.cod().size();
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < c; ++i) order.push_back(d + i);
  for (std::size_t i = 0; i < d; ++i) order.push_back(i);
  return permute_columns(r, order, c);
}

Relation permute_columns(const Relation& r, std::span<const std::size_t> order,
                         std::size_t split) {
  const std::size_t n = r.arity();
  if (order.size() != n || split > n) {
    throw Error(ErrorCode::kInvalidArgument, "permute_columns: bad order");
  }
  PortType all = r.dom() + r.cod();
  std::vector<bool> seen(n, false);
  PortType out;
  for (std::size_t o : order) {
    if (o >= n || seen[o]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "permute_columns: not a permutation");
    }
    seen[o] = true;
    out.push_back(all[o]);
  }
  if (n == 0) return r;
  std::vector<Index> cells;
  cells.reserve(r.cells().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto row = r.row(i);
    for (std::size_t o : order) cells.push_back(row[o]);
  }
  return Relation::from_cells(out.slice(0, split), out.slice(split, n),
                              std::move(cells));
}

Relation project(const Relation& state, std::span<const std::size_t> columns) {
  if (!state.is_state()) {
    throw Error(ErrorCode::kTypeMismatch, "project: not a state");
  }
  PortType cod;
  for (std::size_t c : columns) {
    if (c >= state.cod().size()) {
      throw Error(ErrorCode::kInvalidArgument, "project: column out of range");
    }
    cod.push_back(state.cod()[c]);
  }
  if (columns.empty()) return Relation::scalar(!state.empty());
  std::vector<Index> cells;
  cells.reserve(state.size() * columns.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    auto row = state.row(i);
    for (std::size_t c : columns) cells.push_back(row[c]);
  }
  return Relation::from_cells(PortType{}, std::move(cod), std::move(cells));
}

bool is_subset(const Relation& a, const Relation& b) {
  require_same(a.dom(), b.dom(), "subset dom");
  require_same(a.cod(), b.cod(), "subset cod");
  if (a.size() > b.size()) return false;
  const std::size_t n = a.arity();
  if (n == 0) return a.empty() || !b.empty();
  std::size_t j = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto row = a.row(i);
    while (j < b.size() && row_less(b.row(j).data(), row.data(), n)) ++j;
    if (j == b.size() || !std::equal(row.begin(), row.end(), b.row(j).begin())) {
      return false;
    }
    ++j;
  }
  return true;
}

}  // namespace relspace
