#include "relspace/contraction.h"

#include <algorithm>
#include <numeric>

#include "relspace/error.h"

namespace relspace {
namespace {

struct Table {
  std::vector<FactorGraph::Var> vars;  // distinct
  std::vector<Index> cells;
  std::size_t rows = 0;

  std::size_t width() const { return vars.size(); }
  const Index* row(std::size_t i) const { return cells.data() + i * width(); }
};

// Keeps only the columns listed in `cols` (indices into t.vars).
Table restrict(const Table& t, const std::vector<std::size_t>& cols) {
  Table out;
  for (std::size_t c : cols) out.vars.push_back(t.vars[c]);
  out.cells.reserve(t.rows * cols.size());
  for (std::size_t i = 0; i < t.rows; ++i) {
    const Index* r = t.row(i);
    for (std::size_t c : cols) out.cells.push_back(r[c]);
  }
  out.rows = normalize_rows(out.cells, cols.size(), t.rows);
  return out;
}

std::vector<std::size_t> sorted_by(const Table& t,
                                   const std::vector<std::size_t>& key) {
  std::vector<std::size_t> order(t.rows);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Index* ra = t.row(a);
    const Index* rb = t.row(b);
    for (std::size_t k : key) {
      if (ra[k] != rb[k]) return ra[k] < rb[k];
    }
    return false;
  });
  return order;
}

int compare_keys(const Index* a, const std::vector<std::size_t>& ka,
                 const Index* b, const std::vector<std::size_t>& kb) {
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (a[ka[i]] != b[kb[i]]) return a[ka[i]] < b[kb[i]] ? -1 : 1;
  }
  return 0;
}

// Natural join followed by projection onto `out_vars`.
Table join(const Table& a, const Table& b,
           const std::vector<FactorGraph::Var>& out_vars) {
  std::vector<std::size_t> ka, kb;
  for (std::size_t i = 0; i < a.vars.size(); ++i) {
    auto it = std::find(b.vars.begin(), b.vars.end(), a.vars[i]);
    if (it != b.vars.end()) {
      ka.push_back(i);
      kb.push_back(static_cast<std::size_t>(it - b.vars.begin()));
    }
  }
  // Where each output column comes from: (0, col) in a or (1, col) in b.
  std::vector<std::pair<int, std::size_t>> source;
  for (auto v : out_vars) {
    auto ia = std::find(a.vars.begin(), a.vars.end(), v);
    if (ia != a.vars.end()) {
      source.emplace_back(0, ia - a.vars.begin());
    } else {
      auto ib = std::find(b.vars.begin(), b.vars.end(), v);
      source.emplace_back(1, ib - b.vars.begin());
    }
  }

  Table out;
  out.vars = out_vars;
  const std::vector<std::size_t> oa = sorted_by(a, ka);
  const std::vector<std::size_t> ob = sorted_by(b, kb);
  std::size_t i = 0, j = 0, rows = 0;
  while (i < oa.size() && j < ob.size()) {
    const Index* ra = a.row(oa[i]);
    const Index* rb = b.row(ob[j]);
    int c = compare_keys(ra, ka, rb, kb);
    if (c < 0) { ++i; continue; }
    if (c > 0) { ++j; continue; }
    std::size_t i_end = i, j_end = j;
    while (i_end < oa.size() &&
           compare_keys(a.row(oa[i_end]), ka, rb, kb) == 0) ++i_end;
    while (j_end < ob.size() &&
           compare_keys(ra, ka, b.row(ob[j_end]), kb) == 0) ++j_end;
    for (std::size_t x = i; x < i_end; ++x) {
      const Index* rx = a.row(oa[x]);
      for (std::size_t y = j; y < j_end; ++y) {
        const Index* ry = b.row(ob[y]);
        for (auto [side, col] : source) {
          out.cells.push_back(side == 0 ? rx[col] : ry[col]);
        }
        ++rows;
      }
      // A projection onto no columns only needs one witness.
      if (out_vars.empty() && rows > 0) break;
    }
    if (out_vars.empty() && rows > 0) break;
    i = i_end;
    j = j_end;
  }
  out.rows = normalize_rows(out.cells, out_vars.size(), rows);
  return out;
}

}  // namespace

FactorGraph::Var FactorGraph::add_variable(CarrierPtr carrier) {
  carriers_.push_back(std::move(carrier));
  parent_.push_back(carriers_.size() - 1);
  return carriers_.size() - 1;
}

FactorGraph::Var FactorGraph::find(Var v) const {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

void FactorGraph::merge(Var a, Var b) {
  if (!same_carrier(carriers_.at(a), carriers_.at(b))) {
    throw Error(ErrorCode::kTypeMismatch,
                "wire joins carriers '" + carriers_[a]->name() + "' and '" +
                    carriers_[b]->name() + "'");
  }
  a = find(a);
  b = find(b);
  if (a != b) parent_[std::max(a, b)] = std::min(a, b);
}

void FactorGraph::add_factor(std::vector<Var> vars, const Relation& rel) {
  if (vars.size() != rel.arity()) {
    throw Error(ErrorCode::kTypeMismatch, "factor arity mismatch");
  }
  const PortType all = rel.dom() + rel.cod();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!same_carrier(carriers_.at(vars[i]), all[i])) {
      throw Error(ErrorCode::kTypeMismatch,
                  "factor column " + std::to_string(i) + " has carrier '" +
                      all[i]->name() + "' but the wire carries '" +
                      carriers_[vars[i]]->name() + "'");
    }
  }
  factors_.push_back(Factor{std::move(vars), rel.cells(), rel.size()});
}

Relation FactorGraph::solve(std::span<const Var> keep) const {
  PortType out_type;
  for (Var v : keep) out_type.push_back(carriers_.at(v));
  auto empty_result = [&]() {
    if (keep.empty()) return Relation::scalar(false);
    return Relation(PortType{}, out_type);
  };

  std::vector<Var> keep_roots;
  for (Var v : keep) keep_roots.push_back(find(v));
  auto is_kept = [&](Var r) {
    return std::find(keep_roots.begin(), keep_roots.end(), r) !=
           keep_roots.end();
  };

  // Canonicalize factors: map to roots, collapse repeated variables.
  std::vector<Table> tables;
  for (const auto& f : factors_) {
    std::vector<Var> roots;
    for (Var v : f.vars) roots.push_back(find(v));
    const std::size_t w = roots.size();
    Table t;
    std::vector<std::size_t> first(w);
    for (std::size_t i = 0; i < w; ++i) {
      auto it = std::find(t.vars.begin(), t.vars.end(), roots[i]);
      if (it == t.vars.end()) {
        first[i] = t.vars.size();
        t.vars.push_back(roots[i]);
      } else {
        first[i] = static_cast<std::size_t>(it - t.vars.begin());
      }
    }
    std::size_t rows = 0;
    std::vector<Index> row(t.vars.size());
    for (std::size_t r = 0; r < f.rows; ++r) {
      const Index* src = f.cells.data() + r * w;
      bool ok = true;
      std::vector<bool> set(t.vars.size(), false);
      for (std::size_t i = 0; i < w && ok; ++i) {
        if (set[first[i]]) {
          ok = row[first[i]] == src[i];
        } else {
          row[first[i]] = src[i];
          set[first[i]] = true;
        }
      }
      if (!ok) continue;
      t.cells.insert(t.cells.end(), row.begin(), row.end());
      ++rows;
    }
    t.rows = normalize_rows(t.cells, t.vars.size(), rows);
    if (t.rows == 0) return empty_result();
    tables.push_back(std::move(t));
  }

  // Variables touched by no factor range freely.  Dropping one is an
  // existential over its carrier, false exactly when the carrier is empty.
  std::vector<Var> constrained;
  for (const auto& t : tables) {
    constrained.insert(constrained.end(), t.vars.begin(), t.vars.end());
  }
  for (Var v = 0; v < carriers_.size(); ++v) {
    if (find(v) != v) continue;
    if (std::find(constrained.begin(), constrained.end(), v) ==
        constrained.end()) {
      if (carriers_[v]->empty()) return empty_result();
    }
  }

  auto used_elsewhere = [&](Var v, std::size_t skip_a, std::size_t skip_b) {
    for (std::size_t k = 0; k < tables.size(); ++k) {
      if (k == skip_a || k == skip_b) continue;
      const auto& vs = tables[k].vars;
      if (std::find(vs.begin(), vs.end(), v) != vs.end()) return true;
    }
    return false;
  };
  const std::size_t kNone = static_cast<std::size_t>(-1);

  // Drop private, unkept columns up front.
  for (std::size_t k = 0; k < tables.size(); ++k) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < tables[k].vars.size(); ++c) {
      Var v = tables[k].vars[c];
      if (is_kept(v) || used_elsewhere(v, k, kNone)) cols.push_back(c);
    }
    if (cols.size() != tables[k].vars.size()) tables[k] = restrict(tables[k], cols);
  }

  auto shares = [](const Table& a, const Table& b) {
    for (Var v : a.vars) {
      if (std::find(b.vars.begin(), b.vars.end(), v) != b.vars.end()) {
        return true;
      }
    }
    return false;
  };

  while (true) {
    // Fully contracted components without kept wires are scalars.
    for (std::size_t k = 0; k < tables.size();) {
      if (tables[k].vars.empty()) {
        if (tables[k].rows == 0) return empty_result();
        tables.erase(tables.begin() + k);
      } else {
        ++k;
      }
    }
    if (tables.size() <= 1) break;

    std::size_t best_a = kNone, best_b = kNone;
    std::size_t best_cost = static_cast<std::size_t>(-1);
    for (std::size_t a = 0; a < tables.size(); ++a) {
      for (std::size_t b = a + 1; b < tables.size(); ++b) {
        if (!shares(tables[a], tables[b])) continue;
        std::size_t cost = std::min(tables[a].rows, tables[b].rows) * 4 +
                           std::max(tables[a].rows, tables[b].rows);
        if (cost < best_cost) {
          best_cost = cost;
          best_a = a;
          best_b = b;
        }
      }
    }
    if (best_a == kNone) {
      // Disconnected pieces that all carry kept wires: cross product, the
      // two smallest first.
      std::vector<std::size_t> order(tables.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return tables[x].rows < tables[y].rows;
      });
      best_a = std::min(order[0], order[1]);
      best_b = std::max(order[0], order[1]);
    }

    std::vector<Var> out_vars;
    for (const Table* t : {&tables[best_a], &tables[best_b]}) {
      for (Var v : t->vars) {
        if (std::find(out_vars.begin(), out_vars.end(), v) != out_vars.end()) {
          continue;
        }
        if (is_kept(v) || used_elsewhere(v, best_a, best_b)) out_vars.push_back(v);
      }
    }
    Table joined = join(tables[best_a], tables[best_b], out_vars);
    if (joined.rows == 0) return empty_result();
    tables.erase(tables.begin() + best_b);
    tables[best_a] = std::move(joined);
  }

  // Assemble the output: the remaining table plus free kept variables.
  std::vector<Var> distinct;
  for (Var r : keep_roots) {
    if (std::find(distinct.begin(), distinct.end(), r) == distinct.end()) {
      distinct.push_back(r);
    }
  }
  Table base;
  base.rows = 1;
  if (!tables.empty()) base = std::move(tables.front());
  for (Var r : distinct) {
    if (std::find(base.vars.begin(), base.vars.end(), r) != base.vars.end()) {
      continue;
    }
    // Free kept variable: cross with its whole carrier.
    const std::size_t n = carriers_[r]->size();
    Table grown;
    grown.vars = base.vars;
    grown.vars.push_back(r);
    grown.cells.reserve(base.rows * n * grown.vars.size());
    for (std::size_t i = 0; i < base.rows; ++i) {
      for (Index e = 0; e < n; ++e) {
        grown.cells.insert(grown.cells.end(), base.row(i),
                           base.row(i) + base.vars.size());
        grown.cells.push_back(e);
      }
    }
    grown.rows = base.rows * n;
    base = std::move(grown);
  }
  if (keep.empty()) return Relation::scalar(base.rows > 0);

  std::vector<std::size_t> cols;
  for (Var r : keep_roots) {
    cols.push_back(static_cast<std::size_t>(
        std::find(base.vars.begin(), base.vars.end(), r) - base.vars.begin()));
  }
  std::vector<Index> cells;
  cells.reserve(base.rows * cols.size());
  for (std::size_t i = 0; i < base.rows; ++i) {
    const Index* row = base.row(i);
    for (std::size_t c : cols) cells.push_back(row[c]);
  }
  if (cells.empty()) return Relation(PortType{}, out_type);
  return Relation::from_cells(PortType{}, out_type, std::move(cells));
}

bool FactorGraph::satisfiable() const {
  return !solve(std::span<const Var>{}).empty();
}

}  // namespace relspace
