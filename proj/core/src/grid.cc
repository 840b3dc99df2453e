#include "relspace/grid.h"

#include <algorithm>
#include <charconv>

#include "relspace/error.h"

namespace relspace {

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::kInvalidArgument,
                "not a rational number: '" + std::string(text) + "'");
  };
  auto parse_int = [&](std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) fail();
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    long long den = parse_int(text.substr(slash + 1));
    if (den == 0) fail();
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 12 || frac[0] == '-' || frac[0] == '+') {
      fail();
    }
    long long scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::string_view whole = text.substr(0, dot);
    const bool negative = whole.starts_with('-');
    long long w = (whole.empty() || whole == "-") ? 0 : parse_int(whole);
    long long f = parse_int(frac);
    Rational q(std::abs(w) * scale + f, scale);
    return negative ? -q : q;
  }
  return Rational(parse_int(text));
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Grid::Grid(GridSpec spec) : spec_(std::move(spec)) {
  if (spec_.axes.empty()) throw Error(ErrorCode::kScene, "grid without axes");
  if (spec_.resolution <= 0 || spec_.time_resolution <= 0) {
    throw Error(ErrorCode::kScene, "grid resolution must be positive");
  }
  std::size_t count = 1;
  for (std::size_t i = 0; i < spec_.axes.size(); ++i) {
    const Axis& a = spec_.axes[i];
    if (a.hi < a.lo) {
      throw Error(ErrorCode::kScene, "empty range on axis " + a.name);
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (spec_.axes[j].name == a.name) {
        throw Error(ErrorCode::kScene, "duplicate axis " + a.name);
      }
    }
    if (a.name == "z") z_ = i;
    if (a.name == "t") t_ = i;
    count *= static_cast<std::size_t>(a.hi - a.lo + 1);
    check_space_size(count, "grid");
  }
  std::vector<std::string> labels;
  labels.reserve(count);
  coords_.reserve(count);
  std::vector<int> c;
  for (const Axis& a : spec_.axes) c.push_back(a.lo);
  for (std::size_t n = 0; n < count; ++n) {
    labels.push_back(point_label(c));
    coords_.push_back(c);
    for (std::size_t i = c.size(); i-- > 0;) {
      if (++c[i] <= spec_.axes[i].hi) break;
      c[i] = spec_.axes[i].lo;
    }
  }
  points_ = make_carrier("point", std::move(labels));
  space_ = Space{"grid", {points_}};
  for (const Feature& f : spec_.features) {
    if (!f.values.empty() && f.values.size() != f.labels.size()) {
      throw Error(ErrorCode::kScene, "feature " + f.name +
                                         " needs one value per label");
    }
    space_ = augment(space_, make_carrier(f.name, f.labels));
  }
}

std::optional<std::size_t> Grid::find_axis(std::string_view name) const {
  for (std::size_t i = 0; i < spec_.axes.size(); ++i) {
    if (spec_.axes[i].name == name) return i;
  }
  return std::nullopt;
}

Index Grid::point(std::span<const int> c) const {
  if (c.size() != spec_.axes.size()) {
    throw Error(ErrorCode::kInvalidArgument, "wrong number of coordinates");
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Axis& a = spec_.axes[i];
    if (c[i] < a.lo || c[i] > a.hi) {
      throw Error(ErrorCode::kInvalidArgument,
                  "point " + point_label(c) + " is off the grid");
    }
    idx = idx * static_cast<std::size_t>(a.hi - a.lo + 1) +
          static_cast<std::size_t>(c[i] - a.lo);
  }
  return static_cast<Index>(idx);
}

std::string Grid::point_label(std::span<const int> c) const {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(c[i]);
  }
  return out + ")";
}

std::size_t Grid::feature_factor(std::string_view name) const {
  return space_.factor_index(std::string(name));
}

const Feature& Grid::numeric_feature(std::string_view name) const {
  for (const Feature& f : spec_.features) {
    if (f.name == name) {
      if (f.values.empty()) break;
      return f;
    }
  }
  throw Error(ErrorCode::kScene,
              "grid has no numeric feature '" + std::string(name) + "'");
}

long long Grid::planar_dist2(const std::vector<int>& a,
                             const std::vector<int>& b, bool include_z) const {
  long long d2 = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == t_ || (!include_z && i == z_)) continue;
    const long long d = a[i] - b[i];
    d2 += d * d;
  }
  return d2;
}

Relation Grid::point_relation(
    const std::function<bool(const std::vector<int>&,
                             const std::vector<int>&)>& pred) const {
  RelationBuilder b({points_}, {points_});
  const Index n = static_cast<Index>(points_->size());
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      if (pred(coords_[p], coords_[q])) b.add({p, q});
    }
  }
  return widen(std::move(b).build(), space_);
}

Relation Grid::higher_than() const {
  if (!z_) throw Error(ErrorCode::kScene, "grid has no z axis");
  const std::size_t z = *z_;
  return point_relation([z](const auto& ref, const auto& head) {
    return head[z] > ref[z];
  });
}

Relation Grid::above() const {
  if (!z_) throw Error(ErrorCode::kScene, "grid has no z axis");
  const std::size_t z = *z_;
  return point_relation([z](const auto& ref, const auto& head) {
    if (head[z] <= ref[z]) return false;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      if (i != z && ref[i] != head[i]) return false;
    }
    return true;
  });
}

Relation Grid::close_to(const Rational& metres) const {
  const Rational limit = (metres / spec_.resolution) * (metres / spec_.resolution);
  return point_relation([&](const auto& a, const auto& b) {
    if (z_ && a[*z_] != b[*z_]) return false;
    if (t_ && a[*t_] != b[*t_]) return false;
    return Rational(planar_dist2(a, b, false)) <= limit;
  });
}

Relation Grid::in_between() const {
  RelationBuilder b({}, {points_, points_, points_});
  const Index n = static_cast<Index>(points_->size());
  const std::size_t dims = spec_.axes.size();
  std::vector<long long> u(dims), v(dims);
  for (Index a = 0; a < n; ++a) {
    for (Index m = 0; m < n; ++m) {
      for (Index c = 0; c < n; ++c) {
        long long dot = 0, len2 = 0;
        for (std::size_t i = 0; i < dims; ++i) {
          u[i] = coords_[m][i] - coords_[a][i];
          v[i] = coords_[c][i] - coords_[a][i];
          dot += u[i] * v[i];
          len2 += v[i] * v[i];
        }
        if (dot <= 0 || dot >= len2) continue;
        bool collinear = true;
        for (std::size_t i = 0; i < dims && collinear; ++i) {
          for (std::size_t j = i + 1; j < dims; ++j) {
            if (u[i] * v[j] != u[j] * v[i]) {
              collinear = false;
              break;
            }
          }
        }
        if (collinear) b.add({a, m, c});
      }
    }
  }
  return std::move(b).build();
}

Relation Grid::chases(const Rational& seconds) const {
  if (!t_) throw Error(ErrorCode::kScene, "grid has no time axis");
  const Rational steps = seconds / spec_.time_resolution;
  if (steps.denominator() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "time offset " + to_string(seconds) +
                    " s is not a whole number of steps");
  }
  const long long dt = steps.numerator();
  const std::size_t t = *t_;
  return point_relation([t, dt](const auto& chaser, const auto& chased) {
    for (std::size_t i = 0; i < chaser.size(); ++i) {
      if (i != t && chaser[i] != chased[i]) return false;
    }
    return chaser[t] == chased[t] + dt;
  });
}

Relation Grid::chases_any() const {
  if (!t_) throw Error(ErrorCode::kScene, "grid has no time axis");
  const std::size_t t = *t_;
  return point_relation([t](const auto& chaser, const auto& chased) {
    for (std::size_t i = 0; i < chaser.size(); ++i) {
      if (i != t && chaser[i] != chased[i]) return false;
    }
    return chaser[t] > chased[t];
  });
}

Relation Grid::region(
    const std::map<std::string, std::pair<int, int>>& box) const {
  std::vector<std::pair<std::size_t, std::pair<int, int>>> ranges;
  for (const auto& [name, range] : box) {
    auto axis = find_axis(name);
    if (!axis) throw Error(ErrorCode::kScene, "region uses unknown axis " + name);
    ranges.emplace_back(*axis, range);
  }
  RelationBuilder b({}, {points_});
  for (Index p = 0; p < points_->size(); ++p) {
    bool in = std::all_of(ranges.begin(), ranges.end(), [&](const auto& r) {
      const int c = coords_[p][r.first];
      return c >= r.second.first && c <= r.second.second;
    });
    if (in) b.add({p});
  }
  return widen_state(std::move(b).build(), space_);
}

Relation Grid::region(const std::vector<std::string>& members) const {
  RelationBuilder b({}, {points_});
  for (const auto& m : members) b.add({points_->index_of(m)});
  return widen_state(std::move(b).build(), space_);
}

Relation Grid::feature_state(std::string_view feature,
                             const std::vector<std::string>& labels) const {
  const std::size_t f = feature_factor(feature);
  const PortType& factors = space_.factors;
  std::vector<bool> allowed(factors[f]->size(), false);
  for (const auto& l : labels) allowed[factors[f]->index_of(l)] = true;
  RelationBuilder b({}, factors);
  const Relation all = unknown(factors);
  for (std::size_t r = 0; r < all.size(); ++r) {
    if (allowed[all.row(r)[f]]) b.add(all.row(r));
  }
  return std::move(b).build();
}

Relation Grid::inside_extent() const {
  const Feature& radius = numeric_feature("radius");
  const CarrierPtr& rc = space_.factors[feature_factor("radius")];
  RelationBuilder b({points_, rc}, {points_, rc});
  const Index n = static_cast<Index>(points_->size());
  const Index nr = static_cast<Index>(rc->size());
  for (Index p = 0; p < n; ++p) {
    for (Index r = 0; r < nr; ++r) {
      for (Index q = 0; q < n; ++q) {
        for (Index s = 0; s < nr; ++s) {
          const Rational outer = radius.values[r], inner = radius.values[s];
          if (outer <= 0 || inner <= 0 || outer <= inner) continue;
          const Rational gap = (outer - inner) / spec_.resolution;
          if (Rational(planar_dist2(coords_[p], coords_[q], true)) <
              gap * gap) {
            b.add({p, r, q, s});
          }
        }
      }
    }
  }
  return std::move(b).build();
}

Relation Grid::inside() const {
  if (feature_factor("radius") != 1) {
    throw Error(ErrorCode::kScene, "radius must be the first grid feature");
  }
  return widen(inside_extent(), space_);
}

Relation Grid::can_capture_hunt() const {
  const Feature& endurance = numeric_feature("endurance");
  const Feature& speed = numeric_feature("speed");
  const std::size_t ef = feature_factor("endurance");
  const std::size_t sf = feature_factor("speed");
  const PortType& factors = space_.factors;
  const Relation all = unknown(factors);
  const Rational kmh_to_ms(5, 18);
  const std::size_t ne = endurance.values.size(), ns = speed.values.size();
  // reach^2 per (hunter endurance, hunter speed, prey endurance, prey speed);
  // zero marks "never".
  std::vector<Rational> reach2(ne * ns * ne * ns, Rational(0));
  for (std::size_t a = 0; a < ne; ++a)
    for (std::size_t b2 = 0; b2 < ns; ++b2)
      for (std::size_t c = 0; c < ne; ++c)
        for (std::size_t d = 0; d < ns; ++d) {
          const Rational eh = endurance.values[a], sh = speed.values[b2];
          const Rational ep = endurance.values[c], sp = speed.values[d];
          const Rational reach =
              (eh * sh - std::min(ep, eh) * sp) * kmh_to_ms / spec_.resolution;
          if (reach > 0) reach2[((a * ns + b2) * ne + c) * ns + d] = reach * reach;
        }
  RelationBuilder b(factors, factors);
  std::vector<Index> row(2 * factors.size());
  for (std::size_t h = 0; h < all.size(); ++h) {
    auto hunter = all.row(h);
    for (std::size_t p = 0; p < all.size(); ++p) {
      auto prey = all.row(p);
      const Rational& r2 =
          reach2[((hunter[ef] * ns + hunter[sf]) * ne + prey[ef]) * ns + prey[sf]];
      if (r2 <= 0) continue;
      const long long d2 =
          planar_dist2(coords_[hunter[0]], coords_[prey[0]], true);
      if (d2 * r2.denominator() < r2.numerator()) {
        std::copy(hunter.begin(), hunter.end(), row.begin());
        std::copy(prey.begin(), prey.end(), row.begin() + factors.size());
        b.add(row);
      }
    }
  }
  return std::move(b).build();
}

Scene Grid::scene() const {
  Scene s;
  s.kind = "grid";
  s.space = space_;
  s.label_factors = {0};
  return s;
}

}  // namespace relspace
