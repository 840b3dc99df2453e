#include <random>

#include "doctest.h"
#include "oracles.h"
#include "relspace/error.h"
#include "relspace/relation.h"

using namespace relspace;
using relspace::testing::oracle_compose;
using relspace::testing::random_relation;
using relspace::testing::random_state;
using relspace::testing::sized_carrier;

namespace {

CarrierPtr ab() { return make_carrier("ab", {"a", "b"}); }
CarrierPtr abc() { return make_carrier("abc", {"a", "b", "c"}); }

Relation box(const CarrierPtr& x, std::initializer_list<std::pair<Index, Index>> pairs) {
  RelationBuilder b({x}, {x});
  for (auto [p, q] : pairs) b.add({p, q});
  return std::move(b).build();
}

Relation state(const CarrierPtr& x, std::initializer_list<Index> members) {
  RelationBuilder b({}, {x});
  for (Index m : members) b.add({m});
  return std::move(b).build();
}

}  // namespace

TEST_SUITE("relation") {

TEST_CASE("carriers compare structurally") {
  CHECK(*make_carrier("x", {"a", "b"}) == *make_carrier("x", {"a", "b"}));
  CHECK_FALSE(*make_carrier("x", {"a", "b"}) == *make_carrier("x", {"b", "a"}));
  CHECK(make_range_carrier("r", 3)->labels() ==
        std::vector<std::string>{"0", "1", "2"});
  CHECK_THROWS_AS(make_carrier("x", {"a", "a"}), Error);
  CHECK(abc()->index_of("c") == 2);
  CHECK_FALSE(abc()->find("d").has_value());
  CHECK((PortType{ab(), abc()}).cardinality() == 6);
  CHECK(PortType{}.cardinality() == 1);
}

TEST_CASE("rows are sorted and deduplicated") {
  const Relation r = Relation::from_cells({ab()}, {ab()}, {1, 0, 0, 1, 1, 0});
  CHECK(r.size() == 2);
  CHECK(r.row(0)[0] == 0);
  CHECK(r.contains({1, 0}));
  CHECK_FALSE(r.contains({0, 0}));
  CHECK_THROWS_AS(Relation::from_cells({ab()}, {ab()}, {0, 2}), Error);
}

TEST_CASE("identity") {
  CHECK(identity({ab()}) == box(ab(), {{0, 0}, {1, 1}}));
  const Relation unit = identity({});
  CHECK(unit.is_scalar());
  CHECK(unit.size() == 1);
  CHECK(unit == Relation::scalar(true));
  const Relation r = box(abc(), {{0, 1}, {2, 2}});
  CHECK(compose(identity({abc()}), r) == r);
  CHECK(compose(r, identity({abc()})) == r);
}

TEST_CASE("compose by hand") {
  const auto x = abc();
  const Relation r = box(x, {{0, 1}, {1, 2}});
  const Relation s = box(x, {{1, 0}, {2, 0}, {2, 1}});
  CHECK(compose(r, s) == box(x, {{0, 0}, {1, 0}, {1, 1}}));
  CHECK_THROWS_AS(compose(r, box(ab(), {})), Error);
}

TEST_CASE("compose agrees with the witness oracle on five elements") {
  std::mt19937_64 rng(7);
  const auto x = make_range_carrier("five", 5);
  for (int i = 0; i < 50; ++i) {
    const Relation r = random_relation(rng, {x}, {x});
    const Relation s = random_relation(rng, {x}, {x});
    CHECK(compose(r, s) == oracle_compose(r, s));
  }
}

TEST_CASE("compose is associative with two-sided unit") {
  std::mt19937_64 rng(11);
  const auto x = make_range_carrier("six", 6);
  for (int i = 0; i < 30; ++i) {
    const Relation r = random_relation(rng, {x}, {x}, 0.2);
    const Relation s = random_relation(rng, {x}, {x}, 0.2);
    const Relation t = random_relation(rng, {x}, {x}, 0.2);
    CHECK(compose(compose(r, s), t) == compose(r, compose(s, t)));
    CHECK(compose(identity({x}), r) == r);
  }
}

TEST_CASE("tensor") {
  const auto x = ab();
  const Relation all = tensor(unknown(x), unknown(x));
  CHECK(all.is_state());
  CHECK(all.size() == 4);
  const Relation r = box(x, {{0, 1}});
  CHECK(tensor(r, identity({})) == r);
  CHECK(tensor(identity({}), r) == r);
  const Relation rr = tensor(r, box(x, {{1, 1}, {1, 0}}));
  CHECK(rr.dom().size() == 2);
  CHECK(rr.contains({0, 1, 1, 1}));
  CHECK(rr.contains({0, 1, 1, 0}));
  CHECK(rr.size() == 2);
}

TEST_CASE("tensor is associative and satisfies interchange") {
  std::mt19937_64 rng(5);
  const auto x = sized_carrier(2), y = sized_carrier(3);
  for (int i = 0; i < 30; ++i) {
    const Relation r = random_relation(rng, {x}, {y});
    const Relation r2 = random_relation(rng, {y}, {x});
    const Relation s = random_relation(rng, {y}, {x});
    const Relation s2 = random_relation(rng, {x}, {x});
    const Relation t = random_relation(rng, {x}, {x});
    CHECK(tensor(tensor(r, s), t) == tensor(r, tensor(s, t)));
    CHECK(tensor(compose(r, r2), compose(s, s2)) ==
          compose(tensor(r, s), tensor(r2, s2)));
  }
}

TEST_CASE("caps, cups and spiders") {
  const auto x = abc();
  const Relation c = cap(x);
  CHECK(c.is_state());
  CHECK(c.size() == 3);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(c.row(i)[0] == c.row(i)[1]);
  CHECK(cup(x) == converse(cap(x)));
  CHECK(compose(cap(x), cup(x)) == Relation::scalar(true));
  CHECK(compose(cap(sized_carrier(0)), cup(sized_carrier(0))) ==
        Relation::scalar(false));
  CHECK(spider(x, 1, 1) == identity({x}));
  CHECK(spider(x, 0, 2) == cap(x));
  CHECK(spider(x, 2, 0) == cup(x));
  CHECK(spider(x, 2, 3).size() == 3);
  // Copy then merge on both legs fuses to a single wire.
  CHECK(compose(spider(x, 1, 2), spider(x, 2, 1)) == identity({x}));
  CHECK(compose(copy(x), tensor(identity({x}), discard(x))) == identity({x}));
}

TEST_CASE("copy and delete") {
  const auto x = ab();
  RelationBuilder b({x}, {x, x});
  b.add({0, 0, 0});
  b.add({1, 1, 1});
  CHECK(copy(x) == std::move(b).build());
  CHECK(discard(x) == spider(x, 1, 0));
  CHECK(compose(state(x, {1}), discard(x)) == Relation::scalar(true));
  CHECK(compose(state(x, {}), discard(x)) == Relation::scalar(false));
  CHECK(compose(unknown(x), discard(x)) == Relation::scalar(true));
}

TEST_CASE("and and unknown") {
  const auto x = make_range_carrier("r5", 5);
  const Relation q = state(x, {0, 2, 3});
  const Relation r = state(x, {2, 3, 4});
  CHECK(and_states(q, r) == state(x, {2, 3}));
  CHECK(and_states(q, q) == q);
  CHECK(and_states(unknown(x), q) == q);
  CHECK(and_states(state(x, {}), q).empty());
  CHECK(unknown(x).size() == 5);
  CHECK_THROWS_AS(and_states(q, state(ab(), {0})), Error);
  CHECK_THROWS_AS(and_states(q, identity({x})), Error);
}

TEST_CASE("apply_state") {
  const auto x = abc();
  const Relation r = box(x, {{0, 1}, {0, 2}, {1, 0}});
  CHECK(apply_state(r, state(x, {0})) == state(x, {1, 2}));
  CHECK(apply_state(r, state(x, {0, 1})) == state(x, {0, 1, 2}));
  CHECK(apply_state(r, state(x, {2})).empty());
  CHECK_THROWS_AS(apply_state(r, state(ab(), {0})), Error);
}

TEST_CASE("bend and resplit") {
  const auto x = abc();
  const Relation r = box(x, {{0, 1}, {2, 2}});
  const Relation st = bend(r, 0);
  CHECK(st.is_state());
  CHECK(st.cod().size() == 2);
  CHECK(st.contains({0, 1}));
  CHECK(bend(st, 1) == r);
  CHECK(st == r.resplit(0));
  CHECK(bend(r, 2).is_test());
  CHECK(bend(bend(r, 2), 1) == r);
  CHECK_THROWS_AS(bend(r, 3), Error);
}

TEST_CASE("power") {
  const auto x = make_range_carrier("r4", 4);
  const Relation succ = box(x, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(power(succ, 0) == identity({x}));
  CHECK(power(succ, 1) == succ);
  CHECK(power(succ, 3) == box(x, {{0, 3}}));
  CHECK(power(succ, 4).empty());
  CHECK_THROWS_AS(power(tensor(succ, unknown(x)), 2), Error);
}

TEST_CASE("converse, permutation and projection") {
  const auto x = abc();
  const Relation r = box(x, {{0, 1}});
  CHECK(converse(r) == box(x, {{1, 0}}));
  const std::vector<std::size_t> swap = {1, 0};
  const Relation sw = permutation({x, x}, swap);
  CHECK(sw.size() == 9);
  CHECK(sw.contains({0, 2, 2, 0}));
  RelationBuilder b({}, {x, x});
  b.add({0, 1});
  b.add({0, 2});
  b.add({1, 1});
  const Relation pair = std::move(b).build();
  const std::vector<std::size_t> first = {0};
  CHECK(project(pair, first) == state(x, {0, 1}));
  const std::vector<std::size_t> none;
  CHECK(project(pair, none) == Relation::scalar(true));
  CHECK(permute_columns(pair, swap, 0).contains({2, 0}));
}

TEST_CASE("empty carriers degrade to empty relations") {
  const auto e = sized_carrier(0);
  CHECK(unknown(e).empty());
  CHECK(identity({e}).empty());
  CHECK(compose(identity({e}), identity({e})).empty());
  CHECK(tensor(unknown(e), unknown(abc())).empty());
}

TEST_CASE("subset") {
  std::mt19937_64 rng(3);
  const auto x = sized_carrier(4);
  const Relation q = random_state(rng, {x, x});
  CHECK(is_subset(q, unknown(PortType{x, x})));
  CHECK(is_subset(Relation({}, {x, x}), q));
  CHECK(is_subset(q, q));
}

}  // TEST_SUITE
