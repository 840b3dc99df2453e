#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "properties.h"

namespace rt = relspace::testing;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr std::size_t kCases = 1000;

void expect_clean(const rt::PropertyReport& r) {
  INFO(r.name << ": " << r.first_failure);
  CHECK(r.cases >= kCases);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("snake equations") { expect_clean(rt::snake_equations(kSeed, kCases)); }
TEST_CASE("spider fusion") { expect_clean(rt::spider_fusion(kSeed, kCases)); }
TEST_CASE("yank") { expect_clean(rt::yanking(kSeed, kCases)); }
TEST_CASE("compose oracle") { expect_clean(rt::compose_oracle(kSeed, kCases)); }
TEST_CASE("tensor oracle") { expect_clean(rt::tensor_oracle(kSeed, kCases)); }
TEST_CASE("apply_state oracle") {
  expect_clean(rt::apply_state_oracle(kSeed, kCases));
}
TEST_CASE("and is intersection") {
  expect_clean(rt::and_is_intersection(kSeed, kCases));
}
TEST_CASE("update laws") { expect_clean(rt::update_laws(kSeed, kCases)); }
TEST_CASE("infers preorder") { expect_clean(rt::infers_preorder(kSeed, kCases)); }
TEST_CASE("bend round trip") { expect_clean(rt::bend_round_trip(kSeed, kCases)); }
