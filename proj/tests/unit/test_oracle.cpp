#include <doctest.h>

#include "oracle.hpp"

TEST_CASE("shipped constants match an exact rational derivation") {
  const auto checks = oracle::run_all();
  CHECK(checks.size() == 16u);
  for (const auto& c : checks) {
    INFO(c.name);
    CHECK(c.ok);
  }
}
