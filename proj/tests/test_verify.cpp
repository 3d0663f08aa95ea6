#include <doctest.h>

#include "beireg/examples.hpp"
#include "beireg/prufer.hpp"
#include "beireg/verify.hpp"

using namespace beireg;

TEST_CASE("formula checks pass on the examples") {
  for (const Tree& t : {fig2_tree(), gamma_tree(4), jewel10_tree(), two_jewel_chain_tree()})
    CHECK(formula_checks(t).empty());
}

TEST_CASE("oracle checks pass on small trees") {
  VerifyOptions opts;
  std::mt19937_64 rng(12);
  for (int k = 0; k < 30; ++k) {
    const Tree t = random_tree(uniform_int(rng, 1, 8), rng);
    std::vector<VerifyFailure> div;
    CHECK(oracle_checks(t, opts, static_cast<std::uint64_t>(k), &div).empty());
    CHECK(div.empty());
  }
  CHECK(oracle_checks(jewel10_tree(), opts, 0).empty());
}

TEST_CASE("gluing identities") {
  std::size_t count = 0;
  const auto failures = gluing_checks({}, {}, &count);
  CHECK(failures.empty());
  CHECK(count >= 20);
}

TEST_CASE("exhaustive small run") {
  VerifyOptions opts;
  opts.exhaustive_n = 5;
  opts.gluing = false;
  const auto r = run_verify(opts);
  CHECK(r.cases == 1 + 1 + 3 + 16 + 125);
  CHECK(r.oracle_cases == r.cases);
  CHECK(r.ok());
}

TEST_CASE("reports do not depend on the thread count") {
  VerifyOptions opts;
  opts.random = 40;
  opts.max_n = 7;
  opts.seed = 5;
  opts.gluing = false;
  opts.threads = 1;
  const auto one = run_verify(opts);
  opts.threads = 4;
  const auto four = run_verify(opts);
  CHECK(format_verify(one) == format_verify(four));
  CHECK(verify_to_json(one) == verify_to_json(four));
}

TEST_CASE("formula-only mode skips the oracle") {
  VerifyOptions opts;
  opts.random = 500;
  opts.max_n = 40;
  opts.formula_only = true;
  const auto r = run_verify(opts);
  CHECK(r.cases == 500);
  CHECK(r.oracle_cases == 0);
  CHECK(r.gluing_cases == 0);
  CHECK(r.ok());
}

TEST_CASE("lattice cap propagates out of oracle checks") {
  VerifyOptions opts;
  opts.limits.max_lattice = 5;
  CHECK_THROWS(oracle_checks(jewel10_tree(), opts, 0));
}

TEST_CASE("tree code") {
  CHECK(tree_code(SimpleGraph::path(3)) == "n=3 1-2 2-3");
}
