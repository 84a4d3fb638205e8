#include "doctest.h"

#include "absarith/nimber.hpp"
#include "absarith/scan.hpp"

using namespace absarith;

// The OpenMP kernels must agree bit-for-bit with their serial references.

TEST_CASE("graph scan: parallel equals serial") {
  for (const char* spec : {"2", "3/2", "-7/3"}) {
    RationalMap q = RationalMap::parse(spec);
    CHECK(graph_scan(q, 5000) == graph_scan_serial(q, 5000));
  }
}

TEST_CASE("order scan: parallel equals serial") {
  CHECK(order_scan(2, 1, 20000) == order_scan_serial(2, 1, 20000));
  CHECK(order_scan(9, 2, 5000) == order_scan_serial(9, 2, 5000));
}

TEST_CASE("mex table: wavefront equals row order") {
  CHECK(mex_table_parallel(64) == mex_table_serial(64));
  CHECK(mex_table_parallel(300) == mex_table_serial(300));
}

TEST_CASE("deterministic repetition") {
  RationalMap q = RationalMap::parse("2");
  auto a = graph_scan(q, 3000);
  auto b = graph_scan(q, 3000);
  CHECK(a == b);
}
