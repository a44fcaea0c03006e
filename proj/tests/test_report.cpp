#include <gtest/gtest.h>

#include <sstream>

#include "support/fixtures.hpp"

using namespace szeged;
using namespace szeged::testing;

TEST(Report, JsonLayout) {
  auto r = weighted_suite_cut(fullerene_patch(), theta_star_partition(fullerene_patch()), false);
  auto j = to_json(r);
  EXPECT_EQ(j["method"], "cut");
  EXPECT_EQ(j["starred"], false);
  EXPECT_EQ(j["wSz"], "9200");
  EXPECT_EQ(j["wPI_v"], "2400");
  EXPECT_EQ(j["wSz_e"], "10760");
  EXPECT_EQ(j["wPI"], "2760");
  EXPECT_EQ(j["per_class"].size(), 6u);
  EXPECT_FALSE(j.contains("nonstandard_region"));
  r.nonstandard_region = true;
  EXPECT_EQ(to_json(r)["nonstandard_region"], true);
}

TEST(Report, JsonRoundTrip) {
  IndexReport r;
  r.method = Method::formula;
  r.starred = true;
  r.totals = {Exact::parse("170141183460469231731687303715884105727"), 2, 3, 4};
  r.per_class.push_back({0, 7, r.totals});
  r.nonstandard_region = true;
  auto back = report_from_json(nlohmann::ordered_json::parse(to_json(r).dump()));
  EXPECT_EQ(back.method, r.method);
  EXPECT_EQ(back.starred, r.starred);
  EXPECT_EQ(back.totals, r.totals);
  ASSERT_EQ(back.per_class.size(), 1u);
  EXPECT_EQ(back.per_class[0].edge_count, 7u);
  EXPECT_EQ(back.per_class[0].values, r.totals);
  EXPECT_TRUE(back.nonstandard_region);
  EXPECT_THROW(report_from_json(nlohmann::ordered_json::parse(R"({"method":"guess"})")),
               std::invalid_argument);
}

TEST(Report, TextLayout) {
  auto r = weighted_suite_direct(cycle_graph(6), true);
  std::ostringstream out;
  write_text(out, r);
  EXPECT_EQ(out.str(),
            "method direct\nwSz* 216\nwPI_v* 144\nwSz_e* 96\nwPI* 96\n"
            "class 0 edges 6 216 144 96 96\n");
}

TEST(Report, KindNames) {
  EXPECT_EQ(to_string(IndexKind::SZ), "Sz");
  EXPECT_EQ(to_string(IndexKind::SZ_T), "Sz_t");
  EXPECT_EQ(std::size(kAllIndexKinds), 5u);
}
