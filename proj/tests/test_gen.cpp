#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "spiderkit/gen.hpp"
#include "spiderkit/spider.hpp"

using namespace spiderkit;
using namespace spiderkit::test;

TEST_CASE("random_graph determinism and extremes") {
  CHECK(random_graph(6, 0.5, 42) == random_graph(6, 0.5, 42));
  CHECK(random_graph(6, 0.0, 1) == Graph(6));
  CHECK(random_graph(6, 1.0, 1) == complete_graph(6));
  CHECK_THROWS_AS(random_graph(4, 1.5, 0), std::invalid_argument);
}

TEST_CASE("random_thin_spider") {
  SUBCASE("s=3 with P4 head reproduces the running example's sequence") {
    GeneratedSpider sp = random_thin_spider(3, path_graph(4), 1);
    CHECK(degree_sequence(sp.graph) == example_spider_sequence());
    CHECK(verify_thin(sp.graph, sp.partition).ok);
  }
  SUBCASE("s=2 with empty head is a P4") {
    GeneratedSpider sp = random_thin_spider(2, Graph(0), 1);
    CHECK(classify(sp.graph) == SpiderClass::Both);
  }
  SUBCASE("s=2 with one head vertex") {
    GeneratedSpider sp = random_thin_spider(2, Graph(1), 1);
    auto s = counts_to_list(degree_sequence(sp.graph));
    CHECK(s == DegreeList{3, 3, 2, 1, 1});
  }
  SUBCASE("s < 2 is rejected") {
    CHECK_THROWS_AS(random_thin_spider(1, Graph(0), 1), std::invalid_argument);
  }
}

TEST_CASE("recognition recovers the generated partition exactly") {
  std::mt19937_64 seeds(11);
  for (int i = 0; i < 300; ++i) {
    std::size_t s = 2 + seeds() % 7;
    Graph head = random_graph(seeds() % 8, 0.4, seeds());
    std::uint64_t seed = seeds();
    GeneratedSpider sp = random_thin_spider(s, head, seed);
    auto p = recognize_thin(sp.graph);
    REQUIRE(p);
    CHECK(p->body == sp.partition.body);
    CHECK(p->legs == sp.partition.legs);
    CHECK(p->head == sp.partition.head);
    // the body-leg matching of a thin spider is unique, so it must agree
    CHECK(p->matching == sp.partition.matching);
    CHECK(sp.graph == random_thin_spider(s, head, seed).graph);  // determinism
  }
}

TEST_CASE("generated thick spiders are recognized with flipped roles") {
  std::mt19937_64 seeds(17);
  for (int i = 0; i < 100; ++i) {
    std::size_t s = 2 + seeds() % 5;
    Graph head = random_graph(seeds() % 6, 0.4, seeds());
    GeneratedSpider sp = random_thick_spider(s, head, seeds());
    auto p = recognize_thick(sp.graph);
    REQUIRE(p);
    CHECK(p->body == sp.partition.body);
    CHECK(p->legs == sp.partition.legs);
    CHECK(verify_thick(sp.graph, sp.partition).ok);
  }
}

TEST_CASE("random_p4_sparse") {
  CHECK(random_p4_sparse(10, 0, 1).vertex_count() == 1);
  CHECK(random_p4_sparse(12, 3, 9) == random_p4_sparse(12, 3, 9));
  CHECK_THROWS_AS(random_p4_sparse(0, 3, 1), std::invalid_argument);
}
