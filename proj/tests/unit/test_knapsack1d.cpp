#include <random>

#include "doctest.h"
#include "polypack/errors.hpp"
#include "polypack/knapsack1d.hpp"
#include "support.hpp"

using namespace polypack;

namespace {

std::vector<KnapsackItem> random_items(std::mt19937_64& rng, int n, int max_size, int max_profit) {
    std::uniform_int_distribution<int> s(1, max_size), p(1, max_profit);
    std::vector<KnapsackItem> items;
    for (int i = 0; i < n; ++i) items.push_back({double(s(rng)), double(p(rng)), i + 1});
    return items;
}

}  // namespace

TEST_CASE("exact knapsack on three items") {
    std::vector<KnapsackItem> items{{3, 10, 1}, {4, 40, 2}, {5, 30, 3}};
    auto ids = knapsack_exact(items, 7, 7);
    CHECK(total_profit(items, ids) == doctest::Approx(50));
    CHECK(total_size(items, ids) <= 7);
}

TEST_CASE("empty and zero capacity") {
    std::vector<KnapsackItem> none;
    CHECK(knapsack_exact(none, 5, 5).empty());
    CHECK(knapsack_fptas(none, 5, 0.1).empty());
    std::vector<KnapsackItem> items{{1, 1, 1}};
    CHECK(knapsack_fptas(items, 0, 0.1).empty());
}

TEST_CASE("negative capacity and bad parameters throw") {
    std::vector<KnapsackItem> items{{1, 1, 1}};
    CHECK_THROWS_AS(knapsack_exact(items, -1, 4), CapacityNegative);
    CHECK_THROWS_AS(knapsack_fptas(items, -1, 0.1), CapacityNegative);
    CHECK_THROWS_AS(two_knapsack(items, -1, 0.1), CapacityNegative);
    CHECK_THROWS_AS(knapsack_fptas(items, 1, 0.0), Error);
    CHECK_THROWS_AS(knapsack_exact(items, 1, 0), Error);
}

TEST_CASE("exact knapsack on integer sizes matches brute force") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 200; ++rep) {
        auto items = random_items(rng, 12, 20, 50);
        double cap = std::uniform_int_distribution<int>(5, 80)(rng);
        auto ids = knapsack_exact(items, cap, static_cast<int>(cap));
        CHECK(total_size(items, ids) <= cap);
        CHECK(total_profit(items, ids) == doctest::Approx(testsupport::brute_knapsack(items, cap)));
    }
}

TEST_CASE("fptas stays within 1 - eps of the optimum") {
    std::mt19937_64 rng(19);
    for (double eps : {0.1, 0.05, 0.01}) {
        for (int rep = 0; rep < 100; ++rep) {
            auto items = random_items(rng, 14, 30, 100);
            double cap = std::uniform_int_distribution<int>(10, 120)(rng);
            auto ids = knapsack_fptas(items, cap, eps);
            CHECK(total_size(items, ids) <= cap + 1e-9);
            CHECK(total_profit(items, ids) >= (1 - eps) * testsupport::brute_knapsack(items, cap) - 1e-9);
        }
    }
}

TEST_CASE("fptas handles fractional sizes") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> s(0.01, 1.0), p(0.1, 5.0);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<KnapsackItem> items;
        for (int i = 0; i < 12; ++i) items.push_back({s(rng), p(rng), i});
        auto ids = knapsack_fptas(items, 2.0, 0.1);
        CHECK(total_size(items, ids) <= 2.0 + 1e-12);
        CHECK(total_profit(items, ids) >= 0.9 * testsupport::brute_knapsack(items, 2.0) - 1e-9);
    }
}

TEST_CASE("two knapsacks are disjoint and near the ternary optimum") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 100; ++rep) {
        auto items = random_items(rng, 8, 20, 60);
        double cap = std::uniform_int_distribution<int>(5, 50)(rng);
        auto [a, b] = two_knapsack(items, cap, 0.05);
        CHECK(total_size(items, a) <= cap + 1e-9);
        CHECK(total_size(items, b) <= cap + 1e-9);
        for (int x : a) CHECK(std::find(b.begin(), b.end(), x) == b.end());
        double got = total_profit(items, a) + total_profit(items, b);
        CHECK(got >= 0.95 * testsupport::brute_two_knapsack(items, cap) - 1e-9);
    }
}
