#include "ggl/scan.hpp"

#include "../support/helpers.hpp"

#include <doctest.h>

#include <sstream>

using namespace ggl;

TEST_CASE("scan row for a reference semigroup") {
    const auto row = scan_one({3, 7, 8});
    CHECK(to_csv(row) == "3,7,8;3;3;2;5;4;2;4;2;false;false;true;true;false;true;6|7|8;true;true");
    CHECK(row_from_csv(to_csv(row)) == row);
    CHECK(to_jsonl(row).find("\"gens\":[3,7,8]") != std::string::npos);
}

TEST_CASE("the header matches the row layout") {
    const std::string header = csv_header;
    CHECK(header.rfind("gens;e;v;r;f;genus", 0) == 0);
    CHECK(std::count(header.begin(), header.end(), ';') == 17);
}

TEST_CASE("three-generated family") {
    const auto family = three_generated_family(15);
    CHECK(family.size() == 148);
    for (const auto& g : family) {
        REQUIRE(g.size() == 3);
        CHECK(g[0] < g[1]);
        CHECK(g[1] < g[2]);
        CHECK(g[2] <= 15);
    }
    CHECK(three_generated_family(3).empty());
}

TEST_CASE("scans are deterministic across worker counts") {
    auto inputs = three_generated_family(14);
    const auto one = run_scan(inputs, 1);
    const auto four = run_scan(inputs, 4);
    CHECK(one == four);
    for (std::size_t k = 0; k + 1 < one.size(); ++k) CHECK(one[k].gens < one[k + 1].gens);
    for (const auto& row : one) CHECK(row.route_consistent);
}

TEST_CASE("generator files") {
    std::istringstream in("# comment\n3,7,8\n\n5 6 8  # trailing\n4, 7, 9, 10\n");
    const auto gens = read_gens_file(in);
    CHECK(gens == std::vector<std::vector<int>>{{3, 7, 8}, {5, 6, 8}, {4, 7, 9, 10}});

    std::istringstream empty("");
    CHECK(read_gens_file(empty).empty());
    CHECK(run_scan({}, 2).empty());

    std::istringstream bad("3,x,8\n");
    CHECK(testing::kind_of([&] { read_gens_file(bad); }) == ErrorKind::PreconditionFailed);
}
