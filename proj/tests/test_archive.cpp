#include "kintraj/archive.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace kintraj;

TEST_CASE("archive round trip preserves everything including the hash") {
    const TrajectoryPair pair = build_pair(2);
    const Json doc = pair_to_archive(pair);
    const TrajectoryPair loaded = pair_from_archive(doc);
    CHECK(loaded.k == pair.k);
    CHECK(loaded.root_denom == pair.root_denom);
    CHECK(loaded.a == pair.a);
    CHECK(loaded.b == pair.b);
    CHECK(archive_content_hash(loaded) == doc.at("content_hash").get<std::string>());
    // identical builds serialize byte-identically
    CHECK(pair_to_archive(build_pair(2)).dump() == doc.dump());
}

TEST_CASE("poly records use fraction strings") {
    const TrajectoryPair pair = build_pair(1);
    const Json doc = pair_to_archive(pair);
    // a21 = (21/2) r / sigma - (21/2) r^(3/2) / sigma
    const Json& entry = doc.at("a").at(1).at(0);
    REQUIRE(entry.size() == 2);
    CHECK(entry.at(0).at("coeff") == "21/2");
    CHECK(entry.at(0).at("r_exp") == "1");
    CHECK(entry.at(0).at("sigma_exp") == -1);
    CHECK(entry.at(1).at("coeff") == "-21/2");
    CHECK(entry.at(1).at("r_exp") == "3/2");
}

TEST_CASE("tampering is detected through the content hash") {
    Json doc = pair_to_archive(build_pair(1));
    doc["a"][0][0][0]["coeff"] = "8";  // was 7
    CHECK_THROWS_AS(pair_from_archive(doc), std::runtime_error);
}

TEST_CASE("file round trip") {
    const std::string path = "/tmp/kintraj_test_archive.json";
    const TrajectoryPair pair = build_pair(3);
    write_archive(pair, path);
    const TrajectoryPair loaded = read_archive(path);
    CHECK(loaded.a == pair.a);
    CHECK(loaded.b == pair.b);
    std::remove(path.c_str());
}
