#include <gtest/gtest.h>

#include "octosieve/json_io.hpp"

namespace octosieve {
namespace {

TEST(JsonIo, TripletsForm) {
    const auto j = json::triplets(AlgebraId(1));
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["parity"], "++--+--");
    EXPECT_EQ(j["chirality"], "left");
    EXPECT_EQ(j["triplets"][2], nlohmann::json({5, 2, 7}));
    EXPECT_EQ(j["triplets"].size(), 7u);
}

TEST(JsonIo, TableRoundTrip) {
    for (const AlgebraId n : all_algebras()) {
        const auto j = json::table(n);
        EXPECT_EQ(identify_algebra(json::mul_table_from_json(j["table"])), n);
    }
    EXPECT_EQ(json::table(AlgebraId(0))["table"][1][2], "+i3");
    EXPECT_EQ(json::table(AlgebraId(0))["table"][3][3], "-1");
}

TEST(JsonIo, TableRejectsGarbage) {
    auto rows = json::table(AlgebraId(0))["table"];
    rows[1][2] = "+i9";
    EXPECT_THROW((void)json::mul_table_from_json(rows), NotAnEquivalentAlgebra);
    EXPECT_THROW((void)json::mul_table_from_json(nlohmann::json::array()), NotAnEquivalentAlgebra);
}

TEST(JsonIo, OrbitForm) {
    const auto j = json::orbit_table();
    ASSERT_EQ(j["orbit"].size(), 16u);
    EXPECT_EQ(j["orbit"][5]["generator"], "T1*T3");
    EXPECT_EQ(j["orbit"][5]["parity"], "--+++--");
    EXPECT_EQ(j["orbit"][8]["chirality"], "right");
}

TEST(JsonIo, Witnesses) {
    EXPECT_TRUE(json::witness(std::optional<InvarianceWitness>{}).is_null());
    const InvarianceWitness w{{{"a", Octonion::unit(1)}}, 3, Octonion::unit(2)};
    const auto j = json::witness(std::optional<InvarianceWitness>{w});
    EXPECT_EQ(j["index"], 3);
    EXPECT_EQ(j["assignment"]["a"][1], 1.0);
}

}  // namespace
}  // namespace octosieve
