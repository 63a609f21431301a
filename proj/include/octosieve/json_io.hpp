#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "octosieve/algebra.hpp"
#include "octosieve/automorphism.hpp"
#include "octosieve/derivations.hpp"
#include "octosieve/errors.hpp"
#include "octosieve/expr.hpp"
#include "octosieve/sieve.hpp"

// JSON forms consumed by scripts reading CLI output. Every top-level
// document carries "schema": 1.

namespace octosieve::json {

using nlohmann::json;

inline constexpr int schema_version = 1;

inline json octonion(const Octonion& o) {
    json a = json::array();
    for (double c : o.coeffs) a.push_back(c);
    return a;
}

inline json assignment(const Assignment& env) {
    json obj = json::object();
    for (const auto& [name, value] : env) obj[name] = octonion(value);
    return obj;
}

inline json family(const std::array<Octonion, 16>& values) {
    json a = json::array();
    for (const auto& v : values) a.push_back(octonion(v));
    return a;
}

/// "+1", "-1", "+i3", "-i7".
inline std::string signed_basis(const SignedBasis& e) {
    std::string s(1, e.sign < 0 ? '-' : '+');
    if (e.index == 0) return s + "1";
    return s + "i" + std::to_string(e.index);
}

inline SignedBasis parse_signed_basis(std::string_view s) {
    if (s.size() < 2 || (s[0] != '+' && s[0] != '-')) throw NotAnEquivalentAlgebra("bad table entry");
    const std::int8_t sign = s[0] == '-' ? -1 : 1;
    if (s.substr(1) == "1") return {sign, 0};
    if (s.size() == 3 && s[1] == 'i' && s[2] >= '1' && s[2] <= '7') {
        return {sign, static_cast<std::uint8_t>(s[2] - '0')};
    }
    throw NotAnEquivalentAlgebra("bad table entry");
}

inline json triplets(AlgebraId n) {
    const OrientedTripletSet ts = triplet_set(n);
    json list = json::array();
    for (const Triplet& t : ts.triplets()) list.push_back({t.idx[0], t.idx[1], t.idx[2]});
    return {
        {"schema", schema_version},
        {"algebra", n.value()},
        {"chirality", to_string(n.chirality())},
        {"parity", ts.parity.to_string()},
        {"triplets", list},
    };
}

inline json table(AlgebraId n) {
    const MulTable& t = mul_table(n);
    json rows = json::array();
    for (const auto& row : t.entries) {
        json r = json::array();
        for (const auto& e : row) r.push_back(signed_basis(e));
        rows.push_back(r);
    }
    return {
        {"schema", schema_version},
        {"algebra", n.value()},
        {"parity", parity_word(n).to_string()},
        {"table", rows},
    };
}

/// Inverse of the "table" field of table().
inline MulTable mul_table_from_json(const json& rows) {
    if (!rows.is_array() || rows.size() != 8) throw NotAnEquivalentAlgebra("table must have 8 rows");
    MulTable t;
    for (std::size_t l = 0; l < 8; ++l) {
        if (!rows[l].is_array() || rows[l].size() != 8) throw NotAnEquivalentAlgebra("table rows must have 8 entries");
        for (std::size_t m = 0; m < 8; ++m) t.entries[l][m] = parse_signed_basis(rows[l][m].get<std::string>());
    }
    return t;
}

inline json orbit_table() {
    json entries = json::array();
    for (const OrbitEntry& e : orbit()) {
        entries.push_back({
            {"algebra", e.id.value()},
            {"generator", e.generator.word()},
            {"parity", e.parity.to_string()},
            {"chirality", to_string(e.id.chirality())},
        });
    }
    return {{"schema", schema_version}, {"orbit", entries}};
}

inline json witness(const std::optional<InvarianceWitness>& w) {
    if (!w) return nullptr;
    return {{"assignment", assignment(w->assignment)}, {"index", w->index}, {"distance", octonion(w->distance)}};
}

inline json witness(const std::optional<DerivationWitness>& w) {
    if (!w) return nullptr;
    return {
        {"assignment", assignment(w->assignment)},
        {"algebra", w->algebra},
        {"value", octonion(w->value)},
        {"reference", octonion(w->reference)},
    };
}

inline json regime(const RegimeVerdict& r) {
    return {{"all_equal", r.all_equal}, {"trials", r.trials}, {"witness", witness(r.witness)}};
}

}  // namespace octosieve::json
