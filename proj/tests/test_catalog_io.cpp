#include "abtv/io.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace abtv;

TEST_CASE("catalog ships the expected presentations") {
    const auto entries = catalog();
    REQUIRE(entries.size() >= 6);

    const auto find = [&](const std::string& name) -> const CatalogEntry& {
        for (const auto& e : entries)
            if (e.name == name) return e;
        REQUIRE_MESSAGE(false, "catalog entry missing: ", name);
        return entries.front();
    };

    CHECK(find("S3").surgery.components() == 0);
    CHECK(find("S3").complex.has_value());
    CHECK(find("S1xS2").surgery.linking == int_matrix({{0}}));
    CHECK(find("L(7,1)").surgery.linking == int_matrix({{7}}));
    CHECK(find("PoincareSphere").surgery.components() == 8);
    CHECK(find("T3").surgery.linking == IntMatrix::Zero(3, 3).eval());

    for (const auto& e : entries) {
        e.surgery.validate();
        if (e.complex) e.complex->validate();
        if (e.expected_upsilon)
            for (long long k = 1; k <= 9; ++k)
                CHECK(upsilon(homology_from_linking_matrix(e.surgery.linking), k) ==
                      e.expected_upsilon(k));
    }
}

TEST_CASE("lens chain matrices follow the continued fraction") {
    // 5/2 = 3 - 1/2
    CHECK(lens_chain_matrix(5, 2) == int_matrix({{3, -1}, {-1, 2}}));

    const auto coeffs = lens_chain_coefficients(7, 3);  // 7/3 = 3 - 1/(2 - 1/2)
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0] == 3);
    CHECK(coeffs[1] == 2);
    CHECK(coeffs[2] == 2);

    for (long long p = 2; p <= 12; ++p) {
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            if (q == 1) continue;
            const IntMatrix chain = lens_chain_matrix(p, q);
            for (const Int& a : lens_chain_coefficients(p, q)) CHECK(a >= 2);
            CHECK(abs(oracles::determinant(chain)) == p);
            for (long long k = 1; k <= 9; ++k)
                CHECK(upsilon(homology_from_linking_matrix(chain), k) == gcd(Int(k), Int(p)));
        }
    }

    CHECK_THROWS_AS(lens_chain_coefficients(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(lens_chain_coefficients(3, 3), std::invalid_argument);
}

TEST_CASE("exact values survive a JSON round trip") {
    const Rational tau(7, 12);
    json j = rational_to_json(tau);
    CHECK(j["num"] == 7);
    CHECK(j["den"] == 12);

    const RationalAngle theta = angle_from(5, 8);
    j = angle_to_json(theta);
    CHECK(j["num"] == 5);
    CHECK(j["den"] == 8);
    CHECK(j["angle"] == true);

    // big integers fall back to decimal strings
    const Int huge = pow_int(Int(10), 30);
    j = int_to_json(huge);
    REQUIRE(j.is_string());
    CHECK(j.get<std::string>() == huge.str());
    CHECK(detail::int_from_json(j, "x") == huge);
}

TEST_CASE("input files parse, serialize, and stay fixed under round trips") {
    const json doc = {
        {"name", "L(6,1)"},
        {"surgery",
         {{"linking_matrix", {{6}}},
          {"external_link", {{"lambda", {2}}, {"framing", 1}}}}},
        {"complex",
         {{"vertices", 1}, {"edges", 1}, {"faces", 1}, {"incidence", {{6}}}}},
    };
    const InputFile in = input_from_json(doc);
    CHECK(in.name == "L(6,1)");
    REQUIRE(in.surgery.has_value());
    CHECK(in.surgery->linking == int_matrix({{6}}));
    REQUIRE(in.surgery->external.has_value());
    CHECK(in.surgery->external->lambda == int_vector({2}));
    CHECK(in.surgery->external->framing == 1);
    REQUIRE(in.complex.has_value());
    CHECK(in.complex->incidence == int_matrix({{6}}));

    const json once = input_to_json(in);
    const json twice = input_to_json(input_from_json(once));
    CHECK(once == twice);
    CHECK(once.dump() == twice.dump());
}

TEST_CASE("parse errors carry field diagnostics") {
    const auto message_of = [](const json& doc) {
        try {
            input_from_json(doc);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };

    CHECK(message_of(json{{"name", "x"}}).find("surgery") != std::string::npos);
    CHECK(message_of(json{{"surgery", {{"linking_matrix", "zap"}}}})
              .find("linking_matrix") != std::string::npos);
    CHECK(message_of(json{{"surgery", {{"linking_matrix", {{1, 0}}}}}})
              .find("square") != std::string::npos);
    CHECK(message_of(json{{"surgery",
                           {{"linking_matrix", {{0}}},
                            {"external_link", {{"lambda", {1, 2}}}}}}})
              .find("external") != std::string::npos);
    CHECK(message_of(json{{"complex", {{"vertices", 1}, {"edges", 1}}}})
              .find("faces") != std::string::npos);
}

TEST_CASE("k ranges parse as single values or inclusive spans") {
    CHECK(parse_k_range("4").lo == 4);
    CHECK(parse_k_range("4").hi == 4);
    CHECK(parse_k_range("2..9").lo == 2);
    CHECK(parse_k_range("2..9").hi == 9);
    CHECK_THROWS_AS(parse_k_range("0..3"), InputError);
    CHECK_THROWS_AS(parse_k_range("5..2"), InputError);
    CHECK_THROWS_AS(parse_k_range("abc"), InputError);
    CHECK_THROWS_AS(parse_k_range("3..x"), InputError);
}

TEST_CASE("reports serialize with stable sorted keys") {
    const SurgeryPresentation s = SurgeryPresentation::from_matrix(int_matrix({{6}}));
    const InvariantReport report = verify_identities(s, one_relator_complex(6), 4);
    const json j = report_to_json(report);
    CHECK(j["upsilon"] == 2);
    CHECK(j["tau"]["num"] == 1);
    CHECK(j["tau"]["den"] == 2);
    CHECK(j["z_bf"] == 12);

    // nlohmann objects iterate in sorted key order; dumping twice is stable
    CHECK(j.dump() == report_to_json(report).dump());
    std::string previous;
    for (auto it = j.begin(); it != j.end(); ++it) {
        CHECK(previous < it.key());
        previous = it.key();
    }
}
