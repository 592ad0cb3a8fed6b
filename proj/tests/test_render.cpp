#include <doctest.h>

#include <random>

#include "dqsym/cli.hpp"
#include "dqsym/render.hpp"
#include "dqsym/verify.hpp"
#include "oracle.hpp"

using namespace dqsym;

namespace {
const QPoly q = QPoly::q_power(1);
}

TEST_CASE("element text") {
    CHECK(element_to_text(Element{}) == "0");
    CHECK(element_to_text(psi_u(Word{3, 1, 2})) == "312/123 - q*132/213 - q*231/312 + q^2*213/321");
    CHECK(element_to_text(sigma_n(2)) == "12/12 + 21/12 + (1-q)*12/21");
    CHECK(element_to_text(-generator(2)) == "-2/1");
    CHECK(biword_to_string(Biword(Permutation::identity(10), Word(std::vector<int>{10, 9, 8, 7, 6, 5, 4, 3, 2, 1}))) ==
          "10,9,8,7,6,5,4,3,2,1/1,2,3,4,5,6,7,8,9,10");
}

TEST_CASE("expansion text") {
    BasisExpansion e{Basis::kLambda, 2, {}};
    e.add({{2}, {1, 1}}, -q);
    e.add({{2}, {2}}, -1);
    e.add({{1, 1}, {1, 1}}, 1);
    e.add({{1, 1}, {2}}, 1);
    CHECK(expansion_to_text(e) == "-Lambda_2^(2) - q*Lambda_2^(11) + Lambda_11^(2) + Lambda_11^(11)");
    CHECK(expansion_to_text(BasisExpansion{}) == "0");
}

TEST_CASE("JSON round trips") {
    std::mt19937 rng(99);
    for (int t = 0; t < 50; ++t) {
        const Element e = oracle::random_element(rng, 1 + t % 5, 6, 1 + t % 7);
        const auto text = element_to_json(e).dump();
        CHECK(element_from_json(nlohmann::json::parse(text)) == e);
    }
    for (int n = 2; n <= 4; ++n) {
        const BasisExpansion lam = theorem1_prediction(n);
        CHECK(expansion_from_json(nlohmann::json::parse(expansion_to_json(lam).dump())) == lam);
        const BasisExpansion rib = corollary_prediction(n);
        CHECK(expansion_from_json(nlohmann::json::parse(expansion_to_json(rib).dump())) == rib);
        for (MatrixKind kind : {MatrixKind::kD, MatrixKind::kMLambda, MatrixKind::kMRibbon, MatrixKind::kN}) {
            const LabeledMatrix m = build_matrix(kind, n);
            CHECK(matrix_from_json(nlohmann::json::parse(matrix_to_json(m).dump())) == m);
        }
    }
}

TEST_CASE("matrix JSON schema") {
    const auto j = matrix_to_json(build_matrix(MatrixKind::kMRibbon, 2));
    CHECK(j.at("n") == 2);
    CHECK(j.at("kind") == "Mribbon");
    CHECK(j.at("rows") == nlohmann::json::array({"2", "11"}));
    CHECK(j.at("cols") == j.at("rows"));
    CHECK(j.at("entries") == nlohmann::json::parse("[[[1],[1]],[[],[1,-1]]]"));
    CHECK(matrix_to_json(build_matrix(MatrixKind::kN, 2)).at("entries") == nlohmann::json::parse(R"([["2","2"],["2","11"]])"));
    CHECK(matrix_to_json(build_matrix(MatrixKind::kD, 2)).at("entries") == nlohmann::json::parse("[[0,1],[0,0]]"));
}

TEST_CASE("matrix CSV") {
    CHECK(matrix_to_csv(build_matrix(MatrixKind::kMRibbon, 2)) == "I\\J,2,11\n2,1,1\n11,0,1-q\n");
    CHECK(matrix_to_csv(build_matrix(MatrixKind::kN, 2)) == "I\\J,2,11\n2,2,2\n11,2,11\n");
}

TEST_CASE("verification reports") {
    const VerifyReport r = verify(3, Suite::kAll);
    CHECK(r.passed());
    const std::string text = report_to_text(r);
    CHECK(text.rfind("verify suite=all n=3\n", 0) == 0);
    CHECK(text.find("FAIL") == std::string::npos);
    const auto j = report_to_json(r);
    CHECK(j.at("passed") == true);
    CHECK(j.at("checks").size() == r.checks.size());
}

TEST_CASE("literal parsing") {
    CHECK(parse_composition("2,1,1") == Composition{2, 1, 1});
    CHECK(parse_composition("12") == Composition{12});
    CHECK(parse_composition("3") == Composition{3});
    CHECK_THROWS_AS(parse_composition(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("2,1,"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("2,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("a"), std::invalid_argument);
    CHECK(parse_word("312") == Word{3, 1, 2});
    CHECK(parse_word("3,1,12") == Word{3, 1, 12});
    CHECK_THROWS_AS(parse_word("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("302"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(""), std::invalid_argument);
}
