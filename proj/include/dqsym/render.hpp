#pragma once

// Stable text, CSV and JSON forms of elements, basis expansions, coefficient
// matrices and verification reports. Output is a pure function of the value:
// terms are emitted in key order, nothing time- or thread-dependent.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dqsym/identities.hpp"

namespace dqsym {

struct VerifyReport;

enum class OutputFormat { kText, kJson, kCsv };
std::optional<OutputFormat> parse_format(const std::string& s);

/// Digits without separators when every letter is < 10, comma separated otherwise.
std::string letters_to_string(const Letters& w);
/// "colors/permutation", e.g. "312/123".
std::string biword_to_string(const Biword& b);

/// Signed sum such as "312/123 - q*132/213 + q^2*213/321"; "0" when empty.
std::string element_to_text(const Element& e);
nlohmann::json element_to_json(const Element& e);
Element element_from_json(const nlohmann::json& j);

/// "-Lambda_2^(2) - q*Lambda_2^(11) + ..."; "0" when empty.
std::string expansion_to_text(const BasisExpansion& e);
nlohmann::json expansion_to_json(const BasisExpansion& e);
BasisExpansion expansion_from_json(const nlohmann::json& j);

enum class MatrixKind { kD, kMLambda, kMRibbon, kN };
std::optional<MatrixKind> parse_matrix_kind(const std::string& s);
std::string matrix_kind_name(MatrixKind k);

/// A cell is a polynomial (M matrices), an exponent (D) or a composition (N).
using MatrixCell = std::variant<QPoly, int, Composition>;

struct LabeledMatrix {
    MatrixKind kind = MatrixKind::kD;
    int n = 0;
    std::vector<Composition> order;
    std::vector<std::vector<MatrixCell>> cells;

    friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;
};

/// Aligned grid; zero renders as "." and polynomials in factored form ("-q(1-q)").
std::string matrix_to_text(const LabeledMatrix& m);
std::string matrix_to_csv(const LabeledMatrix& m);
/// {"n", "kind", "rows", "cols", "entries"}; polynomials as ascending coefficient arrays.
nlohmann::json matrix_to_json(const LabeledMatrix& m);
LabeledMatrix matrix_from_json(const nlohmann::json& j);

std::string report_to_text(const VerifyReport& r);
nlohmann::json report_to_json(const VerifyReport& r);

/// Parses comma separated parts: "2,1,1". A bare "12" is the one-part composition (12).
Composition parse_composition(const std::string& s);
/// Parses "312" (one digit per letter) or "3,1,2".
Word parse_word(const std::string& s);

}  // namespace dqsym
