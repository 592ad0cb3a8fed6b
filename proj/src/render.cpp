#include "dqsym/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dqsym/verify.hpp"

namespace dqsym {

using nlohmann::json;

std::optional<OutputFormat> parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::kText;
    if (s == "json") return OutputFormat::kJson;
    if (s == "csv") return OutputFormat::kCsv;
    return std::nullopt;
}

std::string letters_to_string(const Letters& w) {
    const bool small = std::all_of(w.begin(), w.end(), [](int x) { return x < 10; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!small && i > 0) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

std::string biword_to_string(const Biword& b) {
    return letters_to_string(b.colors.letters()) + "/" + letters_to_string(b.sigma.letters());
}

namespace {

/// Appends "c*x" to a signed sum, with unit coefficients elided and
/// non-monomial coefficients parenthesized.
void append_term(std::string& out, const QPoly& c, const std::string& symbol) {
    const auto& k = c.coeffs();
    const bool monomial = std::count_if(k.begin(), k.end(), [](std::int64_t x) { return x != 0; }) == 1;
    bool negative = false;
    std::string coeff;
    if (monomial) {
        negative = k.back() < 0;
        coeff = (negative ? -c : c).to_string();
        if (coeff == "1") coeff.clear();
    } else {
        coeff = "(" + c.to_string() + ")";
    }
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (!coeff.empty()) out += coeff + "*";
    out += symbol;
}

json poly_to_json(const QPoly& p) { return p.coeffs(); }
QPoly poly_from_json(const json& j) { return QPoly::from_coeffs(j.get<std::vector<std::int64_t>>()); }

Composition composition_from_label(const std::string& s) {
    std::vector<int> parts;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(std::stoi(item));
    } else {
        for (char ch : s) {
            if (ch < '1' || ch > '9') throw std::invalid_argument("bad composition label: " + s);
            parts.push_back(ch - '0');
        }
    }
    return Composition(std::move(parts));
}

std::string expansion_symbol(Basis basis, const ColoredRibbonKey& key) {
    return basis_name(basis) + "_" + key.I.to_string() + "^(" + key.J.to_string() + ")";
}

std::string cell_text(const MatrixCell& cell) {
    if (const auto* p = std::get_if<QPoly>(&cell)) return p->is_zero() ? "." : to_factored_string(*p);
    if (const auto* d = std::get_if<int>(&cell)) return *d == 0 ? "." : std::to_string(*d);
    return std::get<Composition>(cell).to_string();
}

std::string cell_csv(const MatrixCell& cell) {
    if (const auto* p = std::get_if<QPoly>(&cell)) return p->to_string();
    if (const auto* d = std::get_if<int>(&cell)) return std::to_string(*d);
    return std::get<Composition>(cell).to_string();
}

json cell_json(const MatrixCell& cell) {
    if (const auto* p = std::get_if<QPoly>(&cell)) return poly_to_json(*p);
    if (const auto* d = std::get_if<int>(&cell)) return *d;
    return std::get<Composition>(cell).to_string();
}

std::vector<int> to_ints(const Letters& l) { return l.to_vector(); }

}  // namespace

std::string element_to_text(const Element& e) {
    std::string out;
    for (const auto& [b, c] : e.terms()) append_term(out, c, biword_to_string(b));
    return out.empty() ? "0" : out;
}

json element_to_json(const Element& e) {
    json arr = json::array();
    for (const auto& [b, c] : e.terms())
        arr.push_back({{"sigma", to_ints(b.sigma.letters())}, {"colors", to_ints(b.colors.letters())}, {"coeff", poly_to_json(c)}});
    return arr;
}

Element element_from_json(const json& j) {
    Element e;
    for (const json& t : j) {
        const auto sigma = t.at("sigma").get<std::vector<int>>();
        const auto colors = t.at("colors").get<std::vector<int>>();
        e.add_term(Biword(Permutation(sigma), Word(colors)), poly_from_json(t.at("coeff")));
    }
    return e;
}

std::string expansion_to_text(const BasisExpansion& e) {
    std::string out;
    for (const auto& [key, c] : e.coeffs) append_term(out, c, expansion_symbol(e.basis, key));
    return out.empty() ? "0" : out;
}

json expansion_to_json(const BasisExpansion& e) {
    json terms = json::array();
    for (const auto& [key, c] : e.coeffs)
        terms.push_back({{"I", key.I.parts()}, {"J", key.J.parts()}, {"coeff", poly_to_json(c)}});
    return {{"basis", basis_name(e.basis)}, {"n", e.n}, {"terms", terms}};
}

BasisExpansion expansion_from_json(const json& j) {
    BasisExpansion e;
    const auto basis = j.at("basis").get<std::string>();
    if (basis == "R") e.basis = Basis::kR;
    else if (basis == "Lambda") e.basis = Basis::kLambda;
    else throw std::invalid_argument("unknown basis: " + basis);
    e.n = j.at("n").get<int>();
    for (const json& t : j.at("terms"))
        e.add({Composition(t.at("I").get<std::vector<int>>()), Composition(t.at("J").get<std::vector<int>>())},
              poly_from_json(t.at("coeff")));
    return e;
}

std::optional<MatrixKind> parse_matrix_kind(const std::string& s) {
    if (s == "D") return MatrixKind::kD;
    if (s == "Mlambda") return MatrixKind::kMLambda;
    if (s == "Mribbon") return MatrixKind::kMRibbon;
    if (s == "N") return MatrixKind::kN;
    return std::nullopt;
}

std::string matrix_kind_name(MatrixKind k) {
    switch (k) {
        case MatrixKind::kD: return "D";
        case MatrixKind::kMLambda: return "Mlambda";
        case MatrixKind::kMRibbon: return "Mribbon";
        case MatrixKind::kN: return "N";
    }
    return "?";
}

std::string matrix_to_text(const LabeledMatrix& m) {
    std::vector<std::string> labels;
    for (const Composition& c : m.order) labels.push_back(c.to_string());
    std::size_t label_width = 0, cell_width = 0;
    for (const auto& l : labels) {
        label_width = std::max(label_width, l.size());
        cell_width = std::max(cell_width, l.size());
    }
    std::vector<std::vector<std::string>> text(m.cells.size());
    for (std::size_t r = 0; r < m.cells.size(); ++r)
        for (const MatrixCell& cell : m.cells[r]) {
            text[r].push_back(cell_text(cell));
            cell_width = std::max(cell_width, text[r].back().size());
        }

    auto emit_row = [&](const std::string& label, const std::vector<std::string>& row) {
        std::string line = label + std::string(label_width - label.size(), ' ');
        for (const auto& s : row) line += "  " + s + std::string(cell_width - s.size(), ' ');
        while (!line.empty() && line.back() == ' ') line.pop_back();
        return line + "\n";
    };
    std::string out = emit_row("", labels);
    for (std::size_t r = 0; r < text.size(); ++r) out += emit_row(labels[r], text[r]);
    return out;
}

std::string matrix_to_csv(const LabeledMatrix& m) {
    std::string out = "I\\J";
    for (const Composition& c : m.order) out += "," + c.to_string();
    out += "\n";
    for (std::size_t r = 0; r < m.cells.size(); ++r) {
        out += m.order[r].to_string();
        for (const MatrixCell& cell : m.cells[r]) out += "," + cell_csv(cell);
        out += "\n";
    }
    return out;
}

json matrix_to_json(const LabeledMatrix& m) {
    json labels = json::array();
    for (const Composition& c : m.order) labels.push_back(c.to_string());
    json entries = json::array();
    for (const auto& row : m.cells) {
        json jr = json::array();
        for (const MatrixCell& cell : row) jr.push_back(cell_json(cell));
        entries.push_back(jr);
    }
    return {{"n", m.n}, {"kind", matrix_kind_name(m.kind)}, {"rows", labels}, {"cols", labels}, {"entries", entries}};
}

LabeledMatrix matrix_from_json(const json& j) {
    LabeledMatrix m;
    m.n = j.at("n").get<int>();
    const auto kind = parse_matrix_kind(j.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown matrix kind");
    m.kind = *kind;
    for (const json& l : j.at("rows")) m.order.push_back(composition_from_label(l.get<std::string>()));
    if (j.at("cols") != j.at("rows")) throw std::invalid_argument("matrix rows and cols differ");
    for (const json& row : j.at("entries")) {
        std::vector<MatrixCell> cells;
        for (const json& cell : row) {
            switch (m.kind) {
                case MatrixKind::kD: cells.emplace_back(cell.get<int>()); break;
                case MatrixKind::kN: cells.emplace_back(composition_from_label(cell.get<std::string>())); break;
                default: cells.emplace_back(poly_from_json(cell)); break;
            }
        }
        m.cells.push_back(std::move(cells));
    }
    return m;
}

std::string report_to_text(const VerifyReport& r) {
    std::string out = "verify suite=" + suite_name(r.suite) + " n=" + std::to_string(r.n) + "\n";
    for (const CheckResult& c : r.checks) {
        out += (c.passed ? "PASS  " : "FAIL  ") + c.name;
        if (!c.detail.empty()) out += ": " + c.detail;
        out += "\n";
    }
    out += "summary: " + std::to_string(r.checks.size() - r.failures()) + " passed, " + std::to_string(r.failures()) +
           " failed\n";
    return out;
}

json report_to_json(const VerifyReport& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"n", r.n}, {"suite", suite_name(r.suite)}, {"passed", r.passed()}, {"checks", checks}};
}

Composition parse_composition(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty composition literal");
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw std::invalid_argument("bad composition literal: " + s);
        parts.push_back(std::stoi(item));
    }
    if (s.back() == ',') throw std::invalid_argument("bad composition literal: " + s);
    return Composition(std::move(parts));
}

Word parse_word(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty word literal");
    std::vector<int> letters;
    auto digits = [](const std::string& t) {
        return !t.empty() && std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    if (s.find(',') == std::string::npos) {
        if (!digits(s)) throw std::invalid_argument("bad word literal: " + s);
        for (char ch : s) letters.push_back(ch - '0');
    } else {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!digits(item)) throw std::invalid_argument("bad word literal: " + s);
            letters.push_back(std::stoi(item));
        }
        if (s.back() == ',') throw std::invalid_argument("bad word literal: " + s);
    }
    if (std::any_of(letters.begin(), letters.end(), [](int x) { return x < 1; }))
        throw std::invalid_argument("word letters must be positive: " + s);
    return Word(letters);
}

}  // namespace dqsym
