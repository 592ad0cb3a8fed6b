#include "dqsym/cli.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <CLI11.hpp>

#include "dqsym/verify.hpp"

namespace dqsym {

namespace {

using nlohmann::json;

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void write_element(const Element& e, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::kText: out << element_to_text(e) << "\n"; break;
        case OutputFormat::kJson: out << element_to_json(e).dump(2) << "\n"; break;
        case OutputFormat::kCsv:
            out << "colors,sigma,coeff\n";
            for (const auto& [b, c] : e.terms())
                out << letters_to_string(b.colors.letters()) << "," << letters_to_string(b.sigma.letters()) << ","
                    << c.to_string() << "\n";
            break;
    }
}

void write_expansion(const BasisExpansion& e, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::kText: out << expansion_to_text(e) << "\n"; break;
        case OutputFormat::kJson: out << expansion_to_json(e).dump(2) << "\n"; break;
        case OutputFormat::kCsv:
            out << "I,J,coeff\n";
            for (const auto& [key, c] : e.coeffs)
                out << csv_quote(key.I.to_string()) << "," << csv_quote(key.J.to_string()) << "," << c.to_string() << "\n";
            break;
    }
}

void write_report(const VerifyReport& r, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::kText: out << report_to_text(r); break;
        case OutputFormat::kJson: out << report_to_json(r).dump(2) << "\n"; break;
        case OutputFormat::kCsv:
            out << "check,passed,detail\n";
            for (const CheckResult& c : r.checks)
                out << csv_quote(c.name) << "," << (c.passed ? "true" : "false") << "," << csv_quote(c.detail) << "\n";
            break;
    }
}

void check_matrix_size(int n, int max_n) {
    if (n < 2) throw std::invalid_argument("matrix needs n >= 2");
    if (n > max_n)
        throw BoundError("n = " + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(max_n));
}

BasisExpansion sigma_ribbon(int n, Execution exec, int max_n) {
    RExpansionResult r = expand_in_R(sigma_n(n, exec, max_n));
    if (const auto* f = std::get_if<SpanFailure>(&r)) throw std::logic_error("sigma_n left the ribbon span: " + f->reason);
    BasisExpansion e = std::get<BasisExpansion>(r);
    e.n = n;
    return e;
}

struct Options {
    int max_n = kDefaultMaxN;
    bool serial = false;
    int threads = 0;
    std::string format = "text";

    std::string kind;
    int n = 0;
    std::string suite;
    std::string target;
    std::string arg;
    std::string basis;
};

Execution execution_of(const Options& o) {
    if (o.threads > 0) set_num_threads(o.threads);
    return o.serial ? Execution::kSerial : Execution::kParallel;
}

OutputFormat format_of(const Options& o) {
    const auto f = parse_format(o.format);
    if (!f) throw std::invalid_argument("unknown format: " + o.format);
    return *f;
}

int cmd_matrix(const Options& o, std::ostream& out) {
    const auto kind = parse_matrix_kind(o.kind);
    if (!kind) throw std::invalid_argument("unknown matrix kind: " + o.kind);
    const OutputFormat format = format_of(o);
    const LabeledMatrix m = build_matrix(*kind, o.n, execution_of(o), o.max_n);
    switch (format) {
        case OutputFormat::kText: out << matrix_to_text(m); break;
        case OutputFormat::kJson: out << matrix_to_json(m).dump(2) << "\n"; break;
        case OutputFormat::kCsv: out << matrix_to_csv(m); break;
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto suite = parse_suite(o.suite);
    if (!suite) throw std::invalid_argument("unknown suite: " + o.suite);
    const OutputFormat format = format_of(o);
    const VerifyReport report = verify(o.n, *suite, execution_of(o), o.max_n);
    write_report(report, format, out);
    return report.passed() ? kExitOk : kExitFailure;
}

Element expand_target(const Options& o, Execution exec) {
    if (o.target == "sigma") {
        std::size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(o.arg, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != o.arg.size()) throw std::invalid_argument("bad integer literal: " + o.arg);
        return sigma_n(n, exec, o.max_n);
    }
    if (o.target == "p") {
        const Composition L = parse_composition(o.arg);
        if (L.weight() > o.max_n)
            throw BoundError("n = " + std::to_string(L.weight()) + " exceeds the enumeration bound " + std::to_string(o.max_n));
        return p_L(L, exec, o.max_n);
    }
    if (o.target == "psi") {
        const Word w = parse_word(o.arg);
        // A permutation literal names Psi^sigma; any other word names Psi^u.
        if (w.has_distinct_letters() && static_cast<std::size_t>(w.max_letter()) == w.size())
            return psi_sigma(Permutation(w.letters().to_vector()));
        return psi_u(w);
    }
    throw std::invalid_argument("unknown target: " + o.target);
}

int cmd_expand(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.basis != "G" && o.basis != "R" && o.basis != "Lambda") throw std::invalid_argument("unknown basis: " + o.basis);
    const OutputFormat format = format_of(o);
    const Element e = expand_target(o, execution_of(o));
    if (o.basis == "G") {
        write_element(e, format, out);
        return kExitOk;
    }
    const RExpansionResult r = expand_in_R(e);
    if (const auto* f = std::get_if<SpanFailure>(&r)) {
        err << "not in the span of the colored ribbons: " << f->reason << "\n"
            << "  " << biword_to_string(f->first) << " has coefficient " << f->first_coeff.to_string() << "\n"
            << "  " << biword_to_string(f->second) << " has coefficient " << f->second_coeff.to_string() << "\n";
        return kExitFailure;
    }
    const BasisExpansion& ribbon = std::get<BasisExpansion>(r);
    write_expansion(o.basis == "R" ? ribbon : r_to_lambda(ribbon), format, out);
    return kExitOk;
}

}  // namespace

LabeledMatrix build_matrix(MatrixKind kind, int n, Execution exec, int max_n) {
    check_matrix_size(n, max_n);
    LabeledMatrix m;
    m.kind = kind;
    m.n = n;
    m.order = compositions_of(n);

    std::optional<BasisExpansion> coeffs;
    if (kind == MatrixKind::kMRibbon) coeffs = sigma_ribbon(n, exec, max_n);
    if (kind == MatrixKind::kMLambda) coeffs = r_to_lambda(sigma_ribbon(n, exec, max_n));

    for (const Composition& I : m.order) {
        std::vector<MatrixCell> row;
        for (const Composition& J : m.order) {
            switch (kind) {
                case MatrixKind::kD: row.emplace_back(statistic_D(I, J)); break;
                case MatrixKind::kN: row.emplace_back(glue_L(I, J)); break;
                default: row.emplace_back(coeffs->coefficient(I, J)); break;
            }
        }
        m.cells.push_back(std::move(row));
    }
    return m;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Colored free quasi-symmetric functions: q-bracketing identities"};
    app.name("dqsym");
    app.require_subcommand(1);
    Options o;
    app.add_option("--max-n", o.max_n, "Enumeration bound for sums over S_n")->capture_default_str();
    app.add_flag("--serial", o.serial, "Use the serial kernels");
    app.add_option("--threads", o.threads, "OpenMP thread count (0 keeps the runtime default)");

    auto* matrix = app.add_subcommand("matrix", "Print a coefficient matrix");
    matrix->add_option("--kind", o.kind, "D, Mlambda, Mribbon or N")->required();
    matrix->add_option("--n", o.n, "Weight")->required();
    matrix->add_option("--format", o.format, "text, json or csv");

    auto* verify_cmd = app.add_subcommand("verify", "Check the identities against brute force");
    verify_cmd->add_option("--suite", o.suite, "all, theorem1, theorem2, corollary, bs, recursion or closed_forms")->required();
    verify_cmd->add_option("--n", o.n, "Weight")->required();
    verify_cmd->add_option("--format", o.format, "text, json or csv");

    auto* expand_cmd = app.add_subcommand("expand", "Expand an element in a basis");
    expand_cmd->add_option("--target", o.target, "sigma, p or psi")->required();
    expand_cmd->add_option("--arg", o.arg, "n for sigma, a composition for p, a word for psi")->required();
    expand_cmd->add_option("--basis", o.basis, "G, R or Lambda")->required();
    expand_cmd->add_option("--format", o.format, "text, json or csv");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (o.max_n < 1) throw std::invalid_argument("--max-n must be positive");
        if (o.threads < 0) throw std::invalid_argument("--threads must be non-negative");
        if (*matrix) return cmd_matrix(o, out);
        if (*verify_cmd) return cmd_verify(o, out);
        return cmd_expand(o, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace dqsym
