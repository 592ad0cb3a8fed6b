#include "dqsym/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dqsym/render.hpp"

namespace dqsym {

namespace {

std::string key_string(const ColoredRibbonKey& k) { return "(I=" + k.I.to_string() + ", J=" + k.J.to_string() + ")"; }

CheckResult make(std::string name, std::optional<std::string> failure) {
    CheckResult r{std::move(name), !failure.has_value(), {}};
    if (failure) r.detail = *failure;
    return r;
}

std::string span_failure_string(const SpanFailure& f) {
    return f.reason + ": " + biword_to_string(f.first) + " has " + f.first_coeff.to_string() + ", " +
           biword_to_string(f.second) + " has " + f.second_coeff.to_string();
}

/// Holds the lazily computed sums shared between checks of one run.
class Context {
public:
    Context(int n, Execution exec, int max_n) : n_(n), exec_(exec), max_n_(max_n) {}

    int n() const { return n_; }
    Execution exec() const { return exec_; }

    const Element& sigma() {
        if (!sigma_) sigma_ = sigma_n(n_, exec_, max_n_);
        return *sigma_;
    }

    const RExpansionResult& sigma_R() {
        if (!sigma_R_) sigma_R_ = expand_in_R(sigma());
        return *sigma_R_;
    }

    const Element& p(const Composition& L) {
        auto it = p_.find(L);
        if (it == p_.end()) it = p_.emplace(L, p_L(L, exec_, max_n_)).first;
        return it->second;
    }

private:
    int n_;
    Execution exec_;
    int max_n_;
    std::optional<Element> sigma_;
    std::optional<RExpansionResult> sigma_R_;
    std::map<Composition, Element> p_;
};

/// Lambda expansion of an element through its R expansion, or the span failure.
std::variant<BasisExpansion, std::string> lambda_of(const Element& e, int n) {
    const RExpansionResult r = expand_in_R(e);
    if (const auto* f = std::get_if<SpanFailure>(&r)) return span_failure_string(*f);
    BasisExpansion ribbon = std::get<BasisExpansion>(r);
    ribbon.n = n;
    return r_to_lambda(ribbon);
}

std::optional<std::string> compare_lambda(const Element& e, int n, const BasisExpansion& want) {
    auto got = lambda_of(e, n);
    if (const auto* s = std::get_if<std::string>(&got)) return *s;
    return first_difference(std::get<BasisExpansion>(got), want);
}

void check_oracle(Context& ctx, std::vector<CheckResult>& out) {
    const auto& r = ctx.sigma_R();
    std::optional<std::string> failure;
    if (const auto* f = std::get_if<SpanFailure>(&r)) failure = span_failure_string(*f);
    out.push_back(make("sigma_n lies in the span of the colored ribbons", failure));
}

void check_theorem1(Context& ctx, std::vector<CheckResult>& out) {
    std::optional<std::string> failure;
    if (const auto* ribbon = std::get_if<BasisExpansion>(&ctx.sigma_R())) {
        BasisExpansion r = *ribbon;
        r.n = ctx.n();
        failure = first_difference(r_to_lambda(r), theorem1_prediction(ctx.n()));
    } else {
        failure = "no R expansion";
    }
    out.push_back(make("theorem1: Lambda expansion of sigma_n", failure));
}

void check_corollary(Context& ctx, std::vector<CheckResult>& out) {
    const auto* ribbon = std::get_if<BasisExpansion>(&ctx.sigma_R());
    std::optional<std::string> factor_failure, grid_failure;
    if (!ribbon) {
        factor_failure = grid_failure = "no R expansion";
    } else {
        for (const auto& [key, c] : ribbon->coeffs)
            if (!try_factor(c)) {
                factor_failure = key_string(key) + ": " + c.to_string() + " is not +-q^a(1-q)^b";
                break;
            }
        BasisExpansion r = *ribbon;
        r.n = ctx.n();
        grid_failure = first_difference(r, corollary_prediction(ctx.n()));
    }
    out.push_back(make("corollary: every R coefficient factors", factor_failure));
    out.push_back(make("corollary: R coefficients equal c_IJ", grid_failure));
}

void check_theorem2(Context& ctx, std::vector<CheckResult>& out) {
    const int n = ctx.n();
    const auto comps = compositions_of(n);
    for (const Composition& L : comps)
        out.push_back(make("theorem2: P_" + L.to_string(), compare_lambda(ctx.p(L), n, theorem2_prediction(L))));

    std::map<ColoredRibbonKey, Composition> owner;
    std::optional<std::string> partition_failure, glue_failure;
    for (const Composition& L : comps)
        for (const ColoredRibbonKey& key : theorem2_pairs(L)) {
            auto [it, inserted] = owner.emplace(key, L);
            if (!inserted && !partition_failure)
                partition_failure = key_string(key) + " claimed by " + it->second.to_string() + " and " + L.to_string();
            if (glue_L(key.I, key.J) != L && !glue_failure)
                glue_failure = key_string(key) + ": glue_L gives " + glue_L(key.I, key.J).to_string() + ", pairs give " + L.to_string();
        }
    if (!partition_failure && owner.size() != comps.size() * comps.size())
        for (const Composition& I : comps)
            for (const Composition& J : comps)
                if (!partition_failure && !owner.contains({I, J})) partition_failure = key_string({I, J}) + " claimed by no L";
    out.push_back(make("theorem2: pair sets partition the grid", partition_failure));
    out.push_back(make("theorem2: glue_L agrees with the pair sets", glue_failure));
}

void check_bs(Context& ctx, std::vector<CheckResult>& out) {
    const Element at_one = evaluate_q(ctx.sigma(), 1);
    const auto perms = permutations_of(static_cast<std::size_t>(ctx.n()));
    const Element colorings =
        sum_biword_grid_serial(std::vector{Permutation::identity(static_cast<std::size_t>(ctx.n()))}, perms);
    out.push_back(make("bs: sigma_n at q=1 is the sum of colorings of the identity", first_difference(at_one, colorings)));
}

void check_recursion(Context& ctx, std::vector<CheckResult>& out) {
    for (const Composition& L : compositions_of(ctx.n())) {
        if (L.length() < 2) continue;
        const Element& want = ctx.p(L);
        out.push_back(make("recursion (set splitting): P_" + L.to_string(),
                           first_difference(recursion_set_splitting(L, ctx.exec()), want)));
        out.push_back(make("recursion (biword): P_" + L.to_string(), first_difference(recursion_biword(L, ctx.exec()), want)));
    }
}

void check_closed_forms(Context& ctx, std::vector<CheckResult>& out) {
    const int n = ctx.n();
    const Element& pn = ctx.p(Composition{n});
    out.push_back(make("closed form: P_(n) in colored ribbons", first_difference(pn, pn_closed_R(n))));

    auto lambda = lambda_of(pn, n);
    std::optional<std::string> note_failure, interval_failure;
    if (const auto* s = std::get_if<std::string>(&lambda)) {
        note_failure = interval_failure = *s;
    } else {
        const BasisExpansion& got = std::get<BasisExpansion>(lambda);
        for (const Composition& I : compositions_of(n))
            for (const Composition& J : compositions_of(n)) {
                const bool present = !got.coefficient(I, J).is_zero();
                if (present != pn_characterization(I, J) && !note_failure)
                    note_failure = key_string({I, J}) + (present ? " present but i_1 + j_last <= n" : " absent but i_1 + j_last > n");
            }
        interval_failure = first_difference(got, pn_interval_prediction(n));
    }
    out.push_back(make("closed form: support of P_(n) is i_1 + j_last > n", note_failure));
    out.push_back(make("closed form: interval form of P_(n)", interval_failure));
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& name) {
    if (name == "theorem1") return Suite::kTheorem1;
    if (name == "theorem2") return Suite::kTheorem2;
    if (name == "corollary") return Suite::kCorollary;
    if (name == "bs") return Suite::kBs;
    if (name == "recursion") return Suite::kRecursion;
    if (name == "closed_forms") return Suite::kClosedForms;
    if (name == "all") return Suite::kAll;
    return std::nullopt;
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::kTheorem1: return "theorem1";
        case Suite::kTheorem2: return "theorem2";
        case Suite::kCorollary: return "corollary";
        case Suite::kBs: return "bs";
        case Suite::kRecursion: return "recursion";
        case Suite::kClosedForms: return "closed_forms";
        case Suite::kAll: return "all";
    }
    return "?";
}

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

VerifyReport verify(int n, Suite suite, Execution exec, int max_n) {
    if (n < 1) throw std::invalid_argument("verify needs n >= 1");
    if (n > max_n)
        throw BoundError("n = " + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(max_n));
    VerifyReport report{n, suite, {}};
    Context ctx(n, exec, max_n);
    auto& out = report.checks;
    const bool all = suite == Suite::kAll;
    if (all || suite == Suite::kTheorem1 || suite == Suite::kCorollary) check_oracle(ctx, out);
    if (all || suite == Suite::kTheorem1) check_theorem1(ctx, out);
    if (all || suite == Suite::kCorollary) check_corollary(ctx, out);
    if (all || suite == Suite::kTheorem2) check_theorem2(ctx, out);
    if (all || suite == Suite::kClosedForms) check_closed_forms(ctx, out);
    if (all || suite == Suite::kRecursion) check_recursion(ctx, out);
    if (all || suite == Suite::kBs) check_bs(ctx, out);
    return report;
}

std::optional<std::string> first_difference(const BasisExpansion& got, const BasisExpansion& want) {
    if (got.basis != want.basis) return "basis " + basis_name(got.basis) + " vs " + basis_name(want.basis);
    std::set<ColoredRibbonKey> keys;
    for (const auto& [k, c] : got.coeffs) keys.insert(k);
    for (const auto& [k, c] : want.coeffs) keys.insert(k);
    for (const ColoredRibbonKey& k : keys) {
        const QPoly a = got.coefficient(k.I, k.J);
        const QPoly b = want.coefficient(k.I, k.J);
        if (a != b) return key_string(k) + ": got " + a.to_string() + ", want " + b.to_string();
    }
    return std::nullopt;
}

std::optional<std::string> first_difference(const Element& got, const Element& want) {
    const Element diff = got - want;
    if (diff.is_zero()) return std::nullopt;
    const Biword& b = diff.terms().begin()->first;
    return biword_to_string(b) + ": got " + got.coefficient(b).to_string() + ", want " + want.coefficient(b).to_string();
}

}  // namespace dqsym
