// lucasq command-line front end.
//
//   lucasq [--format text|json-lines] [--cap N] [--workers N] <subcommand> ...
//
//     seq {lucas|fib} <n> [--mod M]        evaluate a sequence member
//     jacobi <a> <n>                       Jacobi symbol (a/n), odd n >= 1
//     classify {lucas|fib} --k K           all n <= n-max with value = K*x^2
//     verify <claim> [--literal] [...]     sweep one identity/congruence claim
//     solve {main|pyth|catalan|poonen}     bounded Diophantine searches
//     audit [--n-max N]                    the whole claim suite at defaults
//
// Output is one structured record per line (text or json-lines), summary line
// last.  Exit codes: 0 all verifications pass and solution sets match the
// classically proven lists; 1 a claim fails or a solution set diverges;
// 2 usage or validation error.  Bounds default to the shipped sweep defaults
// and may also be set through LUCASQ_* environment variables; explicit flags
// win over the environment.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include <lucasq/lucasq.hpp>

namespace {

using namespace lucasq;
using nlohmann::json;

void emit(OutputFormat format, const std::string& text_line, const json& record) {
    if (format == OutputFormat::text)
        std::cout << text_line << '\n';
    else
        std::cout << record.dump() << '\n';
}

Integer parse_integer(const std::string& s, const char* what) {
    try {
        return Integer(s);
    } catch (const std::exception&) {
        throw std::domain_error(std::string("invalid integer for ") + what + ": '" + s + "'");
    }
}

// `jacobi` takes its numerator positionally, so a leading "-1" would otherwise
// be read as an option: insert the end-of-options marker before the first
// negative-number token following the subcommand name.
std::vector<std::string> preprocess_args(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] != "jacobi") continue;
        for (std::size_t j = i + 1; j < args.size(); ++j) {
            if (args[j] == "--") return args;  // caller already ended options
            if (args[j].size() >= 2 && args[j][0] == '-' &&
                std::isdigit(static_cast<unsigned char>(args[j][1]))) {
                args.insert(args.begin() + static_cast<std::ptrdiff_t>(j), "--");
                return args;
            }
        }
        break;
    }
    return args;
}

ClaimId resolve_claim(std::string token, bool literal) {
    for (char& c : token) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (c == '-') c = '_';
    }
    if (token == "eq2") return literal ? ClaimId::eq2_literal : ClaimId::eq2_corrected;
    if (literal) throw std::domain_error("--literal only applies to claim eq2");
    if (token == "eq2_literal") return ClaimId::eq2_literal;
    if (token == "eq2_corrected") return ClaimId::eq2_corrected;
    if (token == "eq3") return ClaimId::eq3;
    if (token == "eq4") return ClaimId::eq4;
    if (token == "eq5") return ClaimId::eq5;
    if (token == "lemma21") return ClaimId::lemma21;
    if (token == "lucas_fib_link") return ClaimId::lucas_fib_link;
    if (token == "pyth_link") return ClaimId::pyth_link;
    if (token == "f5alpha") return ClaimId::f5alpha;
    if (token == "coprime_consecutive" || token == "coprime") return ClaimId::coprime_consecutive;
    if (token == "gcd_falpha") return ClaimId::gcd_falpha;
    if (token == "lemma32_replay" || token == "replay") return ClaimId::lemma32_replay;
    if (token == "zhang_cofactor" || token == "zhang") return ClaimId::zhang_cofactor;
    throw std::domain_error("unknown claim id: '" + token + "'");
}

struct VerifyParams {
    std::string claim;
    bool literal = false;
    std::optional<std::uint64_t> lo;
    std::optional<std::uint64_t> hi;
    std::vector<std::uint64_t> moduli;      // eq5 shift moduli m
    std::optional<std::uint64_t> ab_max;    // zhang pair bound
    std::vector<std::uint64_t> primes;      // zhang exponents p
};

VerificationReport run_claim(ClaimId id, const VerifyParams& p, const SweepOptions& opt) {
    const ClaimBounds def = default_bounds(id);
    const Index lo = p.lo.value_or(def.lo);
    const Index hi = p.hi.value_or(def.hi);
    switch (id) {
        case ClaimId::eq2_literal: return verify_divisibility_2(lo, hi, true, opt);
        case ClaimId::eq2_corrected: return verify_divisibility_2(lo, hi, false, opt);
        case ClaimId::eq3: return verify_divisibility_3(lo, hi, opt);
        case ClaimId::eq4: return verify_mod4(lo, hi, opt);
        case ClaimId::eq5:
            return verify_shift_congruence(
                p.moduli.empty() ? default_shift_moduli
                                 : std::vector<Index>(p.moduli.begin(), p.moduli.end()),
                lo, hi, opt);
        case ClaimId::lemma21: return verify_sum_squares(lo, hi, opt);
        case ClaimId::lucas_fib_link: return verify_lucas_fib_link(lo, hi, opt);
        case ClaimId::pyth_link: return verify_pyth_link(lo, hi, opt);
        case ClaimId::f5alpha: return verify_f5alpha(lo, hi, opt);
        case ClaimId::coprime_consecutive: return verify_coprime_consecutive(lo, hi, opt);
        case ClaimId::gcd_falpha: return verify_gcd_falpha(lo, hi, opt);
        case ClaimId::lemma32_replay: return verify_lemma32_replay(hi, opt);
        case ClaimId::zhang_cofactor:
            return verify_zhang_cofactor(p.ab_max.value_or(def.hi),
                                         p.primes.empty() ? default_zhang_primes : p.primes, opt);
    }
    throw std::domain_error("unknown claim");
}

// --- solver command helpers -------------------------------------------------

int finish_summary(OutputFormat format, bool ok, const std::string& text_line, json record) {
    record["type"] = "summary";
    record["status"] = ok ? "OK" : "UNEXPECTED";
    emit(format, text_line + " status=" + (ok ? "OK" : "UNEXPECTED"), record);
    return ok ? 0 : 1;
}

int run_solve_main(OutputFormat format, Index n_max, std::uint32_t alpha_max, bool explain) {
    if (explain) {
        for (std::uint32_t a = 0; a <= std::min<std::uint32_t>(alpha_max, 4); ++a) {
            const AlphaCase c = classify_alpha_case(a);
            std::string label = "case alpha=" + std::to_string(a);
            if (a == 4 && alpha_max > 4) label += "..." + std::to_string(alpha_max);
            emit(format,
                 label + " (case " + std::to_string(c.case_number) + "): " +
                     std::string(c.reduction),
                 {{"type", "case"},
                  {"alpha", a},
                  {"case", c.case_number},
                  {"reduction", std::string(c.reduction)}});
        }
    }
    const auto found = solve_main(n_max, alpha_max);
    for (const auto& s : found) emit(format, to_text(s), json_record(s));
    const bool ok = found == known_main_solutions(n_max, alpha_max);
    return finish_summary(
        format, ok,
        "main n_max=" + std::to_string(n_max) + " alpha_max=" + std::to_string(alpha_max) +
            " solutions=" + std::to_string(found.size()),
        {{"equation", "main"}, {"n_max", n_max}, {"alpha_max", alpha_max},
         {"solutions", found.size()}});
}

int run_classify(OutputFormat format, const std::string& which, std::uint64_t k, Index n_max) {
    const bool lucas_seq = which == "lucas";
    const Integer kk = k;
    const auto found = lucas_seq ? solve_lucas_form(kk, n_max) : solve_fib_form(kk, n_max);
    const auto known = lucas_seq ? known_lucas_form(kk, n_max) : known_fib_form(kk, n_max);
    const std::string equation = lucas_seq ? "lucas_form" : "fib_form";
    for (const auto& s : found) emit(format, to_text(s), json_record(s, equation));
    const bool ok = found == known;
    return finish_summary(format, ok,
                          equation + " k=" + std::to_string(k) + " n_max=" +
                              std::to_string(n_max) + " solutions=" + std::to_string(found.size()),
                          {{"equation", equation}, {"k", kk.str()}, {"n_max", n_max},
                           {"solutions", found.size()}});
}

int run_solve_pyth(OutputFormat format, Index n_max) {
    const auto found = solve_pythagorean(n_max);
    for (const auto& s : found) emit(format, to_text(s), json_record(s, "pyth"));
    const bool ok = found == known_pythagorean(n_max);
    return finish_summary(format, ok,
                          "pyth n_max=" + std::to_string(n_max) + " solutions=" +
                              std::to_string(found.size()),
                          {{"equation", "pyth"}, {"n_max", n_max}, {"solutions", found.size()}});
}

int run_solve_catalan(OutputFormat format, std::uint64_t base_max, std::uint64_t exp_max) {
    const auto found = catalan_search(base_max, exp_max);
    for (const auto& s : found) emit(format, to_text(s), json_record(s));
    const bool ok = found == known_catalan(base_max, exp_max);
    return finish_summary(format, ok,
                          "catalan base_max=" + std::to_string(base_max) + " exp_max=" +
                              std::to_string(exp_max) + " solutions=" +
                              std::to_string(found.size()),
                          {{"equation", "catalan"}, {"base_max", base_max},
                           {"exp_max", exp_max}, {"solutions", found.size()}});
}

int run_solve_poonen(OutputFormat format, std::uint32_t n_lo, std::uint32_t n_hi,
                     std::uint64_t ab_max) {
    const auto found = poonen_search(n_lo, n_hi, ab_max);
    for (const auto& s : found) emit(format, to_text(s), json_record(s));
    const bool ok = found.empty();
    return finish_summary(format, ok,
                          "poonen n_lo=" + std::to_string(n_lo) + " n_hi=" +
                              std::to_string(n_hi) + " ab_max=" + std::to_string(ab_max) +
                              " solutions=" + std::to_string(found.size()),
                          {{"equation", "poonen"}, {"n_lo", n_lo}, {"n_hi", n_hi},
                           {"ab_max", ab_max}, {"solutions", found.size()}});
}

// --- audit ------------------------------------------------------------------

int run_audit(OutputFormat format, std::optional<std::uint64_t> n_cap, const SweepOptions& opt) {
    unsigned checks = 0;
    unsigned unexpected = 0;

    const auto clamp = [&](Index def) { return n_cap ? std::min<Index>(*n_cap, def) : def; };
    const auto record = [&](bool ok, const std::string& text_line, json j) {
        ++checks;
        if (!ok) ++unexpected;
        j["type"] = "audit_check";
        j["ok"] = ok;
        emit(format, std::string(ok ? "ok " : "!! ") + text_line, j);
    };
    const auto claim_check = [&](const VerificationReport& r, Status expected) {
        const bool ok = r.status == expected;
        std::string line = to_text(r);
        if (expected == Status::fail) line += " (expected FAIL)";
        record(ok, line,
               {{"record", json_record(r)},
                {"expected", expected == Status::pass ? "PASS" : "FAIL"}});
    };

    claim_check(verify_divisibility_2(0, clamp(100000), true, opt), Status::fail);
    claim_check(verify_divisibility_2(0, clamp(100000), false, opt), Status::pass);
    claim_check(verify_divisibility_3(0, clamp(100000), opt), Status::pass);
    claim_check(verify_mod4(0, clamp(100000), opt), Status::pass);
    claim_check(verify_shift_congruence(default_shift_moduli, 0, clamp(500), opt), Status::pass);
    claim_check(verify_sum_squares(0, clamp(10000), opt), Status::pass);
    claim_check(verify_lucas_fib_link(0, clamp(1000), opt), Status::pass);
    claim_check(verify_pyth_link(0, clamp(1000), opt), Status::pass);
    claim_check(verify_f5alpha(1, std::max<Index>(clamp(200), 1), opt), Status::pass);
    claim_check(verify_coprime_consecutive(0, clamp(10000), opt), Status::pass);
    claim_check(verify_gcd_falpha(1, std::max<Index>(clamp(1000), 1), opt), Status::pass);
    claim_check(verify_lemma32_replay(clamp(2000), opt), Status::pass);
    claim_check(verify_zhang_cofactor(clamp(50), default_zhang_primes, opt), Status::pass);

    const auto set_check = [&](bool ok, const std::string& line, json j) {
        j["status"] = ok ? "OK" : "UNEXPECTED";
        record(ok, line + " status=" + (ok ? "OK" : "UNEXPECTED"), std::move(j));
    };

    {
        const Index n_max = clamp(200);
        const auto found = solve_main(n_max, 12);
        set_check(found == known_main_solutions(n_max, 12),
                  "main n_max=" + std::to_string(n_max) + " alpha_max=12 solutions=" +
                      std::to_string(found.size()),
                  {{"equation", "main"}, {"n_max", n_max}, {"alpha_max", 12},
                   {"solutions", found.size()}});
    }
    for (std::uint64_t k : {1, 2, 3}) {
        const Index n_max = clamp(10000);
        const auto found = solve_lucas_form(k, n_max);
        set_check(found == known_lucas_form(k, n_max),
                  "lucas_form k=" + std::to_string(k) + " n_max=" + std::to_string(n_max) +
                      " solutions=" + std::to_string(found.size()),
                  {{"equation", "lucas_form"}, {"k", std::to_string(k)}, {"n_max", n_max},
                   {"solutions", found.size()}});
    }
    for (std::uint64_t k : {1, 2, 5}) {
        const Index n_max = clamp(10000);
        const auto found = solve_fib_form(k, n_max);
        set_check(found == known_fib_form(k, n_max),
                  "fib_form k=" + std::to_string(k) + " n_max=" + std::to_string(n_max) +
                      " solutions=" + std::to_string(found.size()),
                  {{"equation", "fib_form"}, {"k", std::to_string(k)}, {"n_max", n_max},
                   {"solutions", found.size()}});
    }
    {
        const Index n_max = clamp(1000);
        const auto found = solve_pythagorean(n_max);
        set_check(found == known_pythagorean(n_max),
                  "pyth n_max=" + std::to_string(n_max) + " solutions=" +
                      std::to_string(found.size()),
                  {{"equation", "pyth"}, {"n_max", n_max}, {"solutions", found.size()}});
    }
    {
        const auto found = catalan_search(100, 20);
        set_check(found == known_catalan(100, 20),
                  "catalan base_max=100 exp_max=20 solutions=" + std::to_string(found.size()),
                  {{"equation", "catalan"}, {"base_max", 100}, {"exp_max", 20},
                   {"solutions", found.size()}});
    }
    {
        const auto found = poonen_search(4, 10, 200);
        set_check(found.empty(),
                  "poonen n_lo=4 n_hi=10 ab_max=200 solutions=" + std::to_string(found.size()),
                  {{"equation", "poonen"}, {"n_lo", 4}, {"n_hi", 10}, {"ab_max", 200},
                   {"solutions", found.size()}});
    }
    {
        const bool ok = !is_k_times_square(fibonacci(60), 5).holds;
        record(ok, "F(60) is not of the form 5x^2",
               {{"check", "f60_not_five_square"}});
    }

    emit(format, "audit checks=" + std::to_string(checks) + " unexpected=" +
                     std::to_string(unexpected),
         {{"type", "audit_summary"}, {"checks", checks}, {"unexpected", unexpected}});
    return unexpected == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> raw = preprocess_args(argc, argv);
    std::vector<const char*> args;
    args.reserve(raw.size() + 1);
    args.push_back("lucasq");
    for (const auto& s : raw) args.push_back(s.c_str());

    CLI::App app{"Lucas/Fibonacci arithmetic, congruence verification sweeps, and bounded "
                 "Diophantine search"};
    app.require_subcommand(1);

    std::string format_name = "text";
    SweepOptions sweep_opt;
    app.add_option("--format", format_name, "output format: text or json-lines")
        ->envname("LUCASQ_FORMAT")
        ->check(CLI::IsMember({"text", "json-lines"}))
        ->capture_default_str();
    app.add_option("--cap", sweep_opt.counterexample_cap,
                   "max counterexamples listed per report")
        ->envname("LUCASQ_CAP")
        ->capture_default_str();
    app.add_option("--workers", sweep_opt.workers, "sweep worker threads (0 = hardware)")
        ->envname("LUCASQ_WORKERS")
        ->capture_default_str();

    // seq
    auto* seq = app.add_subcommand("seq", "evaluate L(n) or F(n), optionally mod M");
    std::string seq_which;
    std::uint64_t seq_n = 0;
    std::string seq_mod;
    seq->add_option("which", seq_which, "sequence: lucas or fib")
        ->required()
        ->check(CLI::IsMember({"lucas", "fib"}));
    seq->add_option("n", seq_n, "index")->required();
    seq->add_option("--mod", seq_mod, "reduce modulo M (M >= 2)")->envname("LUCASQ_MOD");

    // jacobi
    auto* jac = app.add_subcommand("jacobi", "Jacobi symbol (a/n) for odd n >= 1");
    std::string jac_a, jac_n;
    jac->add_option("a", jac_a, "numerator (may be negative)")->required();
    jac->add_option("n", jac_n, "odd positive denominator")->required();

    // classify
    auto* cls = app.add_subcommand("classify", "find all n <= n-max with value = K*x^2");
    std::string cls_which;
    std::uint64_t cls_k = 0;
    std::uint64_t cls_n_max = 10000;
    cls->add_option("which", cls_which, "sequence: lucas or fib")
        ->required()
        ->check(CLI::IsMember({"lucas", "fib"}));
    cls->add_option("--k", cls_k, "form factor K (lucas: 1,2,3; fib: 1,2,5)")->required();
    cls->add_option("--n-max", cls_n_max, "index bound")
        ->envname("LUCASQ_N_MAX")
        ->capture_default_str();

    // verify
    auto* ver = app.add_subcommand("verify", "sweep one claim over an index range");
    VerifyParams vp;
    ver->add_option("claim", vp.claim,
                    "claim id: eq2, eq3, eq4, eq5, lemma21, lucas-fib-link, pyth-link, f5alpha, "
                    "coprime, gcd-falpha, replay, zhang")
        ->required();
    ver->add_flag("--literal", vp.literal, "sweep eq2 exactly as printed (expected FAIL)");
    ver->add_option("--lo", vp.lo, "range start (claim-specific default)")->envname("LUCASQ_LO");
    ver->add_option("--hi", vp.hi, "range end (claim-specific default)")->envname("LUCASQ_HI");
    ver->add_option("--m", vp.moduli, "eq5 shift moduli (even, not divisible by 3)");
    ver->add_option("--ab-max", vp.ab_max, "zhang pair bound")->envname("LUCASQ_AB_MAX");
    ver->add_option("--p", vp.primes, "zhang odd prime exponents");

    // solve
    auto* sol = app.add_subcommand("solve", "bounded Diophantine searches");
    std::string sol_which;
    std::uint64_t sol_n_max_main = 200;
    std::uint32_t sol_alpha_max = 12;
    std::uint64_t sol_n_max_pyth = 1000;
    std::uint64_t sol_base_max = 100;
    std::uint64_t sol_exp_max = 20;
    std::uint32_t sol_n_lo = 4;
    std::uint32_t sol_n_hi = 10;
    std::uint64_t sol_ab_max = 200;
    bool sol_explain = false;
    std::optional<std::uint64_t> sol_n_max;
    sol->add_option("which", sol_which, "equation: main, pyth, catalan, or poonen")
        ->required()
        ->check(CLI::IsMember({"main", "pyth", "catalan", "poonen"}));
    sol->add_option("--n-max", sol_n_max, "index bound (main default 200, pyth default 1000)")
        ->envname("LUCASQ_N_MAX");
    sol->add_option("--alpha-max", sol_alpha_max, "main: exponent bound")
        ->envname("LUCASQ_ALPHA_MAX")
        ->capture_default_str();
    sol->add_flag("--explain", sol_explain, "main: print the per-exponent case reductions");
    sol->add_option("--base-max", sol_base_max, "catalan: base bound")
        ->envname("LUCASQ_BASE_MAX")
        ->capture_default_str();
    sol->add_option("--exp-max", sol_exp_max, "catalan: exponent bound")
        ->envname("LUCASQ_EXP_MAX")
        ->capture_default_str();
    sol->add_option("--n-lo", sol_n_lo, "poonen: smallest exponent (>= 4)")
        ->envname("LUCASQ_N_LO")
        ->capture_default_str();
    sol->add_option("--n-hi", sol_n_hi, "poonen: largest exponent")
        ->envname("LUCASQ_N_HI")
        ->capture_default_str();
    sol->add_option("--ab-max", sol_ab_max, "poonen: base bound")
        ->envname("LUCASQ_AB_MAX")
        ->capture_default_str();

    // audit
    auto* aud = app.add_subcommand("audit", "run the full claim suite at default bounds");
    std::optional<std::uint64_t> aud_n_max;
    aud->add_option("--n-max", aud_n_max, "cap every sweep bound at N")->envname("LUCASQ_N_MAX");

    try {
        app.parse(static_cast<int>(args.size()), args.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const OutputFormat format = *format_from_string(format_name);
    try {
        if (app.got_subcommand(seq)) {
            const bool lucas_seq = seq_which == "lucas";
            json j{{"type", "value"}, {"sequence", lucas_seq ? "lucas" : "fib"}, {"n", seq_n}};
            std::string value;
            if (seq->count("--mod") > 0) {
                const Integer m = parse_integer(seq_mod, "--mod");
                const Residue r = lucas_seq ? lucas_mod(seq_n, m) : fibonacci_mod(seq_n, m);
                value = r.value.str();
                j["mod"] = m.str();
            } else {
                value = (lucas_seq ? lucas(seq_n) : fibonacci(seq_n)).str();
            }
            j["value"] = value;
            emit(format, value, j);
            return 0;
        }
        if (app.got_subcommand(jac)) {
            const Integer a = parse_integer(jac_a, "a");
            const Integer n = parse_integer(jac_n, "n");
            const int sym = jacobi(a, n);
            emit(format, std::to_string(sym),
                 {{"type", "value"}, {"a", a.str()}, {"n", n.str()}, {"jacobi", sym}});
            return 0;
        }
        if (app.got_subcommand(cls)) return run_classify(format, cls_which, cls_k, cls_n_max);
        if (app.got_subcommand(ver)) {
            const ClaimId id = resolve_claim(vp.claim, vp.literal);
            const VerificationReport report = run_claim(id, vp, sweep_opt);
            emit(format, to_text(report), json_record(report));
            return report.status == Status::pass ? 0 : 1;
        }
        if (app.got_subcommand(sol)) {
            if (sol_explain && sol_which != "main")
                throw std::domain_error("--explain only applies to solve main");
            if (sol_which == "main")
                return run_solve_main(format, sol_n_max.value_or(sol_n_max_main), sol_alpha_max,
                                      sol_explain);
            if (sol_which == "pyth")
                return run_solve_pyth(format, sol_n_max.value_or(sol_n_max_pyth));
            if (sol_which == "catalan") return run_solve_catalan(format, sol_base_max, sol_exp_max);
            return run_solve_poonen(format, sol_n_lo, sol_n_hi, sol_ab_max);
        }
        if (app.got_subcommand(aud)) return run_audit(format, aud_n_max, sweep_opt);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;  // unreachable: require_subcommand guarantees a dispatch
}
