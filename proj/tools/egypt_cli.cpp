// Command-line front door for the Egyptian fraction library.
//
// Exit codes: 0 ok, 1 domain error, 2 not found, 3 verification failure.

#include "egypt/expansion.hpp"
#include "egypt/operators.hpp"
#include "egypt/rational.hpp"
#include "egypt/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace egypt;

namespace {

enum ExitCode : int { exit_ok = 0, exit_domain = 1, exit_not_found = 2,
                      exit_verify_failed = 3 };

json int_json(const Int& v) {
    // Integers that fit in 64 bits stay JSON numbers; anything larger is
    // preserved exactly as a decimal string.
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

json repr_json(const EgyptianRepr& r) {
    json arr = json::array();
    for (const Int& d : r.denominators()) arr.push_back(int_json(d));
    return arr;
}

json terms_json(const std::vector<Int>& terms) {
    json arr = json::array();
    for (const Int& t : terms) arr.push_back(int_json(t));
    return arr;
}

json instance_json(const OperatorInstance& inst) {
    json params = json::object();
    for (const auto& p : inst.params()) params[p.name] = int_json(p.value);
    return json{{"rule", inst.rule()},
                {"params", params},
                {"consumed", terms_json(inst.consumed())},
                {"produced", terms_json(inst.produced())}};
}

std::string paren_list(const std::vector<Int>& terms) {
    std::string out = "(";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ",";
        out += terms[i].get_str();
    }
    return out + ")";
}

struct Emitter {
    bool as_json = false;
    std::string command;
    std::string status = "ok";
    json result = json::object();
    std::vector<std::string> lines;

    void line(std::string s) { lines.push_back(std::move(s)); }

    int finish(int code) {
        if (code == exit_domain) status = "domain_error";
        else if (code == exit_not_found) status = "not_found";
        else if (code == exit_verify_failed) status = "verification_failure";
        if (as_json) {
            json doc{{"command", command}, {"status", status},
                     {"result", result}};
            std::cout << doc.dump() << "\n";
        } else {
            for (const auto& l : lines) std::cout << l << "\n";
        }
        return code;
    }
};

int run_decompose(Emitter& em, const std::string& target_text,
                  const std::string& mode) {
    Rational target = Rational::parse(target_text);
    em.result["target"] = target.str();
    em.result["mode"] = mode;
    if (mode == "greedy") {
        GreedyTrace trace = greedy_expand(target);
        json jtrace = json::array();
        for (const GreedyStep& s : trace.steps) {
            em.line("step " + std::to_string(s.index) + ": a=" + s.a.get_str() +
                    " b=" + s.b.get_str() + " u=" + s.u.get_str());
            jtrace.push_back(json{{"i", s.index},
                                  {"a", int_json(s.a)},
                                  {"b", int_json(s.b)},
                                  {"u", int_json(s.u)}});
        }
        em.result["trace"] = jtrace;
        em.result["denominators"] = repr_json(trace.result);
        em.line("result: " + trace.result.str());
    } else {
        EgyptianRepr out = expand_full(target);
        em.result["denominators"] = repr_json(out);
        em.line("result: " + out.str());
    }
    return exit_ok;
}

int run_split(Emitter& em, const Int& n, const std::string& rule,
              const std::vector<Int>& factors) {
    OperatorInstance inst = [&] {
        if (rule == "basic") return split_basic(n);
        if (rule == "even") return split_even(n);
        if (rule == "odd3") return split_odd3(n);
        if (rule == "product") {
            Int product(1);
            for (const Int& f : factors) product *= f;
            if (factors.empty() || product != n)
                throw std::domain_error(
                    "split: --factors must multiply to the input");
            return split_product(factors);
        }
        throw std::domain_error("split: unknown rule '" + rule + "'");
    }();
    em.line(paren_list(inst.consumed()) + " -> " + paren_list(inst.produced()));
    em.line("instance: " + inst.str());
    em.line(std::string("parity-preserving: ") +
            (is_parity_preserving(inst) ? "yes" : "no"));
    em.result["rule"] = rule;
    em.result["instance"] = instance_json(inst);
    em.result["parity_preserving"] = is_parity_preserving(inst);
    return exit_ok;
}

int run_rewrite(Emitter& em, const Int& q, const Int& d,
                const std::string& direction) {
    OperatorInstance inst = rewrite_pair(q, d);
    if (direction == "backward") inst = reversed(inst);
    RewriteParams p = RewriteParams::from(q, d);
    std::vector<Int> table{p.r, p.s, q * p.r, q * p.s, p.r * p.s};
    ParityVector parity = parity_signature(table);
    bool chain = inequality_chain_check(q, d);
    bool odd_pres = odd_preserving_check(q, d);

    auto sq = [](const std::vector<Int>& v) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            out += v[i].get_str();
        }
        return out + "]";
    };
    em.line(sq(inst.consumed()) + " <-> " + sq(inst.produced()));
    em.line("q=" + q.get_str() + " d=" + d.get_str() + " r=" + p.r.get_str() +
            " s=" + p.s.get_str());
    em.line("parity(r,s,qr,qs,rs): " + parity.str());
    em.line("chain q<r<s<qr<qs<rs: " + std::string(chain ? "yes" : "no"));
    em.line("odd-preserving: " + std::string(odd_pres ? "yes" : "no"));

    em.result["q"] = int_json(q);
    em.result["d"] = int_json(d);
    em.result["r"] = int_json(p.r);
    em.result["s"] = int_json(p.s);
    em.result["direction"] = direction;
    em.result["consumed"] = terms_json(inst.consumed());
    em.result["produced"] = terms_json(inst.produced());
    em.result["parity"] = parity.str();
    em.result["chain"] = chain;
    em.result["odd_preserving"] = odd_pres;
    return exit_ok;
}

int run_match(Emitter& em, const Int& x, const Int& y) {
    auto m = rewrite_match(x, y);
    if (!m) {
        em.line("no match");
        em.result["found"] = false;
        return exit_not_found;
    }
    const auto& [p, dir] = *m;
    std::string dir_text =
        dir == RewriteDirection::forward ? "forward" : "backward";
    em.line("match: q=" + p.q.get_str() + " d=" + p.d.get_str() +
            " r=" + p.r.get_str() + " s=" + p.s.get_str() +
            " direction=" + dir_text);
    em.result["found"] = true;
    em.result["q"] = int_json(p.q);
    em.result["d"] = int_json(p.d);
    em.result["r"] = int_json(p.r);
    em.result["s"] = int_json(p.s);
    em.result["direction"] = dir_text;
    return exit_ok;
}

int run_merge(Emitter& em, const Int& x, const Int& y) {
    auto n = merge_pair(x, y);
    if (!n) {
        em.line("not a unit sum");
        em.result["found"] = false;
        return exit_not_found;
    }
    em.line("merged: 1/" + x.get_str() + " + 1/" + y.get_str() + " = 1/" +
            n->get_str());
    em.result["found"] = true;
    em.result["merged"] = int_json(*n);
    return exit_ok;
}

int run_search(Emitter& em, const std::string& target_text, int max_terms,
               const Int& max_denom, const std::string& parity) {
    SearchConstraints c;
    c.max_terms = max_terms;
    c.max_denominator = max_denom;
    if (parity == "odd") c.parity = ParityFilter::all_odd;
    else if (parity == "even") c.parity = ParityFilter::all_even;
    else if (parity != "any")
        throw std::domain_error("search: parity must be any, odd, or even");

    Rational target = Rational::parse(target_text);
    std::vector<EgyptianRepr> found = enumerate_reprs(target, c);
    json arr = json::array();
    for (const EgyptianRepr& r : found) {
        em.line(r.str());
        arr.push_back(repr_json(r));
    }
    em.line("count: " + std::to_string(found.size()));
    em.result["target"] = target.str();
    em.result["count"] = found.size();
    em.result["representations"] = arr;
    return found.empty() ? exit_not_found : exit_ok;
}

int run_enumerate_one(Emitter& em, int count) {
    std::vector<EgyptianRepr> reprs = enumerate_one_representations(count);
    json arr = json::array();
    for (const EgyptianRepr& r : reprs) {
        em.line(r.str());
        arr.push_back(repr_json(r));
    }
    em.line("count: " + std::to_string(reprs.size()));
    em.result["count"] = reprs.size();
    em.result["representations"] = arr;
    return exit_ok;
}

// The fixed sweeps behind `verify tables` and `verify theorems`. Bounds are
// part of the CLI contract and never change between runs.
int run_verify_tables(Emitter& em) {
    bool ok = true;
    json jbasic = json::array();
    // Basic split (n) -> (n+1, n(n+1)): row per input parity.
    // Expected: n even -> (o, e); n odd -> (e, e).
    for (int row = 0; row < 2; ++row) {
        Parity n_par = row == 0 ? Parity::even : Parity::odd;
        Parity exp_first = row == 0 ? Parity::odd : Parity::even;
        bool row_ok = true;
        for (Int n(2); n <= 200; n += 1) {
            if (parity_of(n) != n_par) continue;
            OperatorInstance inst = split_basic(n);
            row_ok &= parity_of(inst.produced()[0]) == exp_first &&
                      parity_of(inst.produced()[1]) == Parity::even;
        }
        std::string label = n_par == Parity::even ? "e" : "o";
        std::string got = std::string(exp_first == Parity::odd ? "o" : "e");
        em.line("basic-split row n=" + label + ": (" + got + ",e) " +
                (row_ok ? "ok" : "MISMATCH"));
        jbasic.push_back(json{{"n", label}, {"ok", row_ok}});
        ok &= row_ok;
    }

    // Rewriter table: parity of (r, s, qr, qs, rs) as a function of
    // (parity d, parity q), four rows.
    const struct {
        Parity d, q;
        const char* expected;
    } rows[] = {
        {Parity::odd, Parity::odd, "(e,o,e,o,e)"},
        {Parity::odd, Parity::even, "(o,o,e,e,o)"},
        {Parity::even, Parity::odd, "(o,o,o,o,o)"},
        {Parity::even, Parity::even, "(e,e,e,e,e)"},
    };
    json jrewrite = json::array();
    for (const auto& row : rows) {
        bool row_ok = true;
        for (Int q(2); q <= 49; q += 1) {
            if (parity_of(q) != row.q) continue;
            for (Int d(1); d <= 48; d += 1) {
                if (parity_of(d) != row.d) continue;
                RewriteParams p = RewriteParams::from(q, d);
                std::vector<Int> terms{p.r, p.s, q * p.r, q * p.s, p.r * p.s};
                row_ok &= parity_signature(terms).str() == row.expected;
            }
        }
        std::string dl = row.d == Parity::odd ? "o" : "e";
        std::string ql = row.q == Parity::odd ? "o" : "e";
        em.line("rewriter row d=" + dl + " q=" + ql + ": " + row.expected +
                " " + (row_ok ? "ok" : "MISMATCH"));
        jrewrite.push_back(
            json{{"d", dl}, {"q", ql}, {"parity", row.expected}, {"ok", row_ok}});
        ok &= row_ok;
    }
    em.line(ok ? "tables: ok" : "tables: FAILED");
    em.result["what"] = "tables";
    em.result["basic_split"] = jbasic;
    em.result["rewriter"] = jrewrite;
    em.result["ok"] = ok;
    return ok ? exit_ok : exit_verify_failed;
}

int run_verify_theorems(Emitter& em) {
    long bad_exact = 0, bad_chain = 0, bad_parity = 0, bad_two_term = 0;
    for (Int q(2); q <= 50; q += 1) {
        for (Int d(1); d <= 50; d += 1) {
            RewriteParams p = RewriteParams::from(q, d);
            Rational left =
                Rational::unit(q * p.r) + Rational::unit(q * p.s);
            Rational right =
                Rational::unit(p.s) + Rational::unit(p.r * p.s);
            if (left != right) ++bad_exact;
            if (!inequality_chain_check(q, d)) ++bad_chain;
            OperatorInstance inst = rewrite_pair(q, d);
            bool all_odd =
                parity_signature(inst.consumed()).all_odd() &&
                parity_signature(inst.produced()).all_odd();
            if (all_odd != odd_preserving_check(q, d)) ++bad_parity;
        }
    }
    for (Int n(3); n <= 999; n += 2)
        if (two_term_odd_split_exists(n)) ++bad_two_term;

    em.line("rewriter exactness sweep (q<=50, d<=50): " +
            std::to_string(bad_exact) + " counterexamples");
    em.line("ordering chain sweep: " + std::to_string(bad_chain) +
            " counterexamples");
    em.line("odd-parity biconditional sweep: " + std::to_string(bad_parity) +
            " counterexamples");
    em.line("two-term odd split scan (odd n <= 999): " +
            std::to_string(bad_two_term) + " witnesses");
    bool ok = !(bad_exact || bad_chain || bad_parity || bad_two_term);
    em.line(ok ? "theorems: ok" : "theorems: FAILED");
    em.result["what"] = "theorems";
    em.result["exactness_counterexamples"] = bad_exact;
    em.result["chain_counterexamples"] = bad_chain;
    em.result["parity_counterexamples"] = bad_parity;
    em.result["two_term_witnesses"] = bad_two_term;
    em.result["ok"] = ok;
    return ok ? exit_ok : exit_verify_failed;
}

int run_verify_repr(Emitter& em, const std::string& repr_text,
                    const std::string& target_text) {
    EgyptianRepr repr = EgyptianRepr::parse(repr_text);
    Rational target = Rational::parse(target_text);
    Rational sum = repr_sum(repr);
    bool ok = sum == target;
    em.result["what"] = "repr";
    em.result["representation"] = repr_json(repr);
    em.result["sum"] = sum.str();
    em.result["target"] = target.str();
    em.result["ok"] = ok;
    if (ok) {
        em.line("ok: sum" + repr.str() + " = " + target.str());
        return exit_ok;
    }
    em.line("failure: sum" + repr.str() + " = " + sum.str() + ", expected " +
            target.str());
    return exit_verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Egyptian fraction decomposition and operator toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string target_text, mode = "full", rule, parity = "any";
    std::string direction = "forward", factors_text, repr_text, what;
    std::string x_text, y_text, n_text, q_text, d_text;
    int max_terms = 3, count = 1;
    std::string max_denom_text = "100";

    auto* decompose = app.add_subcommand(
        "decompose", "Decompose a positive rational into unit fractions");
    decompose->add_option("target", target_text, "Rational \"a/b\" or integer")
        ->required();
    decompose->add_option("--mode", mode, "greedy (proper only) or full")
        ->check(CLI::IsMember({"greedy", "full"}));

    auto* split = app.add_subcommand("split", "Split one unit fraction");
    split->add_option("n", n_text, "Denominator to split")->required();
    split->add_option("--rule", rule, "basic, even, odd3, or product")
        ->required()
        ->check(CLI::IsMember({"basic", "even", "odd3", "product"}));
    split->add_option("--factors", factors_text,
                      "Comma-separated factors (product rule)");

    auto* rewrite = app.add_subcommand(
        "rewrite", "Two-term rewriter identity at parameters (q, d)");
    rewrite->add_option("--q", q_text)->required();
    rewrite->add_option("--d", d_text)->required();
    rewrite->add_option("--direction", direction)
        ->check(CLI::IsMember({"forward", "backward"}));

    auto* match = app.add_subcommand(
        "match", "Find rewriter parameters matching a pair of terms");
    match->add_option("x", x_text)->required();
    match->add_option("y", y_text)->required();

    auto* merge = app.add_subcommand("merge", "Merge 1/x + 1/y into 1/n");
    merge->add_option("x", x_text)->required();
    merge->add_option("y", y_text)->required();

    auto* search = app.add_subcommand(
        "search", "Enumerate all representations under bounds");
    search->add_option("target", target_text)->required();
    search->add_option("--max-terms", max_terms)->check(CLI::PositiveNumber);
    search->add_option("--max-denom", max_denom_text);
    search->add_option("--parity", parity)
        ->check(CLI::IsMember({"any", "odd", "even"}));

    auto* enum_one = app.add_subcommand(
        "enumerate-one", "Distinct representations of 1 with minima 2, 3, ...");
    enum_one->add_option("--count", count)->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand(
        "verify", "Re-check tables, theorem sweeps, or a representation");
    verify->add_option("what", what, "tables, theorems, or repr")
        ->required()
        ->check(CLI::IsMember({"tables", "theorems", "repr"}));
    verify->add_option("repr", repr_text, "Representation \"[d1,d2,...]\"");
    verify->add_option("target", target_text, "Expected exact sum");

    // Let --format appear after the subcommand as well as before it.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    Emitter em;
    em.as_json = format == "json";
    em.command = app.get_subcommands().front()->get_name();

    try {
        auto to_int = [](const std::string& s) {
            Rational r = Rational::parse(s);
            if (!r.is_integer())
                throw std::domain_error("expected an integer, got '" + s + "'");
            return r.num();
        };
        int code = exit_domain;
        if (*decompose) {
            code = run_decompose(em, target_text, mode);
        } else if (*split) {
            std::vector<Int> factors;
            if (!factors_text.empty()) {
                std::size_t pos = 0;
                while (pos <= factors_text.size()) {
                    auto comma = factors_text.find(',', pos);
                    if (comma == std::string::npos) comma = factors_text.size();
                    factors.push_back(
                        to_int(factors_text.substr(pos, comma - pos)));
                    pos = comma + 1;
                }
            }
            code = run_split(em, to_int(n_text), rule, factors);
        } else if (*rewrite) {
            code = run_rewrite(em, to_int(q_text), to_int(d_text), direction);
        } else if (*match) {
            code = run_match(em, to_int(x_text), to_int(y_text));
        } else if (*merge) {
            code = run_merge(em, to_int(x_text), to_int(y_text));
        } else if (*search) {
            code = run_search(em, target_text, max_terms,
                              to_int(max_denom_text), parity);
        } else if (*enum_one) {
            code = run_enumerate_one(em, count);
        } else if (*verify) {
            if (what == "tables") code = run_verify_tables(em);
            else if (what == "theorems") code = run_verify_theorems(em);
            else {
                if (repr_text.empty() || target_text.empty())
                    throw std::domain_error(
                        "verify repr needs a representation and a target");
                code = run_verify_repr(em, repr_text, target_text);
            }
        }
        return em.finish(code);
    } catch (const std::exception& e) {
        em.result["message"] = e.what();
        em.line(std::string("error: ") + e.what());
        return em.finish(exit_domain);
    }
}
