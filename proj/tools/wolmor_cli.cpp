// Command-line frontend: compute / search / verify with machine-readable
// output. Results go to stdout; progress and summaries go to stderr.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wolmor/search.hpp"
#include "wolmor/verify.hpp"

using namespace wolmor;
using ojson = nlohmann::ordered_json;

namespace {

enum class Format { JsonLines, Csv, Human };

Format format_from_name(const std::string& name) {
    if (name == "json-lines") return Format::JsonLines;
    if (name == "csv") return Format::Csv;
    if (name == "human") return Format::Human;
    throw CLI::ValidationError("--format", "expected json-lines, csv or human");
}

std::string factors_human(const Factorization& f) {
    std::string out;
    for (auto [p, e] : f.factors) {
        if (!out.empty()) out += "*";
        out += std::to_string(p);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string modulus_human(const SearchHit& hit) {
    u64 base = hit.kind == HitKind::Prime || hit.kind == HitKind::SquarePseudoprime
                   ? hit.factors.factors[0].first
                   : hit.n;
    unsigned exp = hit.kind == HitKind::Prime ? 4
                   : hit.kind == HitKind::SquarePseudoprime ? 4
                                                            : hit.order;
    std::string out = std::to_string(base);
    if (exp > 1) out += "^" + std::to_string(exp);
    return out;
}

void print_hits(const std::vector<SearchHit>& hits, Format format) {
    if (format == Format::Csv)
        std::cout << "n,family,kind,order,factors,residual,modulus,confirmed,b_pm3\n";
    for (const SearchHit& hit : hits) {
        switch (format) {
            case Format::JsonLines:
                std::cout << hit_to_json(hit) << "\n";
                break;
            case Format::Csv:
                std::cout << hit.n << "," << family_letter(hit.family) << ","
                          << hit_kind_name(hit.kind) << "," << hit.order << ","
                          << factors_human(hit.factors) << ","
                          << to_string_u128(hit.residual.value) << ","
                          << to_string_u128(hit.residual.modulus) << ","
                          << (hit.confirmed ? 1 : 0) << ","
                          << (hit.b_pm3 ? to_string_u128(hit.b_pm3->value) : "") << "\n";
                break;
            case Format::Human:
                std::cout << family_letter(hit.family) << "_" << hit.n << " ≡ 1 (mod "
                          << modulus_human(hit) << ")  [" << hit_kind_name(hit.kind) << ", "
                          << factors_human(hit.factors) << "]";
                if (hit.b_pm3)
                    std::cout << "  B_{p-3} ≡ " << to_string_u128(hit.b_pm3->value) << " (mod "
                              << to_string_u128(hit.b_pm3->modulus) << ")";
                std::cout << "\n";
                break;
        }
    }
}

void print_residue_record(const std::string& op, std::initializer_list<std::pair<const char*, u64>>
                              params,
                          const std::string& value, const std::string& modulus, Format format,
                          const std::string& human) {
    switch (format) {
        case Format::JsonLines: {
            ojson j;
            j["op"] = op;
            for (auto& [k, v] : params) j[k] = v;
            j["value"] = value;
            j["modulus"] = modulus;
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::Csv: {
            std::cout << "op,value,modulus\n" << op << "," << value << "," << modulus << "\n";
            break;
        }
        case Format::Human:
            std::cout << human << "\n";
            break;
    }
}

void print_verdict(const StatementVerdict& v, Format format) {
    switch (format) {
        case Format::JsonLines:
            std::cout << verdict_to_json(v) << "\n";
            break;
        case Format::Csv:
            std::cout << v.id << "," << verdict_status_name(v.status) << "," << v.instances << ","
                      << v.counterexample_count << ",\"" << v.range_tested << "\"\n";
            break;
        case Format::Human: {
            const char* mark = v.status == VerdictStatus::Pass ? "pass"
                               : v.status == VerdictStatus::Partial ? "PARTIAL"
                                                                    : "FAIL";
            char buf[32];
            std::snprintf(buf, sizeof buf, "%7.2fs", v.runtime_seconds);
            std::cout << "[" << mark << "] " << v.id << "  (" << v.instances << " instances, "
                      << buf << ")  " << v.range_tested;
            if (!v.note.empty()) std::cout << "  -- " << v.note;
            std::cout << "\n";
            for (const auto& ce : v.counterexamples)
                std::cout << "    counterexample " << ce.inputs_text << ": " << ce.lhs
                          << " != " << ce.rhs << "\n";
            break;
        }
    }
}

struct GlobalOpts {
    unsigned workers = 0;
    std::string format = "json-lines";
    u64 seed = 0;
    double sample_rate = 0.01;
    bool strict = false;
    std::string checkpoint;
    bool resume = false;
};

ScanOptions scan_options(const GlobalOpts& g) {
    ScanOptions opt;
    opt.workers = g.workers;
    opt.seed = g.seed;
    opt.sample_rate = g.sample_rate;
    opt.strict = g.strict;
    opt.checkpoint_path = g.checkpoint;
    opt.resume = g.resume;
    auto last = std::make_shared<std::chrono::steady_clock::time_point>(
        std::chrono::steady_clock::now());
    opt.progress = [last](u64 done, u64 total) {
        auto now = std::chrono::steady_clock::now();
        if (done == total || now - *last > std::chrono::seconds(2)) {
            *last = now;
            std::cerr << "progress: " << done << "/" << total << " blocks\n";
        }
    };
    return opt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wolstenholme/Morley congruence toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("WOLMOR_WORKERS")) g.workers = unsigned(std::atoi(env));
    app.add_option("--workers", g.workers, "worker thread count (env WOLMOR_WORKERS)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "json-lines | csv | human")
        ->default_str("json-lines");
    app.add_option("--seed", g.seed, "seed for confirmation sampling");
    app.add_option("--sample-rate", g.sample_rate,
                   "fraction of fast-path rejections re-checked directly");
    app.add_flag("--strict", g.strict, "disable the corollary-based skip filters");
    app.add_option("--checkpoint", g.checkpoint, "checkpoint file path");
    app.add_flag("--resume", g.resume, "resume from the checkpoint file");

    // ---- compute ----------------------------------------------------------
    auto* compute = app.add_subcommand("compute", "evaluate one quantity");
    u64 cn = 0, cp = 0, cm = 0;
    unsigned mod_exp = 3, prec = 1;

    auto* cw = compute->add_subcommand("w", "W_n = C(2n-1, n-1) mod n^k");
    cw->add_option("--n", cn, "odd index n")->required();
    cw->add_option("--mod-exp", mod_exp, "modulus exponent k in 1..4");

    auto* cmm = compute->add_subcommand("m", "M_n, the signed normalized central binomial, mod n^k");
    cmm->add_option("--n", cn, "odd index n")->required();
    cmm->add_option("--mod-exp", mod_exp, "modulus exponent k in 1..4");

    auto* cb = compute->add_subcommand("bernoulli", "B_m mod p by the recurrence oracle");
    cb->add_option("--p", cp, "odd prime p >= 5")->required();
    cb->add_option("--m", cm, "index m <= p-3")->required();

    auto* cf = compute->add_subcommand("fermat-quotient", "(2^{p-1} - 1)/p mod p^e");
    cf->add_option("--p", cp, "odd prime")->required();
    cf->add_option("--prec", prec, "precision e in 1..2");

    auto* cs = compute->add_subcommand("sums", "the S and T harmonic sum families at p");
    cs->add_option("--p", cp, "prime p >= 7")->required();

    // ---- search -----------------------------------------------------------
    auto* search = app.add_subcommand("search", "range scans");
    u64 lo = 5, hi = 0, bound = 0;
    std::string family_s = "w", shape = "semiprime";
    unsigned order = 0;

    auto* sw = search->add_subcommand("wprimes", "Wolstenholme primes in [lo, hi)");
    sw->add_option("--lo", lo, "lower bound (>= 5)");
    sw->add_option("--hi", hi, "upper bound")->required();

    auto* sm = search->add_subcommand("mprimes", "Morley primes in [lo, hi)");
    sm->add_option("--lo", lo, "lower bound (>= 5)");
    sm->add_option("--hi", hi, "upper bound")->required();

    auto* sp = search->add_subcommand("pseudoprimes", "odd composite pseudoprimes below a bound");
    sp->add_option("--family", family_s, "w | m")->required();
    sp->add_option("--order", order, "congruence order (1..3; square shape is order 2)");
    sp->add_option("--shape", shape, "semiprime | square | any");
    sp->add_option("--bound", bound, "scan bound (square shape: bound on p, hits are p^2)")
        ->required();

    // ---- verify -----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "empirical checks of the named statements");
    std::string statement = "all", profile_s = "standard";
    verify->add_option("--statement", statement, "statement key or 'all'");
    verify->add_option("--profile", profile_s, "quick | standard | extended");

    // global flags may appear after any subcommand
    for (auto* sub : {compute, search, verify}) {
        sub->fallthrough();
        for (auto* leaf : sub->get_subcommands([](const CLI::App*) { return true; }))
            leaf->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Format format = format_from_name(g.format);
        if (g.resume && g.checkpoint.empty())
            throw CLI::ValidationError("--resume", "requires --checkpoint PATH");

        if (cw->parsed() || cmm->parsed()) {
            bool is_w = cw->parsed();
            auto value = is_w ? w_value(cn, mod_exp) : m_value(cn, mod_exp);
            std::string letter = is_w ? "W" : "M";
            std::string human = letter + "_" + std::to_string(cn) + " ≡ " +
                                value.value.to_string() + " (mod " + std::to_string(cn) + "^" +
                                std::to_string(mod_exp) + ")";
            print_residue_record(is_w ? "w" : "m",
                                 {{"n", cn}, {"mod_exp", u64(mod_exp)}},
                                 value.value.to_string(), value.modulus.to_string(), format,
                                 human);
            return 0;
        }
        if (cb->parsed()) {
            auto b = bernoulli_mod_p(cp, cm);
            print_residue_record(
                "bernoulli", {{"p", cp}, {"m", cm}}, to_string_u128(b.value.value),
                to_string_u128(b.value.modulus), format,
                "B_" + std::to_string(cm) + " ≡ " + to_string_u128(b.value.value) + " (mod " +
                    std::to_string(cp) + ")");
            return 0;
        }
        if (cf->parsed()) {
            auto q = fermat_quotient(cp, prec);
            print_residue_record(
                "fermat-quotient", {{"p", cp}, {"prec", u64(prec)}},
                to_string_u128(q.value.value), to_string_u128(q.value.modulus), format,
                "q_" + std::to_string(cp) + " ≡ " + to_string_u128(q.value.value) + " (mod " +
                    std::to_string(cp) + "^" + std::to_string(prec) + ")");
            return 0;
        }
        if (cs->parsed()) {
            auto s = s_sums(cp);
            auto t = t_sums(cp);
            if (format == Format::Human) {
                auto line = [&](const char* name, const Residue& r) {
                    std::cout << name << " ≡ " << to_string_u128(r.value) << " (mod "
                              << to_string_u128(r.modulus) << ")\n";
                };
                line("S_a", s.a); line("S_b", s.b); line("S_c", s.c);
                line("S_d", s.d); line("S_e", s.e);
                line("T_a", t.a); line("T_b", t.b); line("T_c", t.c);
                line("T_d", t.d); line("T_e", t.e);
            } else {
                ojson j;
                j["op"] = "sums";
                j["p"] = cp;
                auto put = [&](const char* name, const Residue& r) {
                    j[name] = {{"value", to_string_u128(r.value)},
                               {"modulus", to_string_u128(r.modulus)}};
                };
                put("s_a", s.a); put("s_b", s.b); put("s_c", s.c); put("s_d", s.d); put("s_e", s.e);
                put("t_a", t.a); put("t_b", t.b); put("t_c", t.c); put("t_d", t.d); put("t_e", t.e);
                std::cout << j.dump() << "\n";
            }
            return 0;
        }

        if (sw->parsed() || sm->parsed()) {
            auto res = sw->parsed() ? scan_wolstenholme_primes(lo, hi, scan_options(g))
                                    : scan_morley_primes(lo, hi, scan_options(g));
            print_hits(res.hits, format);
            std::cerr << "scanned " << res.stats.candidates << " primes, "
                      << res.hits.size() << " hit(s), " << res.stats.sampled_confirmations
                      << " sampled confirmations\n";
            if (!res.completed) std::cerr << "stopped early; checkpoint saved\n";
            return 0;
        }
        if (sp->parsed()) {
            Family family = family_from_letter(family_s);
            ScanResult res;
            if (shape == "semiprime") {
                if (order == 0) order = 1;
                res = scan_semiprime_pseudoprimes(bound, family, order, scan_options(g));
            } else if (shape == "square") {
                if (order == 0) order = 2;
                if (order != 2)
                    throw CLI::ValidationError("--order", "square-shape scans are order 2");
                res = scan_square_pseudoprimes(5, bound, family, scan_options(g));
            } else if (shape == "any") {
                if (order == 0) order = 1;
                res = scan_general_pseudoprimes(bound, family, order, scan_options(g));
            } else {
                throw CLI::ValidationError("--shape", "expected semiprime, square or any");
            }
            print_hits(res.hits, format);
            std::cerr << "scanned " << res.stats.candidates << " candidates, "
                      << res.hits.size() << " hit(s), " << res.stats.sampled_confirmations
                      << " sampled confirmations, " << res.stats.filter_skips
                      << " filter skips\n";
            return 0;
        }

        if (verify->parsed()) {
            const auto& reg = StatementRegistry::standard();
            if (statement == "list") {
                std::vector<std::string> ids;
                for (const auto& e : reg.entries()) ids.push_back(e.id);
                std::sort(ids.begin(), ids.end());
                for (const auto& id : ids) std::cout << id << "\n";
                return 0;
            }
            Profile profile = profile_from_name(profile_s);
            std::vector<StatementVerdict> verdicts;
            if (statement == "all") {
                verdicts = reg.run_all(profile, g.workers);
            } else {
                verdicts.push_back(reg.verify(statement, limits_for(profile), g.workers));
            }
            for (const auto& v : verdicts) print_verdict(v, format);
            double total = 0;
            unsigned failed = 0;
            for (const auto& v : verdicts) {
                total += v.runtime_seconds;
                if (v.status == VerdictStatus::Fail) ++failed;
            }
            std::cerr << verdicts.size() << " statement(s), " << failed << " failed, "
                      << total << "s total\n";
            return all_passed(verdicts) ? 0 : 1;
        }

        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CorruptCheckpointError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ScanIntegrityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const UnknownStatementError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotCompositeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EvenInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
