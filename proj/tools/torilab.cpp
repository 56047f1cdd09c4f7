// torilab: exact computations on F-stable maximal tori, coinvariant-algebra
// characters, and stable twisted Betti numbers, with JSON output for
// machines and tables for humans.
//
// Exit codes: 0 success, 1 usage/validation error, 2 mathematical
// verification failure.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "torilab/betti.hpp"
#include "torilab/charpoly.hpp"
#include "torilab/coinvariant.hpp"
#include "torilab/symfunc.hpp"
#include "torilab/tori.hpp"
#include "torilab/verify.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace torilab;

namespace {

struct Output {
    ordered_json report;
    std::string text;
    int exit_code = 0;
};

CharacterPolynomial parse_poly_opt(const std::string& expr) {
    try {
        return parse_charpoly(expr);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--poly", e.what());
    }
}

DoublePartition parse_class_opt(const std::string& text) {
    try {
        return DoublePartition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--class", e.what());
    }
}

Partition parse_partition_opt(const std::string& name, const std::string& text) {
    try {
        return Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(name, e.what());
    }
}

std::string class_key(Family f, const DoublePartition& c) {
    return f == Family::A ? c.positive.str() : c.str();
}

ordered_json frame(const std::string& command, ordered_json inputs, ordered_json outputs,
                   const std::string& status) {
    ordered_json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["outputs"] = std::move(outputs);
    j["status"] = status;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    bool json_mode = false, timing = false;
    uint64_t seed = 12345;
    std::string out_file;
    Output result;
    auto started = std::chrono::steady_clock::now();

    CLI::App app{"exact statistics on maximal tori, coinvariant-algebra characters, "
                 "and stable twisted Betti numbers"};
    app.require_subcommand(1);
    app.add_flag("--json", json_mode, "emit a JSON report instead of text");
    app.add_flag("--timing", timing, "include timing in JSON output (text always shows it)");
    app.add_option("--seed", seed, "seed for randomized verification items");
    app.add_option("--out", out_file, "also write the output to this file");

    auto add_sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    // ---- tori ------------------------------------------------------------
    CLI::App* tori = add_sub(&app, "tori", "counts and statistics on F-stable maximal tori");
    tori->require_subcommand(1);

    std::string tc_family, tc_class, tc_q;
    int tc_n = 0;
    bool tc_symbolic = false;
    CLI::App* tcount = add_sub(tori, "count", "number of tori, per type or for one type");
    tcount->add_option("--family", tc_family, "a (GL_n) or bc (Sp_2n / SO_2n+1)")
        ->required()
        ->check(CLI::IsMember({"a", "bc"}));
    tcount->add_option("--n", tc_n, "rank")->required()->check(CLI::NonNegativeNumber);
    tcount->add_option("--class", tc_class, "single type \"mu|lambda\" (type A: just \"lambda\")");
    tcount->add_flag("--symbolic", tc_symbolic, "symbolic in q (default)");
    tcount->add_option("--q", tc_q, "evaluate exactly at this prime power");
    tcount->callback([&] {
        Family f = parse_family(tc_family);
        if (tc_symbolic && !tc_q.empty()) throw CLI::ValidationError("--q", "--q conflicts with --symbolic");
        ordered_json inputs{{"family", tc_family}, {"n", tc_n}};
        ordered_json classes = ordered_json::array();
        std::ostringstream text;
        std::vector<DoublePartition> wanted;
        if (tc_class.empty()) {
            for (const auto& c : conjugacy_classes(f, tc_n)) wanted.push_back(c.label);
        } else {
            std::string label = tc_class;
            if (f == Family::A && label.find('|') == std::string::npos) label += "|";
            DoublePartition c = parse_class_opt(label);
            if (c.size() != tc_n) throw CLI::ValidationError("--class", "|type| must equal n");
            if (f == Family::A && !c.negative.empty()) {
                throw CLI::ValidationError("--class", "type-A tori are typed by a single partition");
            }
            wanted.push_back(c);
            inputs["class"] = tc_class;
        }
        if (!tc_q.empty()) {
            Rational q = Rational::parse(tc_q);
            inputs["q"] = tc_q;
            Rational total(0);
            for (const auto& c : wanted) {
                Rational v = count_tori_at(f, c, tc_n, q);
                classes.push_back({{"class", class_key(f, c)}, {"count", v.str()}});
                text << class_key(f, c) << "\t" << v.str() << "\n";
                total += v;
            }
            ordered_json outputs{{"classes", classes}};
            if (tc_class.empty()) {
                outputs["total"] = total.str();
                text << "total\t" << total.str() << "\n";
            }
            result.report = frame("tori count", inputs, outputs, "ok");
        } else {
            inputs["symbolic"] = true;
            RationalFunction total;
            for (const auto& c : wanted) {
                RationalFunction v = count_tori(f, c, tc_n);
                classes.push_back({{"class", class_key(f, c)}, {"count", v.str("q")}});
                text << class_key(f, c) << "\t" << v.str("q") << "\n";
                total += v;
            }
            ordered_json outputs{{"classes", classes}};
            if (tc_class.empty()) {
                outputs["total"] = total.str("q");
                text << "total\t" << total.str("q") << "\n";
            }
            result.report = frame("tori count", inputs, outputs, "ok");
        }
        result.text = text.str();
    });

    std::string ts_family, ts_poly;
    int ts_n = 0;
    CLI::App* tstat = add_sub(tori, "stat", "sum of a polynomial statistic over all tori, exact in q");
    tstat->add_option("--family", ts_family)->required()->check(CLI::IsMember({"a", "bc"}));
    tstat->add_option("--poly", ts_poly, "character polynomial expression")->required();
    tstat->add_option("--n", ts_n)->required()->check(CLI::NonNegativeNumber);
    tstat->callback([&] {
        Family f = parse_family(ts_family);
        CharacterPolynomial P = parse_poly_opt(ts_poly);
        RationalFunction sum = [&] {
            try {
                return statistic_sum(f, P, ts_n);
            } catch (const std::invalid_argument& e) {
                throw CLI::ValidationError("--poly", e.what());
            }
        }();
        RationalFunction normalized = sum / RationalFunction(total_tori(f, ts_n));
        ordered_json outputs{{"sum", sum.str("q")}, {"normalized", normalized.str("q")}};
        result.report = frame("tori stat", {{"family", ts_family}, {"poly", ts_poly}, {"n", ts_n}}, outputs, "ok");
        result.text = "sum\t" + sum.str("q") + "\nnormalized\t" + normalized.str("q") + "\n";
    });

    // ---- lehrer ------------------------------------------------------------
    std::string lv_family, lv_chi;
    int lv_n = 0;
    CLI::App* lehrer = add_sub(&app, "lehrer", "check the point-count/coinvariant identity for one class function");
    lehrer->add_option("--family", lv_family)->required()->check(CLI::IsMember({"a", "bc"}));
    lehrer->add_option("--n", lv_n)->required()->check(CLI::NonNegativeNumber);
    lehrer->add_option("--chi", lv_chi, "poly:EXPR or irr:LAMBDA (irreducible characters: family a)")
        ->required();
    lehrer->callback([&] {
        Family f = parse_family(lv_family);
        ClassFunction chi{f, lv_n, {}};
        if (lv_chi.rfind("poly:", 0) == 0) {
            CharacterPolynomial P = parse_poly_opt(lv_chi.substr(5));
            try {
                chi = ClassFunction::from_charpoly(f, lv_n, P);
            } catch (const std::invalid_argument& e) {
                throw CLI::ValidationError("--chi", e.what());
            }
        } else if (lv_chi.rfind("irr:", 0) == 0) {
            if (f != Family::A) {
                throw CLI::ValidationError("--chi", "irreducible characters are supported for family a only");
            }
            Partition lam = parse_partition_opt("--chi", lv_chi.substr(4));
            if (lam.size() != lv_n) throw CLI::ValidationError("--chi", "|lambda| must equal n");
            for (const auto& c : conjugacy_classes(f, lv_n)) {
                chi.values.push_back(Rational(mn_character(lam, c.label.positive)));
            }
        } else {
            throw CLI::ValidationError("--chi", "expected poly:EXPR or irr:LAMBDA");
        }
        auto rep = lehrer_verify(chi);
        ordered_json outputs{{"lhs", rep.lhs.str("q")}, {"rhs", rep.rhs.str("q")}, {"equal", rep.ok}};
        result.report = frame("lehrer", {{"family", lv_family}, {"n", lv_n}, {"chi", lv_chi}}, outputs,
                              rep.ok ? "pass" : "fail");
        result.text = "lhs\t" + rep.lhs.str("q") + "\nrhs\t" + rep.rhs.str("q") + "\n" +
                      (rep.ok ? "equal\n" : "MISMATCH\n");
        if (!rep.ok) result.exit_code = 2;
    });

    // ---- asympt ------------------------------------------------------------
    std::string as_family, as_poly;
    CLI::App* asympt = add_sub(&app, "asympt", "closed-form limit of the normalized statistic");
    asympt->add_option("--family", as_family)->required()->check(CLI::IsMember({"a", "bc"}));
    asympt->add_option("--poly", as_poly)->required();
    asympt->callback([&] {
        Family f = parse_family(as_family);
        CharacterPolynomial P = parse_poly_opt(as_poly);
        RationalFunction lim = [&] {
            try {
                return asymptotic_limit(f, P);
            } catch (const std::invalid_argument& e) {
                throw CLI::ValidationError("--poly", e.what());
            }
        }();
        result.report = frame("asympt", {{"family", as_family}, {"poly", as_poly}},
                              {{"limit", lim.str("q")}}, "ok");
        result.text = "limit\t" + lim.str("q") + "\n";
    });

    // ---- coinv ------------------------------------------------------------
    CLI::App* coinv = add_sub(&app, "coinv", "graded characters of the coinvariant algebras");
    coinv->require_subcommand(1);

    std::string cg_family;
    int cg_n = 0;
    CLI::App* cgraded = add_sub(coinv, "graded", "graded character, one polynomial in z per class");
    cgraded->add_option("--family", cg_family)->required()->check(CLI::IsMember({"a", "bc"}));
    cgraded->add_option("--n", cg_n)->required()->check(CLI::NonNegativeNumber);
    cgraded->callback([&] {
        Family f = parse_family(cg_family);
        GradedCharacter g = f == Family::A ? graded_char_a(cg_n) : graded_char_bc(cg_n);
        ordered_json rows = ordered_json::array();
        std::ostringstream text;
        for (size_t i = 0; i < g.classes.size(); ++i) {
            ordered_json coeffs = ordered_json::array();
            for (int d = 0; d <= g.top_degree(); ++d) coeffs.push_back(g.polys[i].coeff(d).str());
            rows.push_back({{"class", class_key(f, g.classes[i].label)}, {"poly", coeffs}});
            text << class_key(f, g.classes[i].label) << "\t" << g.polys[i].str("z") << "\n";
        }
        result.report = frame("coinv graded", {{"family", cg_family}, {"n", cg_n}},
                              {{"classes", rows}, {"top_degree", g.top_degree()}}, "ok");
        result.text = text.str();
    });

    int cq_deg = 0;
    CLI::App* cqpoly = add_sub(coinv, "qpoly", "stable character polynomials Q_0..Q_D");
    cqpoly->add_option("--max-degree", cq_deg)->required()->check(CLI::NonNegativeNumber);
    cqpoly->callback([&] {
        auto qs = q_char_polys(cq_deg);
        ordered_json rows = ordered_json::array();
        std::ostringstream text;
        for (size_t i = 0; i < qs.size(); ++i) {
            rows.push_back({{"i", i}, {"poly", qs[i].str()}});
            text << "Q_" << i << " = " << qs[i].str() << "\n";
        }
        result.report = frame("coinv qpoly", {{"max_degree", cq_deg}}, {{"q_polys", rows}}, "ok");
        result.text = text.str();
    });

    // ---- betti ------------------------------------------------------------
    std::string bt_poly;
    int bt_terms = 12;
    bool bt_rec = false, bt_qp = false;
    CLI::App* betti = add_sub(&app, "betti", "stable twisted Betti numbers of a character polynomial");
    betti->add_option("--poly", bt_poly, "character polynomial expression");
    betti->add_option("--terms", bt_terms, "number of coefficients to expand (default 12)")
        ->check(CLI::NonNegativeNumber);
    betti->add_flag("--recurrence", bt_rec, "include the linear recurrence");
    betti->add_flag("--quasipoly", bt_qp, "include the quasipolynomial closed form");

    std::string bd_class;
    int bd_nmax = 0, bd_zorder = 0;
    CLI::App* bdouble = add_sub(betti, "double-gf", "verify the double generating function for one type");
    bdouble->add_option("--class", bd_class)->required();
    bdouble->add_option("--n-max", bd_nmax)->required()->check(CLI::NonNegativeNumber);
    bdouble->add_option("--z-order", bd_zorder)->required()->check(CLI::NonNegativeNumber);
    bdouble->callback([&] {
        DoublePartition type = parse_class_opt(bd_class);
        auto rep = verify_double_gf(type, bd_nmax, bd_zorder);
        result.report = frame("betti double-gf",
                              {{"class", bd_class}, {"n_max", bd_nmax}, {"z_order", bd_zorder}},
                              {{"detail", rep.detail}}, rep.ok ? "pass" : "fail");
        result.text = std::string(rep.ok ? "pass" : "FAIL") + ": " + rep.detail + "\n";
        if (!rep.ok) result.exit_code = 2;
    });

    betti->callback([&] {
        if (bdouble->parsed()) return;
        if (bt_poly.empty()) throw CLI::ValidationError("--poly", "required (or use the double-gf subcommand)");
        CharacterPolynomial P = parse_poly_opt(bt_poly);
        BettiGF g = stable_betti_gf(P);
        auto coeffs = betti_coeffs(g, bt_terms);
        ordered_json outputs;
        outputs["gf"] = {{"num", g.gf.num().str("z")}, {"den", g.gf.den().str("z")}};
        ordered_json carr = ordered_json::array();
        for (const auto& c : coeffs) carr.push_back(c.str());
        outputs["coeffs"] = carr;
        std::ostringstream text;
        text << "gf\t(" << g.gf.num().str("z") << ") / (" << g.gf.den().str("z") << ")\n";
        text << "coeffs";
        for (const auto& c : coeffs) text << " " << c.str();
        text << "\n";
        if (bt_rec) {
            auto rec = recurrence(g);
            ordered_json lags = ordered_json::array(), ds = ordered_json::array();
            for (int j = 1; j <= rec.order(); ++j) {
                if (!rec.coeffs[static_cast<size_t>(j - 1)].is_zero()) {
                    lags.push_back(j);
                    ds.push_back(rec.coeffs[static_cast<size_t>(j - 1)].str());
                }
            }
            outputs["recurrence"] = {{"lags", lags}, {"coeffs", ds}, {"valid_from", rec.valid_from}};
            text << "recurrence\tbeta_i =";
            for (size_t k = 0; k < lags.size(); ++k) {
                std::string d = ds[k].get<std::string>();
                bool neg = !d.empty() && d[0] == '-';
                if (neg) d = d.substr(1);
                text << (k == 0 ? (neg ? " -" : " ") : (neg ? " - " : " + "));
                if (d != "1") text << d << "*";
                text << "beta_{i-" << lags[k].get<int>() << "}";
            }
            text << "  (i >= " << rec.valid_from << ")\n";
        }
        if (bt_qp) {
            auto qp = quasipolynomial(g);
            // group residues sharing the same case polynomial
            std::vector<std::pair<Poly, std::vector<int>>> groups;
            for (int r = 0; r < qp.period; ++r) {
                bool found = false;
                for (auto& [poly, residues] : groups) {
                    if (poly == qp.polys[static_cast<size_t>(r)]) {
                        residues.push_back(r);
                        found = true;
                        break;
                    }
                }
                if (!found) groups.push_back({qp.polys[static_cast<size_t>(r)], {r}});
            }
            ordered_json cases = ordered_json::array();
            for (const auto& [poly, residues] : groups) {
                cases.push_back({{"residues", residues}, {"poly", poly.str("i")}});
            }
            outputs["quasipolynomial"] = {{"period", qp.period},
                                          {"cases", cases},
                                          {"valid_from", qp.valid_from}};
            text << "quasipolynomial\tperiod " << qp.period << ", valid from " << qp.valid_from << "\n";
            for (const auto& [poly, residues] : groups) {
                text << "  i mod " << qp.period << " in {";
                for (size_t k = 0; k < residues.size(); ++k) text << (k ? "," : "") << residues[k];
                text << "}: " << poly.str("i") << "\n";
            }
        }
        result.report = frame("betti", {{"poly", bt_poly}, {"terms", bt_terms}}, outputs, "ok");
        result.text = text.str();
    });

    // ---- symfunc ------------------------------------------------------------
    CLI::App* symf = add_sub(&app, "symfunc", "symmetric-group character values and tableau statistics");
    symf->require_subcommand(1);

    std::string mn_lambda, mn_mu;
    CLI::App* mn = add_sub(symf, "mn", "irreducible character value chi^lambda_mu");
    mn->add_option("--lambda", mn_lambda)->required();
    mn->add_option("--mu", mn_mu)->required();
    mn->callback([&] {
        Partition lam = parse_partition_opt("--lambda", mn_lambda);
        Partition mu = parse_partition_opt("--mu", mn_mu);
        if (lam.size() != mu.size()) throw CLI::ValidationError("--mu", "|lambda| and |mu| must agree");
        long long v = mn_character(lam, mu);
        result.report = frame("symfunc mn", {{"lambda", mn_lambda}, {"mu", mn_mu}}, {{"value", v}}, "ok");
        result.text = std::to_string(v) + "\n";
    });

    std::string fm_lambda;
    CLI::App* fmaj = add_sub(symf, "fmaj", "standard tableaux of a shape tallied by major index");
    fmaj->add_option("--lambda", fm_lambda)->required();
    fmaj->callback([&] {
        Partition lam = parse_partition_opt("--lambda", fm_lambda);
        auto fmap = f_lambda_i(lam);
        ordered_json rows = ordered_json::array();
        std::ostringstream text;
        for (const auto& [i, c] : fmap) {
            rows.push_back({{"maj", i}, {"count", c}});
            text << i << "\t" << c << "\n";
        }
        result.report = frame("symfunc fmaj", {{"lambda", fm_lambda}}, {{"counts", rows}}, "ok");
        result.text = text.str();
    });

    // ---- verify ------------------------------------------------------------
    CLI::App* verify = add_sub(&app, "verify", "run the verification battery");
    verify->require_subcommand(1);
    std::string vf_level = "quick";
    CLI::App* vall = add_sub(verify, "all", "every identity in the suite");
    vall->add_option("--level", vf_level)->check(CLI::IsMember({"quick", "full"}));
    vall->callback([&] {
        VerifyLevel level = vf_level == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
        auto results = run_verification(level, seed);
        ordered_json items = ordered_json::array();
        std::ostringstream text;
        int failures = 0;
        for (const auto& r : results) {
            ordered_json item{{"id", r.id},
                              {"name", r.name},
                              {"status", r.pass ? "pass" : "fail"},
                              {"detail", r.detail}};
            if (timing) item["seconds"] = r.seconds;
            items.push_back(std::move(item));
            char line[64];
            std::snprintf(line, sizeof(line), "[%s] %2d. ", r.pass ? "PASS" : "FAIL", r.id);
            text << line << r.name << " (" << std::fixed << std::setprecision(2) << r.seconds
                 << "s): " << r.detail << "\n";
            if (!r.pass) ++failures;
        }
        text << results.size() << " criteria, " << failures << " failed\n";
        result.report = frame("verify all", {{"level", vf_level}, {"seed", seed}}, {{"criteria", items}},
                              failures == 0 ? "pass" : "fail");
        result.text = text.str();
        if (failures != 0) result.exit_code = 2;
    });

    // ---- parse and emit ----------------------------------------------------
    bool argv_json = false;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--json") argv_json = true;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        if (argv_json) {
            ordered_json err{{"error", {{"type", "usage"}, {"message", e.what()}}}};
            std::cout << err.dump(2) << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 1;
    } catch (const std::exception& e) {
        if (argv_json) {
            ordered_json err{{"error", {{"type", "internal"}, {"message", e.what()}}}};
            std::cout << err.dump(2) << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 1;
    }

    std::string payload;
    if (json_mode) {
        if (timing) {
            result.report["timing_ms"] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        }
        payload = result.report.dump(2) + "\n";
    } else {
        payload = result.text;
    }
    std::cout << payload;
    if (!out_file.empty()) {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << out_file << "\n";
            return 1;
        }
        out << payload;
    }
    return result.exit_code;
}
