// Command-line front end: computes spectra, theta tables, certified rational
// forms, isospectrality verdicts, family searches, Ehrhart data and oracle
// cross-checks, with machine-readable output. Exit status: 0 success,
// 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "lenspec/ehrhart.hpp"
#include "lenspec/isospectral.hpp"
#include "lenspec/oracles.hpp"
#include "lenspec/repro.hpp"
#include "lenspec/spectra.hpp"

using json = nlohmann::ordered_json;
using namespace lenspec;

namespace {

std::vector<long> parse_residues(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stol(item));
    }
    return out;
}

std::string rational_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

struct CommonArgs {
    long q = 1;
    int n = 2;
    std::string s_text;
    std::string format = "json";

    LensParams lens() const { return validate(n, q, parse_residues(s_text)); }
    void add_to(CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--q", q, "order of the cyclic group")->required();
        cmd->add_option("--n", n, "half-dimension n (the sphere is S^{2n-1})")->required();
        cmd->add_option("--s", s_text, "rotation parameters, comma separated")->required();
        if (with_format)
            cmd->add_option("--format", format, "json | csv | text")
                ->check(CLI::IsMember({"json", "csv", "text"}));
    }
};

json lens_json(const LensParams& L) {
    return json{{"q", L.q},
                {"n", L.n},
                {"s", L.s},
                {"kind", L.is_manifold() ? "manifold" : "orbifold"}};
}

json spectrum_json(const SpectrumReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries)
        entries.push_back(json{{"eigenvalue", e.eigenvalue},
                               {"multiplicity", e.multiplicity.get_str()},
                               {"k", e.k},
                               {"p", e.p}});
    return entries;
}

void emit(const std::string& command, const json& config, const json& paper_refs,
          const json& results, const std::string& format) {
    if (format == "json") {
        json out{{"command", command},
                 {"config", config},
                 {"paper_refs", paper_refs},
                 {"results", results}};
        std::cout << out.dump(2) << "\n";
    }
}

int run_spectrum(const CommonArgs& args, int p, bool has_p, long terms, bool even,
                 long twist, bool verify) {
    LensParams L = args.lens();
    long K = terms >= 0 ? terms : L.certified_truncation();
    Geometry geom = even ? Geometry::even_sphere : Geometry::odd_sphere;
    if (even && has_p)
        throw std::invalid_argument("p-form spectra of even quotients are not supported");
    if (twist != 0 && has_p)
        throw std::invalid_argument("twisted p-form spectra are not supported");

    ShellTable tab = shell_counts(L, K + L.n + 1, twist);
    SpectrumReport rep = has_p && !even ? p_spectrum(tab, p, K)
                                        : function_spectrum(tab, K, geom);
    json config{{"lens", lens_json(L)}, {"p", has_p ? json(p) : json(nullptr)},
                {"terms", K},           {"even", even},
                {"twist", twist},       {"verify", verify},
                {"format", args.format}};
    json results{{"entries", spectrum_json(rep)}};
    if (verify) {
        auto reports = cross_validate(L, std::min<long>(K, 25));
        long disagreements = 0;
        for (const auto& r : reports)
            if (!r.agree) ++disagreements;
        results["oracle_checks"] = static_cast<long>(reports.size());
        results["oracle_disagreements"] = disagreements;
    }
    if (args.format == "csv") {
        std::cout << "eigenvalue,multiplicity,k,p\n";
        for (const auto& e : rep.entries)
            std::cout << e.eigenvalue << "," << e.multiplicity.get_str() << "," << e.k
                      << "," << e.p << "\n";
    } else if (args.format == "text") {
        std::cout << "spectrum of " << L.name() << (even ? " (even sphere)" : "")
                  << (twist ? " twist " + std::to_string(twist) : "") << "\n";
        for (const auto& e : rep.entries)
            std::cout << "  lambda=" << e.eigenvalue << "  mult=" << e.multiplicity.get_str()
                      << "  (k=" << e.k << ", p=" << e.p << ")\n";
    } else {
        emit("spectrum", config,
             json::array({"spectral generating function of Ikeda-Yamamoto",
                          "Hodge-Laplace eigenvalue families lambda_{k,p}"}),
             results, args.format);
    }
    return 0;
}

int run_theta(const CommonArgs& args, long terms, long twist, bool by_zeros, bool certify) {
    LensParams L = args.lens();
    long K = terms >= 0 ? terms : L.certified_truncation();
    long table_K = certify ? std::max(K, L.certified_truncation()) : K;
    ShellTable tab = shell_counts(L, table_K, twist);
    json config{{"lens", lens_json(L)}, {"terms", K},          {"twist", twist},
                {"by_zeros", by_zeros}, {"certify", certify},  {"format", args.format}};
    json results;
    if (by_zeros) {
        json rows = json::array();
        for (long k = 0; k <= K; ++k) {
            json row = json::array();
            for (int l = 0; l <= L.n; ++l) row.push_back(tab.count(k, l).get_str());
            rows.push_back(row);
        }
        results["counts_by_zeros"] = rows;
    } else {
        json row = json::array();
        for (long k = 0; k <= K; ++k) row.push_back(tab.count(k).get_str());
        results["counts"] = row;
    }
    if (certify) {
        json forms = json::array();
        auto certified = tab.certify();
        for (int l = 0; l <= L.n; ++l) {
            json numerator = json::array();
            for (const auto& cof : certified[static_cast<size_t>(l)].numerator)
                numerator.push_back(cof.get_str());
            forms.push_back(json{{"zeros", l},
                                 {"numerator", numerator},
                                 {"denominator",
                                  {{"a", L.q}, {"b", L.n - l}}},
                                 {"certified", certified[static_cast<size_t>(l)].certified}});
        }
        results["certified_forms"] = forms;
    }
    if (args.format == "csv") {
        if (by_zeros) {
            std::cout << "k";
            for (int l = 0; l <= L.n; ++l) std::cout << ",zeros" << l;
            std::cout << "\n";
            for (long k = 0; k <= K; ++k) {
                std::cout << k;
                for (int l = 0; l <= L.n; ++l) std::cout << "," << tab.count(k, l).get_str();
                std::cout << "\n";
            }
        } else {
            std::cout << "k,count\n";
            for (long k = 0; k <= K; ++k)
                std::cout << k << "," << tab.count(k).get_str() << "\n";
        }
    } else if (args.format == "text") {
        std::cout << "one-norm shell counts of the congruence lattice of " << L.name() << "\n";
        for (long k = 0; k <= K; ++k)
            std::cout << "  N(" << k << ") = " << tab.count(k).get_str() << "\n";
    } else {
        emit("theta", config,
             json::array({"one-norm theta function of the congruence lattice",
                          "zero-count refinement N(k, l)"}),
             results, args.format);
    }
    return 0;
}

int run_isospec(const CommonArgs& args, long q2, const std::string& s2_text,
                const std::string& mode_text, int p, int p0) {
    LensParams a = args.lens();
    LensParams b = validate(args.n, q2 > 0 ? q2 : args.q, parse_residues(s2_text));
    IsoMode mode;
    if (mode_text == "zero") mode = IsoMode::zero;
    else if (mode_text == "single-p") mode = IsoMode::single_p;
    else if (mode_text == "up-to-p0") mode = IsoMode::up_to_p0;
    else if (mode_text == "all-p") mode = IsoMode::all_p;
    else throw CLI::ValidationError("--mode", "unknown mode " + mode_text);

    DecideOptions opts;
    opts.p = p;
    opts.p0 = p0;
    IsoVerdict v = decide(a, b, mode, opts);
    json config{{"lens", lens_json(a)}, {"lens2", lens_json(b)}, {"mode", mode_text},
                {"p", p},               {"p0", p0},              {"format", args.format}};
    json results{{"result", v.result},
                 {"isometric", a.n == b.n && is_isometric(a, b)},
                 {"truncation", {v.truncation_left, v.truncation_right}}};
    if (v.witness)
        results["witness"] = json{{"k", v.witness->k},
                                  {"index", v.witness->index},
                                  {"role", v.witness->role}};
    if (args.format == "text" || args.format == "csv") {
        std::cout << to_string(mode) << " isospectral(" << a.name() << ", " << b.name()
                  << ") = " << (v.result ? "true" : "false");
        if (v.witness)
            std::cout << "  first difference at k=" << v.witness->k << " ("
                      << v.witness->role << "=" << v.witness->index << ")";
        std::cout << "\n";
    } else {
        emit("isospec", config,
             json::array({"one-norm isospectrality of congruence lattices",
                          "zero-count refinement for p-isospectrality"}),
             results, args.format);
    }
    return 0;
}

int run_search(const CommonArgs& args, const std::string& iso_text, bool orbifolds,
               long budget) {
    std::vector<int> I;
    for (long v : parse_residues(iso_text)) I.push_back(static_cast<int>(v));
    SearchOptions opts;
    if (budget > 0) opts.budget = budget;
    FamilyCatalog cat = search(args.q, args.n, I, orbifolds, opts);
    json config{{"q", args.q},
                {"n", args.n},
                {"iso_set", cat.iso_set},
                {"orbifolds", orbifolds},
                {"budget", opts.budget},
                {"format", args.format}};
    json families = json::array();
    for (const auto& family : cat.families) {
        json members = json::array();
        for (const auto& L : family) members.push_back(lens_json(L));
        families.push_back(members);
    }
    json results{{"families", families},
                 {"family_count", cat.families.size()},
                 {"classes_enumerated", cat.classes_enumerated},
                 {"tuples_scanned", cat.tuples_scanned}};
    if (args.format == "text" || args.format == "csv") {
        std::cout << cat.families.size() << " families among " << cat.classes_enumerated
                  << " isometry classes (q=" << args.q << ", n=" << args.n << ", "
                  << cat.seconds << " s)\n";
        for (const auto& family : cat.families) {
            for (const auto& L : family) std::cout << "  " << L.name();
            std::cout << "\n";
        }
    } else {
        emit("search", config,
             json::array({"exhaustive families of mutually p-isospectral lens "
                          "orbifolds, up to isometry"}),
             results, args.format);
    }
    return 0;
}

int run_ehrhart(const CommonArgs& args, long terms, bool want_g, bool mass, long t_max) {
    LensParams L = args.lens();
    long K = terms >= 0 ? terms : L.certified_truncation();
    json config{{"lens", lens_json(L)}, {"terms", K},    {"g_poly", want_g},
                {"mass", mass},         {"t_max", t_max}, {"format", args.format}};
    json results;
    ShellTable tab = shell_counts(L, std::max(K, want_g ? L.certified_truncation() : K));
    FormalSeries ehr = ehrhart_series(tab);
    json coeffs = json::array();
    for (long k = 0; k <= K; ++k) coeffs.push_back(ehr.at(k).get_str());
    results["ehrhart"] = coeffs;
    if (want_g) {
        Poly g = g_polynomial(tab);
        json gj = json::array();
        for (const auto& cof : g) gj.push_back(cof.get_str());
        results["g_polynomial"] = gj;
        results["g_degree_bound"] = L.q * (L.n + 1);
    }
    if (mass) {
        HarmonicMass hm = harmonic_total_mass(L, t_max);
        results["harmonic_mass"] =
            json{{"target", rational_str(hm.target)},
                 {"estimate", rational_str(hm.at_full)},
                 {"richardson", rational_str(hm.richardson)},
                 {"t_max", hm.t_max}};
    }
    if (args.format == "text" || args.format == "csv") {
        std::cout << "Ehrhart coefficients of " << L.name() << ":";
        for (long k = 0; k <= std::min<long>(K, 12); ++k)
            std::cout << " " << ehr.at(k).get_str();
        std::cout << (K > 12 ? " ...\n" : "\n");
        if (mass) {
            HarmonicMass hm = harmonic_total_mass(L, t_max);
            std::cout << "harmonic mass target " << rational_str(hm.target)
                      << ", extrapolated " << rational_str(hm.richardson) << "\n";
        }
    } else {
        emit("ehrhart", config,
             json::array({"Ehrhart series of the one-norm cross-polytope image",
                          "numerator polynomial determining the whole spectrum",
                          "harmonic-counting measure total mass"}),
             results, args.format);
    }
    return 0;
}

int run_oracle(const CommonArgs& args, long terms) {
    LensParams L = args.lens();
    long K = terms >= 0 ? terms : 20;
    auto reports = cross_validate(L, K);
    long disagreements = 0;
    json rows = json::array();
    for (const auto& r : reports) {
        if (!r.agree) ++disagreements;
        rows.push_back(json{{"quantity", r.quantity},
                            {"pipeline", r.pipeline.get_str()},
                            {"oracle", r.oracle.get_str()},
                            {"agree", r.agree}});
    }
    json config{{"lens", lens_json(L)}, {"terms", K}, {"format", args.format}};
    json results{{"checks", rows},
                 {"total", static_cast<long>(reports.size())},
                 {"disagreements", disagreements}};
    if (args.format == "text" || args.format == "csv") {
        std::cout << reports.size() << " oracle checks, " << disagreements
                  << " disagreements\n";
        for (const auto& r : reports)
            if (!r.agree)
                std::cout << "  " << r.quantity << ": pipeline " << r.pipeline.get_str()
                          << " vs oracle " << r.oracle.get_str() << "\n";
    } else {
        emit("oracle", config,
             json::array({"Molien-formula monomial count",
                          "root-system dimension product"}),
             results, args.format);
    }
    return 0;
}

int run_repro(const std::string& format) {
    auto results = run_acceptance();
    bool all = true;
    json rows = json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        rows.push_back(json{{"id", r.id},
                            {"key", r.key},
                            {"citation", r.citation},
                            {"passed", r.passed},
                            {"details", r.details}});
        if (format != "json")
            std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.key << " — "
                      << r.citation << "\n";
    }
    if (format == "json") {
        json out{{"command", "repro"},
                 {"config", json::object()},
                 {"paper_refs",
                  json::array({"reproduction of the named isospectral families and "
                               "structural identities"})},
                 {"results", json{{"criteria", rows}, {"all_passed", all}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (all ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Laplace and Hodge-Laplace spectra of lens spaces and "
                 "orbifolds from congruence lattices"};
    app.require_subcommand(1);

    CommonArgs spectrum_args, theta_args, iso_args, search_args, ehr_args, oracle_args;

    auto* cmd_spectrum = app.add_subcommand("spectrum", "function or p-form spectrum");
    spectrum_args.add_to(cmd_spectrum);
    int p = 0;
    long terms = -1, twist = 0;
    bool even = false, verify = false;
    auto* popt = cmd_spectrum->add_option("--p", p, "p-form spectrum, 0 <= p <= n-1");
    cmd_spectrum->add_option("--terms", terms, "number of eigenvalue families to list");
    cmd_spectrum->add_flag("--even", even, "quotient of the even sphere S^{2n}");
    cmd_spectrum->add_option("--twist", twist, "character twist c (shifted lattice)");
    cmd_spectrum->add_flag("--verify", verify, "run the brute-force oracles as well");

    auto* cmd_theta = app.add_subcommand("theta", "shell counts and certified forms");
    theta_args.add_to(cmd_theta);
    long th_terms = -1, th_twist = 0;
    bool by_zeros = false, certify = false;
    cmd_theta->add_option("--terms", th_terms, "largest one-norm to list");
    cmd_theta->add_option("--twist", th_twist, "character twist c");
    cmd_theta->add_flag("--by-zeros", by_zeros, "refine counts by zero coordinates");
    cmd_theta->add_flag("--certify", certify, "include certified rational forms");

    auto* cmd_iso = app.add_subcommand("isospec", "decide isospectrality");
    iso_args.add_to(cmd_iso);
    long q2 = -1;
    std::string s2_text, mode_text = "zero";
    int iso_p = 0, iso_p0 = 0;
    cmd_iso->add_option("--q2", q2, "order of the second group (defaults to --q)");
    cmd_iso->add_option("--s2", s2_text, "second parameter tuple")->required();
    cmd_iso->add_option("--mode", mode_text, "zero | single-p | up-to-p0 | all-p")
        ->check(CLI::IsMember({"zero", "single-p", "up-to-p0", "all-p"}));
    cmd_iso->add_option("--p", iso_p, "p for single-p mode");
    cmd_iso->add_option("--p0", iso_p0, "p0 for up-to-p0 mode");

    auto* cmd_search = app.add_subcommand("search", "exhaustive family search");
    cmd_search->add_option("--q", search_args.q, "order of the cyclic group")->required();
    cmd_search->add_option("--n", search_args.n, "half-dimension")->required();
    cmd_search->add_option("--format", search_args.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    std::string iso_text = "0";
    bool orbifolds = false;
    long budget = -1;
    cmd_search->add_option("--iso-set", iso_text, "target p set, e.g. 0 or 0,1,2");
    cmd_search->add_flag("--orbifolds", orbifolds, "include orbifold classes");
    cmd_search->add_option("--budget", budget, "cap on enumerated tuples");

    auto* cmd_ehrhart = app.add_subcommand("ehrhart", "Ehrhart series, g polynomial, mass");
    ehr_args.add_to(cmd_ehrhart);
    long eh_terms = 16, t_max = 2000;
    bool want_g = false, mass = false;
    cmd_ehrhart->add_option("--terms", eh_terms, "coefficients to list");
    cmd_ehrhart->add_flag("--g-poly", want_g, "compute the certified numerator polynomial");
    cmd_ehrhart->add_flag("--mass", mass, "estimate the harmonic-counting total mass");
    cmd_ehrhart->add_option("--t-max", t_max, "eigenvalue cutoff parameter for the mass");

    auto* cmd_oracle = app.add_subcommand("oracle", "cross-validate against brute force");
    oracle_args.add_to(cmd_oracle);
    long or_terms = 20;
    cmd_oracle->add_option("--terms", or_terms, "largest degree to check");

    auto* cmd_repro = app.add_subcommand("repro", "rerun the reproducibility suite");
    std::string repro_format = "text";
    cmd_repro->add_option("--format", repro_format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_spectrum->parsed())
            return run_spectrum(spectrum_args, p, popt->count() > 0, terms, even, twist,
                                verify);
        if (cmd_theta->parsed())
            return run_theta(theta_args, th_terms, th_twist, by_zeros, certify);
        if (cmd_iso->parsed())
            return run_isospec(iso_args, q2, s2_text, mode_text, iso_p, iso_p0);
        if (cmd_search->parsed())
            return run_search(search_args, iso_text, orbifolds, budget);
        if (cmd_ehrhart->parsed())
            return run_ehrhart(ehr_args, eh_terms, want_g, mass, t_max);
        if (cmd_oracle->parsed()) return run_oracle(oracle_args, or_terms);
        if (cmd_repro->parsed()) return run_repro(repro_format);
    } catch (const Error& e) {
        std::cerr << "error [" << e.name() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
