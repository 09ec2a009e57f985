#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qrlab/cache.hpp"
#include "qrlab/codes.hpp"
#include "qrlab/designs.hpp"
#include "qrlab/groups.hpp"

using namespace qrlab;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

std::optional<ResultCache> cache_from_env() {
    const char* dir = std::getenv("QRLAB_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    return ResultCache(dir);
}

WeightDistribution cached_weights(const LinearCode& code, int threads) {
    auto cache = cache_from_env();
    if (cache) {
        if (auto wd = cache->load_weights(code)) return *wd;
    }
    WeightDistribution wd = weight_distribution(code, threads);
    if (cache) cache->store_weights(code, wd);
    return wd;
}

CodewordSet cached_words(const LinearCode& code, int w, int threads) {
    auto cache = cache_from_env();
    if (cache) {
        if (auto set = cache->load_words(code, w)) return *set;
    }
    CodewordSet set = codewords_of_weight(code, w, threads);
    if (cache) cache->store_words(code, set);
    return set;
}

json weights_to_json(const WeightDistribution& wd) {
    json out = json::array();
    for (auto& [w, c] : wd.counts) out.push_back({w, c});
    return out;
}

std::string weights_to_text(const WeightDistribution& wd) {
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : wd.counts) {
        os << (first ? "" : ", ") << "<" << w << ", " << c << ">";
        first = false;
    }
    return os.str();
}

int parse_point(const std::string& s, int v) {
    if (s == "inf") return v - 1;
    return std::stoi(s);
}

struct StepTimer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

// ---- reproduce ------------------------------------------------------------

int cmd_reproduce(bool skip_aut, bool long_run, bool as_json, int threads) {
    json report;
    report["tool"] = "qrlab";
    report["version"] = kVersion;
    report["parameters"] = {{"p", 41}, {"skip_aut", skip_aut}, {"long", long_run}};
    json timings;
    int failures = 0;
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        report["checks"][name] = {{"pass", ok}, {"detail", detail}};
        if (!as_json)
            std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
        if (!ok) ++failures;
    };

    StepTimer total;
    auto [spec, q41] = qr_code(41);
    LinearCode C = extend(q41);
    report["generator_poly"] = spec.generator_poly.to_string();
    check("construction", C.n == 42 && C.k == 21, "extended QR(41) is a [42,21] code");

    StepTimer tw;
    WeightDistribution wd = cached_weights(C, threads);
    timings["weights"] = tw.elapsed();
    report["weight_distribution"] = weights_to_json(wd);
    const WeightDistribution expected{
        42,
        {{0, 1}, {10, 1722}, {12, 10619}, {14, 49815}, {16, 157563}, {18, 341530},
         {20, 487326}, {22, 487326}, {24, 341530}, {26, 157563}, {28, 49815},
         {30, 10619}, {32, 1722}, {42, 1}}};
    check("weight_distribution", wd == expected, weights_to_text(wd));

    WeightDistribution dual_wd = cached_weights(dual(C), threads);
    check("formal_self_duality", dual_wd == wd && macwilliams_transform(wd, 21) == wd,
          "dual enumeration and MacWilliams transform both reproduce A_w");

    auto am = assmus_mattson_check(42, 10, 3, dual_wd);
    report["assmus_mattson"] = {{"applies", am.applies},
                                {"nonzero_dual_weights", am.nonzero_dual_weights}};
    check("assmus_mattson_inapplicable", !am.applies && am.nonzero_dual_weights == 12,
          "12 nonzero dual weights <= 39, bound is 7");

    StepTimer td;
    Design D = design_from_codewords(cached_words(C, 10, threads), 42);
    auto d3 = verify_design(D, 3, threads);
    timings["design_check"] = td.elapsed();
    report["design"] = {{"b", d3.b}, {"r", d3.r},
                        {"lambda", d3.is_design ? d3.params.lambda : -1}};
    check("three_design",
          d3.is_design && d3.params == DesignParams{3, 42, 10, 1722, 410, 18},
          "weight-10 supports form a 3-(42,10,18) design, b=1722 r=410");

    PermutationGroup psl = psl2(41);
    report["psl2_41_order"] = psl.order();
    bool gens_preserve = true;
    for (const auto& g : psl.generators()) gens_preserve &= preserves_design(g, D);
    check("psl_order_and_invariance", psl.order() == 34440 && gens_preserve,
          "psl2(41) has order 34440 and its generators preserve the design");

    if (!skip_aut) {
        StepTimer ta;
        PermutationGroup aut = design_automorphism_group(D);
        timings["automorphism_search"] = ta.elapsed();
        report["aut_order"] = aut.order();
        bool contains_psl = true;
        for (const auto& g : psl.generators()) contains_psl &= aut.contains(g);
        check("automorphism_group", aut.order() == 34440 && contains_psl,
              "Aut(design) has order 34440 and contains the psl2(41) generators");

        auto orb3 = orbits_on_subsets(aut, 3);
        json orbs = json::array();
        for (auto& [rep, sz] : orb3.orbits) orbs.push_back(sz);
        report["triple_orbits"] = orbs;
        check("triple_orbits",
              orb3.orbits.size() == 2 && orb3.orbits[0].second == 5740 &&
                  orb3.orbits[1].second == 5740 && !is_s_homogeneous(aut, 3) &&
                  is_s_homogeneous(aut, 2),
              "two orbits of size 5740 on triples; 2-homogeneous, not 3-homogeneous");
    }

    auto der = verify_design(derived_design(D, 41), 2, threads);
    auto res = verify_design(residual_at_point(D, 41), 2, threads);
    report["derived"] = {{"b", der.b}, {"lambda", der.is_design ? der.params.lambda : -1}};
    report["residual"] = {{"b", res.b}, {"lambda", res.is_design ? res.params.lambda : -1}};
    check("derived_designs",
          der.is_design && der.params == DesignParams{2, 41, 9, 410, 90, 18} &&
              res.is_design && res.params == DesignParams{2, 41, 10, 1312, 320, 72},
          "2-(41,9,18) with b=410 and 2-(41,10,72) with b=1312 at the extended point");

    LinearCode span = linear_span(D);
    check("linear_span", span.k == 21 && span.generator == rref(C.generator).mat,
          "span of the blocks has dimension 21 and equals the code");

    if (long_run) {
        StepTimer tl;
        auto [spec73, q73] = qr_code(73);
        LinearCode C74 = extend(q73);
        auto low = low_weight_codewords(C74, 18, threads);
        int d74 = 0;
        for (auto& [w, s] : low)
            if (w > 0 && !s.words.empty()) {
                d74 = w;
                break;
            }
        Design D74 = design_from_codewords(low.at(d74), 74);
        auto chk74 = verify_design(D74, 3, threads);
        timings["length_74"] = tl.elapsed();
        report["length_74"] = {{"min_weight", d74},
                               {"num_min_weight_words", D74.b()},
                               {"holds_3_design", chk74.is_design}};
        check("length_74_not_3_design", !chk74.is_design,
              "minimum-weight words of the [74,37] code (d=" + std::to_string(d74) +
                  ") do not hold a 3-design");
    }

    timings["total"] = total.elapsed();
    report["timings"] = timings;
    if (as_json) std::cout << report.dump(2) << "\n";
    return failures == 0 ? 0 : 1;
}

// ---- code -----------------------------------------------------------------

int cmd_code(int p, bool extended, bool weights, bool min_weight, int dump_w,
             bool as_json, int threads) {
    auto [spec, code] = qr_code(p);
    if (extended) code = extend(code);
    json out;
    out["p"] = p;
    out["n"] = code.n;
    out["k"] = code.k;
    out["generator_poly"] = spec.generator_poly.to_string();

    std::optional<WeightDistribution> wd;
    if (weights || min_weight) wd = cached_weights(code, threads);
    int d = 0;
    if (wd)
        for (auto& [w, c] : wd->counts)
            if (w > 0) {
                d = w;
                break;
            }

    if (!as_json) {
        std::cout << (extended ? "extended " : "") << "QR(" << p << "): [" << code.n
                  << "," << code.k << (d ? "," + std::to_string(d) : "") << "]\n";
        std::cout << "generator polynomial: " << spec.generator_poly.to_string() << "\n";
        if (weights) std::cout << "weight distribution: " << weights_to_text(*wd) << "\n";
        if (min_weight) std::cout << "minimum weight: " << d << "\n";
    } else {
        if (wd) out["weight_distribution"] = weights_to_json(*wd);
        if (min_weight) out["min_weight"] = d;
    }

    if (dump_w >= 0) {
        CodewordSet set = cached_words(code, dump_w, threads);
        Design dump = design_from_codewords(set, code.n);
        write_design(std::cout, dump);
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return 0;
}

// ---- design ---------------------------------------------------------------

int cmd_design(const std::string& file, int verify_t, const std::string& derived_x,
               const std::string& residual_x, bool span, const std::string& out_file) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "cannot open " << file << "\n";
        return 1;
    }
    Design d = read_design(in);

    if (verify_t > 0) {
        auto chk = verify_design(d, verify_t);
        if (chk.is_design) {
            std::cout << verify_t << "-(" << chk.params.v << "," << chk.params.k << ","
                      << chk.params.lambda << "), b=" << chk.params.b
                      << ", r=" << chk.params.r << "\n";
        } else {
            std::cout << "not a " << verify_t << "-design; coverage profile:\n";
            for (auto& [count, mult] : chk.profile.counts)
                std::cout << "  " << mult << " subsets covered by " << count
                          << " blocks\n";
            return 1;
        }
    }
    if (!derived_x.empty() || !residual_x.empty()) {
        bool derived = !derived_x.empty();
        int x = parse_point(derived ? derived_x : residual_x, d.v);
        Design out = derived ? derived_design(d, x) : residual_at_point(d, x);
        if (out_file.empty()) {
            write_design(std::cout, out);
        } else {
            std::ofstream of(out_file);
            write_design(of, out);
        }
    }
    if (span) {
        LinearCode sp = linear_span(d);
        std::cout << "span dimension " << sp.k;
        if (d.v == 42) {
            LinearCode C = extend(qr_code(41).second);
            std::cout << ", equals extended QR(41): "
                      << (sp.k == C.k && sp.generator == rref(C.generator).mat ? "yes"
                                                                              : "no");
        }
        std::cout << "\n";
    }
    return 0;
}

// ---- group ----------------------------------------------------------------

int cmd_group(int psl_p, const std::string& aut_file, bool order, int orbits_s,
              bool gens) {
    std::optional<PermutationGroup> g;
    if (psl_p > 0) {
        g = psl2(psl_p);
    } else {
        std::ifstream in(aut_file);
        if (!in) {
            std::cerr << "cannot open " << aut_file << "\n";
            return 1;
        }
        g = design_automorphism_group(read_design(in));
    }
    if (order) std::cout << "order " << g->order() << "\n";
    if (orbits_s > 0) {
        auto part = orbits_on_subsets(*g, orbits_s);
        std::cout << part.orbits.size() << " orbit" << (part.orbits.size() == 1 ? "" : "s")
                  << " on " << orbits_s << "-subsets:";
        for (auto& [rep, sz] : part.orbits) std::cout << " " << sz;
        std::cout << "\n";
    }
    if (gens) write_permutations(std::cout, g->generators());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadratic residue code and design verification toolkit"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0 = hardware default)");

    auto* rep = app.add_subcommand("reproduce", "run the full verification pipeline");
    bool skip_aut = false, long_run = false, rep_json = false;
    int rep_p = 41;
    rep->add_flag("--skip-aut", skip_aut, "skip the automorphism group search");
    rep->add_flag("--long", long_run, "include the length-74 minimum weight check");
    rep->add_flag("--json", rep_json, "emit a JSON report");
    rep->add_option("--p", rep_p, "pipeline prime (41, or 73 with --long)")
        ->check(CLI::IsMember({41, 73}));

    auto* code = app.add_subcommand("code", "construct QR codes and enumerate weights");
    int p = 0, dump_w = -1;
    bool extended = false, weights = false, min_weight = false, code_json = false;
    code->add_option("-p", p, "prime length")->required();
    code->add_flag("--extended", extended, "extend by an overall parity check");
    code->add_flag("--weights", weights, "print the weight distribution");
    code->add_flag("--min-weight", min_weight, "print the minimum weight");
    code->add_option("--dump-words", dump_w, "dump all words of this weight");
    code->add_flag("--json", code_json, "emit JSON");

    auto* des = app.add_subcommand("design", "verify and transform block designs");
    std::string file, derived_x, residual_x, out_file;
    int verify_t = 0;
    bool span = false;
    des->add_option("file", file, "design exchange file")->required();
    des->add_option("--verify", verify_t, "verify t-design parameters");
    des->add_option("--derived", derived_x, "derived design at point (index or 'inf')");
    des->add_option("--residual", residual_x, "residual design at point");
    des->add_flag("--span", span, "GF(2) linear span of the blocks");
    des->add_option("--out", out_file, "write derived/residual design here");

    auto* grp = app.add_subcommand("group", "permutation group computations");
    int psl_p = 0, orbits_s = 0;
    std::string aut_file;
    bool order = false, gens = false;
    grp->add_option("--psl", psl_p, "PSL(2,p) on the projective line");
    grp->add_option("--aut", aut_file, "automorphism group of a design file");
    grp->add_flag("--order", order, "print the group order");
    grp->add_option("--orbits", orbits_s, "orbit sizes on s-subsets");
    grp->add_flag("--gens", gens, "print generators in permutation exchange format");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rep->parsed()) {
            if (rep_p == 73 && !long_run) {
                std::cerr << "--p 73 requires --long\n";
                return 1;
            }
            return cmd_reproduce(skip_aut, long_run || rep_p == 73, rep_json, threads);
        }
        if (code->parsed())
            return cmd_code(p, extended, weights, min_weight, dump_w, code_json, threads);
        if (des->parsed())
            return cmd_design(file, verify_t, derived_x, residual_x, span, out_file);
        if (grp->parsed()) {
            if ((psl_p > 0) == !aut_file.empty()) {
                std::cerr << "exactly one of --psl / --aut is required\n";
                return 1;
            }
            return cmd_group(psl_p, aut_file, order, orbits_s, gens);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
