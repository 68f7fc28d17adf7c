#include "kq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "kq/coslicing.hpp"
#include "kq/costability.hpp"
#include "kq/cotstructure.hpp"
#include "kq/json_io.hpp"
#include "kq/oracle.hpp"
#include "kq/selftest.hpp"

namespace kq {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct CliState {
    std::ostream& out;
    bool pretty = false;
    int code = 0;

    void emit(const ordered_json& j) { out << j.dump(pretty ? 2 : -1) << "\n"; }
};

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + what + ": " + e.what());
    }
}

long long oracle_hom_obj(const DObject& x, const DObject& y) {
    long long total = 0;
    for (const auto& [sx, mx] : x.summands()) {
        for (const auto& [sy, my] : y.summands()) {
            int deg = sy.shift - sx.shift;
            if (deg != 0 && deg != 1) continue;
            total += static_cast<long long>(mx) * my *
                     oracle::hom_dim_oracle(sx.indec, sy.indec, deg);
        }
    }
    return total;
}

ExceptionalCoslicing parse_coslicing(long long n, const std::string& p) {
    if (p == "inf") return build_exceptional(n, 0, true);
    return build_exceptional(n, std::stoll(p));
}

ordered_json tower_json(const HNTower& tower) {
    ordered_json j;
    j["layers"] = ordered_json::array();
    for (const DObject& layer : tower.layers) j["layers"].push_back(to_json(layer));
    j["quotients"] = ordered_json::array();
    for (const auto& [q, ph] : tower.quotients) {
        ordered_json item;
        item["phase"] = ph.str();
        item["object"] = to_json(q);
        j["quotients"].push_back(item);
    }
    return j;
}

ordered_json violations_json(const std::vector<Violation>& violations) {
    ordered_json arr = ordered_json::array();
    for (const Violation& v : violations) {
        ordered_json item;
        item["check"] = v.check;
        item["witness"] = v.witness;
        arr.push_back(item);
    }
    return arr;
}

CoTStructureSpec spec_from_flags(const std::string& family, long long n, long long p,
                                 long long k, int i, long long m, bool have_m) {
    if (family == "bounded") {
        if (have_m) {
            // triple form (m, n, p): co-heart {Sigma^m N_n, Sigma^{m+p} N_{n+1}}
            if (p == 0) return CoTStructureSpec{CotFamily::Bounded, n, 1, Phase::lex(m, 0)};
            return CoTStructureSpec{CotFamily::Bounded, n, p, Phase::lex(m + p, 1)};
        }
        return CoTStructureSpec{CotFamily::Bounded, n, p, Phase::lex(k, i)};
    }
    if (family == "below") return CoTStructureSpec{CotFamily::BoundedBelow, n, 1, Phase::lex(k, 0)};
    if (family == "above") return CoTStructureSpec{CotFamily::BoundedAbove, n, 1, Phase::lex(k, 1)};
    if (family == "stable") return CoTStructureSpec{CotFamily::Stable, n};
    throw std::invalid_argument("unknown family: " + family);
}

void add_window_options(CLI::App* cmd, WindowConfig& w) {
    cmd->add_option("--max-shift", w.max_shift);
    cmd->add_option("--max-pp-index", w.max_pp_index);
    cmd->add_option("--max-pi-index", w.max_pi_index);
    cmd->add_option("--max-reg-length", w.max_reg_length);
    cmd->add_option("--tube-labels", w.tube_labels);
    cmd->add_option("--pair-min", w.pair_index_min);
    cmd->add_option("--pair-max", w.pair_index_max);
    cmd->add_option("--max-p", w.max_p);
    cmd->add_option("--seed", w.seed);
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"generalised co-slicings, co-t-structures and co-stability on D^b(KQ)"};
    app.require_subcommand(1);
    CliState state{out};
    app.add_flag("--pretty", state.pretty, "indent JSON output");

    WindowConfig window;

    // hom X Y [--oracle]
    std::string hom_x, hom_y;
    bool hom_oracle = false;
    auto* hom_cmd = app.add_subcommand("hom", "Hom dimension between objects");
    hom_cmd->add_option("x", hom_x)->required();
    hom_cmd->add_option("y", hom_y)->required();
    hom_cmd->add_flag("--oracle", hom_oracle, "cross-check with the matrix oracle");
    hom_cmd->callback([&] {
        DObject x = dobject_from_json(parse_json(hom_x, "x"));
        DObject y = dobject_from_json(parse_json(hom_y, "y"));
        ordered_json j;
        j["dim"] = hom_dim_obj(x, y);
        if (hom_oracle) {
            j["oracle"] = oracle_hom_obj(x, y);
            if (j["dim"] != j["oracle"]) state.code = 1;
        }
        state.emit(j);
    });

    // triangle X
    std::string tri_x;
    auto* tri_cmd = app.add_subcommand("triangle", "standard triangle of an indecomposable");
    tri_cmd->add_option("x", tri_x)->required();
    tri_cmd->callback([&] {
        ShiftedIndec x = shifted_indec_from_json(parse_json(tri_x, "x"));
        Triangle t = standard_triangle(x.indec);
        ordered_json j;
        j["left"] = to_json(t.left.shifted(x.shift));
        j["mid"] = to_json(t.mid.shifted(x.shift));
        j["right"] = to_json(t.right.shifted(x.shift));
        state.emit(j);
    });

    // hn X --n N --p P
    std::string hn_x, hn_p = "1";
    long long hn_n = 1;
    auto* hn_cmd = app.add_subcommand("hn", "HN tower w.r.t. an exceptional co-slicing");
    hn_cmd->add_option("x", hn_x)->required();
    hn_cmd->add_option("--n", hn_n, "exceptional pair index");
    hn_cmd->add_option("--p", hn_p, "order parameter (integer or 'inf')");
    hn_cmd->callback([&] {
        DObject x = dobject_from_json(parse_json(hn_x, "x"));
        state.emit(tower_json(hn_filtration(x, parse_coslicing(hn_n, hn_p))));
    });

    // coslice build|validate|compare|distance
    auto* coslice = app.add_subcommand("coslice", "co-slicing operations");
    coslice->require_subcommand(1);
    long long cs_n = 1;
    std::string cs_p = "1", cs_coarse = "two-object", cs_q, cs_r;
    auto* cs_build = coslice->add_subcommand("build", "present an exceptional co-slicing");
    cs_build->add_option("--n", cs_n);
    cs_build->add_option("--p", cs_p);
    add_window_options(cs_build, window);
    cs_build->callback([&] {
        GeneralCoslicing g = to_general(parse_coslicing(cs_n, cs_p), window);
        ordered_json j;
        j["pair_index"] = cs_n;
        j["p"] = cs_p;
        j["slices"] = ordered_json::array();
        for (const Slice& s : g.slices) {
            ordered_json item;
            item["phase"] = s.phase.str();
            item["shift_stable"] = s.shift_stable;
            item["gens"] = ordered_json::array();
            for (const ShiftedIndec& gen : s.gens) item["gens"].push_back(to_json(gen));
            j["slices"].push_back(item);
        }
        state.emit(j);
    });
    auto* cs_validate = coslice->add_subcommand("validate", "check the co-slicing axioms");
    cs_validate->add_option("--n", cs_n);
    cs_validate->add_option("--p", cs_p);
    add_window_options(cs_validate, window);
    cs_validate->callback([&] {
        GeneralCoslicing g = to_general(parse_coslicing(cs_n, cs_p), window);
        CoslicingReport report = validate_coslicing(g, default_corpus(window));
        ordered_json j;
        j["valid"] = report.valid;
        j["trivial"] = report.trivial;
        j["violations"] = violations_json(report.violations);
        state.emit(j);
        if (!report.valid) state.code = 1;
    });
    auto* cs_compare = coslice->add_subcommand("compare", "finer/coarser witness check");
    cs_compare->add_option("--n", cs_n);
    cs_compare->add_option("--p", cs_p);
    cs_compare->add_option("--coarse", cs_coarse, "two-object | stable | chain");
    add_window_options(cs_compare, window);
    cs_compare->callback([&] {
        ExceptionalCoslicing e = parse_coslicing(cs_n, cs_p);
        GeneralCoslicing fine = to_general(e, window);
        bool finer = false;
        if (cs_coarse == "two-object") {
            if (e.p_infinite) throw std::invalid_argument("two-object comparison needs finite p");
            GeneralCoslicing coarse = coarse_two_object(cs_n, static_cast<int>(e.p - 1), window);
            long long p = e.p;
            finer = coarser_witness_check(fine, coarse, [p](const Phase& ph) {
                return Phase::tag(ph.i == 0 ? ph.k : ph.k - p + 1);
            });
        } else if (cs_coarse == "stable") {
            finer = coarser_witness_check(fine, coarse_stable(cs_n, window),
                                          [](const Phase& ph) { return Phase::tag(ph.i); });
        } else if (cs_coarse == "chain") {
            finer = coarser_witness_check(fine, coarse_chain_inf(cs_n, window), [](const Phase& ph) {
                return ph.i == 0 ? Phase::tag_inf() : Phase::tag(ph.k);
            });
        } else {
            throw std::invalid_argument("unknown coarse form: " + cs_coarse);
        }
        ordered_json j;
        j["finer"] = finer;
        state.emit(j);
        if (!finer) state.code = 1;
    });
    auto* cs_distance = coslice->add_subcommand("distance", "metric on real-phase co-slicings");
    cs_distance->add_option("--q", cs_q)->required();
    cs_distance->add_option("--r", cs_r)->required();
    cs_distance->callback([&] {
        auto parse_slicing = [](const json& j) {
            return CostabSlicing{j.at("n").get<long long>(), j.at("phi1").get<double>(),
                                 j.at("phi0").get<double>()};
        };
        double d = metric_distance(parse_slicing(parse_json(cs_q, "q")),
                                   parse_slicing(parse_json(cs_r, "r")));
        ordered_json j;
        if (std::isinf(d)) j["distance"] = "inf";
        else j["distance"] = d;
        state.emit(j);
    });

    // cotstr classify|member|coheart|verify|silting
    auto* cotstr = app.add_subcommand("cotstr", "co-t-structure operations");
    cotstr->require_subcommand(1);
    std::string ct_family = "bounded", ct_obj;
    long long ct_n = 1, ct_p = 1, ct_k = 0, ct_m = 0;
    int ct_i = 0;
    std::vector<std::string> ct_objs;

    auto* ct_classify = cotstr->add_subcommand("classify", "all specs within the window");
    add_window_options(ct_classify, window);
    ct_classify->callback([&] {
        ordered_json arr = ordered_json::array();
        for (const CoTStructureSpec& s : classify_all(window)) {
            ordered_json item;
            item["spec"] = s.str();
            item["coheart"] = ordered_json::array();
            for (const ShiftedIndec& x : co_heart(s)) item["coheart"].push_back(to_json(x));
            arr.push_back(item);
        }
        state.emit(arr);
    });

    auto add_spec_flags = [&](CLI::App* cmd, bool with_m) {
        cmd->add_option("--family", ct_family, "bounded | below | above | stable");
        cmd->add_option("--n", ct_n);
        cmd->add_option("--p", ct_p);
        cmd->add_option("--k", ct_k);
        cmd->add_option("--i", ct_i);
        if (with_m) cmd->add_option("--m", ct_m);
    };

    auto* ct_member = cotstr->add_subcommand("member", "aisle/co-aisle membership");
    add_spec_flags(ct_member, false);
    ct_member->add_option("x", ct_obj)->required();
    ct_member->callback([&] {
        CoTStructureSpec s = spec_from_flags(ct_family, ct_n, ct_p, ct_k, ct_i, 0, false);
        DObject x = dobject_from_json(parse_json(ct_obj, "x"));
        ordered_json j;
        j["aisle"] = member_aisle(x, s);
        j["coaisle"] = member_coaisle(x, s);
        state.emit(j);
    });

    auto* ct_coheart = cotstr->add_subcommand("coheart", "co-heart of a spec");
    add_spec_flags(ct_coheart, true);
    ct_coheart->callback([&] {
        bool have_m = ct_coheart->count("--m") > 0;
        CoTStructureSpec s = spec_from_flags(ct_family, ct_n, ct_p, ct_k, ct_i, ct_m, have_m);
        ordered_json arr = ordered_json::array();
        for (const ShiftedIndec& x : co_heart(s)) arr.push_back(to_json(x));
        state.emit(arr);
    });

    auto* ct_verify = cotstr->add_subcommand("verify", "axioms over the default corpus");
    add_spec_flags(ct_verify, false);
    add_window_options(ct_verify, window);
    ct_verify->callback([&] {
        CoTStructureSpec s = spec_from_flags(ct_family, ct_n, ct_p, ct_k, ct_i, 0, false);
        CotReport report = verify_cotstructure_axioms(s, default_corpus(window));
        ordered_json j;
        j["spec"] = s.str();
        j["pass"] = report.pass;
        j["witnesses"] = violations_json(report.witnesses);
        state.emit(j);
        if (!report.pass) state.code = 1;
    });

    auto* ct_silting = cotstr->add_subcommand("silting", "partial-silting / silting test");
    ct_silting->add_option("objects", ct_objs)->required();
    add_window_options(ct_silting, window);
    ct_silting->callback([&] {
        SiltingSet s;
        for (const std::string& text : ct_objs)
            s.objects.push_back(shifted_indec_from_json(parse_json(text, "object")));
        ordered_json j;
        j["partial_silting"] = is_partial_silting(s);
        j["silting"] = j["partial_silting"].get<bool>() && is_silting(s, window);
        state.emit(j);
    });

    // costab build|validate|component|distance|walk
    auto* costab = app.add_subcommand("costab", "co-stability operations");
    costab->require_subcommand(1);
    std::string q_text, q1_text, q2_text;
    int walk_steps = 10;

    auto* co_build = costab->add_subcommand("build", "condition from a quintuple");
    co_build->add_option("--q", q_text)->required();
    co_build->callback([&] {
        CostabCondition c = from_quintuple(quintuple_from_json(parse_json(q_text, "q")));
        ordered_json j;
        j["quintuple"] = to_json(to_quintuple(c));
        j["Z_n0"] = {c.charge.value_n0().real(), c.charge.value_n0().imag()};
        j["Z_n1"] = {c.charge.value_n1().real(), c.charge.value_n1().imag()};
        state.emit(j);
    });

    auto* co_validate = costab->add_subcommand("validate", "check a condition");
    co_validate->add_option("--q", q_text)->required();
    co_validate->callback([&] {
        CostabReport report =
            validate_condition(from_quintuple(quintuple_from_json(parse_json(q_text, "q"))));
        ordered_json j;
        j["pass"] = report.pass;
        j["violations"] = violations_json(report.violations);
        state.emit(j);
        if (!report.pass) state.code = 1;
    });

    auto* co_component = costab->add_subcommand("component", "same path component?");
    co_component->add_option("--q1", q1_text)->required();
    co_component->add_option("--q2", q2_text)->required();
    co_component->callback([&] {
        auto c1 = from_quintuple(quintuple_from_json(parse_json(q1_text, "q1")));
        auto c2 = from_quintuple(quintuple_from_json(parse_json(q2_text, "q2")));
        ordered_json j;
        j["same_component"] = same_component(c1, c2);
        state.emit(j);
    });

    auto* co_distance = costab->add_subcommand("distance", "metric between conditions");
    co_distance->add_option("--q1", q1_text)->required();
    co_distance->add_option("--q2", q2_text)->required();
    co_distance->callback([&] {
        auto c1 = from_quintuple(quintuple_from_json(parse_json(q1_text, "q1")));
        auto c2 = from_quintuple(quintuple_from_json(parse_json(q2_text, "q2")));
        double d = costab_distance(c1, c2);
        ordered_json j;
        if (std::isinf(d)) j["distance"] = "inf";
        else j["distance"] = d;
        state.emit(j);
    });

    auto* co_walk = costab->add_subcommand("walk", "interpolate within a component");
    co_walk->add_option("--q1", q1_text)->required();
    co_walk->add_option("--q2", q2_text)->required();
    co_walk->add_option("--steps", walk_steps);
    co_walk->callback([&] {
        auto c1 = from_quintuple(quintuple_from_json(parse_json(q1_text, "q1")));
        auto c2 = from_quintuple(quintuple_from_json(parse_json(q2_text, "q2")));
        ordered_json arr = ordered_json::array();
        for (const CostabCondition& c : component_walk(c1, c2, walk_steps))
            arr.push_back(to_json(to_quintuple(c)));
        state.emit(arr);
    });

    // export ar-quiver --dot
    auto* export_cmd = app.add_subcommand("export", "exports");
    export_cmd->require_subcommand(1);
    bool want_dot = false;
    auto* ar_cmd = export_cmd->add_subcommand("ar-quiver", "AR-quiver window");
    ar_cmd->add_flag("--dot", want_dot, "DOT output");
    add_window_options(ar_cmd, window);
    ar_cmd->callback([&] { state.out << ar_quiver_dot(window); });

    // selftest
    auto* selftest_cmd = app.add_subcommand("selftest", "acceptance suite");
    add_window_options(selftest_cmd, window);
    selftest_cmd->callback([&] {
        ordered_json arr = ordered_json::array();
        bool all_pass = true;
        for (const auto& r : selftest::run_acceptance(window)) {
            ordered_json item;
            item["criterion"] = r.id;
            item["name"] = r.name;
            item["pass"] = r.pass;
            item["detail"] = r.detail;
            arr.push_back(item);
            all_pass = all_pass && r.pass;
        }
        state.emit(arr);
        if (!all_pass) state.code = 1;
    });

    std::vector<const char*> argv;
    argv.push_back("kq");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        out << ordered_json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        out << ordered_json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const json::exception& e) {
        out << ordered_json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
    return state.code;
}

}  // namespace kq
