#include <bsp/bsp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

using nlohmann::json;

namespace {

// Exit codes: 0 = success, 1 = a checked property failed, 2 = usage error.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct CStr {
    char* p = nullptr;
    ~CStr() { bsp_string_free(p); }
    operator const char*() const { return p; }
};

struct VecHandle {
    bsp_vec* v = nullptr;
    ~VecHandle() { bsp_vec_free(v); }
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Maps an API status to a process exit code, reporting the error.
int report_status(bsp_status st) {
    switch (st) {
        case BSP_OK:
            return kExitOk;
        case BSP_ERR_INTERNAL:
            std::cerr << "error: " << bsp_last_error() << "\n";
            return kExitViolation;
        default:
            std::cerr << "error: " << bsp_last_error() << "\n";
            return kExitUsage;
    }
}

bsp_status parse_vec(const std::string& text, VecHandle& out) {
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '{')
        return bsp_vec_from_json(text.c_str(), &out.v);
    return bsp_vec_parse(text.c_str(), &out.v);
}

std::string witness_text(const json& w) {
    if (w.is_null()) return "none";
    std::string out;
    if (w["kind"] == "set") {
        out += '{';
        bool first = true;
        for (const auto& i : w["indices"]) {
            if (!first) out += ',';
            first = false;
            out += i.dump();
        }
        out += '}';
        return out;
    }
    out += '[';
    bool first_set = true;
    for (const auto& s : w["sets"]) {
        if (!first_set) out += ',';
        first_set = false;
        out += '{';
        bool first = true;
        for (const auto& i : s) {
            if (!first) out += ',';
            first = false;
            out += i.dump();
        }
        out += '}';
    }
    out += ']';
    return out;
}

void print_json(const json& j) {
    std::cout << j.dump(2) << "\n";
}

std::string vec_as_text(const json& vec_json) {
    VecHandle v;
    if (bsp_vec_from_json(vec_json.dump().c_str(), &v.v) != BSP_OK) return "?";
    CStr text;
    if (bsp_vec_to_text(v.v, &text.p) != BSP_OK) return "?";
    return text.p;
}

void print_trial_report_text(const json& r) {
    std::cout << "trials = " << r["trials"].get<std::int64_t>()
              << ", violations = " << r["violations"].get<std::int64_t>() << "\n";
    std::cout << "max ratio = " << fmt(r["max_ratio"].get<double>()) << "\n";
    std::cout << "worst input = " << vec_as_text(r["worst_input"]) << "\n";
    std::cout << "seed = " << r["seed"].get<std::uint64_t>() << "\n";
}

int finish_trial_report(const json& r, bool as_json, const json& wrapper) {
    if (as_json)
        print_json(wrapper);
    else
        print_trial_report_text(r);
    return r["violations"].get<std::int64_t>() > 0 ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact norms, inclusion constants, and nilpotency certificates "
                 "for combinatorial sequence spaces"};
    app.set_version_flag("--version", bsp_version());
    app.require_subcommand(1);

    bool as_json = false;
    std::optional<std::uint64_t> seed_opt;
    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_option("--seed", seed_opt, "seed for randomized subcommands");

    const auto pick_seed = [&](std::string_view signature) {
        return seed_opt ? *seed_opt : fnv1a(signature);
    };

    // norm --space <label> --vec <vector> [--witness]
    auto* cmd_norm = app.add_subcommand("norm", "norm of a vector in a named space");
    std::string norm_space, norm_vec;
    bool norm_witness = false;
    cmd_norm->add_option("--space", norm_space)->required();
    cmd_norm->add_option("--vec", norm_vec)->required();
    cmd_norm->add_flag("--witness", norm_witness, "also report an attaining set/chain");

    // oracle-check --space <label> --max-support <n> --trials <t> [--seed <s>]
    auto* cmd_oracle = app.add_subcommand("oracle-check",
                                          "compare a norm against its brute-force oracle");
    std::string oracle_space;
    int oracle_max_support = 8;
    std::int64_t oracle_trials = 100;
    cmd_oracle->add_option("--space", oracle_space)->required();
    cmd_oracle->add_option("--max-support", oracle_max_support)->required();
    cmd_oracle->add_option("--trials", oracle_trials)->required();

    // order <label> <label>
    auto* cmd_order = app.add_subcommand("order", "compare two labels in the order");
    std::string order_y, order_z;
    cmd_order->add_option("left", order_y)->required();
    cmd_order->add_option("right", order_z)->required();

    // constant <label> <label>
    auto* cmd_constant =
        app.add_subcommand("constant", "formal-inclusion constant and route");
    std::string const_y, const_z;
    cmd_constant->add_option("left", const_y)->required();
    cmd_constant->add_option("right", const_z)->required();

    // classify <label> <label>
    auto* cmd_classify =
        app.add_subcommand("classify", "established operator facts for a pair");
    std::string cls_y, cls_z;
    cmd_classify->add_option("left", cls_y)->required();
    cmd_classify->add_option("right", cls_z)->required();

    // index --spec <spec>
    auto* cmd_index = app.add_subcommand("index", "nilpotency index of a direct sum");
    std::string index_spec;
    cmd_index->add_option("--spec", index_spec)->required();

    // witness --spec <spec>
    auto* cmd_witness = app.add_subcommand("witness", "sharpness witness chain");
    std::string witness_spec;
    cmd_witness->add_option("--spec", witness_spec)->required();

    // certify --spec <spec> [--exhaustive-limit <n>]
    auto* cmd_certify = app.add_subcommand("certify", "certify the nilpotency index");
    std::string certify_spec;
    std::uint64_t certify_limit = 1000000;
    cmd_certify->add_option("--spec", certify_spec)->required();
    cmd_certify->add_option("--exhaustive-limit", certify_limit,
                            "maximum number of paths to enumerate");

    // trials --pair <label>,<label> --n <t> [--seed <s>] [--csv <path>]
    auto* cmd_trials =
        app.add_subcommand("trials", "randomized inclusion-inequality trials");
    std::string trials_pair, trials_csv;
    std::int64_t trials_n = 1000;
    cmd_trials->add_option("--pair", trials_pair, "comma-separated pair, e.g. l:2,s:2")
        ->required();
    cmd_trials->add_option("--n", trials_n)->required();
    cmd_trials->add_option("--csv", trials_csv, "write per-trial ratios to this file");

    // jameson --p <p> --q <q> --n <t> [--seed <s>]
    auto* cmd_jameson =
        app.add_subcommand("jameson", "constant and bound checks for the S_p -> l_q link");
    double jameson_p = 1.0, jameson_q = 2.0;
    std::int64_t jameson_n = 1000;
    cmd_jameson->add_option("--p", jameson_p)->required();
    cmd_jameson->add_option("--q", jameson_q)->required();
    cmd_jameson->add_option("--n", jameson_n)->required();

    // rearrange-check --p <p> --n <t> [--seed <s>]
    auto* cmd_rearrange =
        app.add_subcommand("rearrange-check", "decreasing rearrangement monotonicity");
    double rearrange_p = 2.0;
    std::int64_t rearrange_n = 1000;
    cmd_rearrange->add_option("--p", rearrange_p)->required();
    cmd_rearrange->add_option("--n", rearrange_n)->required();

    // probe --p <p> --q <q> --blocks <K> --C <c> --budget <b> [--seed <s>]
    auto* cmd_probe =
        app.add_subcommand("probe", "search for a domination counterexample");
    double probe_p = 3.0, probe_q = 1.5, probe_c = 1.0;
    int probe_blocks = 5;
    std::int64_t probe_budget = 200;
    cmd_probe->add_option("--p", probe_p)->required();
    cmd_probe->add_option("--q", probe_q)->required();
    cmd_probe->add_option("--blocks", probe_blocks)->required();
    cmd_probe->add_option("--C", probe_c)->required();
    cmd_probe->add_option("--budget", probe_budget)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (cmd_norm->parsed()) {
        VecHandle v;
        if (auto st = parse_vec(norm_vec, v); st != BSP_OK) return report_status(st);
        double value = 0.0;
        json witness;
        if (norm_witness) {
            CStr wjson;
            if (auto st = bsp_norm_with_witness(norm_space.c_str(), v.v, &value, &wjson.p);
                st != BSP_OK)
                return report_status(st);
            witness = json::parse(wjson.p);
        } else {
            if (auto st = bsp_norm(norm_space.c_str(), v.v, &value); st != BSP_OK)
                return report_status(st);
        }
        if (as_json) {
            json out{{"space", norm_space}, {"norm", value}};
            if (norm_witness) out["witness"] = witness;
            print_json(out);
        } else {
            std::cout << "norm = " << fmt(value) << "\n";
            if (norm_witness) std::cout << "witness = " << witness_text(witness) << "\n";
        }
        return kExitOk;
    }

    if (cmd_oracle->parsed()) {
        const auto seed = pick_seed("oracle-check|" + oracle_space + "|" +
                                    std::to_string(oracle_max_support) + "|" +
                                    std::to_string(oracle_trials));
        CStr payload;
        if (auto st = bsp_oracle_trials(oracle_space.c_str(), oracle_max_support,
                                        oracle_trials, seed, &payload.p);
            st != BSP_OK)
            return report_status(st);
        const json r = json::parse(payload.p);
        return finish_trial_report(r, as_json, json{{"space", oracle_space}, {"report", r}});
    }

    if (cmd_order->parsed()) {
        int cmp = 0;
        if (auto st = bsp_order(order_y.c_str(), order_z.c_str(), &cmp); st != BSP_OK)
            return report_status(st);
        const char* word = cmp < 0 ? "less" : cmp > 0 ? "greater" : "equal";
        if (as_json) {
            print_json(json{{"left", order_y}, {"right", order_z}, {"order", word}});
        } else {
            const char* sign = cmp < 0 ? "≺" : cmp > 0 ? "≻" : "=";
            std::cout << order_y << " " << sign << " " << order_z << "\n";
        }
        return kExitOk;
    }

    if (cmd_constant->parsed()) {
        CStr payload;
        if (auto st = bsp_inclusion_constant(const_y.c_str(), const_z.c_str(), &payload.p);
            st != BSP_OK)
            return report_status(st);
        const json a = json::parse(payload.p);
        if (as_json) {
            print_json(a);
        } else if (!a["comparable"].get<bool>()) {
            std::cout << "no formal inclusion " << const_y << " -> " << const_z << "\n";
        } else {
            std::cout << "constant = " << fmt(a["constant"].get<double>()) << "\n";
            if (a["route"].empty()) {
                std::cout << "route: identity\n";
            } else {
                std::cout << "route:";
                for (const auto& link : a["route"])
                    std::cout << " " << link["link"].get<std::string>() << "("
                              << link["from"].get<std::string>() << " -> "
                              << link["to"].get<std::string>()
                              << ", C = " << fmt(link["constant"].get<double>()) << ")";
                std::cout << "\n";
            }
        }
        return kExitOk;
    }

    if (cmd_classify->parsed()) {
        CStr payload;
        if (auto st = bsp_classify(cls_y.c_str(), cls_z.c_str(), &payload.p); st != BSP_OK)
            return report_status(st);
        const json c = json::parse(payload.p);
        if (as_json) {
            print_json(c);
        } else {
            std::cout << "formal inclusion: " << c["formal_inclusion"].get<std::string>()
                      << "\n";
            if (c.contains("constant"))
                std::cout << "constant: " << fmt(c["constant"].get<double>()) << "\n";
            std::cout << "inclusion strictly singular: "
                      << c["inclusion_strictly_singular"].get<std::string>() << "\n";
            std::cout << "inclusion compact: " << c["inclusion_compact"].get<std::string>()
                      << "\n";
            std::cout << "strictly singular non-compact operators exist: "
                      << c["ss_noncompact_exists"].get<std::string>() << "\n";
            for (const auto& note : c["notes"])
                std::cout << "note: " << note.get<std::string>() << "\n";
        }
        return kExitOk;
    }

    if (cmd_index->parsed()) {
        int k = 0;
        if (auto st = bsp_nilpotency_index(index_spec.c_str(), &k); st != BSP_OK)
            return report_status(st);
        if (as_json)
            print_json(json{{"spec", index_spec}, {"k", k}});
        else
            std::cout << "k = " << k << "\n";
        return kExitOk;
    }

    if (cmd_witness->parsed()) {
        CStr payload;
        if (auto st = bsp_witness_chain(witness_spec.c_str(), &payload.p); st != BSP_OK)
            return report_status(st);
        const json chain = json::parse(payload.p);
        if (as_json) {
            print_json(json{{"spec", witness_spec}, {"witness_chain", chain}});
        } else {
            bool first = true;
            for (const auto& label : chain) {
                if (!first) std::cout << " ≺ ";
                first = false;
                std::cout << label.get<std::string>();
            }
            std::cout << "\n";
        }
        return kExitOk;
    }

    if (cmd_certify->parsed()) {
        CStr payload;
        if (auto st = bsp_certify(certify_spec.c_str(), certify_limit, &payload.p);
            st != BSP_OK)
            return report_status(st);
        const json r = json::parse(payload.p);
        const bool forced = r["all_long_paths_forced"].get<bool>();
        if (as_json) {
            print_json(r);
        } else {
            std::cout << "k = " << r["k"].get<int>() << "\n";
            std::cout << "witness chain:";
            for (const auto& label : r["witness_chain"])
                std::cout << " " << label.get<std::string>();
            std::cout << "\n";
            std::cout << "max rule-free length = " << r["max_rule_free_length"].get<int>()
                      << "\n";
            if (r["exhaustive_paths_checked"].is_null())
                std::cout << "exhaustive check skipped (counting bound applies)\n";
            else
                std::cout << "exhaustive paths checked = "
                          << r["exhaustive_paths_checked"].get<std::uint64_t>() << "\n";
            std::cout << "all long paths forced = " << (forced ? "yes" : "no") << "\n";
            std::cout << "note: " << r["basis"].get<std::string>() << "\n";
        }
        return forced ? kExitOk : kExitViolation;
    }

    if (cmd_trials->parsed()) {
        const auto comma = trials_pair.find(',');
        if (comma == std::string::npos) {
            std::cerr << "error: --pair expects two comma-separated labels\n";
            return kExitUsage;
        }
        const std::string y = trials_pair.substr(0, comma);
        const std::string z = trials_pair.substr(comma + 1);
        const auto seed =
            pick_seed("trials|" + trials_pair + "|" + std::to_string(trials_n));
        const bool want_csv = !trials_csv.empty();
        CStr payload;
        if (auto st = bsp_inclusion_trials(y.c_str(), z.c_str(), trials_n, seed,
                                           want_csv ? 1 : 0, &payload.p);
            st != BSP_OK)
            return report_status(st);
        const json r = json::parse(payload.p);
        if (want_csv) {
            std::ofstream csv(trials_csv);
            if (!csv) {
                std::cerr << "error: cannot write " << trials_csv << "\n";
                return kExitUsage;
            }
            csv << "trial,ratio\n";
            std::int64_t t = 0;
            for (const auto& ratio : r["ratios"])
                csv << t++ << "," << fmt(ratio.get<double>()) << "\n";
        }
        json wrapper = r;
        wrapper.erase("ratios");
        wrapper["pair"] = json::array({y, z});
        return finish_trial_report(r, as_json, wrapper);
    }

    if (cmd_jameson->parsed()) {
        double constant = 0.0;
        if (auto st = bsp_jameson_constant(jameson_p, jameson_q, &constant); st != BSP_OK)
            return report_status(st);
        const auto seed = pick_seed("jameson|" + fmt(jameson_p) + "|" + fmt(jameson_q) +
                                    "|" + std::to_string(jameson_n));
        CStr payload;
        if (auto st = bsp_jameson_check(jameson_p, jameson_q, jameson_n, seed, &payload.p);
            st != BSP_OK)
            return report_status(st);
        const json r = json::parse(payload.p);
        if (as_json) {
            print_json(json{{"constant", constant}, {"report", r}});
        } else {
            std::cout << "J = " << fmt(constant) << "\n";
            print_trial_report_text(r);
        }
        return r["violations"].get<std::int64_t>() > 0 ? kExitViolation : kExitOk;
    }

    if (cmd_rearrange->parsed()) {
        const auto seed = pick_seed("rearrange|" + fmt(rearrange_p) + "|" +
                                    std::to_string(rearrange_n));
        CStr payload;
        if (auto st = bsp_rearrangement_check(rearrange_p, rearrange_n, seed, &payload.p);
            st != BSP_OK)
            return report_status(st);
        const json r = json::parse(payload.p);
        return finish_trial_report(r, as_json, r);
    }

    if (cmd_probe->parsed()) {
        const auto seed = pick_seed("probe|" + fmt(probe_p) + "|" + fmt(probe_q) + "|" +
                                    std::to_string(probe_blocks) + "|" + fmt(probe_c));
        CStr payload;
        if (auto st = bsp_domination_probe(probe_p, probe_q, probe_blocks, probe_c,
                                           probe_budget, seed, &payload.p);
            st != BSP_OK)
            return report_status(st);
        const json r = json::parse(payload.p);
        if (as_json) {
            print_json(r);
        } else if (r["found"].get<bool>()) {
            std::cout << "counterexample found after "
                      << r["candidates_tried"].get<std::int64_t>() << " candidates\n";
            std::cout << "profile =";
            for (const auto& a : r["profile"]) std::cout << " " << fmt(a.get<double>());
            std::cout << "\n";
            std::cout << "norm in source = " << fmt(r["norm_from"].get<double>()) << "\n";
            std::cout << "norm in target = " << fmt(r["norm_to"].get<double>()) << "\n";
            std::cout << "ratio = " << fmt(r["ratio"].get<double>()) << "\n";
        } else {
            std::cout << "none found within budget\n";
        }
        return kExitOk;
    }

    return kExitUsage;
}
