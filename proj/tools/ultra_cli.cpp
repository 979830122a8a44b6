#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ultra/heisenberg.hpp"
#include "ultra/kernels.hpp"
#include "ultra/norm.hpp"
#include "ultra/selftest.hpp"
#include "ultra/space.hpp"
#include "ultra/wreath.hpp"

namespace {

using nlohmann::json;
using namespace ultra;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

RationalUltraSpace load_space(const std::string& path) {
    return RationalUltraSpace::from_json(load_json(path));
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::uint64_t parse_point_set(const std::string& s, const RationalUltraSpace& S) {
    std::uint64_t mask = 0;
    for (const auto& label : split_csv(s)) mask |= std::uint64_t{1} << S.index_of(label);
    return mask;
}

Chain parse_chain(const std::string& s, const RationalUltraSpace& S) {
    Chain c;
    for (const auto& label : split_csv(s)) c.support ^= std::uint64_t{1} << S.index_of(label);
    return c;
}

json labels_of_mask(std::uint64_t mask, const RationalUltraSpace& S) {
    json out = json::array();
    for (int i = 0; i < S.size(); ++i)
        if ((mask >> i) & 1u) out.push_back(S.points[i]);
    return out;
}

json config_to_json(const Configuration& omega, const RationalUltraSpace& S) {
    json out = json::array();
    for (auto [a, b] : omega.pairs) out.push_back(json::array({S.points[a], S.points[b]}));
    return out;
}

PermGroup load_group(const std::string& path, int degree) {
    json j = load_json(path);
    std::vector<Permutation> elems;
    for (const auto& row : j) elems.emplace_back(row.get<std::vector<int>>());
    return PermGroup(degree, std::move(elems));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_verify(const std::string& path) {
    auto S = load_space(path);
    auto witness = verify_ultrametric(S);
    if (!witness) {
        emit({{"ok", true}});
        return kExitOk;
    }
    emit({{"ok", false},
          {"witness", json::array({S.points[witness->x], S.points[witness->y], S.points[witness->z]})}});
    return kExitVerificationFailed;
}

int cmd_ball_partition(const std::string& path, const std::string& eps, bool closed) {
    auto S = load_space(path);
    auto P = ball_partition(S, parse_rational(eps), closed);
    json blocks = json::array();
    for (std::uint64_t b : P.blocks) blocks.push_back(labels_of_mask(b, S));
    emit({{"blocks", blocks}});
    return kExitOk;
}

int cmd_hausdorff(const std::string& path, const std::string& a, const std::string& b) {
    auto S = load_space(path);
    emit({{"distance", rational_to_json(hausdorff_distance(parse_point_set(a, S),
                                                           parse_point_set(b, S), S))}});
    return kExitOk;
}

int cmd_norm(const std::string& path, const std::string& chain, bool oracle, bool witness_only) {
    auto S = load_space(path);
    Chain u = parse_chain(chain, S);
    auto res = norm_bottleneck(u, S);
    json out;
    if (!witness_only) out["norm"] = to_string(res.value);
    out["witness"] = config_to_json(res.witness, S);
    if (oracle) {
        bool agrees = norm_bruteforce(u, S) == res.value;
        out["oracle_agrees"] = agrees;
        emit(out);
        return agrees ? kExitOk : kExitVerificationFailed;
    }
    emit(out);
    return kExitOk;
}

int cmd_closedness(const std::string& path, const std::string& chain) {
    auto S = load_space(path);
    auto rep = distance_to_image(parse_chain(chain, S), S);
    json out;
    out["distance"] = to_string(rep.distance);
    out["in_image"] = rep.in_image;
    out["nearest_point"] = S.points[rep.argmin_point];
    bool ok = true;
    if (rep.eps0) {
        out["eps0"] = to_string(*rep.eps0);
        ok = rep.distance >= *rep.eps0;
        out["bound_holds"] = ok;
    }
    emit(out);
    return ok ? kExitOk : kExitVerificationFailed;
}

std::string heis_label(const HeisenbergElement& u) {
    return "(" + std::to_string(u.a) + "," + to_bit_string(u.x) + "," + to_bit_string(u.f) + ")";
}

int cmd_heisenberg(const std::string& what, int n) {
    if (what == "order") {
        emit({{"order", std::uint64_t{1} << (2 * n + 1)}});
        return kExitOk;
    }
    if (what == "center") {
        json out = json::array();
        for (const auto& u : center(n)) out.push_back(heis_label(u));
        emit({{"center", out}});
        return kExitOk;
    }
    if (what == "table") {
        if (n > 2) throw std::invalid_argument("multiplication table emission capped at n <= 2");
        auto all = enumerate_heisenberg(n);
        std::cout << "*";
        for (const auto& v : all) std::cout << "," << heis_label(v);
        std::cout << "\n";
        for (const auto& u : all) {
            std::cout << heis_label(u);
            for (const auto& v : all) std::cout << "," << heis_label(h_mul(u, v));
            std::cout << "\n";
        }
        return kExitOk;
    }
    throw std::invalid_argument("unknown heisenberg subcommand: " + what);
}

int cmd_semidirect(const std::string& what, int n, const std::string& group_path) {
    PermGroup G = group_path.empty() ? PermGroup::symmetric(n) : load_group(group_path, n);
    if (what == "order") {
        emit({{"order", (std::uint64_t{1} << (2 * n + 1)) * G.order()}});
        return kExitOk;
    }
    if (what == "retract-check") {
        auto rep = retraction_check(n, G);
        emit({{"r_homomorphism", rep.r_homomorphism},
              {"s_homomorphism", rep.s_homomorphism},
              {"r_after_s_identity", rep.r_after_s_identity},
              {"ok", rep.ok()}});
        return rep.ok() ? kExitOk : kExitVerificationFailed;
    }
    throw std::invalid_argument("unknown semidirect subcommand: " + what);
}

int cmd_duality_atoms(const std::string& path) {
    json j = load_json(path);
    std::set<std::uint64_t> members;
    int n = j.at("n").get<int>();
    for (const auto& m : j.at("members")) members.insert(clopen_from_string(m.get<std::string>()).bits);
    BooleanSubalgebra B(n, std::move(members));
    json out = json::array();
    for (const auto& a : atoms(B)) out.push_back(to_bit_string(a));
    emit({{"atoms", out}});
    return kExitOk;
}

int cmd_wreath(const std::string& path) {
    json j = load_json(path);
    MultTable H(j.at("table").get<std::vector<std::vector<int>>>());
    auto [M, rep] = wreath_retract(H);
    emit({{"order", rep.order},
          {"retraction_hom", rep.retraction_hom},
          {"section_hom", rep.section_hom},
          {"retract_section_id", rep.retract_section_id},
          {"ok", rep.ok()}});
    return rep.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_isometry_group(const std::string& path) {
    auto S = load_space(path);
    auto G = isometry_group(S);
    json elems = json::array();
    for (const auto& g : G.elements) elems.push_back(g.img);
    emit({{"order", G.order()}, {"elements", elems}});
    return kExitOk;
}

int cmd_selftest(std::uint64_t seed, int trials, const std::string& format) {
    auto results = run_selftest({seed, trials});
    bool all_ok = true;
    if (format == "text") {
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name;
            if (!r.passed) std::cout << "  (" << r.detail << ")";
            std::cout << "\n";
            all_ok = all_ok && r.passed;
        }
    } else {
        json out = json::array();
        for (const auto& r : results) {
            json entry{{"claim", r.name}, {"passed", r.passed}};
            if (!r.passed) entry["detail"] = r.detail;
            out.push_back(entry);
            all_ok = all_ok && r.passed;
        }
        emit({{"results", out}, {"ok", all_ok}});
    }
    return all_ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite Stone duality, Heisenberg-type groups and ultra-norms on free Boolean groups"};
    app.require_subcommand(1);

    std::string space_path, eps, set_a, set_b, chain, group_path, table_path, algebra_path;
    std::string format = "json";
    bool closed = false, oracle = false;
    int dim = 2;
    std::uint64_t seed = 0;
    int trials = 200;

    auto* verify = app.add_subcommand("verify-ultrametric", "check the strong triangle inequality");
    verify->add_option("space", space_path)->required();

    auto* balls = app.add_subcommand("ball-partition", "clopen partition by open eps-balls");
    balls->add_option("space", space_path)->required();
    balls->add_option("--eps", eps)->required();
    balls->add_flag("--closed", closed, "use closed balls");

    auto* hd = app.add_subcommand("hausdorff", "Hausdorff distance between point sets");
    hd->add_option("space", space_path)->required();
    hd->add_option("--a", set_a)->required();
    hd->add_option("--b", set_b)->required();

    auto* norm_cmd = app.add_subcommand("norm", "ultra-norm of an even chain");
    norm_cmd->add_option("space", space_path)->required();
    norm_cmd->add_option("--chain", chain)->required();
    norm_cmd->add_flag("--oracle", oracle, "cross-check against the brute-force oracle");

    auto* witness_cmd = app.add_subcommand("witness", "optimal pairing of an even chain");
    witness_cmd->add_option("space", space_path)->required();
    witness_cmd->add_option("--chain", chain)->required();

    auto* closed_cmd = app.add_subcommand("closedness", "distance from a chain to the embedded space");
    closed_cmd->add_option("space", space_path)->required();
    closed_cmd->add_option("--chain", chain)->required();

    auto* heis = app.add_subcommand("heisenberg", "Heisenberg group probes: table, center, order");
    std::string heis_what;
    heis->add_option("what", heis_what)->required()->check(CLI::IsMember({"table", "center", "order"}));
    heis->add_option("-n", dim)->required()->check(CLI::Range(0, 4));

    auto* semi = app.add_subcommand("semidirect", "induced group probes: order, retract-check");
    std::string semi_what;
    semi->add_option("what", semi_what)->required()->check(CLI::IsMember({"order", "retract-check"}));
    semi->add_option("-n", dim)->required()->check(CLI::Range(0, 4));
    semi->add_option("--group", group_path, "JSON array of permutations; defaults to S_n");

    auto* duality = app.add_subcommand("duality", "Stone duality probes");
    std::string duality_what;
    duality->add_option("what", duality_what)->required()->check(CLI::IsMember({"atoms"}));
    duality->add_option("algebra", algebra_path)->required();

    auto* wreath_cmd = app.add_subcommand("wreath", "wreath-type product with retraction check");
    wreath_cmd->add_option("--group", table_path, "JSON multiplication table")->required();

    auto* iso = app.add_subcommand("isometry-group", "all distance-preserving permutations");
    iso->add_option("space", space_path)->required();

    auto* self = app.add_subcommand("selftest", "seeded property-test sweep over all claims");
    self->add_option("--seed", seed);
    self->add_option("--trials", trials)->check(CLI::PositiveNumber);
    self->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(space_path);
        if (balls->parsed()) return cmd_ball_partition(space_path, eps, closed);
        if (hd->parsed()) return cmd_hausdorff(space_path, set_a, set_b);
        if (norm_cmd->parsed()) return cmd_norm(space_path, chain, oracle, false);
        if (witness_cmd->parsed()) return cmd_norm(space_path, chain, false, true);
        if (closed_cmd->parsed()) return cmd_closedness(space_path, chain);
        if (heis->parsed()) return cmd_heisenberg(heis_what, dim);
        if (semi->parsed()) return cmd_semidirect(semi_what, dim, group_path);
        if (duality->parsed()) return cmd_duality_atoms(algebra_path);
        if (wreath_cmd->parsed()) return cmd_wreath(table_path);
        if (iso->parsed()) return cmd_isometry_group(space_path);
        if (self->parsed()) return cmd_selftest(seed, trials, format);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
