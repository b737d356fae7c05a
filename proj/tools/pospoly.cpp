#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "pospoly/checks.hpp"
#include "pospoly/errors.hpp"
#include "pospoly/geometry.hpp"
#include "pospoly/grassmann.hpp"
#include "pospoly/json_io.hpp"
#include "pospoly/polytope.hpp"
#include "pospoly/rep.hpp"

namespace {

using namespace pospoly;

struct CommonOpts {
    std::string poset_file;
    std::vector<int> grassmann;  // d n
    std::string z_file;
    long long m = 0;
    long long M = 0;
    std::string method = "flow";
    int brute_cap = kDefaultBruteCap;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string subspace_file;
    int samples = 100;
    bool with_rep = false;
};

void add_poset_source(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--poset", o.poset_file, "poset JSON file");
    cmd->add_option("--grassmann", o.grassmann, "root poset parameters d n")->expected(2);
}

void add_format(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "json|text")->check(CLI::IsMember({"json", "text"}));
}

Poset resolve_poset(const CommonOpts& o) {
    if (!o.poset_file.empty() && !o.grassmann.empty())
        fail(Errc::MalformedInput, "give either --poset or --grassmann, not both");
    if (!o.poset_file.empty()) return poset_from_json(load_json_file(o.poset_file));
    if (o.grassmann.size() == 2) return root_poset(o.grassmann[0], o.grassmann[1]).poset;
    fail(Errc::MalformedInput, "a poset is required: --poset FILE or --grassmann d n");
}

std::pair<int, int> resolve_grassmann(const CommonOpts& o) {
    if (o.grassmann.size() != 2) fail(Errc::MalformedInput, "this command needs --grassmann d n");
    return {o.grassmann[0], o.grassmann[1]};
}

Method resolve_method(const CommonOpts& o) {
    return o.method == "brute" ? Method::Brute : Method::Flow;
}

void emit(const CommonOpts& o, const json& j, const std::string& text) {
    if (o.format == "text")
        std::cout << text << "\n";
    else
        std::cout << j.dump(2) << "\n";
}

json number_or_string(const BigInt& value) {
    if (value >= std::numeric_limits<long long>::min() &&
        value <= std::numeric_limits<long long>::max())
        return value.convert_to<long long>();
    return value.str();
}

json points_json(const std::vector<IntPoint>& points, const Poset& poset) {
    json arr = json::array();
    for (const IntPoint& z : points) arr.push_back(point_to_json(z, poset));
    return arr;
}

// Rational coordinates are requested by writing them as strings in the file.
bool has_rational_coords(const json& j) {
    if (!j.is_object() || !j.contains("z")) return false;
    for (const auto& [label, value] : j["z"].items())
        if (value.is_string()) return true;
    return false;
}

int run(int argc, char** argv) {
    CLI::App app{"poset polytopes, their chain-packing oracles, monomial bases and "
                 "the graph-closure geometry of the Grassmannian"};
    app.require_subcommand(1);
    CommonOpts o;

    auto* width_cmd = app.add_subcommand("width", "width of the poset");
    add_poset_source(width_cmd, o);
    add_format(width_cmd, o);

    auto* excess_cmd = app.add_subcommand("excess", "violation excess of a vector");
    add_poset_source(excess_cmd, o);
    add_format(excess_cmd, o);
    excess_cmd->add_option("--z", o.z_file, "vector JSON file")->required();
    excess_cmd->add_option("--m", o.m, "chain budget");
    excess_cmd->add_option("--method", o.method, "brute|flow")
        ->check(CLI::IsMember({"brute", "flow"}));
    excess_cmd->add_option("--brute-cap", o.brute_cap, "max poset size for brute enumeration")
        ->envname("POSPOLY_BRUTE_CAP");

    auto* member_cmd = app.add_subcommand("member", "membership of a vector in S(m,M)");
    add_poset_source(member_cmd, o);
    add_format(member_cmd, o);
    member_cmd->add_option("--z", o.z_file, "vector JSON file")->required();
    member_cmd->add_option("--m", o.m, "chain budget");
    member_cmd->add_option("--M", o.M, "global slack");

    auto* enum_cmd = app.add_subcommand("enumerate", "all lattice points of S(m,M)");
    add_poset_source(enum_cmd, o);
    add_format(enum_cmd, o);
    enum_cmd->add_option("--m", o.m, "chain budget");
    enum_cmd->add_option("--M", o.M, "global slack");

    auto* decomp_cmd = app.add_subcommand("decompose", "antichain decomposition of a member");
    add_poset_source(decomp_cmd, o);
    add_format(decomp_cmd, o);
    decomp_cmd->add_option("--z", o.z_file, "vector JSON file")->required();
    decomp_cmd->add_option("--m", o.m, "chain budget");
    decomp_cmd->add_option("--M", o.M, "global slack");

    auto* part_cmd = app.add_subcommand("partition", "partition the poset into antichains plus a block");
    add_poset_source(part_cmd, o);
    add_format(part_cmd, o);
    part_cmd->add_option("--m", o.m, "number of antichains");
    part_cmd->add_option("--M", o.M, "block size bound");

    auto* fflv_cmd = app.add_subcommand("fflv", "lattice points with Dyck-path sums at most m");
    fflv_cmd->add_option("--grassmann", o.grassmann, "d n")->expected(2)->required();
    add_format(fflv_cmd, o);
    fflv_cmd->add_option("--m", o.m, "path bound");

    auto* dims_cmd = app.add_subcommand("dims", "lattice counts and module dimensions");
    dims_cmd->add_option("--grassmann", o.grassmann, "d n")->expected(2)->required();
    add_format(dims_cmd, o);
    dims_cmd->add_option("--m", o.m, "chain budget");
    dims_cmd->add_option("--M", o.M, "global slack");
    dims_cmd->add_flag("--rep", o.with_rep, "also compute the cyclic span dimension");

    auto* basis_cmd = app.add_subcommand("basis-check", "independence and span of the monomial family");
    basis_cmd->add_option("--grassmann", o.grassmann, "d n")->expected(2)->required();
    add_format(basis_cmd, o);
    basis_cmd->add_option("--m", o.m, "chain budget");
    basis_cmd->add_option("--M", o.M, "global slack");

    auto* rel_cmd = app.add_subcommand("relation-check", "sampled vanishing relations");
    rel_cmd->add_option("--grassmann", o.grassmann, "d n")->expected(2)->required();
    add_format(rel_cmd, o);
    rel_cmd->add_option("--m", o.m, "chain budget");
    rel_cmd->add_option("--M", o.M, "global slack");
    rel_cmd->add_option("--samples", o.samples, "number of random monomials");
    rel_cmd->add_option("--seed", o.seed, "RNG seed");

    auto* poin_cmd = app.add_subcommand("poincare", "Poincare polynomial of the graph closure");
    poin_cmd->add_option("--grassmann", o.grassmann, "d n")->expected(2)->required();
    add_format(poin_cmd, o);

    auto* strata_cmd = app.add_subcommand("strata", "per-stratum cell generating polynomials");
    strata_cmd->add_option("--grassmann", o.grassmann, "d n")->expected(2)->required();
    add_format(strata_cmd, o);

    auto* stratum_cmd = app.add_subcommand("stratum", "stratum index of a subspace");
    add_format(stratum_cmd, o);
    stratum_cmd->add_option("--subspace", o.subspace_file, "matrix JSON file")->required();

    auto* fiber_cmd = app.add_subcommand("fiber", "fiber of the graph closure over a subspace");
    add_format(fiber_cmd, o);
    fiber_cmd->add_option("--subspace", o.subspace_file, "matrix JSON file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the full property suite");
    add_format(verify_cmd, o);
    verify_cmd->add_option("--seed", o.seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    if (width_cmd->parsed()) {
        const Poset poset = resolve_poset(o);
        const int w = poset.width();
        emit(o, json{{"width", w}}, std::to_string(w));
    } else if (excess_cmd->parsed()) {
        const Poset poset = resolve_poset(o);
        const IntPoint z = zvector_from_json(load_json_file(o.z_file), poset);
        const long long value = violation_excess(poset, z, o.m, resolve_method(o), o.brute_cap);
        emit(o, json{{"excess", value}, {"m", o.m}, {"method", o.method}}, std::to_string(value));
    } else if (member_cmd->parsed()) {
        const Poset poset = resolve_poset(o);
        const json zj = load_json_file(o.z_file);
        bool inside;
        if (has_rational_coords(zj))
            inside = membership(poset, zvector_rational_from_json(zj, poset), Params{o.m, o.M});
        else
            inside = membership(poset, zvector_from_json(zj, poset), Params{o.m, o.M});
        emit(o, json{{"member", inside}, {"m", o.m}, {"M", o.M}}, inside ? "true" : "false");
    } else if (enum_cmd->parsed()) {
        const Poset poset = resolve_poset(o);
        const auto points = enumerate_points(poset, Params{o.m, o.M});
        json j{{"count", points.size()}, {"m", o.m}, {"M", o.M}};
        j["points"] = points_json(points, poset);
        emit(o, j, std::to_string(points.size()) + " points");
    } else if (decomp_cmd->parsed()) {
        const Poset poset = resolve_poset(o);
        const IntPoint z = zvector_from_json(load_json_file(o.z_file), poset);
        const DecompositionCert cert = decompose(poset, z, Params{o.m, o.M});
        json j = cert_to_json(cert, poset);
        j["m"] = o.m;
        j["M"] = o.M;
        emit(o, j, std::to_string(cert.antichains.size()) + " antichains");
    } else if (part_cmd->parsed()) {
        const Poset poset = resolve_poset(o);
        const DecompositionCert cert = partition_poset(poset, Params{o.m, o.M});
        json j = cert_to_json(cert, poset);
        j["m"] = o.m;
        j["M"] = o.M;
        emit(o, j, std::to_string(cert.antichains.size()) + " antichains");
    } else if (fflv_cmd->parsed()) {
        auto [d, n] = resolve_grassmann(o);
        const RootPoset rp = root_poset(d, n);
        const auto points = fflv_points(d, n, o.m);
        json j{{"count", points.size()}, {"d", d}, {"n", n}, {"m", o.m}};
        j["points"] = points_json(points, rp.poset);
        emit(o, j, std::to_string(points.size()) + " points");
    } else if (dims_cmd->parsed()) {
        auto [d, n] = resolve_grassmann(o);
        json j{{"d", d}, {"n", n}, {"m", o.m}, {"M", o.M}};
        j["weyl_dim"] = number_or_string(weyl_dim(d, n, o.m));
        j["fflv_count"] = fflv_points(d, n, o.m).size();
        j["lattice_count"] = enumerate_points(root_poset(d, n).poset, Params{o.m, o.M}).size();
        std::string text = "lattice count " + j["lattice_count"].dump();
        if (o.with_rep) {
            j["cyclic_span_dim"] = cyclic_span_dim(RepParams{d, n, o.m, o.M});
            text += ", cyclic span " + j["cyclic_span_dim"].dump();
        }
        emit(o, j, text);
    } else if (basis_cmd->parsed()) {
        auto [d, n] = resolve_grassmann(o);
        const BasisReport r = basis_check(RepParams{d, n, o.m, o.M});
        emit(o,
             json{{"independent", r.independent},
                  {"rank", r.rank},
                  {"expected", r.expected},
                  {"cyclic_dim", r.cyclic_dim},
                  {"spans", r.spans}},
             std::string(r.independent && r.spans ? "basis" : "NOT a basis"));
    } else if (rel_cmd->parsed()) {
        auto [d, n] = resolve_grassmann(o);
        const RootPoset rp = root_poset(d, n);
        const RelationReport r = relation_check(RepParams{d, n, o.m, o.M}, o.samples, o.seed);
        json j{{"samples", r.samples}, {"seed", r.seed}, {"boundary_found", r.boundary_found}, {"ok", true}};
        if (r.boundary_found) {
            IntPoint b = r.boundary_point;
            j["boundary_point"] = point_to_json(b, rp.poset);
        }
        emit(o, j, "ok");
    } else if (poin_cmd->parsed()) {
        auto [d, n] = resolve_grassmann(o);
        const QPolynomial p = graph_poincare(d, n);
        json j = qpoly_to_json(p);
        j["d"] = d;
        j["n"] = n;
        emit(o, j, p.str());
    } else if (strata_cmd->parsed()) {
        auto [d, n] = resolve_grassmann(o);
        const auto strata = strata_poincare(d, n);
        QPolynomial sum;
        json arr = json::array();
        for (const auto& s : strata) {
            arr.push_back(qpoly_to_json(s));
            sum += s;
        }
        const QPolynomial gauss = gaussian_binomial(n, d);
        json j{{"d", d}, {"n", n}, {"strata", arr}, {"sum", qpoly_to_json(sum)},
               {"gaussian", qpoly_to_json(gauss)}, {"consistent", sum == gauss}};
        std::string text;
        for (std::size_t k = 0; k < strata.size(); ++k)
            text += "k=" + std::to_string(k) + ": " + strata[k].str() + "\n";
        emit(o, j, text + (sum == gauss ? "sum consistent" : "SUM MISMATCH"));
    } else if (stratum_cmd->parsed()) {
        const Subspace u = subspace_from_json(load_json_file(o.subspace_file));
        const int k = stratum_of(u);
        emit(o, json{{"k", k}, {"d", u.d()}, {"n", u.n()}}, std::to_string(k));
    } else if (fiber_cmd->parsed()) {
        const Subspace u = subspace_from_json(load_json_file(o.subspace_file));
        const FiberDescription f = fiber_of(u);
        json basis = json::array();
        for (const RatMatrix& mat : f.basis) {
            json rows = json::array();
            for (const auto& row : mat) {
                json cells = json::array();
                for (const Rational& x : row) cells.push_back(rational_str(x));
                rows.push_back(std::move(cells));
            }
            basis.push_back(std::move(rows));
        }
        emit(o, json{{"k", f.k}, {"proj_dim", f.proj_dim}, {"basis", basis}},
             "k=" + std::to_string(f.k) + " proj_dim=" + std::to_string(f.proj_dim));
    } else if (verify_cmd->parsed()) {
        const auto results = run_checks(CheckConfig{o.seed, true, true});
        bool all = true;
        json arr = json::array();
        for (const CheckResult& r : results) {
            all = all && r.pass;
            arr.push_back(json{{"id", r.id},
                               {"name", r.name},
                               {"pass", r.pass},
                               {"details", r.details},
                               {"seconds", r.seconds}});
            if (o.format == "text")
                std::printf("%-4s %-4s %s — %s (%.2fs)\n", r.id.c_str(), r.pass ? "PASS" : "FAIL",
                            r.name.c_str(), r.details.c_str(), r.seconds);
        }
        if (o.format != "text")
            std::cout << json{{"seed", o.seed}, {"all_pass", all}, {"checks", arr}}.dump(2) << "\n";
        else
            std::cout << (all ? "all checks passed" : "CHECKS FAILED") << " (seed " << o.seed << ")\n";
        return all ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump() << "\n";
        return e.code() == Errc::MalformedInput ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}
