// redn: command-line front end.
//
// Exit codes: 0 pass, 1 a computed value misses its target (or an internal
// failure), 2 malformed input or usage.

#include "redn/bb.hpp"
#include "redn/exterior.hpp"
#include "redn/io.hpp"
#include "redn/orbits.hpp"
#include "redn/report.hpp"
#include "redn/tangent.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>

using namespace redn;

namespace {

struct Opts {
    int n = 4;
    std::string subspace, at;
    int jobs = 1;
    bool json = false, table = false, verify = false, timings = false;
};

struct Out {
    const Opts& o;
    Json j = Json::object();
    std::vector<std::string> lines;
    void text(const std::string& s) { lines.push_back(s); }
    int done(int code) {
        if (o.json) {
            std::cout << j.dump(2) << "\n";
        } else {
            for (auto& l : lines) std::cout << l << "\n";
        }
        return code;
    }
};

template <class T>
std::string join(const std::vector<T>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

LieSubspace need_subspace(const Opts& o) {
    if (o.subspace.empty()) throw InputError("--subspace", "a subspace file is required");
    return subspace_from_json(read_json_file(o.subspace));
}

int cmd_classify(const Opts& o) {
    Out out{o};
    LieSubspace a = need_subspace(o);
    OrbitLabel l = classify_orbit(a);
    out.j = {{"orbit", label_name(l)}, {"orbit_dimension", label_dimension(l)}, {"signature", signature(a).key()}};
    out.text(label_name(l));
    return out.done(0);
}

int cmd_tangent_dim(const Opts& o) {
    Out out{o};
    LieSubspace a = need_subspace(o);
    int d = tangent_space_ab(a).dim();
    out.j = {{"n", a.n()}, {"dim", a.dim()}, {"tangent_dim", d}};
    out.text(std::to_string(d));
    return out.done(0);
}

int cmd_theta_kernel(const Opts& o) {
    Out out{o};
    int d = theta_kernel_dim(o.n);
    out.j = {{"n", o.n}, {"kernel_dim", d}};
    out.text(std::to_string(d));
    return out.done(0);
}

int cmd_tn_rank(const Opts& o) {
    Out out{o};
    T4Report t = t4_rank(600, o.jobs);
    bool ok = t.symbolic_rank == 245 && t.eval_rank_mod_p == 245;
    out.j = {{"symbolic_rank", t.symbolic_rank},
             {"kernel_dim", t.kernel_dim},
             {"eval_points", t.eval_points},
             {"eval_rank_mod_p", t.eval_rank_mod_p},
             {"kernel_zero_at_fresh_points", t.kernel_zero_at_fresh},
             {"theta_kernel_vanishes_on_wbar", t.theta_kernel_vanishes_on_wbar},
             {"injective_on_theta_kernel", t.injective_on_theta_kernel},
             {"target", 245}};
    out.text("rank t_4 = " + std::to_string(t.symbolic_rank) + " (certified mod p on " + std::to_string(t.eval_points) +
             " points: " + std::to_string(t.eval_rank_mod_p) + "), kernel " + std::to_string(t.kernel_dim));
    return out.done(ok ? 0 : 1);
}

int cmd_tn_eval(const Opts& o) {
    Out out{o};
    LieSubspace a = need_subspace(o);
    if (o.at.empty()) throw InputError("--at", "an element file is required");
    Mat x = element_from_json(read_json_file(o.at), a.n(), "$");
    if (a.dim() != a.n() - 1) throw InputError("$.basis", "t_n needs n-1 basis elements");
    Rational t = t_n_eval(a.basis(), x), tw = t_n_twisted_eval(a, x);
    out.j = {{"t_n", to_json(t)}, {"t_n_twisted", to_json(tw)}};
    out.text("t_n = " + to_string(t));
    out.text("t'_n = " + to_string(tw));
    return out.done(0);
}

int cmd_quadric(const Opts& o) {
    Out out{o};
    LieSubspace a = need_subspace(o);
    if (a.dim() != a.n() - 1) throw InputError("$.basis", "the quadric needs n-1 basis elements");
    Rational q = killing_quadric(a.basis());
    out.j = {{"Q", to_json(q)}};
    out.text(to_string(q));
    return out.done(0);
}

int cmd_degenerations(const Opts& o) {
    Out out{o};
    auto curves = degeneration_curves();
    auto res = verify_degenerations();
    Json arr = Json::array();
    int ok = 0;
    for (std::size_t i = 0; i < res.size(); ++i) {
        auto& r = res[i];
        ok += r.ok;
        arr.push_back({{"from", label_name(r.from)},
                       {"to", label_name(r.to)},
                       {"curve", curves[i].how},
                       {"start", label_name(r.got_start)},
                       {"limit", label_name(r.got_limit)},
                       {"ok", r.ok}});
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-5s -> %-5s  limit %-5s %s  (%s)", label_name(r.from).c_str(),
                      label_name(r.to).c_str(), label_name(r.got_limit).c_str(), r.ok ? "ok  " : "FAIL",
                      curves[i].how.c_str());
        out.text(buf);
    }
    out.j = {{"arrows", arr}, {"ok", ok}, {"total", int(res.size())}};
    out.text(std::to_string(ok) + "/" + std::to_string(res.size()) + " arrows verified");
    return out.done(ok == int(res.size()) ? 0 : 1);
}

int cmd_planes(const Opts& o) {
    Out out{o};
    LieSubspace a = o.subspace.empty() ? representative(OrbitLabel::O12) : need_subspace(o);
    SecantReport s = secant_planes(a);
    Json arr = Json::array();
    for (auto& p : s.planes) {
        arr.push_back({{"pair", {p.i, p.j}},
                       {"hyperplane", to_json(p.hyperplane)},
                       {"centralizer_dim", p.centralizer.dim()},
                       {"samples_abelian", p.samples_abelian}});
        out.text("P_" + std::to_string(p.i + 1) + std::to_string(p.j + 1) + ": centralizer dim " +
                 std::to_string(p.centralizer.dim()) + ", " + std::to_string(p.samples_abelian) + " abelian samples");
    }
    out.j = {{"planes", arr},
             {"centralizers_dim_ok", s.centralizers_dim_ok},
             {"all_abelian", s.all_abelian},
             {"transverse", s.transverse}};
    out.text(std::to_string(s.planes.size()) + " planes, transverse: " + (s.transverse ? "yes" : "no"));
    bool ok = s.centralizers_dim_ok && s.all_abelian && s.transverse;
    return out.done(ok ? 0 : 1);
}

int cmd_cone_check(const Opts& o) {
    Out out{o};
    if (o.n < 3) throw InputError("--n", "n must be at least 3");
    ConeMapB B = build_B(o.n);
    ConeCheck c = check_cone_eqs(B);
    int st = stabilizer_lie_dim(B);
    out.j = {{"n", o.n}, {"symmetric", c.symmetric}, {"traceless", c.traceless}, {"quadrics", c.quadrics},
             {"stabilizer_dim", st}};
    if (c.witness) out.j["witness"] = *c.witness;
    out.text(std::string("symmetric ") + (c.symmetric ? "yes" : "no") + ", traceless " + (c.traceless ? "yes" : "no") +
             ", quadrics " + (c.quadrics ? "yes" : "no") + ", stabilizer dim " + std::to_string(st));
    return out.done(c.ok() && st == 0 ? 0 : 1);
}

int cmd_canonical_order(const Opts& o) {
    Out out{o};
    CanonicalOrder c = canonical_vanishing_order(4);
    out.j = {{"valuation", c.valuation},
             {"theta_identities", c.theta_identities},
             {"mu_identity", c.mu_identity},
             {"nu_identity", c.nu_identity},
             {"tangent_dim_generic", c.tangent_dim_generic},
             {"tangent_dim_zero", c.tangent_dim_zero}};
    out.text("valuation " + std::to_string(c.valuation) + " (d/dtheta " + (c.theta_identities ? "ok" : "fails") +
             ", d/dmu " + (c.mu_identity ? "ok" : "fails") + ", d/dnu " + (c.nu_identity ? "ok" : "fails") + ")");
    bool ok = c.valuation == 3 && c.theta_identities && c.nu_identity;
    return out.done(ok ? 0 : 1);
}

int cmd_fixed_points(const Opts& o) {
    Out out{o};
    auto base = enumerate_fixed_points();
    auto counts = per_orbit_counts(base);
    Json pts = Json::array();
    for (auto& p : base) {
        Json r = Json::array();
        for (auto [i, j] : p.roots) r.push_back({i + 1, j + 1});
        pts.push_back({{"roots", r}, {"orbit", label_name(p.orbit)}});
    }
    Json byorbit = Json::object();
    std::string h1, h2;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        std::string name = label_name(all_labels()[k]);
        byorbit[name] = counts[k];
        char a[16], b[16];
        std::snprintf(a, sizeof a, "%6s", name.c_str());
        std::snprintf(b, sizeof b, "%6d", counts[k]);
        h1 += a;
        h2 += b;
    }
    out.j = {{"base_points", int(base.size())}, {"per_orbit", byorbit}, {"points", pts}};
    if (o.table) {
        out.text(h1);
        out.text(h2);
    } else {
        for (auto& p : base) {
            std::string s;
            for (auto [i, j] : p.roots) s += "E" + std::to_string(i + 1) + std::to_string(j + 1) + " ";
            out.text(label_name(p.orbit) + "  " + (s.empty() ? "(Cartan)" : s));
        }
    }
    out.text(std::to_string(base.size()) + " fixed points");
    bool ok = base.size() == 81 && counts == std::vector<int>{1, 12, 12, 0, 0, 0, 12, 12, 0, 0, 0, 24, 4, 4};
    return out.done(ok ? 0 : 1);
}

int cmd_betti(const Opts& o) {
    Out out{o};
    auto pts = fixed_point_data(o.jobs);
    auto l = choose_lambda(pts);
    auto b = betti_numbers(pts, l);
    int sum = 0;
    for (int x : b) sum += x;
    std::vector<int> target{1, 3, 9, 15, 23, 29, 33, 29, 23, 15, 9, 3, 1};
    out.j = {{"betti", b}, {"sum", sum}, {"lambda", l}, {"palindromic", palindromic(b)}, {"target", target}};
    out.text(join(b));
    out.text(std::to_string(sum));
    if (b != target) out.text("differs from target " + join(target));
    return out.done(b == target ? 0 : 1);
}

int cmd_euler(const Opts& o) {
    Out out{o};
    int chi = euler_characteristic(o.jobs);
    out.j = {{"euler_characteristic", chi}};
    out.text(std::to_string(chi));
    return out.done(chi == 193 ? 0 : 1);
}

int cmd_chow(const Opts& o) {
    Out out{o};
    ChowReport c = chow_report(o.jobs);
    out.j = {{"target", c.target},
             {"reconstruction", c.reconstruction},
             {"betti", c.betti},
             {"exceptional_classes", c.exceptional_classes},
             {"discrepancy", c.discrepancy},
             {"method", c.method}};
    out.text("target         " + join(c.target));
    out.text("reconstruction " + join(c.reconstruction) + (c.discrepancy ? "  DISCREPANCY" : ""));
    out.text("method: " + c.method);
    return out.done(0);
}

int cmd_reproduce(const Opts& o) {
    Out out{o};
    auto rs = run_acceptance(o.jobs, [&](const CheckResult& r) {
        if (!o.json) std::cout << format_line(r) << std::endl;
    });
    int passed = 0;
    for (auto& r : rs) passed += r.pass;
    out.j = report_json(rs, o.timings);
    out.text(std::to_string(passed) + "/" + std::to_string(rs.size()) + " criteria pass");
    return out.done(passed == int(rs.size()) ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on varieties of reductions Red(n)"};
    app.require_subcommand(1);
    Opts o;
    app.add_option("--jobs", o.jobs, "internal parallelism")->check(CLI::Range(1, 256));
    app.add_flag("--json", o.json, "machine-readable output");

    struct Cmd {
        const char* name;
        const char* help;
        int (*run)(const Opts&);
    };
    const Cmd cmds[] = {
        {"classify", "orbit label of a 3-dim abelian subalgebra of sl_4", cmd_classify},
        {"tangent-dim", "Zariski tangent dimension of Ab(n) at a subspace", cmd_tangent_dim},
        {"theta-kernel", "dimension of ker Theta", cmd_theta_kernel},
        {"tn-rank", "rank of t_4, exact and certified", cmd_tn_rank},
        {"tn-eval", "t_n and t'_n of a subspace at an element", cmd_tn_eval},
        {"quadric", "Killing quadric of a basis", cmd_quadric},
        {"degenerations", "verify the degeneration arrows", cmd_degenerations},
        {"planes", "secant planes through a split Cartan", cmd_planes},
        {"cone-check", "cone map B: equations and stabilizer", cmd_cone_check},
        {"canonical-order", "vanishing order along O_bound", cmd_canonical_order},
        {"fixed-points", "torus-fixed points of Red(4)", cmd_fixed_points},
        {"betti", "Betti numbers of the resolution", cmd_betti},
        {"euler", "Euler characteristic of the resolution", cmd_euler},
        {"chow-report", "Chow ranks: target and reconstruction", cmd_chow},
        {"reproduce-all", "run every acceptance check", cmd_reproduce},
    };
    int (*chosen)(const Opts&) = nullptr;
    for (auto& c : cmds) {
        CLI::App* s = app.add_subcommand(c.name, c.help);
        s->add_option("--n", o.n, "matrix size")->check(CLI::Range(2, 12));
        s->add_option("--subspace,--basis", o.subspace, "subspace JSON file");
        s->add_option("--at", o.at, "element JSON file");
        s->add_option("--jobs", o.jobs, "internal parallelism")->check(CLI::Range(1, 256));
        s->add_flag("--json", o.json, "machine-readable output");
        s->add_flag("--table", o.table, "aligned table");
        s->add_flag("--verify", o.verify, "verify (default)");
        s->add_flag("--timings", o.timings, "include runtimes in JSON");
        auto run = c.run;
        s->callback([&chosen, run] { chosen = run; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return chosen(o);
    } catch (const InputError& e) {
        std::cerr << "input error at " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
