// Acceptance gate: each criterion prints exactly one PASS/FAIL line and the
// process exit mirrors it. Criteria that measure known structural deviations
// fail with the measured numbers in the line; nothing here is softened to
// make a run green.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "laxg2/cocycle.hpp"
#include "laxg2/errors.hpp"
#include "laxg2/report.hpp"
#include "laxg2/rng.hpp"

using namespace laxg2;

namespace {

struct Args {
    int criterion = 0;
    std::string cli;
    std::string configs;
};

Args parse_args(int argc, char** argv) {
    Args a;
    for (int i = 1; i < argc; ++i) {
        const std::string flag = argv[i];
        if (i + 1 >= argc) throw ConfigError("flag " + flag + " needs a value");
        const std::string val = argv[++i];
        if (flag == "--criterion")
            a.criterion = std::stoi(val);
        else if (flag == "--cli")
            a.cli = val;
        else if (flag == "--configs")
            a.configs = val;
        else
            throw ConfigError("unknown flag " + flag);
    }
    if (a.criterion < 1 || a.criterion > 10)
        throw ConfigError("--criterion must be between 1 and 10");
    if (a.configs.empty()) throw ConfigError("--configs is required");
    return a;
}

std::vector<TyurinDatum> generic_data() {
    return {
        TyurinDatum(Rat(1), Vec3{Rat(1), Rat(0), Rat(0)}, Vec3{Rat(0), Rat(1), Rat(0)}),
        TyurinDatum(Rat(2), Vec3{Rat(1), Rat(2), Rat(3)}, Vec3{Rat(2), Rat(-1), Rat(0)}),
        TyurinDatum(Rat(-1), Vec3{Rat(0), Rat(1), Rat(1)}, Vec3{Rat(1), Rat(1), Rat(-1)}),
        TyurinDatum(Rat(1, 2), Vec3{Rat(1), Rat(1), Rat(1)}, Vec3{Rat(1), Rat(-1), Rat(0)}),
        TyurinDatum(Rat(3), Vec3{Rat(3), Rat(0), Rat(4)}, Vec3{Rat(0), Rat(1), Rat(0)}),
    };
}

Mat<QSqrt2> commutator7(const Mat<QSqrt2>& a, const Mat<QSqrt2>& b) { return a * b - b * a; }

// Criterion 1: closed-form bracket closure. The four vector-product
// relations, the vector-slot block identity, agreement with the embedded 7x7
// commutator, and Jacobi, each on 200 random instances, all exact.
bool criterion1(std::string& detail) {
    const int trials = 200;
    const RatMat E = RatMat::identity(3);
    Rng rng(11);
    int bad = 0;
    for (int t = 0; t < trials; ++t) {
        const Vec3 x = rng.vec3(), y = rng.vec3(), z = rng.vec3();
        const RatMat A = rng.traceless();
        if (!(skew(x) * skew(y) == outer(y, x) - dot(x, y) * E)) ++bad;
        if (!(skew(cross(x, y)) == skew(x) * skew(y) - skew(y) * skew(x) &&
              skew(cross(x, y)) == outer(y, x) - outer(x, y)))
            ++bad;
        if (!(-skew(mat_vec(A, x)) == A.transpose() * skew(x) + skew(x) * A)) ++bad;
        if (!(cross(x, cross(y, z)) == dot(x, z) * y - dot(x, y) * z)) ++bad;

        const G2Element u = rng.element(), v = rng.element(), w = rng.element();
        {
            const Vec3 lhs = mat_vec(u.A, v.a1) - mat_vec(v.A, u.a1) + Rat(2) * cross(u.a2, v.a2);
            const RatMat rhs = Rat(-2) * outer(u.a2, v.a2) + skew(u.a1) * v.A -
                               u.A.transpose() * skew(v.a1) + Rat(2) * outer(v.a2, u.a2) -
                               skew(v.a1) * u.A + v.A.transpose() * skew(u.a1);
            if (!(skew(lhs) == rhs)) ++bad;
        }
        if (!(bracket(u, v) == project(commutator7(embed(u), embed(v))))) ++bad;
        if (!(bracket(bracket(u, v), w) + bracket(bracket(v, w), u) + bracket(bracket(w, u), v))
                 .is_zero())
            ++bad;
    }
    detail = "4 product relations + block identity + 7x7 oracle + Jacobi on " +
             std::to_string(trials) + " instances, " + std::to_string(bad) + " mismatches";
    return bad == 0;
}

// Criterion 2: condition counting at a marked point. The contracted split is
// 13+8+6+1 and the measured ranks split 13+9+5+1; both total 28 = 2 dim.
bool criterion2(std::string& detail) {
    int ok = 0, n = 0;
    for (const TyurinDatum& d : generic_data()) {
        ++n;
        const RelationCount rc = effective_relation_count(d);
        const bool split = rc.residue_contracted == 8 && rc.double_pole_contracted == 13 &&
                           rc.eigen_contracted == 6 && rc.first_order_contracted == 1;
        const bool ranks = rc.double_pole_codim == 13 && rc.residue_codim == 9 &&
                           rc.eigen_codim == 5 && rc.first_order_codim == 1;
        if (split && ranks && rc.contracted_total() == 28 && rc.codim_total() == 28) ++ok;
    }
    detail = "split (8, 13, 6, 1), total 28 on " + std::to_string(ok) + "/" + std::to_string(n) +
             " generic data";
    return ok == n;
}

// Criterion 3: admissible jet spaces have dimension 14(T+3) - 28: 28 at the
// shortest window and 56 at truncation 3.
bool criterion3(std::string& detail) {
    int ok = 0, n = 0;
    for (const TyurinDatum& d : generic_data()) {
        ++n;
        if (admissible_jet_basis(d, 1).size() == 28 && admissible_jet_basis(d, 3).size() == 56)
            ++ok;
    }
    detail = "dimensions 28 at T=1 and 56 at T=3 on " + std::to_string(ok) + "/" +
             std::to_string(n) + " generic data";
    return ok == n;
}

// Criterion 4: the commutator of admissible jets is admissible: orders -4
// and -3 vanish identically, every condition holds including the first-order
// one, and the double-pole scale agrees with its closed formula.
bool criterion4(std::string& detail) {
    int ok = 0, n = 0;
    for (const TyurinDatum& d : generic_data()) {
        const auto basis = admissible_jet_basis(d, 3);
        Rng rng(23);
        for (int t = 0; t < 50; ++t) {
            ++n;
            const MatrixJet x = random_admissible(basis, rng);
            const MatrixJet y = random_admissible(basis, rng);
            if (closure_check(x, y, d).pass()) ++ok;
        }
    }
    detail = std::to_string(ok) + "/" + std::to_string(n) + " random admissible pairs close";
    return ok == n;
}

// Criterion 5: every graded piece of every configuration has the generic
// dimension 14 N over degrees -3..3. One-marked-point configurations
// measure 15; the line reports what was measured.
bool criterion5(const std::string& configs, std::string& detail) {
    std::ostringstream report;
    bool all_ok = true;
    for (const char* name : {"cfg111", "cfg112", "cfg211", "cfg121"}) {
        const RunConfig cfg = load_config(configs + "/" + name + std::string(".json"));
        GradedModel model(cfg.surface, cfg.grading);
        int lo = 1000, hi = -1000;
        bool cfg_ok = true;
        for (int m = -3; m <= 3; ++m) {
            const auto& b = model.basis(m);
            const int dim = int(b.elements.size());
            lo = std::min(lo, dim);
            hi = std::max(hi, dim);
            if (dim != b.generic_dim) cfg_ok = false;
        }
        report << (report.str().empty() ? "" : ", ") << name << " dim "
               << (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi))
               << " vs generic " << model.basis(0).generic_dim;
        if (!cfg_ok) all_ok = false;
    }
    detail = report.str();
    return all_ok;
}

// Criterion 6: degree spaces are jointly independent across the window, the
// bracket spread is zero for single in/out configurations over |k|,|l| <= 3,
// and multipoint spreads are measured and reported.
bool criterion6(const std::string& configs, std::string& detail) {
    std::ostringstream report;
    bool all_ok = true;
    for (const char* name : {"cfg111", "cfg112", "cfg211", "cfg121"}) {
        const RunConfig cfg = load_config(configs + "/" + name + std::string(".json"));
        GradedModel model(cfg.surface, cfg.grading);
        const bool small =
            cfg.surface.in_points.size() == 1 && cfg.surface.out_points.size() == 1;

        const auto js = model.joint_span(-3, 3);
        if (!js.independent) all_ok = false;

        int max_spread = 0, escaped = 0;
        const int range = small ? 3 : 1;
        for (int k = -range; k <= range; ++k)
            for (int l = k; l <= range; ++l) {
                const auto c = model.grading_check(k, l, 4);
                max_spread = std::max(max_spread, c.spread);
                escaped += c.escaped;
                if (!c.round_trip) all_ok = false;
            }
        if (small && (max_spread != 0 || escaped != 0)) all_ok = false;

        report << (report.str().empty() ? "" : ", ") << name << " rank " << js.rank << "/"
               << js.dim_sum << " spread " << max_spread;
        if (escaped > 0) report << " escaped " << escaped;
    }
    detail = report.str();
    return all_ok;
}

// Criterion 7: res tr(L dL') = 2(k1 + k2) of [L, L'], with every order below
// the residue vanishing and the two coefficient traces behind that vanishing
// checked on their own.
bool criterion7(std::string& detail) {
    int ok = 0, n = 0;
    for (const TyurinDatum& d : generic_data()) {
        const auto basis = admissible_jet_basis(d, 3);
        Rng rng(31);
        for (int t = 0; t < 10; ++t) {
            ++n;
            const MatrixJet x = random_admissible(basis, rng);
            const MatrixJet y = random_admissible(basis, rng);
            if (residue_trace_LdL(x, y, d).pass()) ++ok;
        }
    }
    detail = std::to_string(ok) + "/" + std::to_string(n) +
             " pairs: residue equals the prediction and the sub-orders vanish";
    return ok == n;
}

// Criterion 8: res tr(L w) = 2(k1 + k2) of L for the constructed 1-form.
bool criterion8(const std::string& configs, std::string& detail) {
    int ok = 0, n = 0;
    for (const char* name : {"cfg111", "cfg112"}) {
        const RunConfig cfg = load_config(configs + "/" + name + std::string(".json"));
        const OmegaForm om = build_omega(cfg.surface);
        for (const TyurinDatum& d : cfg.surface.marked) {
            const MatrixJet local = expand_at(om.w, SpherePoint::finite(d.gamma), -1, 1);
            const auto basis = admissible_jet_basis(d, 3);
            Rng rng(37);
            const int rounds = cfg.surface.marked.size() == 1 ? 18 : 16;
            for (int t = 0; t < rounds; ++t) {
                ++n;
                const MatrixJet x = random_admissible(basis, rng);
                if (residue_trace_Lomega(x, local, d).pass()) ++ok;
            }
        }
    }
    detail = std::to_string(ok) + "/" + std::to_string(n) +
             " jets: residue against the form equals the prediction";
    return ok == n;
}

// Criterion 9: the corrected pairing. Holomorphy at every marked point is
// certified inside each evaluation; antisymmetry, bilinearity, and the
// two-cocycle identity hold on random triples; an exhaustive basis sweep over
// |degree| <= 4 finds no nonzero value outside the locality window.
bool criterion9(const std::string& configs, std::string& detail) {
    const RunConfig cfg = load_config(configs + "/cfg111.json");
    const SurfaceSpec& s = cfg.surface;
    const OmegaForm om = build_omega(s);
    GradedModel model(s, cfg.grading);

    int bad_algebra = 0;
    Rng rng(41);
    const auto& bm = model.basis(-1).elements;
    const auto& b0 = model.basis(0).elements;
    const auto& bp = model.basis(1).elements;
    for (int t = 0; t < 20; ++t) {
        const GlobalElement& x = bm[std::size_t(rng.next_long(0, long(bm.size()) - 1))];
        const GlobalElement& x2 = bm[std::size_t(rng.next_long(0, long(bm.size()) - 1))];
        const GlobalElement& y = bp[std::size_t(rng.next_long(0, long(bp.size()) - 1))];
        const GlobalElement& z = b0[std::size_t(rng.next_long(0, long(b0.size()) - 1))];
        const Rat c = rng.rat();

        // certify=true: each evaluation first proves the integrand has no
        // negative order at any marked point.
        try {
            if (cocycle_value(s, om, x, y) != -cocycle_value(s, om, y, x)) ++bad_algebra;
            GlobalElement sum = x;
            for (std::size_t d = 0; d < sum.num.size(); ++d)
                sum.num[d] = sum.num[d] + c * x2.num[d];
            normalize_element(sum);
            if (cocycle_value(s, om, sum, y) !=
                cocycle_value(s, om, x, y) + c * cocycle_value(s, om, x2, y))
                ++bad_algebra;
            if (cocycle_value(s, om, global_bracket(x, y), z) +
                    cocycle_value(s, om, global_bracket(y, z), x) +
                    cocycle_value(s, om, global_bracket(z, x), y) !=
                0)
                ++bad_algebra;
        } catch (const HolomorphyViolation&) {
            ++bad_algebra;
        }
    }

    const auto [wlo, whi] = locality_window(s, cfg.grading, om);
    int outside_nonzero = 0, inside_nonzero = 0;
    for (int k = -4; k <= 4; ++k)
        for (int l = -4; l <= 4; ++l) {
            const auto& bk = model.basis(k).elements;
            const auto& bl = model.basis(l).elements;
            for (std::size_t i = 0; i < bk.size(); ++i)
                for (std::size_t j = 0; j < bl.size(); ++j) {
                    if (cocycle_value(s, om, bk[i], bl[j], false) == 0) continue;
                    if (k + l < wlo || k + l > whi)
                        ++outside_nonzero;
                    else
                        ++inside_nonzero;
                }
        }

    std::ostringstream report;
    report << "20 triples antisymmetric/bilinear/cyclic (" << bad_algebra
           << " bad), window [" << wlo << "," << whi << "], sweep |degree|<=4: "
           << outside_nonzero << " nonzero outside, " << inside_nonzero << " inside";
    detail = report.str();
    // A pairing that vanished everywhere would also "pass" a locality sweep;
    // insist it is visibly nonzero inside the window.
    return bad_algebra == 0 && outside_nonzero == 0 && inside_nonzero > 0;
}

// Criterion 10: the CLI is deterministic: two verify runs on the same
// configuration agree byte for byte once the timestamp line is removed.
bool criterion10(const std::string& cli, const std::string& configs, std::string& detail) {
    if (cli.empty()) {
        detail = "needs --cli pointing at the built binary";
        return false;
    }
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    const std::string r1 = (dir / "laxg2_det_1.json").string();
    const std::string r2 = (dir / "laxg2_det_2.json").string();

    const std::string base = cli + " verify --config " + configs +
                             "/cfg112.json --seed 9 --trials 10 --out ";
    const int e1 = std::system((base + r1).c_str());
    const int e2 = std::system((base + r2).c_str());

    const auto strip = [](const std::string& path) {
        std::ifstream in(path);
        std::ostringstream out;
        std::string line;
        while (std::getline(in, line))
            if (line.find("generated_at") == std::string::npos) out << line << "\n";
        return out.str();
    };
    const std::string a = strip(r1), b = strip(r2);
    const bool ok = e1 == 0 && e2 == 0 && !a.empty() && a == b;
    detail = "two runs, exit " + std::to_string(e1) + "/" + std::to_string(e2) + ", " +
             (a == b ? "identical" : "different") + " reports modulo timestamp";
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    Args args;
    try {
        args = parse_args(argc, argv);
    } catch (const Error& e) {
        std::cerr << "usage: acceptance_suite --criterion N --cli PATH --configs DIR\n"
                  << e.what() << "\n";
        return 2;
    }

    static const char* kDescriptions[10] = {
        "closed-form bracket closes and matches the 7x7 commutator",
        "marked-point conditions count (8, 13, 6, 1), total 28",
        "admissible jet spaces have dimension 14(T+3) - 28",
        "commutators of admissible jets are admissible with the predicted scale",
        "graded pieces have the generic dimension 14 N",
        "degree spaces are independent and brackets respect degree",
        "res tr(L dL') equals twice the eigenvalue sum of the commutator",
        "res tr(L w) equals twice the eigenvalue sum",
        "corrected pairing is a local two-cocycle",
        "verification runs are deterministic",
    };

    bool ok = false;
    std::string detail;
    try {
        switch (args.criterion) {
        case 1: ok = criterion1(detail); break;
        case 2: ok = criterion2(detail); break;
        case 3: ok = criterion3(detail); break;
        case 4: ok = criterion4(detail); break;
        case 5: ok = criterion5(args.configs, detail); break;
        case 6: ok = criterion6(args.configs, detail); break;
        case 7: ok = criterion7(detail); break;
        case 8: ok = criterion8(args.configs, detail); break;
        case 9: ok = criterion9(args.configs, detail); break;
        case 10: ok = criterion10(args.cli, args.configs, detail); break;
        }
    } catch (const Error& e) {
        ok = false;
        detail = std::string("aborted: ") + e.what();
    }

    std::cout << "criterion " << args.criterion << ": " << (ok ? "PASS" : "FAIL") << " - "
              << kDescriptions[args.criterion - 1] << " (" << detail << ")\n";
    return ok ? 0 : 1;
}
