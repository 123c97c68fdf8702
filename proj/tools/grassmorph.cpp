#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "grassmorph/classify.hpp"
#include "grassmorph/morphisms.hpp"
#include "grassmorph/report.hpp"

using namespace grassmorph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct GlobalOpts {
    std::uint64_t seed = 0;
    long long budget = 1000000;
    std::string format = "human";
    std::vector<std::uint64_t> primes = {31, 101};
};

void emit(const GlobalOpts& g, const Json& payload, const std::string& human) {
    if (g.format == "json") {
        Json out;
        out["seed"] = g.seed;
        out["report"] = payload;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << human;
    }
}

std::string render_verdict(long long q2, long long s2, const ClassVerdict& v) {
    std::ostringstream os;
    os << "(" << q2 << ", " << s2 << "): " << status_name(v.status) << " [" << v.reason << "]";
    if (v.witness) os << " witness " << v.witness->str();
    os << "\n";
    return os.str();
}

int cmd_classify(const GlobalOpts& g, long long q2, long long s2, int table_c) {
    if (table_c > 0) {
        auto rows = classification_table(table_c);
        if (g.format == "json") {
            emit(g, table_json(rows), "");
        } else {
            std::ostringstream os;
            for (const auto& row : rows) {
                os << "c = " << row.c << ": realizable " << row.count(Status::Realizable)
                   << ", not realizable " << row.count(Status::NotRealizable) << ", unknown "
                   << row.count(Status::Unknown);
                auto unknowns = row.with_status(Status::Unknown);
                if (!unknowns.empty()) {
                    os << " (q2:";
                    for (long long q : unknowns) os << " " << q;
                    os << ")";
                }
                os << "\n";
                for (std::size_t q = 0; q < row.verdicts.size(); ++q)
                    os << "  " << render_verdict(static_cast<long long>(q),
                                                 static_cast<long long>(row.c) * row.c - static_cast<long long>(q),
                                                 row.verdicts[q]);
            }
            emit(g, Json(), os.str());
        }
        return kExitOk;
    }
    ClassVerdict v = realizability(q2, s2);
    emit(g, to_json(v), render_verdict(q2, s2, v));
    return kExitOk;
}

int cmd_construct(const GlobalOpts& g, int a, int b) {
    SplitSurjection s = example_split(a, b);
    SurjectivityReport surj = is_surjective(s, g.seed);
    Json out;
    Json matrix = Json::array();
    for (std::size_t i = 0; i < 2; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < 4; ++j) row.push_back(to_json(s.m[i][j]));
        matrix.push_back(row);
    }
    out["degrees"] = Json::array({a, b});
    out["matrix"] = matrix;
    out["surjectivity"] = to_json(surj);
    Json minors = Json::array();
    for (const auto& f : pluecker_polys(s)) minors.push_back(to_json(f));
    out["pluecker_polys"] = minors;

    std::ostringstream human;
    human << "split surjection O(" << a << ") (+) O(" << b << ")\n";
    human << "surjective: " << (surj.surjective ? "yes" : "no") << "\n";

    if (surj.surjective) {
        ClassResult cls = cohomology_class(s, g.seed);
        out["class"] = to_json(cls);
        human << "class: (" << cls.cls.q2 << ", " << cls.cls.s2 << ")\n";
        ClassVerdict verdict = realizability(cls.cls.q2, cls.cls.s2);
        out["classify"] = to_json(verdict);
        human << render_verdict(cls.cls.q2, cls.cls.s2, verdict);
    }
    emit(g, out, human.str());
    return kExitOk;
}

int cmd_cb_check(const GlobalOpts& g, const std::string& file, int d) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "cannot open points file: " << file << "\n";
        return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    PointConfig z = make_point_config(parse_points_json(buf.str()));
    CbReport rep = cb_check(z, d);
    std::ostringstream human;
    human << z.points.size() << " points, twist " << d << ": CB "
          << (rep.holds ? "holds" : "fails") << "\n";
    if (!rep.holds) {
        human << "failing point index " << *rep.failing_point << " "
              << z.points[*rep.failing_point].str() << "\n";
        human << "certificate: " << rep.certificate->str() << "\n";
    }
    emit(g, to_json(rep, z, d), human.str());
    return kExitOk;
}

int cmd_scan(const GlobalOpts& g, int a, int b, std::uint64_t p, long long sample) {
    ScanMode mode;
    if (sample > 0) {
        mode.full = false;
        mode.sample_size = sample;
        mode.seed = g.seed;
    }
    CollisionReport rep = collision_scan(example_split(a, b), p, mode);
    std::ostringstream human;
    human << "scan (" << a << "," << b << ") over F_" << p << " [finite-field evidence]\n";
    if (rep.coprime_warning) human << "warning: gcd(a,b) != 1, birationality hypothesis violated\n";
    human << "points " << rep.points_scanned << ", rank-2 " << rep.rank2_points << ", images "
          << rep.distinct_images << "\n";
    for (const auto& [size, count] : rep.fiber_histogram)
        human << "  fiber size " << size <<": " << count << " images\n";
    emit(g, to_json(rep), human.str());
    return kExitOk;
}

int cmd_genpoints(const GlobalOpts& g, int ell, int t, int c, bool strict_three) {
    PointConfig z = gen_position_points(ell, t, c, g.seed, strict_three, g.budget);
    PositionReport pos = verify_position(z, t, c, strict_three, g.budget);
    Json out;
    out["points"] = Json::parse(points_to_json(z));
    out["position"] = to_json(pos);
    emit(g, out, points_to_json(z) + "\n");
    return kExitOk;
}

struct PaperCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<PaperCheck> run_paper_checks(std::uint64_t seed);

int cmd_verify_paper(const GlobalOpts& g) {
    auto checks = run_paper_checks(g.seed);
    bool all = true;
    Json arr = Json::array();
    std::ostringstream human;
    for (const auto& c : checks) {
        all = all && c.pass;
        human << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) human << " — " << c.detail;
        human << "\n";
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        arr.push_back(e);
    }
    human << (all ? "all checks passed\n" : "FAILURES present\n");
    emit(g, arr, human.str());
    return all ? kExitOk : kExitVerificationFailure;
}

std::vector<PaperCheck> run_paper_checks(std::uint64_t seed) {
    std::vector<PaperCheck> out;
    auto check = [&](const std::string& name, auto&& fn) {
        PaperCheck c;
        c.name = name;
        try {
            c.detail = fn();
            c.pass = true;
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
        }
        out.push_back(c);
    };
    auto expect = [](bool cond, const std::string& msg) {
        if (!cond) throw Error(msg);
    };

    HomPoly X = HomPoly::variable(kVarX), Y = HomPoly::variable(kVarY), Z = HomPoly::variable(kVarZ);

    check("veronese-minors-basis", [&] {
        auto q = pluecker_polys(example_split(1, 1));
        std::vector<HomPoly> paper = {X * X - Y * Z, X * Y - Z * Z, Y * Y - X * Z, X * Z, X * X, X * Y};
        for (const auto& pq : paper) {
            bool found = false;
            for (const auto& mine : q) found = found || (pq == mine || pq == -mine);
            expect(found, "missing quadric " + pq.str());
        }
        auto monos = monomials(2);
        QMatrix coeffs(6, monos.size());
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < monos.size(); ++j) coeffs.at(i, j) = q[i].coeff(monos[j]);
        expect(rank(coeffs) == 6, "quadrics do not span");
        return std::string("six minors match the quadric basis up to sign; rank 6");
    });

    check("split-surjectivity", [&] {
        for (auto [a, b] : {std::pair<int, int>{1, 1}, {1, 2}, {2, 3}})
            expect(is_surjective(example_split(a, b), seed).surjective,
                   "matrix (" + std::to_string(a) + "," + std::to_string(b) + ") not surjective");
        return std::string("(1,1), (1,2), (2,3) all define morphisms");
    });

    check("class-veronese-(1,3)", [&] {
        ClassResult r = cohomology_class(example_split(1, 1), seed);
        expect(r.cls == CohomClass{1, 3}, "class is not (1,3)");
        expect(dual_class(r.cls) == CohomClass{3, 1}, "dual is not (3,1)");
        return std::string("class (1,3), dual (3,1)");
    });

    check("class-split-products", [&] {
        for (auto [a, b] : {std::pair<int, int>{1, 2}, {2, 2}, {2, 3}}) {
            ClassResult r = cohomology_class(example_split(a, b), seed);
            long long ab = static_cast<long long>(a) * b;
            long long cc = static_cast<long long>(a + b) * (a + b);
            expect(r.cls.q2 == ab && r.cls.s2 == cc - ab,
                   "class of (" + std::to_string(a) + "," + std::to_string(b) + ") wrong");
        }
        return std::string("(2,7), (4,12), (6,19) by independent counting");
    });

    check("nonexist-(1,15)", [&] {
        expect(realizability(1, 15).status == Status::NotRealizable, "should be NotRealizable");
        return std::string("NotRealizable [lemma-re1]");
    });

    check("cb-three-collinear", [&] {
        PointConfig z = make_point_config({ProjPoint(Rational(0), Rational(0), Rational(1)),
                                           ProjPoint(Rational(1), Rational(1), Rational(1)),
                                           ProjPoint(Rational(2), Rational(2), Rational(1))});
        expect(cb_check(z, 1).holds, "CB fails for three collinear points");
        return std::string("three collinear points satisfy CB at d=1");
    });

    check("cb-single-point-fails", [&] {
        PointConfig z = make_point_config({ProjPoint(Rational(2), Rational(3), Rational(1))});
        CbReport rep = cb_check(z, 1);
        expect(!rep.holds, "CB should fail for one point");
        expect(rep.certificate.has_value() && rep.certificate->eval(z.points[0]) != 0,
               "certificate missing");
        return std::string("single point fails with a line certificate");
    });

    check("cb-short-schemes-fail", [&] {
        Rng rng = Rng(seed).fork("paper-cb");
        for (int c : {4, 5, 6})
            for (int trial = 0; trial < 5; ++trial) {
                int ell = static_cast<int>(rng.next_int(1, c - 2));
                PointConfig z = gen_position_points(ell, 1, c, rng.next_u64());
                expect(!cb_check(z, c - 3).holds, "length <= c-2 must fail CB at d = c-3");
            }
        return std::string("length <= c-2 schemes fail CB at d = c-3 for c in {4,5,6}");
    });

    check("exist-0-self-maps", [&] {
        for (int c = 1; c <= 6; ++c) {
            expect(realizability(0, static_cast<long long>(c) * c).status == Status::Realizable,
                   "(0, c^2) must be realizable");
            expect(realizability(static_cast<long long>(c) * c, 0).status == Status::Realizable,
                   "(c^2, 0) must be realizable");
        }
        return std::string("(0, c^2) and (c^2, 0) realizable for c <= 6");
    });

    check("exist-1-small-degrees", [&] {
        auto rows = classification_table(3);
        for (const auto& row : rows)
            expect(row.count(Status::Realizable) == static_cast<long long>(row.c) * row.c + 1,
                   "c <= 3 must be fully realizable");
        return std::string("all classes realizable for c <= 3");
    });

    check("exist-2-nonexist-c4", [&] {
        auto rows = classification_table(4);
        expect(rows[3].count(Status::Unknown) == 0, "c = 4 has no unknowns");
        expect(rows[3].with_status(Status::NotRealizable) == std::vector<long long>{1, 2, 14, 15},
               "c = 4 nonexistence set wrong");
        return std::string("c = 4: {1,2,14,15} excluded, the rest realizable");
    });

    check("exist-3-intervals-le22", [&] {
        auto interval_rows = classification_table(6, false);
        expect(interval_rows[4].with_status(Status::Unknown) == std::vector<long long>{6, 19},
               "interval logic for c = 5 wrong");
        expect(interval_rows[5].with_status(Status::Unknown) ==
                   std::vector<long long>{7, 8, 9, 10, 26, 27, 28, 29},
               "interval logic for c = 6 wrong");
        auto full_rows = classification_table(6);
        expect(full_rows[4].count(Status::Unknown) == 0, "split pass must close c = 5");
        ClassVerdict v = realizability(6, 19);
        expect(v.witness && v.witness->str() == "Split(2,3)", "witness for (6,19) wrong");
        ClassVerdict vd = realizability(19, 6);
        expect(vd.witness && vd.witness->str() == "Dual(Split(2,3))", "witness for (19,6) wrong");
        return std::string("intervals leave {6,19} open at c = 5; the split pass closes both");
    });

    check("embedded-classes", [&] {
        auto e = embedded_classes();
        expect(e == std::set<std::pair<long long, long long>>{{1, 0}, {0, 1}, {1, 3}, {3, 1}},
               "embedded class list wrong");
        return std::string("{(1,0), (0,1), (1,3), (3,1)}");
    });

    check("tangent-class-(3,6)", [&] {
        TangentSurjection t = tangent_random(seed);
        expect(tangent_section_rank(t) == 5, "sections not independent mod Euler");
        TangentClassResult r = tangent_class(t, seed);
        expect(r.cls == CohomClass{3, 6}, "tangent class is not (3,6)");
        bool split = false;
        for (int a = 0; a <= 3; ++a)
            if (a * (3 - a) == 3) split = true;
        expect(!split, "(3,6) must not be a split class");
        return std::string("random tangent surjection has class (3,6); not split");
    });

    check("scan-injectivity-evidence", [&] {
        for (auto [a, b] : {std::pair<int, int>{1, 1}, {1, 2}}) {
            CollisionReport rep = collision_scan(example_split(a, b), 31, ScanMode{});
            expect(rep.fiber_histogram.size() == 1 && rep.fiber_histogram.count(1) == 1,
                   "fibers of size > 1 found");
        }
        return std::string("(1,1) and (1,2) have all fibers of size 1 over F_31");
    });

    check("dual-swap", [&] {
        expect(dual_class(CohomClass{1, 3}) == CohomClass{3, 1}, "dual swap wrong");
        for (long long q2 = 0; q2 <= 16; ++q2)
            expect(realizability(q2, 16 - q2).status == realizability(16 - q2, q2).status,
                   "realizability not symmetric");
        return std::string("dual morphism swaps the class components");
    });

    check("trivial-plane-classes", [&] {
        expect(realizability(0, 1).status == Status::Realizable, "(0,1) must be realizable");
        expect(realizability(1, 0).status == Status::Realizable, "(1,0) must be realizable");
        return std::string("(0,1) and (1,0) realizable as plane inclusions");
    });

    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"morphisms from the projective plane to Gr(2,C^4): construction, verification, classification"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for every pseudo-random choice (default 0)");
    app.add_option("--budget", g.budget, "subset enumeration budget");
    app.add_option("--format", g.format, "output format: human | json")
        ->check(CLI::IsMember({"human", "json"}));
    app.add_option("--prime", g.primes, "scan primes");

    auto* classify_cmd = app.add_subcommand("classify", "decide whether a class (q2, s2) is represented");
    long long q2 = 0, s2 = 0;
    int table_c = 0;
    auto* q2_opt = classify_cmd->add_option("q2", q2, "coefficient of c2(Q)");
    auto* s2_opt = classify_cmd->add_option("s2", s2, "coefficient of c2(S)");
    classify_cmd->add_option("--table", table_c, "emit the full table for c = 1..c_max");
    classify_cmd->callback([&] {
        if (table_c == 0 && (!*q2_opt || !*s2_opt))
            throw CLI::ValidationError("classify", "need q2 and s2, or --table c_max");
    });

    auto* construct_cmd = app.add_subcommand("construct", "build and verify the split surjection for (a, b)");
    int ca = 1, cb = 1;
    construct_cmd->add_option("a", ca, "row-0 degree")->required();
    construct_cmd->add_option("b", cb, "row-1 degree")->required();

    auto* cbcheck_cmd = app.add_subcommand("cb-check", "Cayley-Bacharach test for a points file");
    std::string points_file;
    int twist = 1;
    cbcheck_cmd->add_option("points", points_file, "JSON points file")->required();
    cbcheck_cmd->add_option("d", twist, "twist degree")->required();

    auto* scan_cmd = app.add_subcommand("scan", "finite-field fiber scan of the (a, b) morphism");
    int sa = 1, sb = 1;
    std::uint64_t sp = 31;
    long long sample = 0;
    scan_cmd->add_option("a", sa)->required();
    scan_cmd->add_option("b", sb)->required();
    scan_cmd->add_option("p", sp)->required();
    scan_cmd->add_option("--sample", sample, "sample size (default: full enumeration)");

    auto* gen_cmd = app.add_subcommand("genpoints", "generate a general-position point configuration");
    int gell = 1, gt = 1, gc = 4;
    bool strict_three = false;
    gen_cmd->add_option("ell", gell)->required();
    gen_cmd->add_option("t", gt)->required();
    gen_cmd->add_option("c", gc)->required();
    gen_cmd->add_flag("--strict-three", strict_three, "forbid any three collinear points");

    auto* verify_cmd = app.add_subcommand("verify-paper", "run the full example regression suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*classify_cmd) return cmd_classify(g, q2, s2, table_c);
        if (*construct_cmd) return cmd_construct(g, ca, cb);
        if (*cbcheck_cmd) return cmd_cb_check(g, points_file, twist);
        if (*scan_cmd) return cmd_scan(g, sa, sb, sp, sample);
        if (*gen_cmd) return cmd_genpoints(g, gell, gt, gc, strict_three);
        if (*verify_cmd) return cmd_verify_paper(g);
    } catch (const Inconclusive& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const BadPrime& e) {
        std::cerr << "bad prime: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
