// Acceptance suite: one line per criterion, exact arithmetic throughout.
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "tightmaps/classify.hpp"

using namespace tightmaps;

namespace {

int g_failed = 0;

void criterion(int n, const std::string& desc, const std::function<void(std::vector<std::string>&)>& body) {
    std::vector<std::string> problems;
    try {
        body(problems);
    } catch (const std::exception& e) {
        problems.push_back(std::string("exception: ") + e.what());
    }
    if (problems.empty()) {
        std::cout << "criterion " << n << ": PASS  " << desc << "\n";
    } else {
        ++g_failed;
        std::cout << "criterion " << n << ": FAIL  " << desc << "\n";
        for (const auto& p : problems) std::cout << "    " << p << "\n";
    }
}

std::string describe(const CatalogInstance& ci) {
    std::string s = format_algebra(ci.ambient) + " " + ci.entry_id;
    for (const auto& [k, v] : ci.params) s += " " + k + "=" + std::to_string(v);
    return s;
}

// Evaluate the curvature criterion afresh for one instance.
bool tight(const RootSystem& rs, const CatalogInstance& ci) {
    return regular_verdict(rs, identify(rs, ci.delta)).tight;
}

void expect_tight(std::vector<std::string>& problems, const RootSystem& rs,
                  const CatalogInstance& ci, bool want) {
    if (tight(rs, ci) != want)
        problems.push_back(describe(ci) + ": expected " + (want ? "Tight" : "NotTight"));
}

} // namespace

int main() {
    criterion(1, "su(p,q) table: su2/su4 tight, su1/su3/su5 not (p+q <= 10)", [](auto& problems) {
        for (int p = 1; p <= 5; ++p)
            for (int q = p; p + q <= 10; ++q) {
                if (p + q < 3) continue;
                AlgebraId id{Family::SU, p, q};
                RootSystem rs = build(id);
                for (const CatalogInstance& ci : maximal_entries(id)) {
                    bool want = ci.entry_id == "su2" || ci.entry_id == "su4";
                    expect_tight(problems, rs, ci, want);
                }
            }
    });

    criterion(2, "so*(2p) table: so1 iff l=floor(p/2); so2 iff p odd or l even; so3 iff p odd",
              [](auto& problems) {
        for (int p = 5; p <= 9; ++p) {
            AlgebraId id{Family::SOSTAR, p, 0};
            RootSystem rs = build(id);
            for (const CatalogInstance& ci : maximal_entries(id)) {
                bool want = false;
                if (ci.entry_id == "so1") want = ci.params.at("l") == p / 2;
                if (ci.entry_id == "so2") want = (p % 2 == 1) || (ci.params.at("l") % 2 == 0);
                if (ci.entry_id == "so3") want = p % 2 == 1;
                expect_tight(problems, rs, ci, want);
            }
        }
    });

    criterion(3, "sp(2p) table: sp1 iff l=p/2 with <gamma_1,gamma_1>=1, <gamma,gamma>=2; sp2 tight",
              [](auto& problems) {
        for (int p = 2; p <= 8; ++p) {
            AlgebraId id{Family::SP, p, 0};
            RootSystem rs = build(id);
            if (rs.inner(rs.highest, rs.highest) != Rational(2))
                problems.push_back(format_algebra(id) + ": <gamma,gamma> != 2");
            for (const CatalogInstance& ci : maximal_entries(id)) {
                bool want = ci.entry_id == "sp2" || 2 * ci.params.at("l") == p;
                expect_tight(problems, rs, ci, want);
                if (ci.entry_id == "sp1") {
                    auto fds = identify(rs, ci.delta);
                    for (const auto& f : fds)
                        if (f.name != "compact" && rs.inner(f.gamma, f.gamma) != Rational(1))
                            problems.push_back(describe(ci) + ": <gamma_1,gamma_1> != 1");
                }
            }
        }
    });

    criterion(4, "so(p,2) tables (5 <= p <= 13): soj1/soj4/soj5, sou1/sou3/sou4/sou5/sou6 tight",
              [](auto& problems) {
        for (int p = 5; p <= 13; ++p) {
            AlgebraId id{p % 2 == 0 ? Family::SO2_EVEN : Family::SO2_ODD, p, 0};
            if (p % 2 == 0 && p < 6) continue;
            RootSystem rs = build(id);
            for (const CatalogInstance& ci : maximal_entries(id)) {
                const std::string& e = ci.entry_id;
                bool want = !(e == "soj2" || e == "soj3" || e == "sou2");
                expect_tight(problems, rs, ci, want);
                if (e == "sou4") {
                    auto fds = identify(rs, ci.delta);
                    if (curvature_ratio(rs, fds[0].gamma) != Rational(2))
                        problems.push_back(describe(ci) + ": c_1 != 2");
                }
            }
        }
    });

    criterion(5, "exceptional tables: every e6 entry tight; e7 entries e4/e5/e6 tight only",
              [](auto& problems) {
        AlgebraId e6{Family::E6, 0, 0};
        RootSystem rs6 = build(e6);
        for (const CatalogInstance& ci : maximal_entries(e6)) expect_tight(problems, rs6, ci, true);
        AlgebraId e7{Family::E7, 0, 0};
        RootSystem rs7 = build(e7);
        for (const CatalogInstance& ci : maximal_entries(e7)) {
            const std::string& e = ci.entry_id;
            bool want = e == "e4" || e == "e5" || e == "e6";
            expect_tight(problems, rs7, ci, want);
        }
    });

    criterion(6, "iota_1/iota_2 matrix tests: value 0 (iota_1, even iota_2), 2p (odd iota_2)",
              [](auto& problems) {
        ModelElement z11 = complex_structure(ModelKind::SU, 1, 1);
        for (int p = 2; p <= 8; ++p) {
            ModelElement lhs = include_in_su(complex_structure(ModelKind::SP, p));
            Rational v = diagd_value(lhs, disc_su(p, p, z11), complex_structure(ModelKind::SU, p, p));
            if (v != Rational(0)) problems.push_back("iota_1 p=" + std::to_string(p));
        }
        for (int p = 3; p <= 9; ++p) {
            ModelElement lhs = p % 2 == 0
                                   ? include_in_su(complex_structure(ModelKind::SOSTAR, p))
                                   : include_in_su(disc_sostar(p, z11));
            Rational v = diagd_value(lhs, disc_su(p, p, z11), complex_structure(ModelKind::SU, p, p));
            Rational want = p % 2 == 0 ? Rational(0) : Rational(2 * p);
            if (v != want) problems.push_back("iota_2 p=" + std::to_string(p) + ": " + v.str());
        }
    });

    criterion(7, "tensor oracle equals the closed form (p <= 7); zero set {1,p} symbolically (p <= 12)",
              [](auto& problems) {
        for (int p = 2; p <= 7; ++p)
            for (int m = 1; m <= p; ++m)
                if (brute_force_pairing(p, m) != su_target_pairing(p, m))
                    problems.push_back("oracle p=" + std::to_string(p) + " m=" + std::to_string(m));
        for (int p = 2; p <= 12; ++p)
            for (int m = 1; m <= p; ++m)
                if ((su_target_pairing(p, m) == 0) != (m == 1 || m == p))
                    problems.push_back("zero set p=" + std::to_string(p) + " m=" + std::to_string(m));
    });

    criterion(8, "so* tensor case: value 0 at p=3, nonzero at p=7 and p=11", [](auto& problems) {
        if (sostar_target_pairing(3) != 0) problems.push_back("p=3");
        if (sostar_target_pairing(7) == 0) problems.push_back("p=7");
        if (sostar_target_pairing(11) == 0) problems.push_back("p=11");
    });

    criterion(9, "catalog integrity: sweep clean; soj5/sou5/sou6 corrections detected",
              [](auto& problems) {
        CatalogReport report = verify_catalog();
        for (const auto& f : report.failures) problems.push_back(f);
        for (const char* id : {"soj5", "sou5", "sou6"}) {
            bool found = false;
            for (const auto& d : report.discrepancies)
                if (d.entry == id) found = true;
            if (!found) problems.push_back(std::string("correction not logged: ") + id);
        }
    });

    criterion(10, "property suites: root counts, Gram PD, certificate bounds, multiplicities, R5=R6",
              [](auto& problems) {
        // root-count table per Cartan type
        struct Case { const char* name; std::size_t count; };
        for (const Case& c : std::initializer_list<Case>{
                 {"su(2,3)", 20}, {"su(4,5)", 72}, {"sp(8)", 32}, {"sp(16)", 128},
                 {"so*(10)", 40}, {"so*(18)", 144}, {"so(10,2)", 60}, {"so(11,2)", 72},
                 {"e6", 72}, {"e7", 126}}) {
            RootSystem rs = build(parse_algebra(c.name));
            if (rs.roots.size() != c.count)
                problems.push_back(std::string(c.name) + ": root count");
            // Gram positive definiteness, witnessed on every root
            for (const Root& r : rs.roots)
                if (!(rs.inner(r, r) > Rational(0)))
                    problems.push_back(std::string(c.name) + ": nonpositive root norm");
        }
        // c_i >= 1 and sum c_i r_i <= r over the full default sweep is enforced
        // inside regular_verdict (it throws on violation), exercised by criterion 9;
        // spot-check the certificate contents here.
        RootSystem sp8 = build(parse_algebra("sp(8)"));
        for (const CatalogInstance& ci : maximal_entries(sp8.algebra)) {
            TightnessCertificate cert = regular_verdict(sp8, identify(sp8, ci.delta));
            for (const Rational& c : cert.ratios)
                if (c < Rational(1)) problems.push_back(describe(ci) + ": ratio below 1");
            if (cert.weighted_sum > Rational(cert.ambient_rank))
                problems.push_back(describe(ci) + ": weighted sum exceeds rank");
        }
        // eigenvalue-multiplicity conservation
        for (int p = 2; p <= 12; ++p)
            for (int m = 1; m <= p; ++m) {
                EigenvalueMultiplicities ev = disc_image_eigenvalues(p, m);
                if (ev.plus + ev.minus + ev.zero != binomial(p + 1, m))
                    problems.push_back("multiplicity p=" + std::to_string(p) +
                                       " m=" + std::to_string(m));
            }
        // cross-method agreement where the symbolic and the matrix tests both apply
        ModelElement z11 = complex_structure(ModelKind::SU, 1, 1);
        for (int p = 3; p <= 9; p += 2) {
            // symbolic route via classify (R6) against the raw matrix value
            Verdict v = classify(MapDescriptor::disc_inclusion(2, p));
            Rational raw = diagd_value(include_in_su(disc_sostar(p, z11)), disc_su(p, p, z11),
                                       complex_structure(ModelKind::SU, p, p));
            if ((v.status == Status::Tight) != (raw == Rational(0)))
                problems.push_back("R5/R6 disagreement iota_2 p=" + std::to_string(p));
        }
        // block inclusion su(1,2)+su(1,1) -> su(2,3) (entry su4, l=1, s=2): tight by
        // the curvature count and with vanishing matrix obstruction
        AlgebraId su23 = parse_algebra("su(2,3)");
        RootSystem rs23 = build(su23);
        CatalogInstance su4 = instantiate(su23, "su4", {{"l", 1}, {"s", 2}});
        bool sym = regular_verdict(rs23, identify(rs23, su4.delta)).tight;
        ModelElement x = su11_element(Rational(1, 2), {Rational(0), Rational(0)});
        ModelElement blk = block_inclusion_su(1, 2, 2, 3, disc_su(1, 2, x), disc_su(1, 1, x));
        Rational mat = diagd_value(blk, disc_su(2, 3, x), complex_structure(ModelKind::SU, 2, 3));
        if (sym != (mat == Rational(0)))
            problems.push_back("R5/R6 disagreement for the su4 block inclusion");
    });

    if (g_failed == 0) {
        std::cout << "all 10 acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failed << " criterion(s) failed\n";
    return 1;
}
