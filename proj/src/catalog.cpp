#include "tightmaps/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace tightmaps {

namespace {

Root al(const RootSystem& rs, int i) { return simple_root(rs, i); }

Root neg(Root r) {
    for (int& x : r) x = -x;
    return r;
}

// alpha_a, alpha_{a+1}, ..., alpha_b (empty when a > b)
std::vector<Root> up(const RootSystem& rs, int a, int b) {
    std::vector<Root> out;
    for (int i = a; i <= b; ++i) out.push_back(al(rs, i));
    return out;
}

// alpha_a, alpha_{a-1}, ..., alpha_b (empty when a < b)
std::vector<Root> down(const RootSystem& rs, int a, int b) {
    std::vector<Root> out;
    for (int i = a; i >= b; --i) out.push_back(al(rs, i));
    return out;
}

std::vector<Root> negate_all(std::vector<Root> v) {
    for (Root& r : v) r = neg(r);
    return v;
}

std::vector<Root> cat(std::initializer_list<std::vector<Root>> parts) {
    std::vector<Root> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// Sum of terms c*alpha_i, given as (c, i) pairs (1-based i).
Root combo(const RootSystem& rs, std::initializer_list<std::pair<int, int>> terms) {
    Root v(rs.rank, 0);
    for (auto [c, i] : terms) v[i - 1] += c;
    return v;
}

std::vector<std::string> canon_list(std::initializer_list<std::string> names) {
    std::vector<std::string> out;
    for (const auto& n : names)
        for (const auto& c : canonical_factors(n)) out.push_back(c);
    return out;
}

void add(std::vector<CatalogInstance>& out, const RootSystem& rs, std::string id,
         std::map<std::string, int> params, std::vector<Root> delta, std::vector<Root> printed,
         std::vector<std::string> claimed, bool tight) {
    CatalogInstance ci;
    ci.entry_id = std::move(id);
    ci.ambient = rs.algebra;
    ci.params = std::move(params);
    ci.delta = std::move(delta);
    ci.printed = std::move(printed);
    ci.claimed = std::move(claimed);
    ci.expected_tight = tight;
    out.push_back(std::move(ci));
}

std::vector<CatalogInstance> su_instances(const RootSystem& rs) {
    int p = rs.algebra.p, q = rs.algebra.q;
    std::vector<CatalogInstance> out;
    // su1: su(l,q), 1 <= l < p. Printed first index is off by one.
    for (int l = 1; l < p; ++l)
        add(out, rs, "su1", {{"l", l}},
            cat({up(rs, p + q - l + 1, p + q - 1), up(rs, 1, q)}),
            cat({up(rs, p + q - l, p + q - 1), up(rs, 1, q)}),
            canon_list({canonical_su(l, q)}), false);
    // su2: su(p,s), p <= s < q (as printed)
    for (int s = p; s < q; ++s)
        add(out, rs, "su2", {{"s", s}},
            cat({up(rs, q + 1, p + q - 1), up(rs, 1, s)}), {},
            canon_list({canonical_su(p, s)}), true);
    // su3: su(s,p), 1 <= s < p (as printed)
    for (int s = 1; s < p; ++s)
        add(out, rs, "su3", {{"s", s}},
            cat({down(rs, s, 1), down(rs, p + q - 1, q + 1)}), {},
            canon_list({canonical_su(s, p)}), false);
    // su4: su(l,s)+su(p-l,q-s). Printed: first chain ends one early, second starts one early.
    for (int l = 1; l <= p; ++l)
        for (int s = l; s <= q; ++s) {
            if (!(p - l >= 1 && q - s >= 1 && p - l <= q - s)) continue;
            auto first = cat({up(rs, p + q - l + 1, p + q - 1), up(rs, 1, s)});
            auto second = cat({negate_all(down(rs, p + q - l - 1, q + 1)),
                               {rs.highest},
                               negate_all(down(rs, q, s + 2))});
            auto first_p = cat({up(rs, p + q - l, p + q - 2), up(rs, 1, s)});
            auto second_p = cat({negate_all(down(rs, p + q - l - 2, q + 1)),
                                 {rs.highest},
                                 negate_all(down(rs, q, s + 2))});
            add(out, rs, "su4", {{"l", l}, {"s", s}}, cat({first, second}),
                cat({first_p, second_p}),
                canon_list({canonical_su(l, s), canonical_su(p - l, q - s)}), true);
        }
    // su5: su(s,l)+su(p-l,q-s), 1 <= s < l < p. Same two corrections as su4.
    for (int s = 1; s < p; ++s)
        for (int l = s + 1; l < p; ++l) {
            if (!(p - l >= 1 && p - l <= q - s)) continue;
            auto first = cat({down(rs, s, 1), down(rs, p + q - 1, p + q - l + 1)});
            auto second = cat({negate_all(down(rs, p + q - l - 1, q + 1)),
                               {rs.highest},
                               negate_all(down(rs, q, s + 2))});
            auto first_p = cat({down(rs, s, 1), down(rs, p + q - 1, p + q - l)});
            auto second_p = cat({negate_all(down(rs, p + q - l - 2, q + 1)),
                                 {rs.highest},
                                 negate_all(down(rs, q, s + 2))});
            add(out, rs, "su5", {{"s", s}, {"l", l}}, cat({first, second}),
                cat({first_p, second_p}),
                canon_list({canonical_su(s, l), canonical_su(p - l, q - s)}), false);
        }
    return out;
}

std::vector<CatalogInstance> sostar_instances(const RootSystem& rs) {
    int p = rs.algebra.p;
    Root beta(rs.rank, 0);
    for (int i = 2; i <= p; ++i) beta[i - 1] = 1;
    std::vector<CatalogInstance> out;
    // so1: su(l,p-l), 1 <= l <= p/2. Printed ranges are shifted by one on both sides.
    for (int l = 1; l <= p / 2; ++l)
        add(out, rs, "so1", {{"l", l}},
            cat({negate_all(up(rs, p - l + 1, p - 1)), {beta}, up(rs, 1, p - l - 1)}),
            cat({negate_all(up(rs, p - l + 2, p - 1)), {beta}, up(rs, 1, p - l)}),
            canon_list({canonical_su(l, p - l)}), l == p / 2);
    // so2: so*(2l)+so*(2(p-l)), p/2 <= l <= p-2 (as printed)
    for (int l = p / 2; l <= p - 2; ++l) {
        auto first = cat({up(rs, 1, l - 1), {al(rs, p)}});
        auto second = cat({{rs.highest}, negate_all(down(rs, p - 2, l + 1)), {neg(al(rs, p - 1))}});
        bool tight = (p % 2 == 1) || (l % 2 == 0);
        add(out, rs, "so2", {{"l", l}}, cat({first, second}), {},
            canon_list({"so*(" + std::to_string(2 * l) + ")",
                        "so*(" + std::to_string(2 * (p - l)) + ")"}),
            tight);
    }
    // so3: so*(2(p-1)) (as printed)
    add(out, rs, "so3", {}, cat({up(rs, 1, p - 2), {al(rs, p)}}), {},
        canon_list({"so*(" + std::to_string(2 * (p - 1)) + ")"}), p % 2 == 1);
    return out;
}

std::vector<CatalogInstance> sp_instances(const RootSystem& rs) {
    int p = rs.algebra.p;
    Root beta(rs.rank, 0);
    for (int i = 2; i <= p; ++i) beta[i - 1] = 1;
    Root a12 = combo(rs, {{1, 1}, {1, 2}});
    std::vector<CatalogInstance> out;
    // sp1: su(l,p-l), 1 <= l <= p/2.
    // For l=1 the printed set carries an extra root beta that breaks condition (i).
    for (int l = 1; l <= p / 2; ++l) {
        std::vector<Root> delta, printed;
        if (l == 1) {
            delta = cat({{a12}, up(rs, 3, p)});
            printed = cat({{beta}, {a12}, up(rs, 3, p)});
        } else {
            delta = cat({negate_all(up(rs, p - l + 3, p)), {beta}, {a12}, up(rs, 3, p - l + 1)});
        }
        add(out, rs, "sp1", {{"l", l}}, delta, printed, canon_list({canonical_su(l, p - l)}),
            2 * l == p);
    }
    // sp2: sp(2l)+sp(2(p-l)), p/2 <= l <= p-1 (as printed)
    for (int l = p / 2; l <= p - 1; ++l)
        add(out, rs, "sp2", {{"l", l}},
            cat({up(rs, 1, l), {rs.highest}, negate_all(down(rs, p, l + 2))}), {},
            canon_list({"sp(" + std::to_string(2 * l) + ")",
                        "sp(" + std::to_string(2 * (p - l)) + ")"}),
            true);
    return out;
}

std::vector<CatalogInstance> so_even_instances(const RootSystem& rs) {
    int p = rs.algebra.p, k = (p + 2) / 2;
    Root b1(rs.rank, 0);
    b1[1] = 1;
    for (int i = 3; i <= k - 2; ++i) b1[i - 1] = 2;
    b1[k - 2] += 1;
    b1[k - 1] += 1;
    Root b2 = combo(rs, {{1, k - 2}, {1, k - 1}, {1, k}});
    std::vector<CatalogInstance> out;
    add(out, rs, "soj1", {}, {al(rs, 1), rs.highest}, {}, {"su(1,1)", "su(1,1)"}, true);
    for (int l = 2; l <= k - 1; ++l)
        add(out, rs, "soj2", {{"l", l}}, up(rs, 1, l), {}, {canonical_su(1, l)}, false);
    add(out, rs, "soj3", {}, cat({up(rs, 1, k - 2), {al(rs, k)}}), {},
        {canonical_su(1, k - 1)}, false);
    add(out, rs, "soj4", {}, {b1, al(rs, 1), al(rs, 2)}, {}, {"su(2,2)"}, true);
    // soj5: printed {alpha_2..alpha_{k-1}, beta_2}; corrected {alpha_1..alpha_{k-2}, beta_2}
    add(out, rs, "soj5", {}, cat({up(rs, 1, k - 2), {b2}}), cat({up(rs, 2, k - 1), {b2}}),
        canon_list({"so(" + std::to_string(p - 2) + ",2)"}), true);
    return out;
}

std::vector<CatalogInstance> so_odd_instances(const RootSystem& rs) {
    int p = rs.algebra.p, k = (p + 1) / 2;
    Root b1(rs.rank, 0);
    b1[1] = 1;
    for (int i = 3; i <= k; ++i) b1[i - 1] = 2;
    Root b2 = combo(rs, {{1, k - 1}, {2, k}});
    Root b3 = combo(rs, {{1, k - 1}, {1, k}});
    Root b4(rs.rank, 1);
    std::vector<CatalogInstance> out;
    add(out, rs, "sou1", {}, {al(rs, 1), rs.highest}, {}, {"su(1,1)", "su(1,1)"}, true);
    for (int l = 2; l <= k - 2; ++l)
        add(out, rs, "sou2", {{"l", l}}, up(rs, 1, l), {}, {canonical_su(1, l)}, false);
    add(out, rs, "sou3", {}, {b1, al(rs, 1), al(rs, 2)}, {}, {"su(2,2)"}, true);
    add(out, rs, "sou4", {}, {b4}, {}, {"su(1,1)"}, true);
    // sou5: printed {alpha_2..alpha_{k-1}, beta_2}; corrected {alpha_1..alpha_{k-1}, beta_2}
    add(out, rs, "sou5", {}, cat({up(rs, 1, k - 1), {b2}}), cat({up(rs, 2, k - 1), {b2}}),
        canon_list({"so(" + std::to_string(p - 1) + ",2)"}), true);
    // sou6: printed {alpha_2..alpha_{k-1}, beta_3}; corrected {alpha_1..alpha_{k-2}, beta_3}
    add(out, rs, "sou6", {}, cat({up(rs, 1, k - 2), {b3}}), cat({up(rs, 2, k - 1), {b3}}),
        canon_list({"so(" + std::to_string(p - 2) + ",2)"}), true);
    return out;
}

std::vector<CatalogInstance> e6_instances(const RootSystem& rs) {
    Root b1 = combo(rs, {{1, 2}, {2, 3}, {2, 4}, {1, 5}, {1, 6}});
    Root b2 = combo(rs, {{1, 3}, {1, 4}, {1, 5}, {1, 6}});
    std::vector<CatalogInstance> out;
    add(out, rs, "e6a", {}, cat({up(rs, 1, 5), {rs.highest}}), {}, {"su(1,5)", "su(1,1)"}, true);
    add(out, rs, "e6b", {}, {al(rs, 1), al(rs, 2), rs.highest, neg(al(rs, 6))}, {},
        {"su(1,2)", "su(1,2)"}, true);
    add(out, rs, "e6c", {}, {b1, al(rs, 1), al(rs, 2), al(rs, 3), al(rs, 6)}, {}, {"su(2,4)"}, true);
    add(out, rs, "e6d", {}, {al(rs, 1), al(rs, 2), al(rs, 3), al(rs, 4), b2}, {}, {"so*(10)"}, true);
    add(out, rs, "e6e", {}, {al(rs, 1), al(rs, 2), al(rs, 3), al(rs, 4), al(rs, 6)}, {},
        {"so(8,2)"}, true);
    return out;
}

std::vector<CatalogInstance> e7_instances(const RootSystem& rs) {
    // The printed beta_1 (alpha_2+2alpha_3+2alpha_5+alpha_6+2alpha_7) is not a root;
    // the corrected form restores the dropped 3alpha_4 term.
    Root b1c = combo(rs, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {1, 6}, {2, 7}});
    Root b1p = combo(rs, {{1, 2}, {2, 3}, {2, 5}, {1, 6}, {2, 7}});
    Root b2 = combo(rs, {{1, 3}, {2, 4}, {2, 5}, {1, 6}, {1, 7}});
    Root b3p = combo(rs, {{1, 4}, {1, 5}, {1, 6}, {1, 7}});
    // The printed e6(-14) generator set cannot form an E6 diagram at all; the
    // corrected set replaces beta_3 by alpha_1+alpha_2 and re-anchors the chain.
    Root b3c = combo(rs, {{1, 1}, {1, 2}});
    std::vector<CatalogInstance> out;
    add(out, rs, "e1", {},
        {al(rs, 1), al(rs, 2), al(rs, 3), al(rs, 4), al(rs, 7), rs.highest, neg(al(rs, 6))}, {},
        {"su(1,5)", "su(1,2)"}, false);
    add(out, rs, "e2", {},
        {al(rs, 1), al(rs, 2), al(rs, 3), rs.highest, neg(al(rs, 6)), neg(al(rs, 5))}, {},
        {"su(1,3)", "su(1,3)"}, false);
    add(out, rs, "e3", {}, cat({{b1c}, up(rs, 1, 6)}), cat({{b1p}, up(rs, 1, 6)}),
        {"su(2,6)"}, false);
    add(out, rs, "e4", {}, {neg(al(rs, 7)), b1c, al(rs, 1), al(rs, 2), al(rs, 3)},
        {neg(al(rs, 7)), b1p, al(rs, 1), al(rs, 2), al(rs, 3)}, {"su(3,3)"}, true);
    add(out, rs, "e5", {}, {al(rs, 1), al(rs, 2), al(rs, 3), al(rs, 4), al(rs, 7), b2}, {},
        {"so*(12)"}, true);
    add(out, rs, "e6", {},
        cat({up(rs, 1, 5), {al(rs, 7)}, {rs.highest}}), {}, {"so(10,2)", "su(1,1)"}, true);
    add(out, rs, "e7", {}, {b3c, al(rs, 3), al(rs, 4), al(rs, 5), al(rs, 6), al(rs, 7)},
        {b3p, al(rs, 2), al(rs, 3), al(rs, 4), al(rs, 5), al(rs, 6)}, {"e6"}, false);
    return out;
}

const std::map<std::string, std::string> kConstraints = {
    {"su1", "1 <= l < p"},
    {"su2", "p <= s < q"},
    {"su3", "1 <= s < p"},
    {"su4", "1 <= l <= s, p-l >= 1, q-s >= 1, p-l <= q-s"},
    {"su5", "1 <= s < l < p, p-l <= q-s"},
    {"so1", "1 <= l <= p/2"},
    {"so2", "p/2 <= l <= p-2"},
    {"so3", "(no parameters)"},
    {"sp1", "1 <= l <= p/2"},
    {"sp2", "p/2 <= l <= p-1"},
    {"soj2", "2 <= l <= k-1, p = 2k-2"},
    {"sou2", "2 <= l <= k-2, p = 2k-1"},
};

} // namespace

std::vector<std::string> entry_ids(Family family) {
    switch (family) {
        case Family::SU: return {"su1", "su2", "su3", "su4", "su5"};
        case Family::SOSTAR: return {"so1", "so2", "so3"};
        case Family::SP: return {"sp1", "sp2"};
        case Family::SO2_EVEN: return {"soj1", "soj2", "soj3", "soj4", "soj5"};
        case Family::SO2_ODD: return {"sou1", "sou2", "sou3", "sou4", "sou5", "sou6"};
        case Family::E6: return {"e6a", "e6b", "e6c", "e6d", "e6e"};
        case Family::E7: return {"e1", "e2", "e3", "e4", "e5", "e6", "e7"};
    }
    throw std::logic_error("entry_ids: bad family");
}

std::vector<CatalogInstance> maximal_entries(const AlgebraId& ambient) {
    RootSystem rs = build(ambient);
    switch (ambient.family) {
        case Family::SU: return su_instances(rs);
        case Family::SOSTAR: return sostar_instances(rs);
        case Family::SP: return sp_instances(rs);
        case Family::SO2_EVEN: return so_even_instances(rs);
        case Family::SO2_ODD: return so_odd_instances(rs);
        case Family::E6: return e6_instances(rs);
        case Family::E7: return e7_instances(rs);
    }
    throw std::logic_error("maximal_entries: bad family");
}

CatalogInstance instantiate(const AlgebraId& ambient, const std::string& entry_id,
                            const std::map<std::string, int>& params) {
    auto ids = entry_ids(ambient.family);
    if (std::find(ids.begin(), ids.end(), entry_id) == ids.end())
        throw std::invalid_argument("unknown entry '" + entry_id + "' for family " +
                                    format_algebra(ambient));
    for (CatalogInstance& ci : maximal_entries(ambient))
        if (ci.entry_id == entry_id && ci.params == params) return ci;
    auto it = kConstraints.find(entry_id);
    std::string hint = it != kConstraints.end() ? it->second : "(no parameters)";
    throw std::out_of_range("entry " + entry_id + " in " + format_algebra(ambient) +
                            ": parameters violate " + hint);
}

namespace {

std::vector<std::string> identified_names(const std::vector<FactorDescriptor>& fds) {
    std::vector<std::string> names;
    for (const auto& f : fds)
        if (f.name != "compact") names.push_back(f.name);
    std::sort(names.begin(), names.end());
    return names;
}

std::vector<std::string> claimed_names(const CatalogInstance& ci) {
    std::vector<std::string> names;
    for (const auto& n : ci.claimed)
        if (n != "compact") names.push_back(n);
    std::sort(names.begin(), names.end());
    return names;
}

std::string describe(const CatalogInstance& ci) {
    std::string s = format_algebra(ci.ambient) + " " + ci.entry_id;
    for (const auto& [k, v] : ci.params) s += " " + k + "=" + std::to_string(v);
    return s;
}

void check_instance(const RootSystem& rs, const CatalogInstance& ci, CatalogReport& report,
                    std::map<std::string, Discrepancy>& disc) {
    ++report.instances_checked;
    ValidationReport vr = validate(rs, ci.delta);
    if (!vr.ok) {
        report.failures.push_back(describe(ci) + ": validate " + vr.condition + " " + vr.detail);
        return;
    }
    std::vector<std::string> names;
    try {
        names = identified_names(identify(rs, ci.delta));
    } catch (const std::exception& e) {
        report.failures.push_back(describe(ci) + ": identify threw: " + e.what());
        return;
    }
    if (names != claimed_names(ci)) {
        std::string got;
        for (const auto& n : names) got += n + " ";
        report.failures.push_back(describe(ci) + ": identified [" + got + "] != claimed");
        return;
    }
    TightnessCertificate cert = regular_verdict(rs, identify(rs, ci.delta));
    if (cert.tight != ci.expected_tight) {
        report.failures.push_back(describe(ci) + ": verdict " + (cert.tight ? "Tight" : "NotTight") +
                                  " does not match the paper");
        return;
    }
    // The printed form, when genuinely different, must fail somewhere.
    if (!ci.printed.empty()) {
        auto a = ci.printed, b = ci.delta;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a == b) return; // degenerate parameters: printed and corrected coincide
        bool printed_fails = false;
        ValidationReport pv = validate(rs, ci.printed);
        if (!pv.ok) {
            printed_fails = true;
        } else {
            try {
                printed_fails = identified_names(identify(rs, ci.printed)) != claimed_names(ci);
            } catch (const std::exception&) {
                printed_fails = true;
            }
        }
        if (!printed_fails) {
            report.failures.push_back(describe(ci) + ": printed form unexpectedly passes");
            return;
        }
        Discrepancy& d = disc[ci.entry_id];
        if (d.instances == 0) {
            d.entry = ci.entry_id;
            d.example_ambient = ci.ambient;
            d.example_params = ci.params;
            d.printed = ci.printed;
            d.corrected = ci.delta;
            d.identified = names;
        }
        ++d.instances;
    }
}

} // namespace

CatalogReport verify_catalog(const SweepBounds& bounds) {
    CatalogReport report;
    std::map<std::string, Discrepancy> disc;
    auto run = [&](const AlgebraId& id) {
        RootSystem rs = build(id);
        for (const CatalogInstance& ci : maximal_entries(id))
            check_instance(rs, ci, report, disc);
    };
    for (int p = 1; p <= bounds.su_pq_max / 2; ++p)
        for (int q = p; p + q <= bounds.su_pq_max; ++q)
            if (p + q >= 3) run({Family::SU, p, q});
    for (int p = 5; p <= bounds.sostar_max; ++p) run({Family::SOSTAR, p, 0});
    for (int p = 2; p <= bounds.sp_max; ++p) run({Family::SP, p, 0});
    for (int p = 6; p <= bounds.so2_max; p += 2) run({Family::SO2_EVEN, p, 0});
    for (int p = 5; p <= bounds.so2_max; p += 2) run({Family::SO2_ODD, p, 0});
    run({Family::E6, 0, 0});
    run({Family::E7, 0, 0});
    for (auto& [id, d] : disc) report.discrepancies.push_back(d);
    return report;
}

std::string report_json(const CatalogReport& r) {
    nlohmann::ordered_json j;
    j["instances_checked"] = r.instances_checked;
    j["failures"] = r.failures;
    j["discrepancies"] = nlohmann::ordered_json::array();
    for (const auto& d : r.discrepancies) {
        nlohmann::ordered_json row;
        row["entry"] = d.entry;
        row["ambient"] = format_algebra(d.example_ambient);
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : d.example_params) params[k] = v;
        row["params"] = params;
        auto roots = [](const std::vector<Root>& v) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const Root& r2 : v) arr.push_back(format_root(r2));
            return arr;
        };
        row["printed"] = roots(d.printed);
        row["corrected"] = roots(d.corrected);
        row["identified"] = d.identified;
        row["instances"] = d.instances;
        j["discrepancies"].push_back(row);
    }
    return j.dump();
}

} // namespace tightmaps
