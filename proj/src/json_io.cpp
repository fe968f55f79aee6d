#include "burniat/json_io.hpp"

namespace burniat {

ojson rat_to_json(const Rat& q) {
    return ojson{{"n", rat_num(q).str()}, {"d", rat_den(q).str()}};
}

Rat rat_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("d"))
        throw InputError("rational must be an object {n, d}");
    return rat_from_strings(j.at("n").get<std::string>(), j.at("d").get<std::string>());
}

ojson point_to_json(const ProjPoint& p) {
    ojson arr = ojson::array();
    for (const auto& q : p.x) arr.push_back(rat_to_json(q));
    return arr;
}

ProjPoint point_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) throw InputError("point must be a triple");
    ProjPoint p;
    for (int k = 0; k < 3; ++k) p.x[static_cast<size_t>(k)] = rat_from_json(j.at(static_cast<size_t>(k)));
    if (p.x[0] == 0 && p.x[1] == 0 && p.x[2] == 0) throw InputError("point coordinates all zero");
    return p;
}

ojson divisor_to_json(const DivisorClass& c) {
    ojson j;
    j["a"] = c.a;
    j["b"] = c.b;
    j["pretty"] = to_string(c);
    return j;
}

DivisorClass divisor_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw InputError("divisor class must be an object {a, b}");
    return DivisorClass(j.at("a").get<long long>(), j.at("b").get<std::vector<long long>>());
}

ojson config_to_json(const BurniatConfig& cfg) {
    ojson j;
    j["case"] = case_name(cfg.declared_case);
    ojson params;
    if (!cfg.params.a.empty()) {
        ojson arr = ojson::array();
        for (const auto& q : cfg.params.a) arr.push_back(rat_to_json(q));
        params["a"] = arr;
    }
    if (!cfg.params.b.empty()) {
        ojson arr = ojson::array();
        for (const auto& q : cfg.params.b) arr.push_back(rat_to_json(q));
        params["b"] = arr;
    }
    j["params"] = params;
    ojson extras = ojson::array();
    for (const auto& p : cfg.extra_points) extras.push_back(point_to_json(p));
    j["extra_points"] = extras;
    ojson lines = ojson::array();
    for (const auto& l : cfg.lines) {
        ojson lj;
        lj["label"] = ojson::array({l.label.i, l.label.j});
        ojson coeffs = ojson::array();
        for (const auto& q : l.c) coeffs.push_back(rat_to_json(q));
        lj["coeffs"] = coeffs;
        lines.push_back(lj);
    }
    j["lines"] = lines;
    return j;
}

BurniatConfig config_from_json(const nlohmann::json& j) {
    BurniatConfig cfg;
    if (j.contains("case")) cfg.declared_case = case_from_name(j.at("case").get<std::string>());
    if (j.contains("params")) {
        const auto& params = j.at("params");
        if (params.contains("a"))
            for (const auto& q : params.at("a")) cfg.params.a.push_back(rat_from_json(q));
        if (params.contains("b"))
            for (const auto& q : params.at("b")) cfg.params.b.push_back(rat_from_json(q));
    }
    cfg.params.c = cfg.declared_case;
    if (j.contains("extra_points"))
        for (const auto& pj : j.at("extra_points")) cfg.extra_points.push_back(point_from_json(pj));
    cfg.params.extra_points = cfg.extra_points;
    if (!j.contains("lines") || !j.at("lines").is_array() || j.at("lines").size() != 9)
        throw InputError("configuration needs exactly 9 lines");
    size_t idx = 0;
    for (const auto& lj : j.at("lines")) {
        ProjLine l;
        const auto& lab = lj.at("label");
        l.label = LineLabel{lab.at(0).get<int>(), lab.at(1).get<int>()};
        const auto& coeffs = lj.at("coeffs");
        if (!coeffs.is_array() || coeffs.size() != 3) throw InputError("line needs 3 coefficients");
        for (int k = 0; k < 3; ++k) l.c[static_cast<size_t>(k)] = rat_from_json(coeffs.at(static_cast<size_t>(k)));
        if (l.c[0] == 0 && l.c[1] == 0 && l.c[2] == 0) throw InputError("line coefficients all zero");
        cfg.lines[idx++] = std::move(l);
    }
    return cfg;
}

namespace {

ojson canonical_point_json(const ProjPoint& p) {
    ojson arr = ojson::array();
    for (const auto& e : p.canonical()) arr.push_back(e.str());
    return arr;
}

ojson multiple_point_json(const MultiplePoint& mp) {
    ojson j;
    j["point"] = canonical_point_json(mp.point);
    j["multiplicity"] = mp.multiplicity;
    ojson labels = ojson::array();
    for (const auto& lab : mp.lines) labels.push_back(ojson::array({lab.i, lab.j}));
    j["lines"] = labels;
    return j;
}

} // namespace

ojson scan_to_json(const ArrangementScan& scan) {
    ojson j;
    ojson corners = ojson::array();
    for (const auto& mp : scan.corners) corners.push_back(multiple_point_json(mp));
    j["corners"] = corners;
    ojson others = ojson::array();
    for (const auto& mp : scan.off_corner) others.push_back(multiple_point_json(mp));
    j["off_corner"] = others;
    return j;
}

ojson identity_checks_to_json(const std::vector<IdentityCheck>& checks) {
    ojson arr = ojson::array();
    for (const auto& chk : checks) {
        ojson j;
        j["identity"] = chk.identity;
        j["lhs"] = divisor_to_json(chk.lhs);
        j["rhs"] = divisor_to_json(chk.rhs);
        j["pass"] = chk.pass;
        arr.push_back(j);
    }
    return arr;
}

ojson table_to_json(const EigenspaceTable& table) {
    ojson j;
    j["case"] = case_name(table.c);
    j["k_squared"] = table.k2;
    const char* keys[4] = {"inv", "chi1", "chi2", "chi3"};
    ojson h1, h2;
    for (int idx = 0; idx < 4; ++idx) {
        h1[keys[idx]] = table.h1[static_cast<size_t>(idx)];
        h2[keys[idx]] = table.h2[static_cast<size_t>(idx)];
    }
    j["h1"] = h1;
    j["h2"] = h2;
    j["chi_theta"] = table.chi_theta_value;
    j["moduli_dim"] = table.moduli_dimension;
    ojson kur;
    if (table.kuranishi == KuranishiType::Smooth) {
        kur["type"] = "smooth";
    } else {
        kur["type"] = "nonreduced";
        kur["canonical_order"] = table.canonical_order;
        kur["minimal_order"] = table.minimal_order;
    }
    j["kuranishi"] = kur;
    return j;
}

ojson trial_reports_to_json(const std::vector<IdentityTrialReport>& reports) {
    ojson arr = ojson::array();
    for (const auto& rep : reports) {
        ojson j;
        j["identity"] = rep.identity;
        j["trials"] = rep.trials;
        j["failures"] = rep.failures;
        arr.push_back(j);
    }
    return arr;
}

} // namespace burniat
