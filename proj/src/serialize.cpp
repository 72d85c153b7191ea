#include "cayham/serialize.hpp"

#include <sstream>

#include "cayham/quasipath.hpp"

namespace cayham {

using nlohmann::json;

GroupSpec parse_group(const std::string& s) {
    auto colon = s.find(':');
    std::string head = s.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : s.substr(colon + 1);
    auto num = [](const std::string& t) {
        size_t pos = 0;
        long long v = std::stoll(t, &pos);
        if (pos != t.size()) throw InvalidInput("bad number in group spec: " + t);
        return v;
    };
    if (head == "Z" && args.empty()) return GroupSpec::integers();
    if (head == "Z") return GroupSpec::finite(1, num(args));
    if (head == "ZxZm") return GroupSpec::z_cross(num(args));
    if (head == "Z2") {
        auto comma = args.find(',');
        if (comma == std::string::npos)
            throw InvalidInput("Z2 spec needs two moduli");
        return GroupSpec::finite(num(args.substr(0, comma)), num(args.substr(comma + 1)));
    }
    throw InvalidInput("unknown group spec: " + s);
}

GroupElement parse_element(const GroupSpec& g, const std::string& s) {
    std::vector<long long> coords;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        size_t pos = 0;
        coords.push_back(std::stoll(part, &pos));
        if (pos != part.size()) throw InvalidInput("bad coordinate: " + part);
    }
    bool oneCoord = (g.kind == GroupKind::Finite && g.moduli[0] == 1) ||
                    g.kind == GroupKind::Z;
    if (oneCoord) {
        if (coords.size() != 1) throw InvalidInput("expected one coordinate");
        return reduce(g, {g.kind == GroupKind::Z ? coords[0] : 0,
                          g.kind == GroupKind::Z ? 0 : coords[0]});
    }
    if (coords.size() != 2) throw InvalidInput("expected two coordinates");
    return reduce(g, {coords[0], coords[1]});
}

std::string format_group(const GroupSpec& g) {
    switch (g.kind) {
        case GroupKind::Z: return "Z";
        case GroupKind::ZxZm: return "ZxZm:" + std::to_string(g.moduli[1]);
        case GroupKind::Finite:
            if (g.moduli[0] == 1) return "Z:" + std::to_string(g.moduli[1]);
            return "Z2:" + std::to_string(g.moduli[0]) + "," +
                   std::to_string(g.moduli[1]);
    }
    return "?";
}

std::string format_element(const GroupSpec& g, GroupElement v) {
    v = reduce(g, v);
    if (g.kind == GroupKind::Z) return std::to_string(v.c[0]);
    if (g.kind == GroupKind::Finite && g.moduli[0] == 1)
        return std::to_string(v.c[1]);
    return std::to_string(v.c[0]) + "," + std::to_string(v.c[1]);
}

std::string rational_str(const Rational& r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

static json element_json(const GroupSpec& g, GroupElement v) {
    v = reduce(g, v);
    if (g.kind == GroupKind::Z) return json::array({v.c[0]});
    if (g.kind == GroupKind::Finite && g.moduli[0] == 1)
        return json::array({v.c[1]});
    return json::array({v.c[0], v.c[1]});
}

static json group_json(const GroupSpec& g) {
    const char* kind = g.kind == GroupKind::Finite ? "finite"
                       : g.kind == GroupKind::Z   ? "integers"
                                                  : "z-cross-zm";
    return json{{"kind", kind}, {"moduli", {g.moduli[0], g.moduli[1]}}};
}

static GroupSpec group_from(const json& j) {
    std::string kind = j.at("kind");
    long long m0 = j.at("moduli").at(0), m1 = j.at("moduli").at(1);
    if (kind == "finite") return GroupSpec::finite(m0, m1);
    if (kind == "integers") return GroupSpec::integers();
    if (kind == "z-cross-zm") return GroupSpec::z_cross(m1);
    throw InvalidInput("unknown group kind: " + kind);
}

static GroupElement element_from(const GroupSpec& g, const json& j) {
    if (j.size() == 1) {
        long long c = j.at(0);
        if (g.kind == GroupKind::Z) return {c, 0};
        return reduce(g, {0, c});
    }
    return reduce(g, {j.at(0).get<long long>(), j.at(1).get<long long>()});
}

static json quasipath_json(const QuasiPath& qp) {
    json byB = json::array();
    for (uint8_t f : qp.byB) byB.push_back(static_cast<int>(f));
    return json{{"tau", element_json(qp.inst->group, qp.tau)},
                {"d", qp.d},
                {"byB", byB}};
}

json certificate_to_json(const DigraphInstance& inst, const PairCertificate& cert) {
    json paths = json::array();
    for (const QuasiPath* qp : {&cert.p, &cert.pPrime}) {
        json seq = json::array();
        for (GroupElement v : vertex_sequence(*qp))
            seq.push_back(element_json(inst.group, v));
        paths.push_back(seq);
    }
    return json{{"schemaVersion", "1"},
                {"group", group_json(inst.group)},
                {"generators",
                 {element_json(inst.group, inst.a), element_json(inst.group, inst.b)}},
                {"invariants",
                 {{"m", inst.m}, {"n", inst.n}, {"e", inst.e}, {"I", inst.I}, {"N", inst.N}}},
                {"compact", {quasipath_json(cert.p), quasipath_json(cert.pPrime)}},
                {"paths", paths},
                {"strategy", to_string(cert.strategy)},
                {"verified", cert.verified}};
}

LoadedCertificate certificate_from_json(const json& doc, DigraphInstance& instOut) {
    if (doc.at("schemaVersion").get<std::string>() != "1")
        throw InvalidInput("unsupported schema version");
    LoadedCertificate lc;
    lc.group = group_from(doc.at("group"));
    lc.a = element_from(lc.group, doc.at("generators").at(0));
    lc.b = element_from(lc.group, doc.at("generators").at(1));
    instOut = make_instance(lc.group, lc.a, lc.b);

    auto loadQp = [&](const json& j) {
        std::vector<uint8_t> byB;
        for (const auto& f : j.at("byB")) byB.push_back(f.get<int>() != 0);
        return build_quasipath(instOut, element_from(lc.group, j.at("tau")),
                               j.at("d").get<long long>(), byB);
    };
    lc.cert.p = loadQp(doc.at("compact").at(0));
    lc.cert.pPrime = loadQp(doc.at("compact").at(1));
    std::string strat = doc.at("strategy");
    for (PairStrategy s : {PairStrategy::EvenIndex, PairStrategy::SpectrumSearch,
                           PairStrategy::LabelDisjoint, PairStrategy::OracleFallback})
        if (strat == to_string(s)) lc.cert.strategy = s;

    // explicit paths must denote the same objects as the descriptors
    for (int which = 0; which < 2; ++which) {
        const QuasiPath& qp = which ? lc.cert.pPrime : lc.cert.p;
        auto seq = vertex_sequence(qp);
        const json& stored = doc.at("paths").at(which);
        if (stored.size() != seq.size())
            throw InvalidInput("stored path length disagrees with descriptor");
        for (size_t i = 0; i < seq.size(); ++i)
            if (!(element_from(lc.group, stored.at(i)) == seq[i]))
                throw InvalidInput("stored path disagrees with descriptor");
    }
    lc.cert.verified = verify_pair(instOut, lc.cert).ok;
    return lc;
}

json profile_to_json(const TriangleProfile& tp) {
    json rows = json::array();
    for (long long t = 0; t < tp.I; ++t) {
        const TriangleRow& r = tp.rows[t];
        json A = json::array(), h = json::array(), u = json::array();
        for (LatticePoint p : r.A) A.push_back({p.x, p.y});
        for (long long v : r.h) h.push_back(v);
        for (long long v : r.u) u.push_back(v);
        rows.push_back({{"t", t}, {"f", r.f}, {"A", A}, {"h", h}, {"u", u}});
    }
    return json{{"m", tp.m}, {"n", tp.n}, {"e", tp.e},
                {"I", tp.I}, {"N", tp.N}, {"rows", rows}};
}

std::string profile_table(const TriangleProfile& tp) {
    std::ostringstream os;
    os << "m=" << tp.m << " n=" << tp.n << " e=" << tp.e << " I=" << tp.I
       << " N=" << tp.N << "\n";
    os << "t\tk\tA\th\tu\n";
    for (long long t = 0; t < tp.I; ++t) {
        const TriangleRow& r = tp.rows[t];
        for (long long k = 0; k < r.f; ++k) {
            os << t << "\t" << k + 1 << "\t(" << r.A[k].x << "," << r.A[k].y << ")\t"
               << r.h[k] << "\t";
            if (k + 1 < r.f)
                os << r.u[k];
            else
                os << "-";
            os << "\n";
        }
    }
    return os.str();
}

std::string dot_export(const DigraphInstance& inst, const PairCertificate& cert) {
    std::ostringstream os;
    os << "digraph pair {\n";
    for (int which = 0; which < 2; ++which) {
        const QuasiPath& qp = which ? cert.pPrime : cert.p;
        auto seq = vertex_sequence(qp);
        const char* style = which ? "color=blue style=dashed" : "color=red";
        for (size_t i = 0; i + 1 < seq.size(); ++i)
            os << "  \"" << format_element(inst.group, seq[i]) << "\" -> \""
               << format_element(inst.group, seq[i + 1]) << "\" [" << style << "];\n";
    }
    os << "}\n";
    return os.str();
}

json multi_to_json(const MultiCertificate& cert) {
    json out{{"schemaVersion", "1"},
             {"lengths", cert.lengths},
             {"case", to_string(cert.caseUsed)}};
    json paths = json::array();
    for (const auto* path : {&cert.pathA, &cert.pathB}) {
        json seq = json::array();
        for (const auto& t : *path) seq.push_back(t);
        paths.push_back(seq);
    }
    out["paths"] = paths;
    return out;
}

json scan_to_json(const ScanReport& rep) {
    return json{{"bound", rep.bound},
                {"instancesTried", rep.instancesTried},
                {"succeededByStrategy", rep.succeededByStrategy},
                {"failures", rep.failures},
                {"wallTimeMillis",
                 static_cast<long long>(rep.wallTimeSeconds * 1000)}};
}

}  // namespace cayham
