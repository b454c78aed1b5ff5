#include "toricsg/report.hpp"

#include <sstream>

#include "toricsg/version.hpp"

namespace toricsg {

void to_json(json& j, const Vec2& v) { j = json::array({v.x, v.y}); }

void to_json(json& j, const IntMatrix2& m) {
    j = json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}

void to_json(json& j, const AbelianGroup& g) {
    j = json{{"free_rank", g.free_rank}, {"torsion", g.torsion}, {"name", g.str()}};
}

void to_json(json& j, const Face& f) {
    j = json{{"ray", f.ray.r},
             {"coefficients", f.coefficients},
             {"d", f.d},
             {"asymptotic_generator", f.asymptotic_generator},
             {"gaps", f.gaps},
             {"conductor", f.conductor}};
}

void to_json(json& j, const KTheoryReport& r) {
    j = json{{"a1", r.a1},
             {"a2", r.a2},
             {"M", r.M},
             {"Mperp", r.Mperp},
             {"detM", r.detM},
             {"snf_factors", r.snf_factors},
             {"sf_quotient", r.sf_quotient},
             {"K0", r.K0},
             {"K1", r.K1},
             {"index_map", "s over face j maps to (-1)^(j+1) det(a_j, s)"}};
}

void to_json(json& j, const QuotientWitnessReport& r) {
    json wits = json::array();
    for (const auto& w : r.witnesses)
        wits.push_back(json{{"s1", w.s1}, {"s2", w.s2}, {"f1", w.f1}, {"f2", w.f2}});
    j = json{{"lattice", r.lattice},
             {"order", r.order},
             {"group", r.group},
             {"representatives", r.representatives},
             {"witnesses", wits},
             {"status", to_string(r.status)},
             {"detail", r.detail}};
}

void to_json(json& j, const ComplementDecomposition& r) {
    json tr = json::array();
    for (const auto& t : r.translates)
        tr.push_back(json{{"representative", t.representative}, {"face", t.face}});
    json fl = json::array();
    for (const auto& f : r.flagged)
        fl.push_back(json{{"face", f.face}, {"line_point", f.line_point}, {"reason", f.reason}});
    j = json{{"finite_part", r.finite_part}, {"translates", tr}, {"flagged_classes", fl}};
}

void to_json(json& j, const BijectionReport& r) {
    j = json{{"passed", r.passed},
             {"points_checked", r.points_checked},
             {"representative_count", r.representative_count},
             {"detail", r.detail}};
}

void to_json(json& j, const ConeWitness& w) {
    j = json{{"z", w.z},
             {"b1", w.b1},
             {"b2", w.b2},
             {"parallelogram_points", w.parallelogram.size()}};
}

void to_json(json& j, const InstanceSpec& s) {
    j = json{{"label", s.label}, {"generators", s.generators}};
}

json semigroup_json(const ToricSemigroup& S) {
    return json{{"generators", S.generators()},
                {"rays", json::array({S.ray(1).r, S.ray(2).r})},
                {"faces", json::array({S.face(1), S.face(2)})},
                {"asymptotic_generators",
                 json::array({S.asymptotic_generator(1), S.asymptotic_generator(2)})}};
}

json base_report(const InstanceSpec& spec) {
    return json{{"schema_version", kSchemaVersion},
                {"tool_version", kVersion},
                {"instance", spec}};
}

InstanceSpec parse_instance_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array())
        throw std::invalid_argument("expected an object with a \"generators\" array");
    InstanceSpec spec;
    if (doc.contains("label")) spec.label = doc["label"].get<std::string>();
    for (const auto& g : doc["generators"]) {
        if (!g.is_array() || g.size() != 2 || !g[0].is_number_integer() ||
            !g[1].is_number_integer())
            throw std::invalid_argument("each generator must be a pair of integers");
        spec.generators.push_back({g[0].get<i64>(), g[1].get<i64>()});
    }
    return spec;
}

InstanceSpec parse_instance_text(const std::string& text) {
    InstanceSpec spec;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        i64 x, y;
        std::string rest;
        if (!(ls >> x >> y) || (ls >> rest))
            throw std::invalid_argument("expected two integers per line");
        spec.generators.push_back({x, y});
    }
    if (spec.generators.empty())
        throw std::invalid_argument("no generators in the instance file");
    return spec;
}

std::string pretty_summary(const json& report) {
    std::ostringstream out;
    if (report.contains("instance"))
        out << "instance: " << report["instance"]["generators"].dump() << "\n";
    if (report.contains("semigroup")) {
        const auto& sg = report["semigroup"];
        out << "rays:     " << sg["rays"].dump() << "\n";
        out << "a1, a2:   " << sg["asymptotic_generators"].dump() << "\n";
        for (int j = 0; j < 2; ++j) {
            const auto& f = sg["faces"][j];
            out << "face " << (j + 1) << ":   d=" << f["d"] << " gaps=" << f["gaps"].dump()
                << " conductor=" << f["conductor"] << "\n";
        }
    }
    if (report.contains("ktheory")) {
        const auto& kt = report["ktheory"];
        out << "detM:     " << kt["detM"] << "\n";
        out << "K0:       " << kt["K0"]["name"].get<std::string>() << "\n";
        out << "K1:       " << kt["K1"]["name"].get<std::string>() << "\n";
    }
    if (report.contains("checks")) {
        out << "checks:\n";
        for (const auto& [name, chk] : report["checks"].items())
            out << "  " << name << ": " << chk["status"].get<std::string>() << "\n";
    }
    return out.str();
}

}  // namespace toricsg
