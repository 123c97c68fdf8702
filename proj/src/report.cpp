#include "grassmorph/report.hpp"

#include <sstream>

#include "grassmorph/errors.hpp"

namespace grassmorph {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const ProjPoint& p) {
    return Json::array({to_json(p[0]), to_json(p[1]), to_json(p[2])});
}

Json to_json(const HomPoly& f) {
    Json terms = Json::object();
    for (const auto& [m, c] : f.terms()) {
        std::ostringstream key;
        key << "(" << m[0] << "," << m[1] << "," << m[2] << ")";
        terms[key.str()] = to_string(c);
    }
    Json out;
    out["degree"] = f.degree();
    out["terms"] = terms;
    out["rendered"] = f.str();
    return out;
}

Json to_json(const PlueckerPoint& p) {
    Json out = Json::array();
    for (std::size_t i = 0; i < 6; ++i) out.push_back(to_json(p[i]));
    return out;
}

Json to_json(const CohomClass& c) { return Json::array({c.q2, c.s2}); }

Json to_json(const WitnessRecipe& w) {
    Json out;
    switch (w.kind) {
        case WitnessRecipe::Kind::Split:
            out["kind"] = "split";
            out["a"] = w.a;
            out["b"] = w.b;
            break;
        case WitnessRecipe::Kind::TrivialPlane:
            out["kind"] = "trivial-plane";
            break;
        case WitnessRecipe::Kind::ConstantExcluded:
            out["kind"] = "constant-excluded";
            break;
        case WitnessRecipe::Kind::FiniteSelfMap:
            out["kind"] = "finite-self-map";
            out["n"] = w.n;
            break;
        case WitnessRecipe::Kind::CbPoints:
            out["kind"] = "cb-points";
            out["ell"] = w.ell;
            out["c"] = w.c;
            out["t"] = w.t;
            out["arrangement"] = w.arrangement == CbArrangement::OnCurve
                                     ? "on-curve"
                                     : (w.arrangement == CbArrangement::StrictThree ? "strict-three"
                                                                                    : "general-position");
            break;
    }
    out["dual"] = w.dual;
    out["rendered"] = w.str();
    return out;
}

Json to_json(const ClassVerdict& v) {
    Json out;
    out["status"] = status_name(v.status);
    out["reason"] = v.reason;
    if (v.witness) out["witness"] = to_json(*v.witness);
    return out;
}

Json to_json(const Intersection& ix) {
    Json out;
    Json rats = Json::array();
    for (const auto& z : ix.rational) {
        Json e;
        e["point"] = to_json(z.point);
        e["multiplicity"] = z.multiplicity;
        rats.push_back(e);
    }
    out["rational_zeros"] = rats;
    Json res = Json::array();
    for (const auto& b : ix.residual) {
        Json e;
        e["nonrational_count"] = b.count();
        e["multiplicity"] = b.multiplicity;
        res.push_back(e);
    }
    out["residual"] = res;
    out["total_multiplicity"] = ix.total();
    return out;
}

Json to_json(const SurjectivityReport& r) {
    Json out;
    out["surjective"] = r.surjective;
    if (r.witness) out["witness_zero"] = to_json(*r.witness);
    if (r.nonrational_witness) {
        out["nonrational_witness_degree"] = r.nonrational_witness->first.degree();
        out["nonrational_witness_multiplicity"] = r.nonrational_witness->second;
    }
    if (r.base_curve) out["base_curve"] = to_json(*r.base_curve);
    out["scanned_primes"] = r.scanned_primes;
    return out;
}

Json to_json(const ClassResult& r) {
    Json out;
    out["class"] = to_json(r.cls);
    Json ev;
    Json v = Json::array();
    for (const auto& x : r.evidence.section_vector) v.push_back(to_string(x));
    ev["section_vector"] = v;
    ev["zero_scheme"] = to_json(r.evidence.zeros);
    Json xi = Json::array();
    for (const auto& x : r.evidence.dual_functional) xi.push_back(to_string(x));
    ev["dual_functional"] = xi;
    Json counts = Json::array();
    for (const auto& [p, n] : r.evidence.dual_incidence_counts) {
        Json e;
        e["prime"] = p;
        e["distinct_points"] = n;
        counts.push_back(e);
    }
    ev["dual_incidence_counts"] = counts;
    ev["note"] = "finite-field evidence; lower bound on s2, not a proof";
    out["evidence"] = ev;
    return out;
}

Json to_json(const CbReport& r, const PointConfig& z, int d) {
    Json out;
    out["points"] = static_cast<long long>(z.points.size());
    out["twist"] = d;
    out["holds"] = r.holds;
    if (r.failing_point) out["failing_point"] = static_cast<long long>(*r.failing_point);
    if (r.certificate) out["certificate"] = to_json(*r.certificate);
    out["h0_ideal"] = h0_ideal(z, d);
    return out;
}

Json to_json(const PositionReport& r) {
    Json out;
    out["ok"] = r.ok;
    if (r.violation) {
        Json v;
        v["degree"] = r.violation->r;
        v["curve"] = to_json(r.violation->curve);
        v["points_on_curve"] = r.violation->on_curve;
        out["violation"] = v;
    }
    return out;
}

Json to_json(const CollisionReport& r) {
    Json out;
    out["prime"] = r.prime;
    out["mode"] = r.mode.full ? "full" : "sample";
    if (!r.mode.full) {
        out["sample_size"] = r.mode.sample_size;
        out["sample_seed"] = r.mode.seed;
    }
    out["note"] = "finite-field evidence";
    out["coprime_warning"] = r.coprime_warning;
    out["points_scanned"] = r.points_scanned;
    out["rank2_points"] = r.rank2_points;
    out["distinct_images"] = r.distinct_images;
    Json hist = Json::object();
    for (const auto& [size, n] : r.fiber_histogram) hist[std::to_string(size)] = n;
    out["fiber_histogram"] = hist;
    Json coll = Json::array();
    for (const auto& [p1, p2] : r.sample_collisions) {
        Json pair = Json::array();
        pair.push_back(Json::array({p1[0], p1[1], p1[2]}));
        pair.push_back(Json::array({p2[0], p2[1], p2[2]}));
        coll.push_back(pair);
    }
    out["sample_collisions"] = coll;
    return out;
}

Json table_json(const std::vector<TableRow>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
        Json r;
        r["c"] = row.c;
        Json verdicts = Json::array();
        for (std::size_t q2 = 0; q2 < row.verdicts.size(); ++q2) {
            Json v;
            v["q2"] = static_cast<long long>(q2);
            v["s2"] = static_cast<long long>(row.c) * row.c - static_cast<long long>(q2);
            v["status"] = status_name(row.verdicts[q2].status);
            v["reason"] = row.verdicts[q2].reason;
            if (row.verdicts[q2].witness) v["witness"] = row.verdicts[q2].witness->str();
            verdicts.push_back(v);
        }
        r["classes"] = verdicts;
        r["counts"] = {{"realizable", row.count(Status::Realizable)},
                       {"not_realizable", row.count(Status::NotRealizable)},
                       {"unknown", row.count(Status::Unknown)}};
        r["unknown_q2"] = row.with_status(Status::Unknown);
        out.push_back(r);
    }
    return out;
}

std::vector<ProjPoint> parse_points_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("points file is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("points file must be a JSON array of coordinate triples");
    std::vector<ProjPoint> pts;
    for (const auto& entry : doc) {
        if (!entry.is_array() || entry.size() != 3)
            throw ParseError("each point must be a 3-element array");
        std::array<Rational, 3> coords;
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& v = entry[i];
            if (v.is_number_integer())
                coords[i] = Rational(static_cast<long long>(v.get<long long>()));
            else if (v.is_string())
                coords[i] = parse_rational(v.get<std::string>());
            else
                throw ParseError("point coordinates must be integers or \"num/den\" strings");
        }
        pts.emplace_back(coords[0], coords[1], coords[2]);
    }
    return pts;
}

std::string points_to_json(const PointConfig& z) {
    Json out = Json::array();
    for (const auto& p : z.points) out.push_back(to_json(p));
    return out.dump(2);
}

} // namespace grassmorph
