#include "ddouble/json_io.hpp"

#include <cstdint>
#include <stdexcept>

namespace ddouble {

Json cyc_to_json(const CycNum& z) {
    Json coeffs = Json::object();
    const auto& c = z.coeffs();
    for (size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) coeffs[std::to_string(k)] = rational_str(c[k]);
    return Json{{"conductor", z.conductor()}, {"coeffs", coeffs}};
}

CycNum cyc_from_json(const Json& j) {
    long n = j.at("conductor").get<long>();
    if (n < 1 || n > 1000000) throw std::invalid_argument("cyc: conductor out of range");
    std::vector<Rational> raw(n, Rational(0));
    for (const auto& [key, val] : j.at("coeffs").items()) {
        long e = std::stol(key);
        if (e < 0 || e >= n) throw std::invalid_argument("cyc: exponent out of range");
        raw[e] = rational_parse(val.get<std::string>());
    }
    return CycNum::from_powers(n, raw);
}

Json smatrix_to_json(const SMatrix& s, const std::vector<std::string>& labels) {
    Json rows = Json::array();
    for (int a = 0; a < s.rank; ++a) {
        Json row = Json::array();
        for (int b = 0; b < s.rank; ++b) row.push_back(cyc_to_json(s.at(a, b)));
        rows.push_back(std::move(row));
    }
    return Json{{"kind", "smatrix"},
                {"rank", s.rank},
                {"unit", s.unit_index},
                {"conductor", s.conductor},
                {"labels", labels},
                {"entries", rows}};
}

SMatrix smatrix_from_json(const Json& j) {
    SMatrix s;
    s.rank = j.at("rank").get<int>();
    s.unit_index = j.at("unit").get<int>();
    s.conductor = j.at("conductor").get<long>();
    const Json& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != s.rank) throw std::invalid_argument("smatrix: bad row count");
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != s.rank)
            throw std::invalid_argument("smatrix: bad column count");
        for (const auto& e : row) s.entries.push_back(cyc_from_json(e));
    }
    return s;
}

Json fusion_to_json(const FusionRing& r, int max_multiplicity) {
    Json triples = Json::array();
    for (int a = 0; a < r.rank; ++a)
        for (int b = 0; b < r.rank; ++b)
            for (int c = 0; c < r.rank; ++c)
                if (r.tensor.at(a, b, c) != 0)
                    triples.push_back(Json::array({a, b, c, r.tensor.at(a, b, c)}));
    return Json{{"kind", "fusion"},
                {"rank", r.rank},
                {"labels", r.labels},
                {"dims", r.dims},
                {"method", r.tensor.method},
                {"max_multiplicity", max_multiplicity},
                {"triples", triples}};
}

FusionRing ring_from_json(const Json& j) {
    int rank = j.at("rank").get<int>();
    FusionTensor t;
    t.rank = rank;
    t.method = j.value("method", "file");
    t.coeff.assign(static_cast<size_t>(rank) * rank * rank, 0);
    for (const auto& tr : j.at("triples")) {
        int a = tr.at(0).get<int>(), b = tr.at(1).get<int>(), c = tr.at(2).get<int>();
        int32_t v = tr.at(3).get<int32_t>();
        if (a < 0 || b < 0 || c < 0 || a >= rank || b >= rank || c >= rank || v < 0)
            throw std::invalid_argument("fusion: bad triple");
        t.at(a, b, c) = v;
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<long> dims;
    if (j.contains("dims"))
        dims = j.at("dims").get<std::vector<long>>();
    else
        throw std::invalid_argument("fusion: missing dims");
    return ring_from_tensor(std::move(t), std::move(labels), std::move(dims));
}

Json chartable_to_json(const CharTable& t) {
    Json classes = Json::array();
    for (const auto& c : t.classes)
        classes.push_back(Json{{"rep", c.rep}, {"size", c.size()}});
    Json rows = Json::array();
    for (const auto& f : t.irreducibles) {
        Json row = Json::array();
        for (const auto& c : t.classes) row.push_back(cyc_to_json(f.at(c.rep)));
        rows.push_back(std::move(row));
    }
    return Json{{"kind", "chartable"},
                {"order", t.domain.order()},
                {"prime", t.prime},
                {"degrees", t.degrees},
                {"classes", classes},
                {"values", rows}};
}

std::string table_hash(const Group& g) {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<uint64_t>(g.order));
    for (int v : g.table) mix(static_cast<uint64_t>(v));
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace ddouble
