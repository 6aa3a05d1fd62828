#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "ddouble/fusion.hpp"
#include "ddouble/json_io.hpp"
#include "ddouble/rings.hpp"

using namespace ddouble;
namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "0.1.0";

struct RunConfig {
    std::string format = "text";  // text | json | csv
    std::string cache_dir;
    int budget = 64;
    bool quiet = false;
    std::string output;  // empty = stdout
};

void note(const RunConfig& cfg, const std::string& msg) {
    if (!cfg.quiet) std::cerr << msg << "\n";
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw std::invalid_argument("cannot open output file '" + cfg.output + "'");
    out << text;
}

// --- cache: version-stamped JSON blobs keyed by the multiplication table ----

std::optional<Json> cache_load(const RunConfig& cfg, const std::string& key) {
    if (cfg.cache_dir.empty()) return std::nullopt;
    fs::path p = fs::path(cfg.cache_dir) / ("ddouble-" + key + ".json");
    std::ifstream in(p);
    if (!in) return std::nullopt;
    try {
        Json j;
        in >> j;
        if (j.value("version", "") != kVersion) return std::nullopt;
        return j.at("payload");
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable entries are treated as misses
    }
}

void cache_store(const RunConfig& cfg, const std::string& key, const Json& payload) {
    if (cfg.cache_dir.empty()) return;
    fs::create_directories(cfg.cache_dir);
    fs::path p = fs::path(cfg.cache_dir) / ("ddouble-" + key + ".json");
    fs::path tmp = p;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        out << Json{{"version", kVersion}, {"payload", payload}}.dump(1) << "\n";
    }
    fs::rename(tmp, p);  // atomic publish
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("bad JSON in '" + path + "': " + std::string(e.what()));
    }
    return j;
}

std::string family_name(GroupFamily f) {
    switch (f) {
        case GroupFamily::Cyclic: return "cyclic";
        case GroupFamily::Dihedral: return "dihedral";
        case GroupFamily::Dicyclic: return "dicyclic";
        case GroupFamily::Symmetric: return "symmetric";
        case GroupFamily::Product: return "product";
        case GroupFamily::PermGens: return "perm";
        case GroupFamily::Table: return "table";
    }
    return "?";
}

// --- group info ---------------------------------------------------------------

int cmd_group_info(const RunConfig& cfg, const std::string& spec) {
    Group g = build_group(spec);
    auto classes = conjugacy_classes(g);
    long expo = exponent(g);
    // irrep count of a centralizer = its class count; no table needed here
    std::vector<Subgroup> cents;
    std::vector<int> irreps;
    int rank = 0;
    for (const auto& cls : classes) {
        cents.push_back(centralizer(g, cls.rep));
        irreps.push_back(
            static_cast<int>(conjugacy_classes(subgroup_as_group(cents.back())).size()));
        rank += irreps.back();
    }
    if (cfg.format == "json") {
        Json jclasses = Json::array();
        for (size_t c = 0; c < classes.size(); ++c)
            jclasses.push_back(Json{{"rep", g.names[classes[c].rep]},
                                    {"size", classes[c].size()},
                                    {"centralizer_order", cents[c].order()},
                                    {"centralizer_irreps", irreps[c]}});
        Json j{{"kind", "group-info"},
               {"spec", spec},
               {"order", g.order},
               {"family", family_name(g.family)},
               {"exponent", expo},
               {"num_classes", classes.size()},
               {"double_rank", rank},
               {"table_hash", table_hash(g)},
               {"classes", jclasses}};
        emit(cfg, j.dump(1) + "\n");
    } else {
        std::ostringstream os;
        os << "group " << spec << "\n";
        os << "  order:      " << g.order << "\n";
        os << "  family:     " << family_name(g.family) << "\n";
        os << "  exponent:   " << expo << "\n";
        os << "  classes:    " << classes.size() << "\n";
        os << "  D(G) rank:  " << rank << "\n";
        os << "  table hash: " << table_hash(g) << "\n";
        os << "  class  rep        size  |C(g)|  irreps\n";
        for (size_t c = 0; c < classes.size(); ++c) {
            char buf[96];
            snprintf(buf, sizeof buf, "  %-6zu %-10s %-5d %-7d %d\n", c,
                     g.names[classes[c].rep].c_str(), classes[c].size(), cents[c].order(),
                     irreps[c]);
            os << buf;
        }
        emit(cfg, os.str());
    }
    return 0;
}

// --- smatrix -------------------------------------------------------------------

int cmd_smatrix(const RunConfig& cfg, const std::string& spec) {
    DoubleData dd = build_double_data(build_group(spec));
    if (dd.rank() > cfg.budget)
        throw std::invalid_argument("smatrix: rank " + std::to_string(dd.rank()) +
                                    " exceeds budget " + std::to_string(cfg.budget));
    std::vector<std::string> labels;
    for (const auto& ob : dd.objects) labels.push_back(ob.label);
    std::string key = table_hash(dd.g()) + "-smatrix";
    Json payload;
    SMatrix s;
    bool invariants_ok;
    if (auto hit = cache_load(cfg, key)) {
        payload = *hit;
        s = smatrix_from_json(payload.at("smatrix"));
        invariants_ok = payload.at("invariants_ok").get<bool>();
        note(cfg, "cache hit: " + key);
    } else {
        s = s_matrix(dd);
        invariants_ok = smatrix_symmetric(s) && smatrix_unitary(s) &&
                        smatrix_duality_permutation(s, dd);
        payload = Json{{"smatrix", smatrix_to_json(s, labels)}, {"invariants_ok", invariants_ok}};
        cache_store(cfg, key, payload);
    }
    if (cfg.format == "json") {
        emit(cfg, payload.at("smatrix").dump(1) + "\n");
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        for (int a = 0; a < s.rank; ++a) {
            for (int b = 0; b < s.rank; ++b) os << (b ? "," : "") << s.at(a, b).str();
            os << "\n";
        }
        emit(cfg, os.str());
    } else {
        std::ostringstream os;
        os << "S-matrix of D(" << spec << "), rank " << s.rank << ", conductor " << s.conductor
           << "\n";
        for (int a = 0; a < s.rank; ++a) {
            os << labels[a] << ":";
            for (int b = 0; b < s.rank; ++b) os << "  " << s.at(a, b).str();
            os << "\n";
        }
        emit(cfg, os.str());
    }
    if (!invariants_ok) {
        std::cerr << "S-matrix invariant failure (symmetry/unitarity/duality)\n";
        return 2;
    }
    note(cfg, "S-matrix invariants: symmetric, unitary, S^2 = duality permutation");
    return 0;
}

// --- fusion ---------------------------------------------------------------------

std::string fusion_text(const DoubleData& dd, const FusionRing& r, const MultiplicityReport& m) {
    std::ostringstream os;
    os << "fusion rules of D(" << dd.g().spec << "), rank " << r.rank << ", method "
       << r.tensor.method << "\n";
    for (int a = 0; a < r.rank; ++a)
        for (int b = a; b < r.rank; ++b) {
            os << r.labels[a] << " (x) " << r.labels[b] << " = ";
            bool first = true;
            for (int c = 0; c < r.rank; ++c) {
                int32_t n = r.tensor.at(a, b, c);
                if (!n) continue;
                if (!first) os << " (+) ";
                if (n > 1) os << n << "*";
                os << r.labels[c];
                first = false;
            }
            if (first) os << "0";
            os << "\n";
        }
    if (m.max_coeff <= 1)
        os << "multiplicity free (max coefficient " << m.max_coeff << ")\n";
    else
        os << "max coefficient " << m.max_coeff << " at (" << m.witness_a << "," << m.witness_b
           << "," << m.witness_c << ")\n";
    return os.str();
}

std::string fusion_csv(const FusionRing& r) {
    std::ostringstream os;
    os << "a,b,products\n";
    for (int a = 0; a < r.rank; ++a)
        for (int b = 0; b < r.rank; ++b) {
            os << a << "," << b << ",";
            bool first = true;
            for (int c = 0; c < r.rank; ++c)
                if (int32_t n = r.tensor.at(a, b, c)) {
                    os << (first ? "" : ";") << c << ":" << n;
                    first = false;
                }
            os << "\n";
        }
    return os.str();
}

int cmd_fusion(const RunConfig& cfg, const std::string& spec, const std::string& method_str,
               bool crosscheck) {
    DoubleData dd = build_double_data(build_group(spec));
    FusionMethod method = fusion_method_from_string(method_str);
    std::string key = table_hash(dd.g()) + "-fusion-" + method_str;
    FusionRing ring;
    Json payload;
    if (auto hit = cache_load(cfg, key); hit && !crosscheck) {
        ring = ring_from_json(*hit);
        payload = *hit;
        note(cfg, "cache hit: " + key);
    } else {
        FusionTensor t = fusion_tensor(dd, method, cfg.budget);
        if (crosscheck) {
            for (FusionMethod other : {FusionMethod::Verlinde, FusionMethod::Character,
                                       FusionMethod::Orbit, FusionMethod::Direct}) {
                if (other == method) continue;
                FusionTensor u = fusion_tensor(dd, other, cfg.budget);
                if (u.coeff != t.coeff) {
                    for (int a = 0; a < t.rank; ++a)
                        for (int b = 0; b < t.rank; ++b)
                            for (int c = 0; c < t.rank; ++c)
                                if (t.at(a, b, c) != u.at(a, b, c)) {
                                    std::cerr << "crosscheck failure: N(" << a << "," << b << ")^"
                                              << c << " is " << t.at(a, b, c) << " ("
                                              << to_string(method) << ") vs " << u.at(a, b, c)
                                              << " (" << to_string(other) << ")\n";
                                    return 2;
                                }
                }
            }
            note(cfg, "crosscheck: verlinde, character, orbit and direct methods agree");
        }
        ring = make_fusion_ring(dd, std::move(t));
        payload = fusion_to_json(ring, multiplicity_report(ring.tensor).max_coeff);
        cache_store(cfg, key, payload);
    }
    MultiplicityReport m = multiplicity_report(ring.tensor);
    if (cfg.format == "json")
        emit(cfg, payload.dump(1) + "\n");
    else if (cfg.format == "csv")
        emit(cfg, fusion_csv(ring));
    else
        emit(cfg, fusion_text(dd, ring, m));
    return 0;
}

// --- ring verbs ------------------------------------------------------------------

int cmd_ring_verify(const RunConfig& cfg, const std::string& file) {
    FusionRing r = ring_from_json(load_json_file(file));
    RingAxiomReport rep = verify_ring_axioms(r);
    std::ostringstream os;
    auto line = [&](const char* name, bool ok) {
        os << name << ": " << (ok ? "ok" : "FAIL") << "\n";
    };
    line("unit law", rep.unit_ok);
    line("commutativity", rep.commutative);
    line("associativity", rep.associative);
    line("duality via unit column", rep.dual_unit_ok);
    line("dual compatibility", rep.dual_compat);
    line("dimension multiplicativity", rep.dims_ok);
    for (const auto& f : rep.failures) os << "  " << f << "\n";
    emit(cfg, os.str());
    return rep.ok() ? 0 : 2;
}

int cmd_ring_compare(const RunConfig& cfg, const std::string& file_a, const std::string& file_b) {
    FusionRing a = ring_from_json(load_json_file(file_a));
    FusionRing b = ring_from_json(load_json_file(file_b));
    IsoOptions opts;
    opts.rank_budget = cfg.budget;
    auto phi = rings_isomorphic(a, b, opts);
    if (cfg.format == "json") {
        Json j{{"kind", "ring-compare"}, {"isomorphic", bool(phi)}};
        if (phi) {
            Json mapping = Json::array();
            for (int i = 0; i < a.rank; ++i)
                mapping.push_back(Json::array({a.labels[i], b.labels[(*phi)[i]]}));
            j["mapping"] = mapping;
        }
        emit(cfg, j.dump(1) + "\n");
    } else if (phi) {
        std::ostringstream os;
        os << "isomorphic\n";
        for (int i = 0; i < a.rank; ++i)
            os << "  " << a.labels[i] << " -> " << b.labels[(*phi)[i]] << "\n";
        emit(cfg, os.str());
    } else {
        emit(cfg, "none\n");
    }
    return 0;
}

int cmd_ring_type3(const RunConfig& cfg, int n) {
    DoubleData dd = build_double_data(build_group("dihedral:" + std::to_string(n)));
    FusionTensor t = fusion_tensor(dd, FusionMethod::Character, cfg.budget);
    Type3PatternReport rep = verify_type3_pattern(dd, t);
    std::ostringstream os;
    os << "type-B level-2 pattern for D(dihedral:" << n << ")\n";
    os << "  I = " << dd.objects[rep.unit_index].label << ", Z = " << dd.objects[rep.z_index].label
       << ", X = " << dd.objects[rep.x_index].label << ", X' = "
       << dd.objects[rep.xprime_index].label << "\n";
    os << "  Y objects: " << rep.y_count << "\n";
    os << "  X(x)X = I (+) sum Y, X(x)X' = Z (+) sum Y, X(x)Y = X (+) X', X(x)Z = X': "
       << (rep.ok ? "pass" : "FAIL") << "\n";
    for (const auto& f : rep.failures) os << "  " << f << "\n";
    emit(cfg, os.str());
    return rep.ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"exact modular data of Drinfeld doubles of finite groups"};
    app.set_version_flag("--version", kVersion);
    app.add_option("--format", cfg.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--cache-dir", cfg.cache_dir, "directory for the result cache");
    app.add_option("--budget", cfg.budget, "rank budget for tensors and ring search")
        ->check(CLI::PositiveNumber);
    app.add_flag("--quiet", cfg.quiet, "suppress progress notes on stderr");
    app.add_option("-o,--output", cfg.output, "write the report to a file instead of stdout");
    app.require_subcommand(1);

    std::string spec, method = "character", file_a, file_b;
    bool crosscheck = false;
    int type3_n = 0;

    CLI::App* group = app.add_subcommand("group", "finite-group queries");
    group->fallthrough();
    group->require_subcommand(1);
    CLI::App* ginfo = group->add_subcommand("info", "order, classes, centralizers, exponent");
    ginfo->fallthrough();
    ginfo->add_option("spec", spec, "group spec, e.g. dihedral:5")->required();

    CLI::App* dbl = app.add_subcommand("double", "Drinfeld double computations");
    dbl->fallthrough();
    dbl->require_subcommand(1);
    CLI::App* smat = dbl->add_subcommand("smatrix", "normalized S-matrix with invariant checks");
    smat->fallthrough();
    smat->add_option("spec", spec)->required();
    CLI::App* fus = dbl->add_subcommand("fusion", "fusion tensor and multiplicity report");
    fus->fallthrough();
    fus->add_option("spec", spec)->required();
    fus->add_option("--method", method, "verlinde, character, orbit or direct")
        ->check(CLI::IsMember({"verlinde", "character", "orbit", "direct"}));
    fus->add_flag("--crosscheck", crosscheck, "compute all four methods and compare");

    CLI::App* ring = app.add_subcommand("ring", "fusion-ring checks on fusion.json files");
    ring->fallthrough();
    ring->require_subcommand(1);
    CLI::App* rverify = ring->add_subcommand("verify", "fusion-ring axioms");
    rverify->fallthrough();
    rverify->add_option("file", file_a)->required();
    CLI::App* rcompare = ring->add_subcommand("compare", "isomorphism search between two rings");
    rcompare->fallthrough();
    rcompare->add_option("file_a", file_a)->required();
    rcompare->add_option("file_b", file_b)->required();
    CLI::App* rtype3 = ring->add_subcommand("type3-pattern", "X/X'/Y/Z identities for odd n");
    rtype3->fallthrough();
    rtype3->add_option("n", type3_n)->required()->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (ginfo->parsed()) return cmd_group_info(cfg, spec);
        if (smat->parsed()) return cmd_smatrix(cfg, spec);
        if (fus->parsed()) return cmd_fusion(cfg, spec, method, crosscheck);
        if (rverify->parsed()) return cmd_ring_verify(cfg, file_a);
        if (rcompare->parsed()) return cmd_ring_compare(cfg, file_a, file_b);
        if (rtype3->parsed()) return cmd_ring_type3(cfg, type3_n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 2;
    }
    return 3;
}
