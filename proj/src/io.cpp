#include "spinstrata/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace spinstrata {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void syntax_error_at(const std::string& bytes, std::size_t byte, const std::string& msg) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < bytes.size(); ++i) {
        if (bytes[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    throw SpinError(ErrorCode::Syntax,
                    "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

const char* jclass_name(JClass j) {
    switch (j) {
        case JClass::Generic: return "generic";
        case JClass::JZero: return "j_zero";
        case JClass::J1728: return "j_1728";
        case JClass::NotApplicable: return "none";
    }
    return "?";
}

JClass jclass_from(const std::string& s) {
    if (s == "generic") return JClass::Generic;
    if (s == "j_zero") return JClass::JZero;
    if (s == "j_1728") return JClass::J1728;
    if (s == "none") return JClass::NotApplicable;
    throw SpinError(ErrorCode::Syntax, "unknown j_class '" + s + "'");
}

// JSON object keyed by id -> dense index-based vector (identity by default)
template <typename Fill>
void fill_by_id(const json& obj, const char* what, const Fill& fill) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        std::size_t pos = 0;
        int id = 0;
        try {
            id = std::stoi(it.key(), &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != it.key().size())
            throw SpinError(ErrorCode::Syntax, std::string(what) + " key '" + it.key() + "' is not an id");
        fill(id, it.value());
    }
}

AutomorphismDatum parse_automorphism(const DualGraph& g, const json& ja) {
    AutomorphismDatum d = identity_datum(g, ja.value("name", "unnamed"));
    if (ja.contains("vertex_perm"))
        fill_by_id(ja.at("vertex_perm"), "vertex_perm", [&](int id, const json& v) {
            d.vertex_perm[static_cast<std::size_t>(g.vertex_index(id))] = g.vertex_index(v.get<int>());
        });
    if (ja.contains("edge_perm"))
        fill_by_id(ja.at("edge_perm"), "edge_perm", [&](int id, const json& v) {
            d.edge_perm[static_cast<std::size_t>(g.edge_index(id))] = g.edge_index(v.get<int>());
        });
    if (ja.contains("component_types"))
        fill_by_id(ja.at("component_types"), "component_types", [&](int id, const json& v) {
            auto t = component_type_from_name(v.get<std::string>());
            if (!t)
                throw SpinError(ErrorCode::Syntax, "unknown component type '" + v.get<std::string>() + "'");
            d.component_type[static_cast<std::size_t>(g.vertex_index(id))] = *t;
        });
    if (ja.contains("node_scalars"))
        fill_by_id(ja.at("node_scalars"), "node_scalars", [&](int id, const json& v) {
            d.node_scalar_t[static_cast<std::size_t>(g.edge_index(id))] =
                RootOfUnity::from_exponent(parse_rational(v.get<std::string>()));
        });
    if (ja.contains("block_exponents"))
        fill_by_id(ja.at("block_exponents"), "block_exponents", [&](int id, const json& v) {
            std::vector<Rational> exps;
            for (const auto& x : v) exps.push_back(parse_rational(x.get<std::string>()));
            d.block_exponents[static_cast<std::size_t>(g.vertex_index(id))] = std::move(exps);
        });
    if (ja.contains("liftable")) d.liftable = ja.at("liftable").get<bool>();
    if (ja.contains("is_eta2")) d.is_eta2_flag = ja.at("is_eta2").get<bool>();
    return d;
}

ordered_json rational_json(const Rational& r) { return format_rational(r); }

} // namespace

AnalysisRequest parse_request(const std::string& bytes) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
        syntax_error_at(bytes, e.byte, e.what());
    }
    try {
        AnalysisRequest req;
        std::vector<Vertex> vertices;
        for (const auto& jv : doc.at("vertices")) {
            Vertex v;
            v.id = jv.at("id").get<int>();
            v.genus = jv.at("genus").get<int>();
            if (jv.contains("j_class")) v.dec.j_class = jclass_from(jv.at("j_class").get<std::string>());
            for (const auto& t : jv.value("tags", json::array())) {
                std::string tag = t.get<std::string>();
                if (tag == "hyperelliptic_g2")
                    v.dec.hyperelliptic_g2 = true;
                else if (tag == "hyperelliptic_g3")
                    v.dec.hyperelliptic_g3 = true;
                else if (tag == "bielliptic_g2")
                    v.dec.bielliptic_g2 = true;
                else
                    throw SpinError(ErrorCode::Syntax, "unknown tag '" + tag + "'");
            }
            vertices.push_back(v);
        }
        std::vector<Edge> edges;
        for (const auto& je : doc.value("edges", json::array())) {
            Edge e;
            e.id = je.at("id").get<int>();
            e.u = je.at("ends").at(0).get<int>();
            e.v = je.at("ends").at(1).get<int>();
            edges.push_back(e);
        }
        req.graph = make_graph(std::move(vertices), std::move(edges));

        if (doc.contains("supports")) {
            const json& js = doc.at("supports");
            if (js.is_string()) {
                if (js.get<std::string>() != "all")
                    throw SpinError(ErrorCode::Syntax, "supports must be \"all\" or a list of id lists");
                req.all_supports = true;
            } else {
                for (const auto& lst : js) {
                    std::vector<int> ids;
                    for (const auto& x : lst) {
                        req.graph.edge_index(x.get<int>()); // reference check
                        ids.push_back(x.get<int>());
                    }
                    req.support_lists.push_back(std::move(ids));
                }
            }
        }

        if (doc.contains("thetas")) {
            const json& jt = doc.at("thetas");
            req.thetas.gluing_class = jt.value("gluing_class", 0LL);
            for (const auto& jl : jt.value("vertices", json::array())) {
                int vid = jl.at("vertex").get<int>();
                req.graph.vertex_index(vid); // reference check
                ThetaLabel label;
                label.label = jl.value("label", "");
                if (jl.contains("trivial_on_elliptic"))
                    label.trivial_on_elliptic = jl.at("trivial_on_elliptic").get<bool>();
                req.thetas.by_vertex[vid] = std::move(label);
            }
        }

        for (const auto& ja : doc.value("automorphisms", json::array())) {
            AutomorphismDatum d = parse_automorphism(req.graph, ja);
            validate_datum(req.graph, d);
            LiftingGenerator gen;
            gen.is_eta2 = d.is_eta2_flag ? *d.is_eta2_flag : is_eta2_datum(req.graph, d);
            gen.datum = std::move(d);
            req.automorphisms.push_back(std::move(gen));
        }

        if (doc.contains("options")) {
            const json& jo = doc.at("options");
            req.options.closure_cap = jo.value("closure_cap", 1000000LL);
            req.options.format = jo.value("format", "text");
            if (req.options.format != "text" && req.options.format != "json")
                throw SpinError(ErrorCode::Syntax, "format must be \"text\" or \"json\"");
        }
        return req;
    } catch (const json::exception& e) {
        throw SpinError(ErrorCode::Syntax, e.what());
    }
}

std::string serialize_request(const AnalysisRequest& req) {
    ordered_json doc;
    doc["vertices"] = ordered_json::array();
    for (const Vertex& v : req.graph.vertices()) {
        ordered_json jv;
        jv["id"] = v.id;
        jv["genus"] = v.genus;
        if (v.dec.j_class != JClass::NotApplicable) jv["j_class"] = jclass_name(v.dec.j_class);
        ordered_json tags = ordered_json::array();
        if (v.dec.hyperelliptic_g2) tags.push_back("hyperelliptic_g2");
        if (v.dec.hyperelliptic_g3) tags.push_back("hyperelliptic_g3");
        if (v.dec.bielliptic_g2) tags.push_back("bielliptic_g2");
        if (!tags.empty()) jv["tags"] = tags;
        doc["vertices"].push_back(jv);
    }
    doc["edges"] = ordered_json::array();
    for (const Edge& e : req.graph.edges())
        doc["edges"].push_back(ordered_json{{"id", e.id}, {"ends", {e.u, e.v}}});
    if (req.all_supports)
        doc["supports"] = "all";
    else if (!req.support_lists.empty())
        doc["supports"] = req.support_lists;
    if (!req.thetas.by_vertex.empty() || req.thetas.gluing_class != 0) {
        ordered_json jt;
        jt["gluing_class"] = req.thetas.gluing_class;
        jt["vertices"] = ordered_json::array();
        for (const auto& [vid, label] : req.thetas.by_vertex) {
            ordered_json jl;
            jl["vertex"] = vid;
            jl["label"] = label.label;
            if (label.trivial_on_elliptic) jl["trivial_on_elliptic"] = *label.trivial_on_elliptic;
            jt["vertices"].push_back(jl);
        }
        doc["thetas"] = jt;
    }
    if (!req.automorphisms.empty()) {
        doc["automorphisms"] = ordered_json::array();
        for (const LiftingGenerator& gen : req.automorphisms) {
            const AutomorphismDatum& d = gen.datum;
            const DualGraph& g = req.graph;
            ordered_json ja;
            ja["name"] = d.name;
            ordered_json vp, ep, ct, ns;
            for (std::size_t i = 0; i < g.vertices().size(); ++i)
                vp[std::to_string(g.vertices()[i].id)] =
                    g.vertices()[static_cast<std::size_t>(d.vertex_perm[i])].id;
            for (std::size_t i = 0; i < g.edges().size(); ++i)
                ep[std::to_string(g.edges()[i].id)] =
                    g.edges()[static_cast<std::size_t>(d.edge_perm[i])].id;
            for (std::size_t i = 0; i < g.vertices().size(); ++i)
                ct[std::to_string(g.vertices()[i].id)] = component_type_name(d.component_type[i]);
            for (std::size_t i = 0; i < g.edges().size(); ++i)
                ns[std::to_string(g.edges()[i].id)] = format_rational(d.node_scalar_t[i].exponent());
            ja["vertex_perm"] = vp;
            ja["edge_perm"] = ep;
            ja["component_types"] = ct;
            ja["node_scalars"] = ns;
            ordered_json be;
            for (std::size_t i = 0; i < g.vertices().size(); ++i) {
                if (!d.block_exponents[i]) continue;
                ordered_json lst = ordered_json::array();
                for (const Rational& r : *d.block_exponents[i]) lst.push_back(rational_json(r));
                be[std::to_string(g.vertices()[i].id)] = lst;
            }
            if (!be.empty()) ja["block_exponents"] = be;
            if (d.liftable) ja["liftable"] = *d.liftable;
            ja["is_eta2"] = gen.is_eta2;
            doc["automorphisms"].push_back(ja);
        }
    }
    doc["options"] = ordered_json{{"closure_cap", req.options.closure_cap},
                                  {"format", req.options.format}};
    return doc.dump(2) + "\n";
}

namespace {

void analyze_one(const AnalysisRequest& req, const AnalysisActions& act, const SpinSupport& s,
                 SupportReport& out) {
    out.exceptional_ids = mask_to_edge_ids(req.graph, s.exceptional());
    DualGraph sigma = s.sigma_graph();
    out.sigma_vertices = static_cast<int>(sigma.vertices().size());
    out.sigma_edges = static_cast<int>(sigma.edges().size());
    out.sigma_tree_like = sigma.is_tree_like();
    out.gluing_count = s.gluing_count();
    out.tail_nodes = s.count_class(EdgeClass::TailNode);
    out.disconnecting_nodes = s.count_class(EdgeClass::DisconnectingExceptional);

    std::vector<LiftingGenerator> lifting;
    for (const LiftingGenerator& gen : req.automorphisms) {
        bool liftable = resolve_liftable(req.graph, gen.datum, req.thetas);
        long long count = lifting_count(s, gen.datum, liftable);
        out.lifting_counts.emplace_back(gen.datum.name, count);
        if (count > 0) lifting.push_back(gen);
    }

    if (act.classify || act.oracle)
        out.classification = classify_stratum(s, req.thetas, lifting);

    if (act.oracle) {
        auto group = lifted_tau_group(s, lifting, req.options.closure_cap);
        out.oracle_smooth = smooth_by_closure(group);
        out.oracle_canonical = canonical_oracle(prill_image(group)).first;
        bool criterion_smooth = out.classification->verdict == Verdict::Smooth;
        bool criterion_canonical = out.classification->verdict != Verdict::NonCanonicalSingular;
        out.oracle_agrees =
            *out.oracle_smooth == criterion_smooth && *out.oracle_canonical == criterion_canonical;
    }
}

} // namespace

AnalysisReport run_analysis(const AnalysisRequest& req, const AnalysisActions& act) {
    AnalysisReport rep;
    rep.genus = req.graph.genus();

    std::vector<SpinSupport> supports;
    std::vector<SupportReport> entries;
    if (req.all_supports || act.enumerate_supports) {
        for (SpinSupport& s : enumerate_supports(req.graph)) supports.push_back(std::move(s));
        entries.resize(supports.size());
    } else if (!req.support_lists.empty()) {
        for (const auto& ids : req.support_lists) {
            SupportReport entry;
            try {
                supports.push_back(make_support(req.graph, ids));
            } catch (const SpinError& e) {
                entry.exceptional_ids = ids;
                entry.error = e.what();
                entry.error_code = e.code();
            }
            entries.push_back(std::move(entry));
        }
    } else {
        supports.push_back(make_support(req.graph, req.graph.full_mask()));
        entries.resize(1);
    }

    // map report row -> support row (rows that failed to build have no support)
    std::vector<int> support_of_entry;
    {
        int si = 0;
        for (const SupportReport& e : entries) support_of_entry.push_back(e.error ? -1 : si++);
    }

#ifdef SPINSTRATA_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (support_of_entry[i] < 0) continue;
        const SpinSupport& s = supports[static_cast<std::size_t>(support_of_entry[i])];
        try {
            analyze_one(req, act, s, entries[i]);
        } catch (const SpinError& e) {
            entries[i].exceptional_ids = mask_to_edge_ids(req.graph, s.exceptional());
            entries[i].error = e.what();
            entries[i].error_code = e.code();
        }
    }
    rep.supports = std::move(entries);

    if (act.audit_degree) {
        rep.audit_value = fiber_degree_audit(req.graph);
        rep.audit_pass = *rep.audit_value == Rational(1LL << (2 * rep.genus));
    }
    return rep;
}

std::string report_to_json(const AnalysisReport& rep) {
    ordered_json doc;
    doc["genus"] = rep.genus;
    doc["supports"] = ordered_json::array();
    for (const SupportReport& s : rep.supports) {
        ordered_json js;
        js["exceptional"] = s.exceptional_ids;
        if (s.error) {
            js["error"] = *s.error;
            js["error_code"] = error_code_name(*s.error_code);
            doc["supports"].push_back(js);
            continue;
        }
        js["sigma"] = ordered_json{{"vertices", s.sigma_vertices},
                                   {"edges", s.sigma_edges},
                                   {"tree_like", s.sigma_tree_like}};
        js["gluing_count"] = s.gluing_count;
        js["tail_nodes"] = s.tail_nodes;
        js["disconnecting_nodes"] = s.disconnecting_nodes;
        ordered_json lifts = ordered_json::array();
        for (const auto& [name, count] : s.lifting_counts)
            lifts.push_back(ordered_json{{"automorphism", name}, {"count", count}});
        js["lifting_counts"] = lifts;
        if (s.classification) {
            ordered_json jc;
            jc["verdict"] = verdict_name(s.classification->verdict);
            jc["sigma_tree_like"] = s.classification->sigma_tree_like;
            if (s.classification->offending_generator)
                jc["offending_generator"] = *s.classification->offending_generator;
            if (s.classification->tail_witness_vertex)
                jc["tail_witness_vertex"] = *s.classification->tail_witness_vertex;
            js["classification"] = jc;
        }
        if (s.oracle_smooth) {
            js["oracle"] = ordered_json{{"smooth", *s.oracle_smooth},
                                        {"canonical", *s.oracle_canonical},
                                        {"agrees", *s.oracle_agrees}};
        }
        doc["supports"].push_back(js);
    }
    if (rep.audit_value) {
        doc["audit"] = ordered_json{{"value", rational_json(*rep.audit_value)},
                                    {"expected", rational_json(Rational(1LL << (2 * rep.genus)))},
                                    {"pass", *rep.audit_pass}};
    }
    return doc.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& rep) {
    std::ostringstream os;
    os << "genus " << rep.genus << ", " << rep.supports.size() << " support"
       << (rep.supports.size() == 1 ? "" : "s") << "\n";
    for (std::size_t i = 0; i < rep.supports.size(); ++i) {
        const SupportReport& s = rep.supports[i];
        os << "support " << i << ": N = {";
        for (std::size_t k = 0; k < s.exceptional_ids.size(); ++k)
            os << (k ? "," : "") << s.exceptional_ids[k];
        os << "}";
        if (s.error) {
            os << " ERROR " << *s.error << "\n";
            continue;
        }
        os << "\n  sigma: " << s.sigma_vertices << " vertices, " << s.sigma_edges << " edges, "
           << (s.sigma_tree_like ? "tree-like" : "not tree-like") << "\n"
           << "  gluings " << s.gluing_count << ", tail nodes " << s.tail_nodes
           << ", other disconnecting " << s.disconnecting_nodes << "\n";
        for (const auto& [name, count] : s.lifting_counts)
            os << "  lifts of " << name << ": " << count << "\n";
        if (s.classification) {
            os << "  verdict: " << verdict_name(s.classification->verdict);
            if (s.classification->tail_witness_vertex)
                os << " (tail vertex " << *s.classification->tail_witness_vertex << ")";
            if (s.classification->offending_generator)
                os << " (generator " << *s.classification->offending_generator << ")";
            os << "\n";
        }
        if (s.oracle_smooth) {
            os << "  oracle: smooth " << (*s.oracle_smooth ? "yes" : "no") << ", canonical "
               << (*s.oracle_canonical ? "yes" : "no") << ", "
               << (*s.oracle_agrees ? "agrees" : "DISAGREES") << "\n";
        }
    }
    if (rep.audit_value) {
        os << "degree audit: " << format_rational(*rep.audit_value) << " expected "
           << format_rational(Rational(1LL << (2 * rep.genus))) << " -> "
           << (*rep.audit_pass ? "pass" : "FAIL") << "\n";
    }
    return os.str();
}

} // namespace spinstrata
