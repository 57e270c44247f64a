#include <json.hpp>

#include "locsep/decomposition.hpp"

namespace locsep {

using json = nlohmann::ordered_json;

const char* to_string(Pipeline p) {
    switch (p) {
        case Pipeline::canonical: return "canonical";
        case Pipeline::greedy: return "greedy";
        case Pipeline::blockcut: return "blockcut";
    }
    return "canonical";
}

namespace {

json scale_json(Scale r) { return r.infinite ? json("inf") : json(r.value); }

Scale parse_scale(const json& j) {
    if (j.is_string()) {
        require(j.get<std::string>() == "inf", ErrorKind::input, "r must be an integer or \"inf\"");
        return Scale::inf();
    }
    return Scale::of(j.get<long>());
}

json step_json(const CutStep& s) {
    json torso = json::array();
    for (const TorsoEdge& t : s.torso_edges)
        torso.push_back({{"id", t.edge_id}, {"start", t.start}, {"end", t.end}, {"component", t.component},
                         {"weight", t.weight}, {"artificial", t.artificial}});
    return {{"separator", {s.separator.first, s.separator.second}},
            {"lifted", {s.lifted.first, s.lifted.second}},
            {"local_components", s.num_local_components},
            {"artificial_components", s.artificial_components},
            {"torso_edges", torso}};
}

CutStep parse_step(const json& j) {
    CutStep s;
    s.separator = {j.at("separator").at(0).get<std::string>(), j.at("separator").at(1).get<std::string>()};
    s.lifted = {j.at("lifted").at(0).get<std::string>(), j.at("lifted").at(1).get<std::string>()};
    s.num_local_components = j.at("local_components").get<int>();
    s.artificial_components = j.at("artificial_components").get<std::vector<int>>();
    for (const json& t : j.at("torso_edges"))
        s.torso_edges.push_back({t.at("id").get<int>(), t.at("start").get<std::string>(), t.at("end").get<std::string>(),
                                 t.at("component").get<int>(), t.at("weight").get<long>(), t.at("artificial").get<bool>()});
    return s;
}

EdgeTag parse_tag(const std::string& s) {
    if (s == "original") return EdgeTag::original;
    if (s == "torso") return EdgeTag::torso;
    if (s == "subdivision") return EdgeTag::subdivision;
    fail(ErrorKind::input, "unknown edge tag '" + s + "'");
}

}  // namespace

std::string to_json(const MultiGraph& g, const GraphDecomposition& d, Pipeline kind, const CutCertificate& cert,
                    const Metrics& m) {
    json j;
    j["graph_hash"] = graph_hash(g);
    j["r"] = scale_json(d.r);
    j["pipeline"] = to_string(kind);
    json bags = json::array();
    for (std::size_t b = 0; b < d.bags.size(); ++b) {
        const MultiGraph& bg = d.bags[b].graph;
        json edges = json::array();
        for (const Edge& e : bg.edges())
            edges.push_back({{"id", e.id}, {"u", bg.name(e.u)}, {"v", bg.name(e.v)}, {"len", e.len}, {"tag", to_string(e.tag)}});
        bags.push_back({{"id", b}, {"vertices", bg.names()}, {"roots", d.bags[b].roots}, {"edges", edges},
                        {"artificial", d.bags[b].artificial}});
    }
    j["bags"] = bags;
    json seps = json::array();
    for (std::size_t s = 0; s < d.separators.size(); ++s)
        seps.push_back({{"id", s}, {"vertices", d.separators[s].vertices}, {"has_edge", d.separators[s].has_edge}});
    j["separators"] = seps;
    json incs = json::array();
    for (const auto& inc : d.incidences) {
        json iota = json::object();
        const auto& sep = d.separators[inc.sep];
        for (std::size_t i = 0; i < inc.iota.size(); ++i) iota[sep.vertices[i]] = d.bags[inc.bag].graph.name(inc.iota[i]);
        incs.push_back({{"sep", inc.sep}, {"bag", inc.bag}, {"iota", iota}, {"torso_weight", inc.torso_weight}});
    }
    j["edges"] = incs;
    json steps = json::array();
    for (const CutStep& s : cert.steps) steps.push_back(step_json(s));
    j["certificate"] = steps;
    json loc = m.locality.infinite ? json("inf") : json(m.locality.value);
    j["metrics"] = {{"width", m.width}, {"adhesion", m.adhesion}, {"locality", loc},
                    {"locality_is_lower_bound", m.locality.lower_bound}};
    return j.dump(2) + "\n";
}

ParsedDecomposition parse_decomposition_json(const std::string& text) {
    ParsedDecomposition out;
    try {
        const json j = json::parse(text);
        out.graph_hash = j.at("graph_hash").get<std::string>();
        GraphDecomposition& d = out.decomposition;
        d.r = parse_scale(j.at("r"));
        const std::string kind = j.at("pipeline").get<std::string>();
        if (kind == "canonical") out.kind = Pipeline::canonical;
        else if (kind == "greedy") out.kind = Pipeline::greedy;
        else if (kind == "blockcut") out.kind = Pipeline::blockcut;
        else fail(ErrorKind::input, "unknown pipeline '" + kind + "'");
        for (const json& b : j.at("bags")) {
            GraphDecomposition::Bag bag;
            for (const json& v : b.at("vertices")) bag.graph.add_vertex(v.get<std::string>());
            for (const json& e : b.at("edges"))
                bag.graph.add_edge(bag.graph.index(e.at("u").get<std::string>()), bag.graph.index(e.at("v").get<std::string>()),
                                   e.at("len").get<long>(), parse_tag(e.at("tag").get<std::string>()), e.at("id").get<int>());
            bag.roots = b.at("roots").get<std::vector<std::string>>();
            bag.artificial = b.at("artificial").get<bool>();
            d.bags.push_back(std::move(bag));
        }
        for (const json& s : j.at("separators"))
            d.separators.push_back({s.at("vertices").get<std::vector<std::string>>(), s.at("has_edge").get<bool>()});
        for (const json& e : j.at("edges")) {
            GraphDecomposition::Incidence inc;
            inc.sep = e.at("sep").get<int>();
            inc.bag = e.at("bag").get<int>();
            require(inc.sep >= 0 && inc.sep < static_cast<int>(d.separators.size()) && inc.bag >= 0 &&
                        inc.bag < static_cast<int>(d.bags.size()),
                    ErrorKind::input, "decomposition edge refers to an unknown node");
            for (const auto& v : d.separators[inc.sep].vertices)
                inc.iota.push_back(d.bags[inc.bag].graph.index(e.at("iota").at(v).get<std::string>()));
            inc.torso_weight = e.at("torso_weight").get<long>();
            d.incidences.push_back(std::move(inc));
        }
        for (const json& s : j.at("certificate")) out.certificate.steps.push_back(parse_step(s));
        const json& m = j.at("metrics");
        out.metrics.width = m.at("width").get<int>();
        out.metrics.adhesion = m.at("adhesion").get<int>();
        if (m.at("locality").is_string()) {
            out.metrics.locality.infinite = true;
        } else {
            out.metrics.locality.value = m.at("locality").get<long>();
        }
        out.metrics.locality.lower_bound = m.at("locality_is_lower_bound").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::input, std::string("malformed decomposition JSON: ") + e.what());
    }
    return out;
}

}  // namespace locsep
