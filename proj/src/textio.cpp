#include "qfg/textio.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qfg/graph.hpp"

namespace qfg {

using nlohmann::json;

namespace {

[[noreturn]] void syntax_error(const std::string& text, size_t pos, const std::string& what) {
    std::ostringstream os;
    os << "syntax error at position " << pos << ": " << what << " in \"" << text << "\"";
    throw std::invalid_argument(os.str());
}

int parse_int(const std::string& text, const std::string& tok, size_t tok_pos, size_t& i) {
    size_t start = i;
    if (i < tok.size() && (tok[i] == '-' || tok[i] == '+')) ++i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(tok[start]))))
        syntax_error(text, tok_pos + start, "expected an integer");
    return std::stoi(tok.substr(start, i - start));
}

}  // namespace

PseudoFactorization parse_poly_spec(const std::string& text) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || (text[i] != 'A' && text[i] != 'a'))
        syntax_error(text, i, "expected diagram header like \"A3;\"");
    ++i;
    size_t rank_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == rank_start) syntax_error(text, i, "expected the rank");
    int rank = std::stoi(text.substr(rank_start, i - rank_start));
    if (i >= text.size() || text[i] != ';') syntax_error(text, i, "expected ';' after the rank");
    ++i;
    CartanContext ctx = make_type_a(rank);

    PseudoFactorization out{ctx, {}};
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        size_t tok_pos = i;
        size_t end = i;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        std::string tok = text.substr(i, end - i);
        i = end;

        size_t p = 0;
        int node = parse_int(text, tok, tok_pos, p);
        if (p >= tok.size() || tok[p] != ':')
            syntax_error(text, tok_pos + p, "expected ':' after the node");
        ++p;
        int center = parse_int(text, tok, tok_pos, p);
        int width = 1;
        if (p < tok.size() && tok[p] == ':') {
            ++p;
            width = parse_int(text, tok, tok_pos, p);
        }
        int mult = 1;
        if (p < tok.size() && (tok[p] == 'x' || tok[p] == 'X')) {
            ++p;
            mult = parse_int(text, tok, tok_pos, p);
        }
        if (p != tok.size()) syntax_error(text, tok_pos + p, "trailing characters in factor");
        if (!ctx.valid_node(node))
            syntax_error(text, tok_pos, "node outside diagram of rank " + std::to_string(rank));
        if (width < 1) syntax_error(text, tok_pos, "width must be positive");
        if (mult < 1) syntax_error(text, tok_pos, "multiplicity must be positive");
        for (int m = 0; m < mult; ++m) out.factors.push_back({node, center, width});
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

std::string factor_token(const KRFactor& f) {
    std::ostringstream os;
    os << f.node << ':' << f.center;
    if (f.width != 1) os << ':' << f.width;
    return os.str();
}

std::string print_poly_spec(const PseudoFactorization& f) {
    std::vector<KRFactor> sorted = f.factors;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    os << 'A' << f.ctx.rank << ';';
    for (size_t k = 0; k < sorted.size();) {
        size_t run = 1;
        while (k + run < sorted.size() && sorted[k + run] == sorted[k]) ++run;
        os << ' ' << factor_token(sorted[k]);
        if (run > 1) os << 'x' << run;
        k += run;
    }
    return os.str();
}

std::string print_poly_spec(const DrinfeldPoly& pi) {
    return print_poly_spec(fundamental_factorization(pi));
}

PseudoFactorization normalize_per_component(const PseudoFactorization& f) {
    QFGraph g = build_graph(f);
    PseudoFactorization out = f;
    for (const auto& comp : connected_components(g)) {
        int mn = 0;
        bool first = true;
        for (VertexId v : comp) {
            const KRFactor& kf = g.vertices[static_cast<size_t>(v)];
            int low = kf.center - kf.width + 1;  // smallest fundamental exponent
            mn = first ? low : std::min(mn, low);
            first = false;
        }
        for (VertexId v : comp) out.factors[static_cast<size_t>(v)].center -= mn;
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

// ---- ledger -------------------------------------------------------------------

namespace {

DrinfeldPoly poly_from_spec(const std::string& spec) { return poly_of(parse_poly_spec(spec)); }

}  // namespace

json ledger_to_json(const AssumptionLedger& ledger) {
    json out = json::array();
    for (const auto& f : ledger.facts) {
        json jf;
        jf["kind"] = fact_kind_name(f.kind);
        jf["left"] = print_poly_spec(f.left);
        if (f.right) jf["right"] = print_poly_spec(*f.right);
        if (f.kind == LedgerFact::Kind::KkopLe) jf["k"] = f.k;
        if (!f.note.empty()) jf["note"] = f.note;
        out.push_back(jf);
    }
    return out;
}

AssumptionLedger ledger_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("ledger must be a JSON array of facts");
    AssumptionLedger out;
    for (const auto& jf : j) {
        LedgerFact f;
        f.kind = fact_kind_from_name(jf.at("kind").get<std::string>());
        f.left = poly_from_spec(jf.at("left").get<std::string>());
        if (jf.contains("right")) f.right = poly_from_spec(jf.at("right").get<std::string>());
        if (jf.contains("k")) f.k = jf.at("k").get<int>();
        if (jf.contains("note")) f.note = jf.at("note").get<std::string>();
        bool needs_right = f.kind != LedgerFact::Kind::Real;
        if (needs_right && !f.right)
            throw std::invalid_argument("ledger fact of kind " + fact_kind_name(f.kind) +
                                        " needs a right operand");
        out.facts.push_back(std::move(f));
    }
    return out;
}

AssumptionLedger load_ledger_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open ledger file: " + path);
    json j;
    in >> j;
    return ledger_from_json(j);
}

// ---- invariant traces -----------------------------------------------------------

json trace_to_json(const KkopTrace& t) {
    json out;
    out["rule"] = t.rule;
    out["left"] = print_poly_spec(t.left);
    out["right"] = print_poly_spec(t.right);
    out["upper"] = t.upper >= kUnboundedUpper ? -1 : t.upper;
    if (!t.chain.empty()) {
        json jc = json::array();
        for (const auto& w : t.chain) jc.push_back(factor_token({w.node, w.center, 1}));
        out["chain"] = jc;
    }
    if (t.fact_index >= 0) out["fact"] = t.fact_index;
    if (!t.children.empty()) {
        json jc = json::array();
        for (const auto& c : t.children) jc.push_back(trace_to_json(c));
        out["children"] = jc;
    }
    return out;
}

KkopTrace trace_from_json(const json& j) {
    KkopTrace t;
    t.rule = j.at("rule").get<std::string>();
    t.left = poly_from_spec(j.at("left").get<std::string>());
    t.right = poly_from_spec(j.at("right").get<std::string>());
    int u = j.at("upper").get<int>();
    t.upper = u < 0 ? kUnboundedUpper : u;
    if (j.contains("chain")) {
        for (const auto& tok : j.at("chain")) {
            PseudoFactorization one =
                parse_poly_spec("A" + std::to_string(t.left.ctx.rank) + "; " +
                                tok.get<std::string>());
            for (const auto& f : one.factors) t.chain.push_back({f.node, f.center});
        }
    }
    if (j.contains("fact")) t.fact_index = j.at("fact").get<int>();
    if (j.contains("children"))
        for (const auto& c : j.at("children")) t.children.push_back(trace_from_json(c));
    return t;
}

// ---- certificates ----------------------------------------------------------------

namespace {

std::string part_real_rule_name(PartReal::Rule r) {
    switch (r) {
        case PartReal::Rule::SingletonKr: return "singleton_kr";
        case PartReal::Rule::Ledger: return "ledger";
        case PartReal::Rule::SubChain: return "subchain";
    }
    throw std::logic_error("bad rule");
}

PartReal::Rule part_real_rule_from(const std::string& s) {
    if (s == "singleton_kr") return PartReal::Rule::SingletonKr;
    if (s == "ledger") return PartReal::Rule::Ledger;
    if (s == "subchain") return PartReal::Rule::SubChain;
    throw std::invalid_argument("unknown part-reality rule: " + s);
}

std::string hlw_rule_name(HlwStep::Rule r) {
    switch (r) {
        case HlwStep::Rule::Top: return "top_subgraph";
        case HlwStep::Rule::Bottom: return "bottom_subgraph";
        case HlwStep::Rule::Ledger: return "ledger";
        case HlwStep::Rule::LedgerKkopCut: return "ledger_invariant_cut";
    }
    throw std::logic_error("bad rule");
}

HlwStep::Rule hlw_rule_from(const std::string& s) {
    if (s == "top_subgraph") return HlwStep::Rule::Top;
    if (s == "bottom_subgraph") return HlwStep::Rule::Bottom;
    if (s == "ledger") return HlwStep::Rule::Ledger;
    if (s == "ledger_invariant_cut") return HlwStep::Rule::LedgerKkopCut;
    throw std::invalid_argument("unknown highest-weight rule: " + s);
}

std::string simplicity_rule_name(SimplicityStep::Rule r) {
    switch (r) {
        case SimplicityStep::Rule::Dissociate: return "dissociate";
        case SimplicityStep::Rule::ValenceLeOne: return "valence_le_1";
        case SimplicityStep::Rule::SnakeAdjacency: return "snake_adjacency";
        case SimplicityStep::Rule::KkopLeOne: return "invariant_le_1";
        case SimplicityStep::Rule::Ledger: return "ledger";
    }
    throw std::logic_error("bad rule");
}

SimplicityStep::Rule simplicity_rule_from(const std::string& s) {
    if (s == "dissociate") return SimplicityStep::Rule::Dissociate;
    if (s == "valence_le_1") return SimplicityStep::Rule::ValenceLeOne;
    if (s == "snake_adjacency") return SimplicityStep::Rule::SnakeAdjacency;
    if (s == "invariant_le_1") return SimplicityStep::Rule::KkopLeOne;
    if (s == "ledger") return SimplicityStep::Rule::Ledger;
    throw std::invalid_argument("unknown simplicity rule: " + s);
}

}  // namespace

json certificate_to_json(const QuochainCertificate& cert) {
    json out;
    out["schema"] = "qfg.certificate/1";
    out["rank"] = cert.ctx.rank;
    json jg = json::array();
    for (const auto& f : cert.graph_vertices) jg.push_back(factor_token(f));
    out["graph"] = jg;
    out["poly"] = print_poly_spec(poly_of(PseudoFactorization{cert.ctx, cert.graph_vertices}));
    out["strong"] = cert.strong;
    out["conditional"] = cert.conditional;
    out["assumptions"] = ledger_to_json(AssumptionLedger{cert.assumptions});
    json parts = json::array();
    for (const auto& p : cert.parts) {
        json jp;
        jp["vertices"] = p.ids;
        json jf = json::array();
        for (const auto& f : p.factors) jf.push_back(factor_token(f));
        jp["factors"] = jf;
        jp["terminal"] = p.terminal;
        json jr;
        jr["rule"] = part_real_rule_name(p.real.rule);
        if (p.real.fact_index >= 0) jr["fact"] = p.real.fact_index;
        if (p.real.subchain) jr["chain"] = certificate_to_json(*p.real.subchain);
        jp["real"] = jr;
        if (!p.terminal) {
            json jh;
            jh["rule"] = hlw_rule_name(p.hlw.rule);
            if (p.hlw.fact_index >= 0) jh["fact"] = p.hlw.fact_index;
            jp["hlw"] = jh;
            json js;
            js["rule"] = simplicity_rule_name(p.simplicity.rule);
            if (p.simplicity.fact_index >= 0) js["fact"] = p.simplicity.fact_index;
            if (p.simplicity.kkop) js["trace"] = trace_to_json(*p.simplicity.kkop);
            jp["simplicity"] = js;
        }
        parts.push_back(jp);
    }
    out["quochain"] = parts;
    return out;
}

QuochainCertificate certificate_from_json(const json& j) {
    if (j.value("schema", "") != "qfg.certificate/1")
        throw std::invalid_argument("unknown certificate schema");
    QuochainCertificate cert;
    cert.ctx = make_type_a(j.at("rank").get<int>());
    std::string header = "A" + std::to_string(cert.ctx.rank) + "; ";
    for (const auto& tok : j.at("graph")) {
        PseudoFactorization one = parse_poly_spec(header + tok.get<std::string>());
        if (one.factors.size() != 1) throw std::invalid_argument("bad vertex token");
        cert.graph_vertices.push_back(one.factors[0]);
    }
    cert.strong = j.value("strong", false);
    cert.conditional = j.value("conditional", false);
    cert.assumptions = ledger_from_json(j.value("assumptions", json::array())).facts;
    for (const auto& jp : j.at("quochain")) {
        QuochainPart p;
        for (const auto& v : jp.at("vertices")) p.ids.push_back(v.get<int>());
        for (const auto& tok : jp.at("factors")) {
            PseudoFactorization one = parse_poly_spec(header + tok.get<std::string>());
            if (one.factors.size() != 1) throw std::invalid_argument("bad factor token");
            p.factors.push_back(one.factors[0]);
        }
        p.terminal = jp.value("terminal", false);
        const json& jr = jp.at("real");
        p.real.rule = part_real_rule_from(jr.at("rule").get<std::string>());
        p.real.fact_index = jr.value("fact", -1);
        if (jr.contains("chain"))
            p.real.subchain =
                std::make_shared<QuochainCertificate>(certificate_from_json(jr.at("chain")));
        if (!p.terminal) {
            const json& jh = jp.at("hlw");
            p.hlw.rule = hlw_rule_from(jh.at("rule").get<std::string>());
            p.hlw.fact_index = jh.value("fact", -1);
            const json& js = jp.at("simplicity");
            p.simplicity.rule = simplicity_rule_from(js.at("rule").get<std::string>());
            p.simplicity.fact_index = js.value("fact", -1);
            if (js.contains("trace"))
                p.simplicity.kkop = std::make_shared<KkopTrace>(trace_from_json(js.at("trace")));
        }
        cert.parts.push_back(std::move(p));
    }
    return cert;
}

QuochainCertificate load_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open certificate file: " + path);
    json j;
    in >> j;
    return certificate_from_json(j);
}

// ---- pretty printing ---------------------------------------------------------------

std::string describe_trace(const KkopTrace& t, int indent) {
    std::ostringstream os;
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    os << pad << t.rule << ": d( " << print_poly_spec(t.left) << " , " << print_poly_spec(t.right)
       << " ) <= " << (t.upper >= kUnboundedUpper ? std::string("unbounded")
                                                  : std::to_string(t.upper));
    if (!t.chain.empty()) {
        os << "  chain:";
        for (const auto& w : t.chain) os << ' ' << w.node << '_' << w.center;
    }
    os << '\n';
    for (const auto& c : t.children) os << describe_trace(c, indent + 1);
    return os.str();
}

std::string describe_certificate(const QuochainCertificate& cert) {
    std::ostringstream os;
    os << "quochain of length " << cert.parts.size() << (cert.strong ? " (strong)" : "")
       << (cert.conditional ? " (conditional)" : "") << "\n";
    for (size_t k = 0; k < cert.parts.size(); ++k) {
        const auto& p = cert.parts[k];
        os << "  " << (k + 1) << ". [";
        for (size_t i = 0; i < p.factors.size(); ++i)
            os << (i ? " " : "") << vertex_label(p.factors[i]);
        os << "]";
        if (p.terminal) {
            os << "  terminal: " << part_real_rule_name(p.real.rule);
        } else {
            os << "  hlw: " << hlw_rule_name(p.hlw.rule)
               << "  simple: " << simplicity_rule_name(p.simplicity.rule);
            if (p.real.rule != PartReal::Rule::SingletonKr)
                os << "  real: " << part_real_rule_name(p.real.rule);
        }
        os << "\n";
    }
    if (!cert.assumptions.empty()) {
        os << "assumptions:\n";
        for (const auto& f : cert.assumptions) {
            os << "  - " << fact_kind_name(f.kind) << " " << print_poly_spec(f.left);
            if (f.right) os << " | " << print_poly_spec(*f.right);
            if (f.kind == LedgerFact::Kind::KkopLe) os << " <= " << f.k;
            if (!f.note.empty()) os << "  (" << f.note << ")";
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace qfg
