#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qfg/graph.hpp"
#include "qfg/kkop.hpp"
#include "qfg/ledger.hpp"

namespace qfg {

// Reality of a part of a quochain.
struct PartReal {
    enum class Rule { SingletonKr, Ledger, SubChain };
    Rule rule = Rule::SingletonKr;
    int fact_index = -1;
    std::shared_ptr<struct QuochainCertificate> subchain;
};

// Condition: one ordered tensor product across the cut is highest-l-weight.
struct HlwStep {
    enum class Rule { Top, Bottom, Ledger, LedgerKkopCut };
    Rule rule = Rule::Top;
    int fact_index = -1;
};

// Condition: the product of the whole graph with the part is simple.
struct SimplicityStep {
    enum class Rule { Dissociate, ValenceLeOne, SnakeAdjacency, KkopLeOne, Ledger };
    Rule rule = Rule::Dissociate;
    int fact_index = -1;
    std::shared_ptr<KkopTrace> kkop;
};

struct QuochainPart {
    VertexSet ids;  // in the certificate's own graph
    std::vector<KRFactor> factors;
    PartReal real;
    bool terminal = false;
    HlwStep hlw;                // non-terminal parts
    SimplicityStep simplicity;  // non-terminal parts
};

// Replayable proof object: an ordered vertex partition where every part but
// the last is a reality determining subgraph of what remains, and the last
// part is real.
struct QuochainCertificate {
    CartanContext ctx;
    std::vector<KRFactor> graph_vertices;
    std::vector<QuochainPart> parts;
    bool strong = false;       // all parts are singletons
    bool conditional = false;  // some step cites an assumption
    std::vector<LedgerFact> assumptions;
};

struct RealityIndex {
    enum class Status { StronglyReal, RealCertified, Conditional, Inconclusive };
    int q_lower = 0;
    int r_upper = 0;
    Status status = Status::Inconclusive;
};

std::string status_name(RealityIndex::Status s);

struct CertifyResult {
    std::optional<QuochainCertificate> certificate;
    RealityIndex index;
};

struct RealityBudget {
    long search_nodes = 20000;  // certification search steps
    long kkop_budget = 50000;   // per invariant-bound call
    int gtree_enum_limit = 10;  // exhaustive multicut enumeration cutoff
};

enum class RdsOutcome { Certified, Inconclusive, Refuted };

struct RdsCheck {
    RdsOutcome outcome = RdsOutcome::Inconclusive;
    // certified payload
    PartReal part_real;
    PartReal complement_real;
    HlwStep hlw;
    SimplicityStep simplicity;
    bool conditional = false;
    // refuted payload
    std::optional<Subdiagram> witness;
    std::string explanation;
};

// Decides whether H is a reality determining subgraph of g. Refuted is
// reported only through the restriction refuter; everything else that fails
// is Inconclusive.
RdsCheck check_rds(const QFGraph& g, const VertexSet& h, const AssumptionLedger& ledger,
                   const RealityBudget& budget = {});

struct RestrictionWitness {
    Subdiagram window;
    std::string explanation;
};

// Searches diagram intervals on which both tensor orders across the cut
// (H, complement) restrict to products containing a reducible
// non-highest-l-weight string pair detached from the rest of its side.
// Never fires when H is extremal.
std::optional<RestrictionWitness> refute_hlw_by_restriction(const QFGraph& g, const VertexSet& h);

// Searches for the longest certifiable quochain over the graph. When
// `endpoint` is set, only full singleton chains ending at that vertex are
// produced.
CertifyResult certify_real(const QFGraph& g, const AssumptionLedger& ledger = {},
                           const RealityBudget& budget = {},
                           std::optional<VertexId> endpoint = std::nullopt);

// Convenience entry: certify the actual q-factorization graph of pi.
CertifyResult certify_real(const DrinfeldPoly& pi, const AssumptionLedger& ledger = {},
                           const RealityBudget& budget = {});

// Composition over a tree of parts: each part contributes a singleton
// quochain ending at its linking vertex; the concatenation is returned as an
// ordinary quochain over g. `endpoint_requests` may pin the final vertex per
// part (indices aligned with m); unspecified entries are derived from the
// cut arrows.
std::optional<QuochainCertificate> gtree_compose(
    const QFGraph& g, const Multicut& m,
    const std::vector<std::optional<VertexId>>& endpoint_requests, const AssumptionLedger& ledger,
    const RealityBudget& budget = {});

// Composition where the parts are only known to be real and all pairwise
// invariant bounds are at most 1; returns the leaf order of m as a weak
// quochain.
std::optional<QuochainCertificate> kkop_tree_compose(const QFGraph& g, const Multicut& m,
                                                     const AssumptionLedger& ledger,
                                                     const RealityBudget& budget = {});

// Independent replay: re-validates every rule's side condition against the
// graph reconstructed from the certificate. The assumptions embedded in the
// certificate are taken as given.
bool validate_certificate(const QuochainCertificate& cert, std::string* error = nullptr);

struct SurveyParams {
    int rank = 1;
    int node_lo = 1, node_hi = 1;
    int center_lo = 0, center_hi = 0;
    int max_degree = 2;
    long enum_budget = 200000;
    int candidate_vertex_limit = 6;
    RealityBudget budget;
};

struct SurveyEntry {
    std::string key;  // canonical polynomial
    RealityIndex::Status status;
    int vertex_count = 0;
    bool basic_candidate = false;
};

struct SurveyReport {
    long enumerated = 0;
    long connected = 0;
    std::map<std::string, long> status_counts;
    std::vector<SurveyEntry> entries;     // connected graphs only
    std::vector<SurveyEntry> candidates;  // no proper subgraph certifies as an rds
};

// Enumerates polynomials over the window up to translation and arrow
// duality, certifies every connected q-factorization graph, and reports
// graphs in which no proper subgraph passes any automated rds rule. Refuses
// (throws) when the window exceeds the enumeration budget.
SurveyReport survey(const SurveyParams& params);

}  // namespace qfg
