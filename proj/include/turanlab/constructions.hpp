#pragma once

#include "turanlab/graph.hpp"
#include "turanlab/patterns.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace turanlab {

/// A construction failed its own forbidden-family check.
class CertificationError : public std::runtime_error {
public:
    CertificationError(const std::string& construction, const Witness& witness);
    const Witness& witness() const { return witness_; }

private:
    Witness witness_;
};

struct ConstructionCertificate {
    std::string name;
    std::map<std::string, int> params;
    SimpleGraph graph;
    FamilySpec family;
    int n = 0;
    long long m = 0;
    std::string target_formula;
    double target = 0.0;  // target_formula evaluated at n
    double ratio = 0.0;   // m / target

    nlohmann::json to_json() const;
};

/// Checks `graph` against `family` and throws CertificationError on the first violation.
ConstructionCertificate certify(std::string name, std::map<std::string, int> params, SimpleGraph graph,
                                FamilySpec family, std::string target_formula, double target);

/// Point-line incidence graph of PG(2,q). Points are 0..N-1 (side 0), lines N..2N-1 (side 1).
BipartiteGraph projective_plane_incidence(int q);

/// Quotient graph of GF(q)^2 \ {0} by the order-(t-1) subgroup H, <a,b> ~ <x,y> iff ax+by in H.
/// Certified K_{2,t}-free and max codegree <= t-1 before returning.
SimpleGraph furedi_k2t_graph(int q, int t);

/// Bipartite double cover of furedi_k2t_graph(q, t), certified K_{2,t}-free.
BipartiteGraph bipartite_k2t_extremal(int q, int t);

/// Duplicates every vertex b of side `doubled_side` as b' with N(b') = N(b) + {b}.
/// Requires g0 to be C_4-free. The result is certified {C5; K2,2-ind}-free.
ConstructionCertificate bollobas_gyori_double(const BipartiteGraph& g0, int doubled_side = 1);

ConstructionCertificate projective_plane_certificate(int q);
ConstructionCertificate furedi_certificate(int q, int t);
ConstructionCertificate bipartite_furedi_certificate(int q, int t);
ConstructionCertificate bollobas_gyori_certificate(int q, int doubled_side = 1);

}  // namespace turanlab
