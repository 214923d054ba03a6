#ifndef UNIENERGY_TRANSFORMS_HPP
#define UNIENERGY_TRANSFORMS_HPP

#include <string>
#include <vector>

#include "unienergy/graph.hpp"

namespace unienergy {

// The graph surgeries whose b-dominance properties drive the extremal
// arguments. Each kind ships a finder that returns every valid anchor
// tuple, so the dominance checks can be exhaustive per graph.
enum class SurgeryKind { Egt, Op1, Op2, Op3 };

std::string surgery_name(SurgeryKind k);

struct SurgeryDescriptor {
    SurgeryKind kind;
    std::vector<int> anchors;
    // Egt: {u, v}             non-pendant tree edge to contract
    // Op1: {x, y, z, w}       leaf x on degree-2 y; x moves from y to w,
    //                         a degree-2 neighbor of y's other neighbor z
    // Op2: {x1, x2, x3, y1, y2}  two deepest chains merging at x3
    // Op3: {x1, x2, x3, y1, y2, y3}  depth-3 chains on distinct cycle vertices
};

// Edge-growing transformation: contract the non-pendant tree edge and hang
// a new pendant on the merged vertex. Order preserved.
LabeledGraph egt(const LabeledGraph& t, Edge e);
std::vector<SurgeryDescriptor> egt_anchors(const LabeledGraph& t);

LabeledGraph op1(const LabeledGraph& t, const SurgeryDescriptor& d);
std::vector<SurgeryDescriptor> op1_anchors(const LabeledGraph& t);

LabeledGraph op2(const LabeledGraph& g, const SurgeryDescriptor& d);
std::vector<SurgeryDescriptor> op2_anchors(const LabeledGraph& g);

LabeledGraph op3(const LabeledGraph& g, const SurgeryDescriptor& d);
std::vector<SurgeryDescriptor> op3_anchors(const LabeledGraph& g);

LabeledGraph apply_surgery(const LabeledGraph& g, const SurgeryDescriptor& d);
std::vector<SurgeryDescriptor> find_anchors(const LabeledGraph& g, SurgeryKind kind);

}  // namespace unienergy

#endif
