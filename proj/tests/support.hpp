#ifndef MLCPM_TESTS_SUPPORT_HPP
#define MLCPM_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "mlcpm/multiplex_network.hpp"

namespace mlcpm::testing {

/// Ten nodes, two layers. Designed so that, when seeded from node "5" with
/// one common layer required, the eligible extensions are exactly
/// {2, 3, 4, 6, 8}, and the k=3, m=1 maximal cliques are the three frozen in
/// the tests: {2,3,5,6} on {X}, {3,5,6} on {X,Y}, {2,4,5} on {X}.
inline MultiplexNetwork make_two_layer_walkthrough() {
    MultiplexNetworkBuilder b;
    for (int v = 0; v < 10; ++v) {
        b.add_node(std::to_string(v));
    }
    for (auto [x, y] : std::initializer_list<std::pair<const char*, const char*>>{
             {"2", "3"}, {"2", "5"}, {"2", "6"}, {"3", "5"}, {"3", "6"},
             {"5", "6"}, {"4", "5"}, {"2", "4"}, {"5", "8"}}) {
        b.add_edge(x, y, "X");
    }
    for (auto [x, y] : std::initializer_list<std::pair<const char*, const char*>>{
             {"3", "5"}, {"3", "6"}, {"5", "6"}}) {
        b.add_edge(x, y, "Y");
    }
    b.set_source("walkthrough", "");
    return b.build();
}

/// L1 carries a complete graph on {a,b,c,d}; L2 only the triangle {a,b,c}.
/// Maximal cliques at k=3, m=1: {a,b,c,d} on {L1} and {a,b,c} on {L1,L2}.
inline MultiplexNetwork make_k4_triangle() {
    MultiplexNetworkBuilder b;
    const char* nodes[] = {"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            b.add_edge(nodes[i], nodes[j], "L1");
        }
    }
    b.add_edge("a", "b", "L2");
    b.add_edge("a", "c", "L2");
    b.add_edge("b", "c", "L2");
    b.set_source("k4_triangle", "");
    return b.build();
}

/// The overlap witness. Cliques at k=3, m=1:
///   c = {a,b,c} on {L1,L2,L3}
///   x = {b,c,d} on {L1,L2}
///   y = {b,c,e} on {L1,L3}
/// With m=2, clique c belongs to three communities: {c}, {c,x}, {c,y}.
inline MultiplexNetwork make_cxy() {
    MultiplexNetworkBuilder b;
    for (const char* l : {"L1", "L2", "L3"}) {
        for (auto [x, y] : std::initializer_list<std::pair<const char*, const char*>>{
                 {"a", "b"}, {"a", "c"}, {"b", "c"}}) {
            b.add_edge(x, y, l);
        }
    }
    for (const char* l : {"L1", "L2"}) {
        b.add_edge("b", "d", l);
        b.add_edge("c", "d", l);
    }
    for (const char* l : {"L1", "L3"}) {
        b.add_edge("b", "e", l);
        b.add_edge("c", "e", l);
    }
    b.set_source("cxy", "");
    return b.build();
}

/// The hierarchy witness. Cliques at k=3, m=2:
///   P = {p,q,r} on {L1,L2,L3}
///   Q = {q,r,s} on {L1,L2}
/// Communities at m=2: {P} and {P,Q}; the second has more nodes and fewer
/// layers than the first.
inline MultiplexNetwork make_nested() {
    MultiplexNetworkBuilder b;
    for (const char* l : {"L1", "L2", "L3"}) {
        for (auto [x, y] : std::initializer_list<std::pair<const char*, const char*>>{
                 {"p", "q"}, {"p", "r"}, {"q", "r"}}) {
            b.add_edge(x, y, l);
        }
    }
    for (const char* l : {"L1", "L2"}) {
        b.add_edge("q", "s", l);
        b.add_edge("r", "s", l);
    }
    b.set_source("nested", "");
    return b.build();
}

/// Single layer, eight edges: two triangles {a,b,c} and {d,e,f} glued through
/// d. Classic percolation at k=3 yields {a,b,c,d} and {d,e,f}, overlapping in
/// the single node d.
inline MultiplexNetwork make_shared_node_chain() {
    MultiplexNetworkBuilder b;
    for (auto [x, y] : std::initializer_list<std::pair<const char*, const char*>>{
             {"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", "d"},
             {"d", "e"}, {"d", "f"}, {"e", "f"}}) {
        b.add_edge(x, y, "L1");
    }
    b.set_source("shared_node_chain", "");
    return b.build();
}

/// Complete graph on 8 nodes minus a perfect matching, one layer: every
/// maximal clique picks one endpoint per removed pair, so there are 2^4 = 16
/// of them. Trips the oracle community budget of 15.
inline MultiplexNetwork make_matching_complement() {
    MultiplexNetworkBuilder b;
    for (int i = 0; i < 8; ++i) {
        b.add_node("v" + std::to_string(i));
    }
    for (int i = 0; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) {
            if (j - i == 4) {
                continue; // the matching: (0,4) (1,5) (2,6) (3,7)
            }
            b.add_edge("v" + std::to_string(i), "v" + std::to_string(j), "L1");
        }
    }
    b.set_source("matching_complement", "");
    return b.build();
}

} // namespace mlcpm::testing

#endif
