#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

// Two-dimensional walk with increments in A = {(+1,-1)} u {(-i,+j) : i,j >= 0},
// indexed 1..n. A tandem walk additionally starts on the y-axis, ends on the
// x-axis and stays in the non-negative quadrant.
struct Walk2D {
    std::vector<std::pair<int, int>> points;

    int size() const { return static_cast<int>(points.size()); }
    std::pair<int, int> at(int t) const { return points[static_cast<size_t>(t) - 1]; }  // 1-based

    bool increments_admissible() const;
    bool is_tandem() const;

    std::string to_json() const;  // {"points": [[x,y],...]}
    static Walk2D from_json(const std::string& text);

    bool operator==(const Walk2D&) const = default;
};

// Time reversal with coordinates swapped: (X,Y)_t -> (Y,X)_{n+1-t}.
Walk2D reverse_walk(const Walk2D& w);

// Plane bipolar orientation in a face-based representation. Every edge is
// oriented from `tail` (bottom) to `head` (top); each inner face stores its
// left and right boundary edges bottom-to-top; the outer face is split into
// the left and right outer boundaries. Marked orientations built by theta on
// a sub-interval keep unexplored edges with label 0.
class BipolarMap {
public:
    static constexpr int kLeftOuter = -1;
    static constexpr int kRightOuter = -2;

    struct Edge {
        int tail = 0, head = 0;
        int left_face = kLeftOuter, right_face = kRightOuter;
        int label = 0;  // exploration time, 0 = unexplored
    };
    struct Face {
        std::vector<int> left, right;  // edge ids bottom-to-top
    };

    std::vector<Edge> edges;
    std::vector<Face> faces;
    std::vector<int> left_boundary, right_boundary;  // edge ids bottom-to-top
    int source = 0, sink = 0;
    int vertex_count = 0;

    int size() const { return static_cast<int>(edges.size()); }
    bool full() const;  // every edge explored

    int explored_count() const;
    int unexplored_count() const { return size() - explored_count(); }

    // Around-vertex orderings derived from the face structure.
    // outgoing(v): left-to-right; incoming(v): left-to-right.
    std::vector<std::vector<int>> outgoing_by_vertex() const;
    std::vector<std::vector<int>> incoming_by_vertex() const;

    void check_consistency() const;  // structural invariants; throws on violation

    std::string to_json() const;       // face-list form
    std::string to_dart_json() const;  // rotation-system form: next/twin/orient/label per dart
};

// The inverse KMSW construction: builds the marked orientation of a walk with
// increments in A; for a tandem walk the result is a full bipolar orientation
// and theta is the inverse of bow. Labels run first_label, first_label+1, ...
BipolarMap theta(const Walk2D& walk, int first_label = 1);

// Points j..k of w as a walk in their own right (increments preserved).
Walk2D slice_walk(const Walk2D& w, int j, int k);

// Edge ids of m in clockwise contour order of the down-right tree T(m),
// starting at the source with the left outer face on the explorer's left.
std::vector<int> exploration_order(const BipolarMap& m);

// bow(m): X_t = height of the bottom vertex of e_t in T(m), Y_t = height of
// the top vertex of e_t in T(m**).
Walk2D bow(const BipolarMap& m);

BipolarMap dual(const BipolarMap& m);         // m*
BipolarMap reverse_map(const BipolarMap& m);  // m**, orientation reversed

// Baxter permutation of a bipolar orientation: the i-th edge of the T(m)
// exploration is the bobp(m)(i)-th edge of the T(m*) exploration.
Permutation bobp(const BipolarMap& m);

// Canonical structural signature (exploration-relabeled); equal signatures
// mean equal embedded orientations. Defined for full orientations.
std::string map_signature(const BipolarMap& m);

// Signature for marked orientations: explored edges anchor the relabeling.
std::string marked_signature(const BipolarMap& m);

// The submap of prop:inverse: explored edges with labels in [j,k], faces with
// explored edges on both sides, plus the other edges of those faces.
BipolarMap submap(const BipolarMap& m, int j, int k);

// All tandem walks in W_n (|W_n| is the n-th Baxter number).
std::vector<Walk2D> enumerate_tandem_walks(int n);

}  // namespace permlab
