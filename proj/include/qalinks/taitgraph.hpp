#pragma once

#include "qalinks/diagram.hpp"
#include "qalinks/integer.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qalinks {

struct SignedEdge {
    int u = 0;
    int v = 0;
    int sign = 1;  // +1 or -1
    std::size_t crossing = 0;
    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

// A plane multigraph with signed edges.  Vertex ids are 0..vertex_count-1;
// for a diagram they are the shaded faces, for a tangle u1 and u2 are the
// regions above and below it.
struct SignedPlaneGraph {
    int vertex_count = 0;
    std::vector<SignedEdge> edges;
    std::optional<std::size_t> marked_edge;
    std::optional<std::pair<int, int>> boundary_pair;

    SignedPlaneGraph deleted(std::size_t edge) const;
    SignedPlaneGraph contracted(std::size_t edge) const;
    // Identifies vertices a and b.
    SignedPlaneGraph merged(int a, int b) const;
    bool is_connected() const;
};

// coeffs[v] = number of spanning trees with exactly v positive edges.  An
// empty coefficient list means there is no spanning tree.
struct TreePolynomial {
    std::vector<Integer> coeffs;

    Integer at(std::size_t v) const { return v < coeffs.size() ? coeffs[v] : Integer(0); }
    Integer total() const;
    // Sum of (-1)^v s_v.
    Integer alternating_sum() const;
    // The polynomial multiplied by x^k.
    TreePolynomial shifted(std::size_t k) const;
    friend bool operator==(const TreePolynomial&, const TreePolynomial&) = default;
};

struct SignedPair {
    Integer a;  // signed sum over spanning trees containing the marked edge
    Integer b;  // signed sum over spanning trees avoiding it
};

class NugatoryCrossing : public std::invalid_argument {
public:
    explicit NugatoryCrossing(std::size_t c);
    std::size_t crossing;
};

class DisconnectedDiagram : public std::invalid_argument {
public:
    DisconnectedDiagram();
};

// Which of the two checkerboard classes becomes the vertex set.
enum class Shading : std::uint8_t {
    Default,   // the class of crossing 0's N corner
    Opposite,  // the other class
};

// Tait graph of a connected diagram.  With `normalize_at`, the coloring is
// chosen so that the edge of that crossing is positive and becomes the
// marked edge.
SignedPlaneGraph tait_graph(const Diagram& d, std::optional<std::size_t> normalize_at = std::nullopt,
                            Shading shading = Shading::Default);

// Deletion-contraction with series/parallel reduction and memoization.
TreePolynomial tree_polynomial(const SignedPlaneGraph& g);

// Reference enumerator over all (V-1)-edge subsets.  Throws beyond 20 edges.
TreePolynomial tree_polynomial_exhaustive(const SignedPlaneGraph& g);

// Signed spanning-tree sum of g evaluated without building the polynomial.
Integer signed_tree_sum(const SignedPlaneGraph& g);

// 0 for split diagrams, 1 for the crossingless unknot.
Integer determinant(const Diagram& d, Shading shading = Shading::Default);

// Shades the N and S corners of c.  For an NW-SE over crossing the edge is
// positive, |a| = det of the Zero smoothing and |b| = det of the Infinity one.
// Throws NugatoryCrossing when the edge is a loop or bridge.
SignedPair signed_pair(const Diagram& d, std::size_t c);

// Spanning-tree and almost-spanning-tree polynomials of a tangle graph,
// split by whether they use `edge`.  Almost spanning trees are spanning
// forests with two trees separating u1 from u2.
struct AlmostTreeCounts {
    TreePolynomial trees;
    TreePolynomial trees_with_edge;
    TreePolynomial almost;
    TreePolynomial almost_with_edge;

    // (x1, x2, x1e, x2e, y1, y2, y1e, y2e): coefficients at one and two
    // positive edges.
    std::array<Integer, 8> table() const;
};

AlmostTreeCounts almost_tree_counts(const SignedPlaneGraph& g, std::size_t edge);

// |det| of the reduced Goeritz matrix, built directly from the face
// structure on the opposite coloring to `determinant` and evaluated by
// fraction-free elimination.
Integer goeritz_determinant(const Diagram& d);

// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

}  // namespace qalinks
