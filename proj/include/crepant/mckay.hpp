#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crepant/cyclotomic.hpp"

namespace crepant {

/// Character table of a finite subgroup of SL(2, C). Row 0 is the trivial
/// representation; column 0 is the identity class.
struct CharacterTable {
    std::vector<std::string> class_names;
    std::vector<long> class_sizes;
    std::vector<std::string> irrep_names;
    std::vector<std::vector<CycNum>> characters;  // [irrep][class]
    std::vector<CycNum> natural;                  // character of Q = C^2

    long order() const;
    std::size_t size() const noexcept { return characters.size(); }
};

/// ADE label of a rational double point: A_n (n >= 1), D_n (n >= 4), E6-E8.
struct AdeLabel {
    char type = 'A';
    int n = 1;

    static AdeLabel parse(const std::string& text);  // "A5", "D4", "E8"
    std::string to_string() const { return std::string(1, type) + std::to_string(n); }
    friend bool operator==(const AdeLabel&, const AdeLabel&) = default;
};

struct GroupSpec {
    AdeLabel label;
    std::string group_name;  // "cyclic Z_6", "binary dihedral of order 8", ...
    CharacterTable table;
};

/// Z_{n+1} and the binary dihedral groups are generated; the binary
/// tetrahedral, octahedral and icosahedral tables are shipped data.
GroupSpec group_spec(const AdeLabel& label);

/// Throws ValidationError unless the columns are orthogonal with the right
/// norms, the rows are orthonormal and sum dim^2 = |G|.
void validate_table(const CharacterTable& table);

struct Graph {
    struct Vertex {
        int id = 0;
        int dim = 0;
    };
    struct Edge {
        int i = 0;
        int j = 0;
        int multiplicity = 1;
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;  // i < j

    /// Adjacency in vertex order (not id order).
    std::vector<std::vector<int>> adjacency() const;
    bool connected() const;
};

/// a_ij = <chi_i, chi_Q chi_j>; throws ValidationError when an inner product
/// is not a non-negative integer.
Graph mckay_graph(const GroupSpec& group);

/// McKay graph with the trivial vertex removed.
Graph resolution_graph(const GroupSpec& group);

/// (2I - A) dims = 0.
bool dimension_vector_in_kernel(const Graph& g);

/// "A~5", "D~4", "E~8" for extended diagrams, "A3", "D5", "E6" for ordinary
/// ones; nullopt when the graph is neither.
std::optional<std::string> recognize_dynkin(const Graph& g);

/// Standard extended diagram with vertex 0 the affine node, in the vertex
/// order used by the shipped tables.
Graph affine_template(const AdeLabel& label);

/// Number of graph automorphisms (adjacency-preserving vertex permutations).
long automorphism_count(const Graph& g);

/// Order and name of the automorphism group of the resolution graph.
struct AutMetadata {
    long order;
    std::string name;
};
AutMetadata resolution_graph_automorphisms(const AdeLabel& label);

/// Defining polynomial of the rational double point, e.g. "x*y - z^4".
std::string ade_equation(const AdeLabel& label);

}  // namespace crepant
