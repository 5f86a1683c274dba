#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frieze/errors.hpp"

namespace frieze {

struct Arrow {
    int from;
    int to;
    int multiplicity;
};

/*
 * Acyclic quiver as a skew-symmetric exchange matrix: b(i, j) is the number
 * of arrows i -> j minus the number of arrows j -> i.  Vertices are 1-based.
 * The labeling is admissible when every arrow i -> j has i > j; loading
 * enforces acyclicity and relabels to an admissible order when needed, while
 * mutation may produce non-admissible intermediates.
 */
class Quiver {
public:
    Quiver(int n, std::vector<std::vector<int>> matrix);

    int n() const { return n_; }
    // 1-based signed arrow count.
    int b(int i, int j) const { return matrix_[i - 1][j - 1]; }
    const std::vector<std::vector<int>>& matrix() const { return matrix_; }

    // Positive entries as arrows, sorted by (from, to).
    std::vector<Arrow> arrows() const;

    bool is_acyclic() const;
    bool is_admissible() const;
    bool is_sink(int vertex) const;
    bool is_source(int vertex) const;

    bool operator==(const Quiver& o) const { return matrix_ == o.matrix_; }
    bool operator!=(const Quiver& o) const { return !(*this == o); }

private:
    int n_;
    std::vector<std::vector<int>> matrix_;
};

struct LoadedQuiver {
    Quiver quiver;
    // relabeling[old - 1] = new label; identity when the input was admissible.
    std::vector<int> relabeling;
    bool relabeled;
};

// Validates an arrow list and builds the quiver, relabeling by a topological
// order (sinks get small labels) when the given labeling is not admissible.
LoadedQuiver load_quiver(int n, const std::vector<Arrow>& arrows);

// Standard exchange-matrix mutation at vertex k (involution).
Quiver mutate_quiver(const Quiver& q, int k);

// mu_n o ... o mu_1 on an admissibly labeled quiver; returns the same quiver.
Quiver coxeter_mutate_quiver(const Quiver& q);

enum class QuiverKind { Finite, Tame, Wild };

struct QuiverClass {
    QuiverKind kind;
    std::optional<std::string> diagram;
};

std::string to_string(QuiverKind kind);

// Representation type from the underlying edge-multiplicity graph: simply
// laced ADE -> finite; extended Dynkin (the double-arrow Kronecker counts as
// A~1) -> tame; everything else wild.
QuiverClass classify(const Quiver& q);

struct SymmetryPair {
    int sink;
    int source;
    // multiplicities[k] = arrows k -> sink = arrows source -> k, entries >= 1 only.
    std::map<int, int> multiplicities;
};

// First (sink, source) pair in lexicographic vertex order for which every
// other vertex k has arrows(k -> sink) = arrows(source -> k).
std::optional<SymmetryPair> find_symmetry_pair(const Quiver& q);

// All vertex permutations preserving the exchange matrix, identity included.
// Permutations are 1-based: sigma[i - 1] is the image of vertex i.
std::vector<std::vector<int>> automorphisms(const Quiver& q);

}  // namespace frieze
