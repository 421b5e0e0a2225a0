#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netcube/unfold.hpp"

namespace netcube {

// Hyperplanes and configurations of a prefix, built once and shared by the diagnostics.
struct DomainIndex {
    explicit DomainIndex(const DomainPrefix& d) : h(prefix_hyperplanes(d)), conf(d, h) {}
    PrefixHyperplanes h;
    Configurations conf;
};

std::vector<int> sphere(const DomainPrefix& d, int k);

struct Cluster {
    int level = 0;
    std::vector<int> frontier;   // vertices of depth level+1, sorted
    int component = -1;          // representative vertex of the far component
    bool contaminated = false;   // the component reaches depth K, so it may merge beyond the prefix
};

// Far components of the complement of S(root,k), cut down to S(root,k+1).
std::vector<Cluster> clusters(const DomainPrefix& d, int k);

struct LevelDiameters {
    int k = 0;
    int clusters = 0;
    int max_diameter = 0;
    bool exact = true;           // distances come from configurations, which are intrinsic
    bool contaminated = false;   // some cluster membership may change with a deeper prefix
    std::vector<int> diameters;  // per cluster, same order as clusters()
};

struct ClusterReport {
    std::vector<LevelDiameters> levels;
    const LevelDiameters* at(int k) const;
    bool strictly_increasing(int from, int to) const;
};

int cluster_diameter(const DomainPrefix& d, const DomainIndex& ix, const std::vector<int>& frontier);
ClusterReport cluster_diameters(const DomainPrefix& d, const DomainIndex& ix, int kmin = 0, int kmax = -1);
ClusterReport cluster_diameters(const DomainPrefix& d, int kmin = 0, int kmax = -1);

// Largest configuration distance between two vertices of S(root,k).
int sphere_diameter(const DomainPrefix& d, const DomainIndex& ix, int k);

struct EndTypeCensus {
    int k = 0;
    int clusters = 0;
    int types = 0;                     // distinct forms at this level
    int cumulative_types = 0;          // distinct forms over the levels of a series up to this one
    bool contaminated = false;
    std::vector<int> meets;            // meet vertex per cluster
    std::vector<int> type_of;          // type id per cluster
    std::vector<std::string> forms;    // canonical form per type
};
EndTypeCensus end_type_census(const DomainPrefix& d, const DomainIndex& ix, int k);
EndTypeCensus end_type_census(const DomainPrefix& d, int k);
// Context-freeness asks for finitely many end types overall, so the series also counts forms across levels.
std::vector<EndTypeCensus> end_type_series(const DomainPrefix& d, const DomainIndex& ix, int kmin, int kmax);

struct GridWitness {
    int source = -1;
    int rows = 0, cols = 0;                  // squares along each side
    std::vector<std::vector<int>> vertices;  // (rows+1) x (cols+1)
};

struct GridReport {
    int max_min_side = 0;                  // over isometric flat directed grids
    GridWitness best;                      // maximizes (min side, max side)
    std::vector<std::pair<int, int>> maximal_dims;  // Pareto-maximal (rows, cols), rows <= cols
    long long grids_checked = 0;
    long long non_flat = 0;                // isometric directed grids failing the common-neighbour clause
    bool truncated = false;                // search budget ran out
    bool two_dimensional = true;           // no 3-cube in the prefix
};
// Directed grids whose vertices stay at depth <= K-1, so common neighbours are all present.
GridReport flat_grid_max(const DomainPrefix& d, const DomainIndex& ix, long long budget = 20000000);
GridReport flat_grid_max(const DomainPrefix& d);

struct IsoGridResult {
    int n = 0;
    bool found = false;
    bool by_reduction = false;  // decided by the gate-quadrant argument in a 2-dimensional prefix
    bool exhausted = true;      // false when the search budget ran out
    GridWitness witness;
    std::string note;
};
IsoGridResult isometric_grid_search(const DomainPrefix& d, const DomainIndex& ix, int n, const GridReport* flat = nullptr,
                                    long long budget = 20000000);
IsoGridResult isometric_grid_search(const DomainPrefix& d, int n);
bool is_isometric_grid(const DomainPrefix& d, const DomainIndex& ix, const GridWitness& g);

struct BicliqueReport {
    int max_side = 0;  // largest t with K_{t,t} in the crossing graph, capped at the requested n
    std::vector<int> side_a, side_b;
    long long hyperplanes = 0;
    long long crossing_pairs = 0;
    bool truncated = false;
};
BicliqueReport biclique_thinness(const DomainPrefix& d, const DomainIndex& ix, int n, long long budget = 50000000);
BicliqueReport biclique_thinness(const DomainPrefix& d, int n);

// Quarter-plane tiling by two-square tiles with the ten-letter labeling.
DomainPrefix bdr_generate(int K);

struct AnalyzeOptions {
    int kmin = 0;
    int kmax = -1;
    int end_kmax = -1;
    int grid_n = 5;
    int biclique_n = 6;
    bool end_types = true;
    bool grids = true;
    bool bicliques = true;
};
std::string analyze_to_json(const DomainPrefix& d, const AnalyzeOptions& opt);

}  // namespace netcube
