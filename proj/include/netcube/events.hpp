#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netcube/trace.hpp"
#include "netcube/unfold.hpp"

namespace netcube {

struct Event {
    int id = -1;             // prefix hyperplane id
    int label = -1;          // index into EventStructurePrefix::labels
    int prime_vertex = -1;   // target of the gate arc
    int gate_source = -1;    // source of the gate arc
    int depth = 0;           // depth of prime_vertex
    std::optional<Trace> prime_trace;
};

enum class Relation : std::uint8_t { Unknown, Same, Below, Above, Concurrent, Conflict };

class EventStructurePrefix {
public:
    int K = 0;
    std::vector<std::string> labels;
    std::vector<Event> events;

    int size() const { return static_cast<int>(events.size()); }
    // Below means e1 < e2.
    Relation rel(int e1, int e2) const { return rel_[idx(e1, e2)]; }
    bool exact(int e1, int e2) const { return rel(e1, e2) != Relation::Unknown; }
    bool leq(int e1, int e2) const { return e1 == e2 || rel(e1, e2) == Relation::Below; }
    bool conflict(int e1, int e2) const { return rel(e1, e2) == Relation::Conflict; }
    bool concurrent(int e1, int e2) const { return rel(e1, e2) == Relation::Concurrent; }
    // Minimal conflict; nullopt when undecided within the prefix.
    std::optional<bool> minimal_conflict(int e1, int e2) const;
    // Immediate causality e1 ⋖ e2.
    bool covers(int e1, int e2) const;

    std::vector<std::pair<int, int>> hasse() const;
    std::vector<std::pair<int, int>> minimal_conflicts() const;

    void init(int n);
    void set(int e1, int e2, Relation r);
    void set_minimal_conflict(int e1, int e2, std::optional<bool> v);
    void add_cover(int lower, int upper);

private:
    size_t idx(int a, int b) const { return static_cast<size_t>(a) * events.size() + b; }
    std::vector<Relation> rel_;
    std::vector<std::int8_t> mu_;  // -1 unknown, 0 no, 1 yes
    std::vector<std::vector<int>> below_;  // immediate predecessors
};

// Events are the prefix hyperplanes; pairs farther than the doubling guard stay Unknown.
EventStructurePrefix extract_events(const DomainPrefix& d, long long max_events = 20000);

struct EventCheck {
    bool ok = true;
    std::string axiom;  // "LES1", "LES2", "LES3", "determinism", "concurrency", "bijection", ...
    int e1 = -1, e2 = -1;
    std::string detail;
};

// Labels of the prefix; two labels are independent when they span a square somewhere in the prefix.
TraceAlphabet domain_alphabet(const DomainPrefix& d);

EventCheck check_LES(const EventStructurePrefix& es, const TraceAlphabet& alpha);
EventCheck check_nice_labeling(const DomainPrefix& d);
// |events| = |hyperplanes| = |vertices with prime intervals|, matched event by event.
EventCheck check_event_bijection(const DomainPrefix& d, const EventStructurePrefix& es);

// Adds a pendant arc labelled "h" at every vertex; hairs of depth-K vertices sit at depth K+1.
DomainPrefix hair_domain(const DomainPrefix& d, const std::string& hair_label = "h");

// Number of distinct labelled out-balls of radius r over vertices of depth <= K - r.
struct IndexEstimate {
    int radius = 0;
    int types = 0;
    long long vertices = 0;
    std::vector<int> representatives;
};
IndexEstimate estimate_index(const DomainPrefix& d, int r, int max_depth = -1);
std::string out_ball_form(const DomainPrefix& d, int v, int r);

std::string events_to_json(const EventStructurePrefix& es);

}  // namespace netcube
