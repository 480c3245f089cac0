#ifndef HOMTROP_BLOWUP_HPP
#define HOMTROP_BLOWUP_HPP

#include <homtrop/graphs.hpp>
#include <homtrop/rat.hpp>

#include <string>
#include <vector>

namespace homtrop::blowup {

class SpecError : public std::runtime_error {
public:
    explicit SpecError(const std::string & what) : std::runtime_error(what) {}
};

// Parameters of a weighted path of length 2f+1 whose blow-ups realize the
// prescribed log-homomorphism limit ray. `d` may carry trailing zeros; f is
// the index of its last nonzero entry.
struct BlowUpSpec {
    int f = 0;
    Rat b, s;
    RatVector d;

    // Largest t <= f/2 with d_t > 0 (0 when no such index exists).
    int pivot_index() const;
    void validate() const; // throws SpecError when any condition fails
};

BlowUpSpec make_spec(Rat b, Rat s, RatVector d);

// Text form: "b=<rat> s=<rat> d=<rat>,<rat>,..."
BlowUpSpec parse_spec(const std::string & text);
std::string spec_to_text(const BlowUpSpec & spec);

struct WeightedPath {
    int edge_count = 0; // 2f+1
    RatVector vertex_weights;
    RatVector edge_weights; // edge e joins vertices e and e+1
};

WeightedPath weight_function(const BlowUpSpec & spec);

// Maximum over homomorphisms P_i -> P of the telescoping weight
// p(phi(0)) + sum_j (p(edge) - p(source vertex)).
Rat max_weight_hom(const WeightedPath & p, int i);

// Closed form limit of log hom(P_i; B_m) / log m: b + (i/2)s for even i,
// ((i+1)/2)s + d_0 + ... + d_{(i-1)/2} for odd i.
RatVector limit_ray(const BlowUpSpec & spec, int n);

// Finite blow-up graph: one stable set of round(m^p(v)) vertices per path
// vertex, biregular circulant bipartite layers with edge counts as close to
// round(m^p(e)) as biregularity allows.
graphs::Graph build_blowup_graph(const BlowUpSpec & spec, long m, long max_vertices = 100000);

}

#endif
