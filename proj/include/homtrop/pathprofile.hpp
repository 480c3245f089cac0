#ifndef HOMTROP_PATHPROFILE_HPP
#define HOMTROP_PATHPROFILE_HPP

#include <homtrop/blowup.hpp>
#include <homtrop/cones.hpp>
#include <homtrop/exactlp.hpp>
#include <homtrop/graphs.hpp>
#include <homtrop/rat.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace homtrop::pathprofile {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string & what) : std::runtime_error(what) {}
};

enum class IneqFamily { Paths, EvenCycles, OddCycles, Stars, Cliques };

// x^lhs >= x^rhs with nonnegative exponents; common factors are cancelled so
// the two index sets are disjoint. Validity is over the positive part of the
// profile (points where every involved count is nonzero).
struct BinomialInequality {
    IneqFamily family = IneqFamily::Paths;
    std::map<int, Rat> lhs;
    std::map<int, Rat> rhs;

    void normalize(); // cancel common factors, drop zero exponents
    int max_index() const;
};

// Grammar: term = <letter><k> optionally ^<num> or ^<num>/<den>; terms joined
// by '*' or whitespace; sides joined by ">=". Letter P for paths, C for
// cycles, S for stars, K for cliques.
BinomialInequality parse_inequality(const std::string & text,
    IneqFamily family = IneqFamily::Paths);
std::string inequality_to_text(const BinomialInequality & ineq);

// The lifted inequality system in variables y_0..y_{4n+3}; row labels follow
// the family templates "5.1[u=..]" .. "5.9".
struct PathConeC {
    int n = 0;
    cones::ConeH cone;
};

PathConeC build_cone_C(int n);

struct Certificate {
    std::vector<std::pair<std::string, Rat>> terms; // generator label, coefficient >= 0
};

struct CheckResult {
    bool valid = false;
    int n = 0;                    // cone parameter used for the decision
    Certificate certificate;      // valid case
    RatVector ray;                // invalid: violating point of proj(C), length 2n+2
    RatVector ray_lift;           // invalid: full lift, length 4n+4
    std::optional<graphs::Graph> witness; // invalid: explicit graph when the search finds one
};

// Decides a pure binomial inequality in path numbers by minimising the
// exponent functional over C(n), n minimal with 2n+1 >= largest index.
CheckResult check_path_inequality(const BinomialInequality & ineq, bool search_witness = true);

// Exact recomputation that the certificate's conic combination of C(n) rows
// equals the inequality's functional. Throws on labels that do not resolve.
bool verify_certificate(const BinomialInequality & ineq, const Certificate & cert);

// alpha - beta laid out on coordinates y_0..y_{dim-1}.
RatVector functional_vector(const BinomialInequality & ineq, int dim);

// Completion of r (length 2n+2) to a point of C(n), or nullopt if r is not
// in proj(C).
std::optional<RatVector> lift_membership(const RatVector & r);

// Valid rows derived in the paper's lemmas, over coordinates y_0..y_{2n+1}.
std::vector<exactlp::Row> derived_inequality_rows(int n);

// Member of the R* ray family: even entries b, b+s, b+2s, ...; odd entries
// (i+1)s + d_0 + ... + d_i.
struct RFamilySpec {
    Rat s, b;
    RatVector d;
};

bool rfamily_check(const RFamilySpec & spec);
RatVector rfamily_ray(const RFamilySpec & spec, int n);

struct DecompositionPart {
    std::string tag; // "ray" for r'_l, "spike" for (1,0,..), "all_ones" for 1-vector
    int l = -1;              // coordinate index for "ray" parts
    RFamilySpec spec;        // "ray" parts
    Rat coefficient = 0;     // "spike" / "all_ones" parts
};

RatVector part_ray(const DecompositionPart & part, int n);

// Splits r in proj(C) into R*-family rays r'_l (plus the spike/all-ones
// parts when r_1 < r_0) whose tropical sum reproduces r exactly.
std::vector<DecompositionPart> decompose_ray(const RatVector & r);

// Tropical sum of the ray parts joined with the conic sum of the special
// parts; reproduces the decomposed input.
RatVector recompose(const std::vector<DecompositionPart> & parts, int n);

// Almost-symmetric rearrangement of a prefix-dominant d: same total, prefix
// sums dominated by the input, mirror symmetry around the pivot.
RatVector symmetrize_d(const RatVector & d);
// Zeroes the last nonzero entry.
RatVector truncate_d(const RatVector & d);

// -1 / 0 / +1: lhs product vs rhs product on exact counts; requires every
// involved count to be positive.
int evaluate_exact(const BinomialInequality & ineq, const std::vector<BigInt> & path_counts);
bool counts_positive(const BinomialInequality & ineq, const std::vector<BigInt> & path_counts);

// Exact integer form of a cone row (integer coefficients) on path counts.
bool row_holds_exactly(const RatVector & row, const std::vector<BigInt> & counts);

std::string check_result_to_json(const CheckResult & result);

}

#endif
