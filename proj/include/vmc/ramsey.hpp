#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vmc/bigint.hpp"
#include "vmc/graph.hpp"

namespace vmc {

enum class SeqTag { Identical, Increasing, Decreasing };

struct TaggedSubsequence {
    std::vector<int> indices;  // strictly increasing positions into the input
    SeqTag tag;
};

// Longest identical / strictly increasing / strictly decreasing subsequence
// bookkeeping; returns a length-l subsequence with its kind.
// Requires |seq| >= (l-1)^3 + 1 (the guarantee threshold).
TaggedSubsequence mono_or_identical_subsequence(const std::vector<double>& seq, int l);
// Same search without the length precondition; nullopt when no kind reaches l.
std::optional<TaggedSubsequence> try_mono_or_identical(const std::vector<double>& seq, int l);

// Interval partition certifying the three-case condition for a selected
// subsequence of finite real sets. Part i covers (cuts[i-1], cuts[i]] with
// implicit infinite ends; there are cuts.size()+1 parts.
struct RegularPartition {
    std::vector<double> cuts;
    std::vector<int> chosen;        // strictly increasing indices into the input
    std::vector<SeqTag> case_tags;  // one per part
    int parts() const { return (int)cuts.size() + 1; }
};

struct PartitionViolation {
    int part;
    std::string reason;
};

std::vector<PartitionViolation> validate_regular_partition(
    const std::vector<std::vector<double>>& sets, const RegularPartition& rp);

// Constructive regular-partition search for k-element sets: selects l of them
// plus a partition of order <= k. Guaranteed to succeed when the input is at
// least N(k, l) long; may legitimately fail on shorter inputs.
std::optional<RegularPartition> regular_partition(const std::vector<std::vector<double>>& sets,
                                                  int k, int l);

// Variant for nonempty sets of at most k elements: buckets by cardinality and
// runs the exact-size search on the largest bucket(s). Empty sets are skipped
// (they can never satisfy any part of a regular partition).
std::optional<RegularPartition> regular_partition_at_most(
    const std::vector<std::vector<double>>& sets, int k, int l);

// exact bound recursion: t, M, N
struct RegularPartitionBounds {
    BigCount t, M, N;
};
RegularPartitionBounds regular_partition_bounds(uint64_t n, const BigCount& l);
BigCount n_prime(uint64_t k, const BigCount& l);  // N(k, (k+1)*l)

// diagonal Ramsey numbers: exact for n <= 4, binomial C(2n-2, n-1) beyond
struct RamseyBound {
    BigCount value;
    bool exact;
};
RamseyBound ramsey_diagonal(uint64_t n);

struct MuInfo {
    BigCount value;
    bool used_binomial;  // R(n,n) came from the binomial bound, not the table
};
MuInfo mu_info(uint64_t n);
BigCount mu(uint64_t n);  // (n-1) * (R(n,n)^{2n-3} + 1), n >= 2

// ladder-lemma constant cascade
struct LadderBounds {
    BigCount m1, m2, m3, m4, L;
    bool used_binomial;
};
LadderBounds ell_bound(uint64_t n);  // n >= 3

// patched-cycle configuration cascade
struct ConfigBounds {
    BigCount M1, M2, M;
};
ConfigBounds m_bound(uint64_t n);  // n >= 3; may throw resource_error when n > 3

// Rectangle-or-clique search on a grid-labeled graph (labels "i,j", 1-based).
struct GridResult {
    enum class Kind { Clique, Rectangle, Failure };
    Kind kind = Kind::Failure;
    std::vector<Label> clique;
    std::vector<int> rows, cols;  // 1-based, when kind == Rectangle
};
GridResult rectangle_or_clique(const Graph& g, int m, int n, int a, int b, int k);

// A vertex of degree >= k, else an induced path on l vertices.
struct DegreeOrPath {
    enum class Kind { Vertex, Path, Failure };
    Kind kind = Kind::Failure;
    Label vertex;
    std::vector<Label> path;
};
DegreeOrPath degree_or_induced_path(const Graph& g, int k, int l);

// Lemma "bipartite induced matching": sides given explicitly; every A-vertex
// has a neighbor, every B-vertex has at most n; returns an induced matching
// of size >= ceil(|A|/n) built from a minimal covering subset of B.
std::vector<std::pair<Label, Label>> induced_matching(const Graph& g,
                                                      const std::vector<Label>& side_a,
                                                      const std::vector<Label>& side_b, int n);

// clique or independent set of size n inside a vertex subset
struct CliqueOrIndependent {
    enum class Kind { Clique, Independent, Failure };
    Kind kind = Kind::Failure;
    std::vector<Label> witness;
};
CliqueOrIndependent clique_or_independent(const Graph& g, const std::vector<Label>& subset,
                                          int n);

// helper used by several searches: any clique / independent set of size n in g
std::optional<std::vector<int>> find_clique(const Graph& g, const std::vector<int>& allowed,
                                            int n);
std::optional<std::vector<int>> find_independent_set(const Graph& g,
                                                     const std::vector<int>& allowed, int n);

}  // namespace vmc
