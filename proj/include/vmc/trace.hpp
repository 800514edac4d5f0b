#pragma once

#include <string>
#include <variant>
#include <vector>

#include "vmc/graph.hpp"

namespace vmc {

// One vertex-minor operation. Labels refer to the working graph at the time
// the step is applied (pivot swaps the two labels, as usual).
struct TraceStep {
    enum class Op { LocalComplement, Pivot, Delete, Smooth };
    Op op;
    std::vector<Label> args;

    static TraceStep lc(Label v) { return {Op::LocalComplement, {std::move(v)}}; }
    static TraceStep pivot(Label u, Label v) { return {Op::Pivot, {std::move(u), std::move(v)}}; }
    static TraceStep del(std::vector<Label> s) { return {Op::Delete, std::move(s)}; }
    static TraceStep smooth(Label v) { return {Op::Smooth, {std::move(v)}}; }
};

// Replayable certificate: an operation sequence from `initial` claimed to end
// in a graph isomorphic to `claims`.
struct Trace {
    Graph initial;
    std::vector<TraceStep> steps;
    Graph claims;
};

// Applies all steps, checking each precondition; throws input_error mentioning
// the failing step index, or if the result does not match `claims`
// (exact labeled equality, else isomorphism under `iso_cap`).
Graph replay(const Trace& t, int iso_cap = 40);

// Applies steps without the final claim check.
Graph apply_steps(const Graph& g, const std::vector<TraceStep>& steps);

// schema 1: {"schema":1,"initial":g6,"steps":[{"op":...,"args":[...]}],"claims":g6}
// Labels are serialized as graph6 vertex indices of the initial graph.
std::string trace_to_json(const Trace& t);
Trace trace_from_json(const std::string& json_text);

// Records operations applied to a working graph and assembles the Trace.
class TraceBuilder {
public:
    explicit TraceBuilder(Graph initial) : initial_(initial), cur_(std::move(initial)) {}

    const Graph& current() const { return cur_; }

    void lc(const Label& v);
    void pivot(const Label& u, const Label& v);
    void del(std::vector<Label> s);
    void smooth(const Label& v);
    void keep_only(const std::vector<Label>& s);  // delete everything else
    // smooth suppressible vertices outside `protect` to a fixpoint, ascending label order
    void smooth_excluding(const std::vector<Label>& protect);

    void append(const TraceBuilder& tail);  // tail.initial must equal current
    void append(const Trace& tail);         // tail.initial must equal current

    Trace finish() const { return {initial_, steps_, cur_}; }

private:
    Graph initial_;
    Graph cur_;
    std::vector<TraceStep> steps_;
};

}  // namespace vmc
