#include "vmc/trace.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "vmc/graph_io.hpp"
#include "vmc/isomorphism.hpp"

namespace vmc {

static Graph apply_step(const Graph& g, const TraceStep& s, size_t idx) {
    try {
        switch (s.op) {
            case TraceStep::Op::LocalComplement:
                if (s.args.size() != 1) throw input_error("lc takes one vertex");
                return g.local_complement(s.args[0]);
            case TraceStep::Op::Pivot:
                if (s.args.size() != 2) throw input_error("pivot takes two vertices");
                return g.pivot(s.args[0], s.args[1]);
            case TraceStep::Op::Delete:
                return g.removed(s.args);
            case TraceStep::Op::Smooth:
                if (s.args.size() != 1) throw input_error("smooth takes one vertex");
                return g.smooth(s.args[0]);
        }
        throw input_error("unknown op");
    } catch (const input_error& e) {
        throw input_error("step " + std::to_string(idx) + ": " + e.what());
    }
}

Graph apply_steps(const Graph& g, const std::vector<TraceStep>& steps) {
    Graph cur = g;
    for (size_t i = 0; i < steps.size(); ++i) cur = apply_step(cur, steps[i], i);
    return cur;
}

Graph replay(const Trace& t, int iso_cap) {
    Graph result = apply_steps(t.initial, t.steps);
    if (result == t.claims) return result;
    if (!is_isomorphic(result, t.claims, iso_cap))
        throw input_error("replay: result does not match claimed graph");
    return result;
}

static const char* op_name(TraceStep::Op op) {
    switch (op) {
        case TraceStep::Op::LocalComplement: return "lc";
        case TraceStep::Op::Pivot: return "pivot";
        case TraceStep::Op::Delete: return "delete";
        case TraceStep::Op::Smooth: return "smooth";
    }
    return "?";
}

std::string trace_to_json(const Trace& t) {
    nlohmann::json j;
    j["schema"] = 1;
    j["initial"] = to_graph6(t.initial);
    std::map<Label, std::string> idx;
    for (int i = 0; i < t.initial.size(); ++i) idx[t.initial.label_at(i)] = std::to_string(i);
    // step labels are tracked through pivots' label swaps
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : t.steps) {
        nlohmann::json js;
        js["op"] = op_name(s.op);
        nlohmann::json args = nlohmann::json::array();
        for (const auto& a : s.args) {
            auto it = idx.find(a);
            if (it == idx.end()) throw input_error("trace: step names unknown vertex " + a);
            args.push_back(it->second);
        }
        js["args"] = args;
        steps.push_back(js);
    }
    j["steps"] = steps;
    j["claims"] = to_graph6(t.claims);
    return j.dump(2);
}

Trace trace_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (j.contains("schema") && j["schema"].get<int>() != 1)
        throw input_error("trace: unsupported schema");
    Trace t;
    t.initial = from_graph6(j.at("initial").get<std::string>());
    for (const auto& js : j.at("steps")) {
        std::string op = js.at("op").get<std::string>();
        TraceStep s;
        if (op == "lc") s.op = TraceStep::Op::LocalComplement;
        else if (op == "pivot") s.op = TraceStep::Op::Pivot;
        else if (op == "delete") s.op = TraceStep::Op::Delete;
        else if (op == "smooth") s.op = TraceStep::Op::Smooth;
        else throw input_error("trace: unknown op " + op);
        for (const auto& a : js.at("args")) s.args.push_back(a.get<std::string>());
        t.steps.push_back(std::move(s));
    }
    t.claims = from_graph6(j.at("claims").get<std::string>());
    return t;
}

void TraceBuilder::lc(const Label& v) {
    cur_ = cur_.local_complement(v);
    steps_.push_back(TraceStep::lc(v));
}

void TraceBuilder::pivot(const Label& u, const Label& v) {
    cur_ = cur_.pivot(u, v);
    steps_.push_back(TraceStep::pivot(u, v));
}

void TraceBuilder::del(std::vector<Label> s) {
    if (s.empty()) return;
    cur_ = cur_.removed(s);
    steps_.push_back(TraceStep::del(std::move(s)));
}

void TraceBuilder::smooth(const Label& v) {
    cur_ = cur_.smooth(v);
    steps_.push_back(TraceStep::smooth(v));
}

void TraceBuilder::keep_only(const std::vector<Label>& s) {
    std::vector<Label> keep = s;
    std::sort(keep.begin(), keep.end(), label_less);
    std::vector<Label> gone;
    for (const auto& v : cur_.labels())
        if (!std::binary_search(keep.begin(), keep.end(), v, label_less)) gone.push_back(v);
    del(std::move(gone));
}

void TraceBuilder::smooth_excluding(const std::vector<Label>& protect) {
    std::vector<Label> p = protect;
    std::sort(p.begin(), p.end(), label_less);
    bool again = true;
    while (again) {
        again = false;
        for (const auto& v : cur_.labels()) {
            if (std::binary_search(p.begin(), p.end(), v, label_less)) continue;
            if (cur_.suppressible(v)) {
                smooth(v);
                again = true;
                break;
            }
        }
    }
}

void TraceBuilder::append(const TraceBuilder& tail) {
    if (!(tail.initial_ == cur_)) throw input_error("trace append: graphs do not line up");
    for (const auto& s : tail.steps_) steps_.push_back(s);
    cur_ = tail.cur_;
}

void TraceBuilder::append(const Trace& tail) {
    if (!(tail.initial == cur_)) throw input_error("trace append: graphs do not line up");
    for (const auto& s : tail.steps) steps_.push_back(s);
    cur_ = tail.claims;
}

}  // namespace vmc
