#include "cardmatch/gabow.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cardmatch/single_path.hpp"

namespace cardmatch {

namespace {

inline std::size_t ix(NodeId v) { return static_cast<std::size_t>(v); }

}  // namespace

PhaseState::PhaseState(std::size_t n, std::size_t m)
    : forest(n),
      bd(n, 1),
      bdelta(n, 0),
      path1(n, 0),
      path2(n, 0),
      weight(m, 0),
      queue(n),
      base(n),
      dbase(n) {}

AuxOverlay::AuxOverlay(std::size_t n, std::size_t m)
    : rep(n, kNoNode),
      member_begin(n, 0),
      member_end(n, 0),
      is_edge_of_h(m, 0),
      mate_h(n, kNoNode),
      label_h(n, Label::Unlabeled),
      parent_h(n, kNoEdge),
      bridge_h(n, kNoEdge),
      dir_h(n, 0),
      even_time_h(n, 0) {}

GabowMatcher::GabowMatcher(const StaticGraph& g, GabowOptions options)
    : g_(g), opt_(options), matching_(g.node_count()), s_(g.node_count(), g.edge_count()),
      h_(g.node_count(), g.edge_count()) {
    auto& t = s_.forest.touched;
    t.resize(g.node_count());
    for (std::size_t v = 0; v < t.size(); ++v) t[v] = static_cast<NodeId>(v);
    s_.base.set_checked(opt_.checked);
    s_.dbase.set_checked(opt_.checked);
}

std::size_t GabowMatcher::greedy_init() { return greedy_extend(g_, matching_); }

std::size_t GabowMatcher::init_with_matching(std::span<const EdgeId> m0) {
    for (EdgeId e : m0) {
        NodeId u = g_.source(e), v = g_.target(e);
        if (u != v && matching_.is_free(u) && matching_.is_free(v)) {
            matching_.pair(u, v);
            ++matching_.size;
        }
    }
    return g_.node_count();
}

OpCounters GabowMatcher::counters() const {
    OpCounters c;
    c.edge_scans = edge_scans_;
    c.unions = s_.base.union_count() + s_.dbase.union_count();
    c.queue_ops = s_.queue.operations();
    return c;
}

void GabowMatcher::setup_weights() {
    auto& mate = matching_.mate;
    for (NodeId z : s_.forest.touched)
        for (EdgeId e : g_.out_edges(z)) {
            ++edge_scans_;
            NodeId u = g_.source(e), v = g_.target(e);
            s_.weight[static_cast<std::size_t>(e)] = 0;
            if (v == mate[ix(u)]) {
                s_.weight[static_cast<std::size_t>(e)] = 2;
                mate[ix(u)] = mate[ix(v)] = kNoNode;
            }
        }
    for (NodeId z : s_.forest.touched)
        for (EdgeId e : g_.out_edges(z)) {
            ++edge_scans_;
            if (s_.weight[static_cast<std::size_t>(e)] == 2) matching_.pair(g_.source(e), g_.target(e));
        }
}

std::int64_t GabowMatcher::dual_value(NodeId v) {
    auto i = ix(v);
    switch (base_label(v)) {
        case Label::Unlabeled: return 1;
        case Label::Even: return s_.bd[i] - (s_.delta - s_.bdelta[i]);
        default: return s_.bd[i] + (s_.delta - s_.bdelta[i]);
    }
}

void GabowMatcher::scan_edge(EdgeId e, NodeId z) {
    NodeId u = g_.opposite(e, z);
    if (matching_.mate_of(u) == z || base_label(u) == Label::Odd) return;
    std::int64_t p = dual_value(z) + dual_value(u);
    std::int64_t key = s_.forest.label[ix(u)] == Label::Unlabeled ? s_.delta + p : s_.delta + p / 2;
    if (opt_.checked && key < s_.delta)
        throw std::logic_error("scan_edge: key " + std::to_string(key) + " below Delta " +
                               std::to_string(s_.delta));
    s_.queue.insert(e, key);
}

void GabowMatcher::scan_all(NodeId z) {
    for (EdgeId e : g_.adjacent(z)) {
        ++edge_scans_;
        scan_edge(e, z);
    }
}

void GabowMatcher::reinitialize() {
    auto& f = s_.forest;
    s_.delta = 0;
    s_.found_sap = false;
    s_.dunions.clear();
    grown_.clear();
    s_.queue.reset();
    s_.base.split(f.touched);
    s_.dbase.split(f.touched);
    for (NodeId v : f.touched) f.label[ix(v)] = matching_.is_free(v) ? Label::Even : Label::Unlabeled;
    std::erase_if(f.touched, [this](NodeId v) { return !matching_.is_free(v); });
    for (NodeId v : f.touched) scan_all(v);
}

void GabowMatcher::grow_step(NodeId x, NodeId y) {
    auto& f = s_.forest;
    NodeId z = matching_.mate_of(y);
    s_.bd[ix(y)] = s_.bd[ix(z)] = 1;
    s_.bdelta[ix(y)] = s_.bdelta[ix(z)] = s_.delta;
    f.parent[ix(z)] = y;
    f.parent[ix(y)] = x;
    f.label[ix(y)] = Label::Odd;
    f.label[ix(z)] = Label::Even;
    grown_.push_back(y);
    grown_.push_back(z);
    scan_all(z);
}

void GabowMatcher::blossom_or_augment(NodeId x, NodeId y) {
    const auto& mate = matching_.mate;
    const auto& parent = s_.forest.parent;
    const std::uint64_t st = ++s_.stamp;
    NodeId hx = s_.base.find(x), hy = s_.base.find(y);
    s_.path1[ix(hx)] = s_.path2[ix(hy)] = st;
    while (s_.path1[ix(hy)] != st && s_.path2[ix(hx)] != st &&
           (mate[ix(hx)] != kNoNode || mate[ix(hy)] != kNoNode)) {
        if (mate[ix(hx)] != kNoNode) {
            hx = s_.base.find(parent[ix(mate[ix(hx)])]);
            s_.path1[ix(hx)] = st;
        }
        if (mate[ix(hy)] != kNoNode) {
            hy = s_.base.find(parent[ix(mate[ix(hy)])]);
            s_.path2[ix(hy)] = st;
        }
    }
    if (s_.path1[ix(hy)] == st || s_.path2[ix(hx)] == st) {
        NodeId b = s_.path1[ix(hy)] == st ? hy : hx;
        shrink_path(b, x, y);
        shrink_path(b, y, x);
    } else {
        s_.found_sap = true;
    }
}

void GabowMatcher::shrink_path(NodeId b, NodeId x, NodeId y) {
    auto& f = s_.forest;
    NodeId v = s_.base.find(x);
    while (v != b) {
        s_.base.union_blocks(v, b);
        s_.dunions.emplace_back(v, b);
        v = matching_.mate_of(v);
        s_.base.union_blocks(v, b);
        s_.dunions.emplace_back(v, b);
        s_.base.make_rep(b);
        f.source_bridge[ix(v)] = x;
        f.target_bridge[ix(v)] = y;
        s_.bd[ix(v)] += s_.delta - s_.bdelta[ix(v)];
        s_.bdelta[ix(v)] = s_.delta;
        scan_all(v);
        v = s_.base.find(f.parent[ix(v)]);
    }
    s_.dunions.emplace_back(b, b);
}

void GabowMatcher::commit_dunions() {
    for (auto [u, v] : s_.dunions) {
        if (u == v)
            s_.dbase.make_rep(u);
        else
            s_.dbase.union_blocks(u, v);
    }
    s_.dunions.clear();
}

bool GabowMatcher::phase_1() {
    reinitialize();
    if (on_phase_) phase_mate_before_ = matching_.mate;
    const auto n = static_cast<std::int64_t>(g_.node_count());
    auto finalize_touched = [this] {
        auto& t = s_.forest.touched;
        std::vector<NodeId> ordered(grown_.rbegin(), grown_.rend());
        ordered.insert(ordered.end(), t.begin(), t.end());
        t.swap(ordered);
        grown_.clear();
    };
    while (2 * s_.delta <= n) {
        while (auto e = s_.queue.delete_at_delta(s_.delta)) {
            NodeId x = g_.source(*e), y = g_.target(*e);
            if (base_label(x) != Label::Even) std::swap(x, y);
            if (y == matching_.mate_of(x) || s_.base.find(x) == s_.base.find(y) || base_label(y) == Label::Odd)
                continue;
            if (base_label(y) == Label::Unlabeled)
                grow_step(x, y);
            else if (base_label(y) == Label::Even)
                blossom_or_augment(x, y);
        }
        if (opt_.checked) {
            std::string why;
            if (!duals_consistent(&why)) throw std::logic_error("phase_1: " + why);
        }
        if (on_dual_update_) on_dual_update_(*this);
        if (s_.found_sap) {
            finalize_touched();
            build_aux_graph();
            return true;
        }
        commit_dunions();
        ++s_.delta;
    }
    finalize_touched();
    return false;
}

void GabowMatcher::build_aux_graph() {
    const auto& t = s_.forest.touched;
    for (NodeId v : t) {
        h_.rep[ix(v)] = s_.dbase.find(v);
        h_.mate_h[ix(v)] = kNoNode;
    }
    for (NodeId v : t) h_.member_end[ix(h_.rep[ix(v)])] = 0;
    for (NodeId v : t) ++h_.member_end[ix(h_.rep[ix(v)])];
    std::size_t total = 0;
    for (NodeId v : t)
        if (h_.rep[ix(v)] == v) {
            std::size_t cnt = h_.member_end[ix(v)];
            h_.member_begin[ix(v)] = h_.member_end[ix(v)] = total;
            total += cnt;
        }
    h_.members.resize(total);
    for (NodeId v : t) h_.members[h_.member_end[ix(h_.rep[ix(v)])]++] = v;

    for (NodeId u : t)
        for (EdgeId e : g_.adjacent(u)) {
            ++edge_scans_;
            h_.is_edge_of_h[static_cast<std::size_t>(e)] = 0;
        }
    for (NodeId u : t) {
        NodeId uh = h_.rep[ix(u)];
        for (EdgeId e : g_.out_edges(u)) {
            ++edge_scans_;
            auto ie = static_cast<std::size_t>(e);
            h_.is_edge_of_h[ie] = 0;
            NodeId v = g_.target(e);
            NodeId vh = s_.dbase.find(v);
            if (uh != vh && dual_value(u) + dual_value(v) == s_.weight[ie]) {
                h_.is_edge_of_h[ie] = 1;
                if (s_.weight[ie] == 2) {
                    h_.mate_h[ix(uh)] = vh;
                    h_.mate_h[ix(vh)] = uh;
                }
            }
        }
    }
}

NodeId GabowMatcher::h_other_end(EdgeId e, NodeId vh) const {
    NodeId s = h_.rep[ix(g_.source(e))];
    return s == vh ? h_.rep[ix(g_.target(e))] : s;
}

NodeId GabowMatcher::find_ap_h(NodeId root) {
    frames_.clear();
    newly_even_.clear();
    std::vector<NodeId> endpoints;
    auto push = [this](NodeId vh) {
        std::size_t q = newly_even_.size();
        frames_.push_back({vh, 0, 0, q, q, q});
    };
    push(root);
    while (!frames_.empty()) {
        HFrame& fr = frames_.back();
        if (fr.queue_pos < fr.queue_end) {
            push(newly_even_[fr.queue_pos++]);
            continue;
        }
        auto members = h_.contracted_into(fr.vh);
        if (fr.member_pos == members.size()) {
            newly_even_.resize(fr.queue_base);
            frames_.pop_back();
            continue;
        }
        const NodeId v = members[fr.member_pos];
        auto adj = g_.adjacent(v);
        if (fr.edge_pos == adj.size()) {
            ++fr.member_pos;
            fr.edge_pos = 0;
            continue;
        }
        const EdgeId eh = adj[fr.edge_pos++];
        ++edge_scans_;
        if (!h_.is_edge_of_h[static_cast<std::size_t>(eh)]) continue;
        const NodeId vh = fr.vh;
        const NodeId uh = h_.rep[ix(g_.opposite(eh, v))];
        if (h_.mate_h[ix(vh)] == uh) continue;
        if (h_.label_h[ix(uh)] == Label::Unlabeled) {
            NodeId m = h_.mate_h[ix(uh)];
            h_.label_h[ix(uh)] = Label::Odd;
            h_.parent_h[ix(uh)] = eh;
            if (m == kNoNode) {
                frames_.clear();
                newly_even_.clear();
                return uh;
            }
            h_.label_h[ix(m)] = Label::Even;
            h_.even_time_h[ix(m)] = h_.t_g++;
            push(m);
            continue;
        }
        const NodeId bh = s_.dbase.find(vh);
        NodeId zh = s_.dbase.find(uh);
        if (h_.even_time_h[ix(bh)] >= h_.even_time_h[ix(zh)]) continue;
        // Forward edge: contract the tree path from zh down to bh.
        newly_even_.resize(fr.queue_base);
        const std::size_t first = newly_even_.size();
        endpoints.clear();
        while (zh != bh) {
            endpoints.push_back(zh);
            zh = h_.mate_h[ix(zh)];
            if (zh == kNoNode) throw std::logic_error("find_ap_h: blossom walk passed a free node");
            endpoints.push_back(zh);
            newly_even_.push_back(zh);
            zh = s_.dbase.find(h_other_end(h_.parent_h[ix(zh)], zh));
        }
        for (NodeId z : endpoints) s_.dbase.union_blocks(z, bh);
        s_.dbase.make_rep(bh);
        std::reverse(newly_even_.begin() + static_cast<std::ptrdiff_t>(first), newly_even_.end());
        for (std::size_t i = first; i < newly_even_.size(); ++i) {
            NodeId z = newly_even_[i];
            h_.bridge_h[ix(z)] = eh;
            h_.dir_h[ix(z)] = g_.target(eh) == v ? 1 : -1;
        }
        HFrame& top = frames_.back();
        top.queue_pos = first;
        top.queue_end = newly_even_.size();
    }
    return kNoNode;
}

void GabowMatcher::find_path_in_h(NodeId vh, NodeId uh, std::vector<EdgeId>& out) {
    h_stack_.clear();
    h_stack_.emplace_back(vh, uh);
    while (!h_stack_.empty()) {
        auto [a, b] = h_stack_.back();
        h_stack_.pop_back();
        while (a != b) {
            if (h_.label_h[ix(a)] == Label::Even) {
                NodeId m = h_.mate_h[ix(a)];
                EdgeId e = h_.parent_h[ix(m)];
                out.push_back(e);
                a = h_other_end(e, m);
            } else {
                EdgeId br = h_.bridge_h[ix(a)];
                bool forward = h_.dir_h[ix(a)] == 1;
                NodeId near = h_.rep[ix(forward ? g_.source(br) : g_.target(br))];
                NodeId far = h_.rep[ix(forward ? g_.target(br) : g_.source(br))];
                h_stack_.emplace_back(near, h_.rep[ix(h_.mate_h[ix(a)])]);
                out.push_back(br);
                a = far;
            }
        }
    }
}

void GabowMatcher::lift_and_augment(std::span<const EdgeId> path_h) {
    pairs_.clear();
    for (EdgeId e : path_h) {
        NodeId u = g_.source(e), v = g_.target(e);
        pairs_.emplace_back(u, v);
        trace_even_path(s_.forest, matching_.mate, u, h_.rep[ix(u)], pairs_, scratch_);
        trace_even_path(s_.forest, matching_.mate, v, h_.rep[ix(v)], pairs_, scratch_);
    }
    for (auto [a, b] : pairs_) matching_.pair(a, b);
    ++matching_.size;
    if (lift_sink_) *lift_sink_ = pairs_;
}

std::size_t GabowMatcher::phase_2() {
    std::fill(h_.label_h.begin(), h_.label_h.end(), Label::Unlabeled);
    std::vector<std::vector<EdgeId>> paths;
    for (NodeId vh : s_.forest.touched) {
        if (vh != h_.rep[ix(vh)]) continue;
        if (h_.label_h[ix(vh)] != Label::Unlabeled || h_.mate_h[ix(vh)] != kNoNode) continue;
        h_.label_h[ix(vh)] = Label::Even;
        h_.even_time_h[ix(vh)] = h_.t_g++;
        NodeId free = find_ap_h(vh);
        if (free == kNoNode) continue;
        EdgeId e = h_.parent_h[ix(free)];
        std::vector<EdgeId> path{e};
        find_path_in_h(h_other_end(e, free), vh, path);
        paths.push_back(std::move(path));
    }
    PhaseReport report;
    std::vector<NodePair> lifted;
    if (on_phase_) lift_sink_ = &lifted;
    for (const auto& p : paths) {
        lift_and_augment(p);
        if (on_phase_) report.lifted_paths.push_back(lifted);
    }
    lift_sink_ = nullptr;
    for (NodeId v : s_.forest.touched)
        if (h_.rep[ix(v)] == v) h_.member_end[ix(v)] = h_.member_begin[ix(v)];
    h_.members.clear();
    if (on_phase_) {
        report.iteration = iteration_;
        report.delta = s_.delta;
        report.mate_before = std::move(phase_mate_before_);
        on_phase_(report);
    }
    return paths.size();
}

void GabowMatcher::finish_off() {
    OpCounters c;
    SinglePathSearch search(g_, matching_, s_.forest, s_.dbase, c);
    search.set_checked(opt_.checked);
    search.finish_off(true);
    edge_scans_ += c.edge_scans;
}

OddSetCover GabowMatcher::build_odd_set_cover() { return odd_set_cover_from_labels(s_.forest.label, s_.dbase); }

SolveResult GabowMatcher::solve() {
    const std::size_t n = g_.node_count();
    const std::size_t max_size = std::min(n / 2, 2 * greedy_init());
    SolveResult result;
    auto& t = s_.forest.touched;
    t.resize(n);
    for (std::size_t v = 0; v < n; ++v) t[v] = static_cast<NodeId>(v);
    for (;;) {
        setup_weights();
        iteration_ = ++result.iterations;
        const double gap = static_cast<double>(max_size) - static_cast<double>(matching_.size);
        if (opt_.heur && static_cast<double>(result.iterations) > 0.5 * opt_.heur_factor * gap) {
            finish_off();
            result.finisher_used = true;
            break;
        }
        if (!phase_1()) {
            // Phase one stops once 2*Delta > n, so its trees may be cut
            // short; a failing single-path pass rebuilds complete trees.
            finish_off();
            break;
        }
        phase_2();
    }
    result.matching = matching_edges(g_, matching_);
    result.osc = build_odd_set_cover();
    result.counters = counters();
    return result;
}

bool GabowMatcher::duals_consistent(std::string* reason) {
    auto fail = [reason](std::string what) {
        if (reason) *reason = std::move(what);
        return false;
    };
    for (std::size_t i = 0; i < g_.edge_count(); ++i) {
        const Edge& e = g_.edge(static_cast<EdgeId>(i));
        if (e.source == e.target || s_.base.find(e.source) == s_.base.find(e.target)) continue;
        if (dual_value(e.source) + dual_value(e.target) < s_.weight[i])
            return fail("edge " + std::to_string(i) + " is not dominated at Delta " + std::to_string(s_.delta));
    }
    const std::int64_t free_dual = 1 - s_.delta;
    for (std::size_t v = 0; v < g_.node_count(); ++v) {
        auto nv = static_cast<NodeId>(v);
        if (base_label(nv) == Label::Unlabeled) continue;
        std::int64_t d = dual_value(nv);
        if (matching_.is_free(nv) && d != free_dual)
            return fail("free node " + std::to_string(v) + " has dual " + std::to_string(d));
        if ((d - free_dual) % 2 != 0) return fail("parity violated at node " + std::to_string(v));
    }
    return true;
}

}  // namespace cardmatch
