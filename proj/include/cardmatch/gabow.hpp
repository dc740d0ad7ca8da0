#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cardmatch/bucket_queue.hpp"
#include "cardmatch/graph.hpp"
#include "cardmatch/matching.hpp"
#include "cardmatch/partition.hpp"
#include "cardmatch/types.hpp"

namespace cardmatch {

/// Phase-one state. The forest's touched list is the node list T.
struct PhaseState {
    AlternatingForest forest;
    std::int64_t delta = 0;
    std::vector<std::int64_t> bd;
    std::vector<std::int64_t> bdelta;
    std::vector<std::uint64_t> path1;
    std::vector<std::uint64_t> path2;
    std::uint64_t stamp = 0;
    std::vector<std::uint8_t> weight;
    BucketQueue queue;
    SplittablePartition base;
    SplittablePartition dbase;
    std::vector<NodePair> dunions;
    bool found_sap = false;

    PhaseState(std::size_t n, std::size_t m);
};

/// The contracted graph H, kept implicitly over G.
struct AuxOverlay {
    std::vector<NodeId> rep;
    std::vector<std::size_t> member_begin;
    std::vector<std::size_t> member_end;
    std::vector<NodeId> members;
    std::vector<std::uint8_t> is_edge_of_h;
    std::vector<NodeId> mate_h;
    std::vector<Label> label_h;
    std::vector<EdgeId> parent_h;
    std::vector<EdgeId> bridge_h;
    std::vector<std::int8_t> dir_h;
    std::vector<std::int64_t> even_time_h;
    std::int64_t t_g = 0;

    AuxOverlay(std::size_t n, std::size_t m);

    std::span<const NodeId> contracted_into(NodeId vh) const {
        auto i = static_cast<std::size_t>(vh);
        return {members.data() + member_begin[i], members.data() + member_end[i]};
    }
};

struct GabowOptions {
    double heur_factor = 1.0;
    bool heur = true;
    // Runs invariant sweeps after every dual update and validates partition
    // splits; violations throw std::logic_error. Meant for small inputs.
    bool checked = false;
};

struct PhaseReport {
    std::size_t iteration = 0;
    std::int64_t delta = 0;
    std::vector<NodeId> mate_before;
    // Non-matching edges of every lifted path, as node pairs.
    std::vector<std::vector<NodePair>> lifted_paths;
};

struct SolveResult {
    std::vector<EdgeId> matching;
    OddSetCover osc;
    std::size_t iterations = 0;
    bool finisher_used = false;
    OpCounters counters;
};

class GabowMatcher {
public:
    explicit GabowMatcher(const StaticGraph& g, GabowOptions options = {});

    std::size_t greedy_init();
    std::size_t init_with_matching(std::span<const EdgeId> m0);

    SolveResult solve();

    // Individual steps, exposed for inspection.
    void setup_weights();
    void reinitialize();
    bool phase_1();
    void build_aux_graph();
    std::size_t phase_2();
    void lift_and_augment(std::span<const EdgeId> path_h);
    void finish_off();
    OddSetCover build_odd_set_cover();

    std::int64_t dual_value(NodeId v);
    void scan_edge(EdgeId e, NodeId z);
    void grow_step(NodeId x, NodeId y);
    void blossom_or_augment(NodeId x, NodeId y);
    void shrink_path(NodeId b, NodeId x, NodeId y);
    void commit_dunions();

    // Checks dual feasibility, the free-node dual and the parity law;
    // returns false and fills `reason` on the first violation.
    bool duals_consistent(std::string* reason = nullptr);

    const StaticGraph& graph() const { return g_; }
    const Matching& matching() const { return matching_; }
    Matching& matching() { return matching_; }
    PhaseState& state() { return s_; }
    AuxOverlay& overlay() { return h_; }
    OpCounters counters() const;

    void set_phase_observer(std::function<void(const PhaseReport&)> fn) { on_phase_ = std::move(fn); }
    void set_dual_update_observer(std::function<void(GabowMatcher&)> fn) { on_dual_update_ = std::move(fn); }

private:
    struct HFrame {
        NodeId vh;
        std::size_t member_pos;
        std::size_t edge_pos;
        std::size_t queue_base;
        std::size_t queue_pos;
        std::size_t queue_end;
    };

    Label base_label(NodeId v) { return s_.forest.label[static_cast<std::size_t>(s_.base.find(v))]; }
    void scan_all(NodeId z);
    NodeId find_ap_h(NodeId root);
    void find_path_in_h(NodeId vh, NodeId uh, std::vector<EdgeId>& out);
    NodeId h_other_end(EdgeId e, NodeId vh) const;

    const StaticGraph& g_;
    GabowOptions opt_;
    Matching matching_;
    PhaseState s_;
    AuxOverlay h_;
    std::vector<NodeId> grown_;
    std::uint64_t edge_scans_ = 0;
    std::size_t iteration_ = 0;
    std::vector<HFrame> frames_;
    std::vector<NodeId> newly_even_;
    std::vector<NodePair> pairs_;
    std::vector<NodePair> scratch_;
    std::vector<std::pair<NodeId, NodeId>> h_stack_;
    std::vector<NodePair>* lift_sink_ = nullptr;
    std::vector<NodeId> phase_mate_before_;
    std::function<void(const PhaseReport&)> on_phase_;
    std::function<void(GabowMatcher&)> on_dual_update_;
};

}  // namespace cardmatch
