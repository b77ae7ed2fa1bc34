#include "partlab/search.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "partlab/segment_space.hpp"

namespace partlab {

namespace {

std::vector<Segment> family_of(const std::vector<int>& xlabels, int k,
                               const std::optional<Segment>& within) {
    std::vector<Segment> out;
    // dom(u*) <= dom(X): enumerate up to dom(X) - 1.
    enumerate_with_labels(
        k, static_cast<int>(xlabels.size()) - 1, false, within,
        [&xlabels](int m) {
            std::vector<int> sub(xlabels.begin(), xlabels.begin() + m);
            return Segment::canonicalize(sub).labels();
        },
        [&](const Segment& u) {
            out.push_back(u);
            return true;
        });
    return out;
}

// All u-colors over the decided prefix of a partially assigned coarsening;
// returns false on a color conflict.
bool prefix_monochromatic(const Coloring& pi, const std::vector<int>& labels, int k,
                          const std::optional<Segment>& within) {
    std::optional<int> seen;
    bool ok = true;
    enumerate_with_labels(
        k, static_cast<int>(labels.size()) - 1, false, within,
        [&labels](int m) {
            std::vector<int> sub(labels.begin(), labels.begin() + m);
            return Segment::canonicalize(sub).labels();
        },
        [&](const Segment& u) {
            int c = pi.color_of(u);
            if (seen && *seen != c) {
                ok = false;
                return false;
            }
            seen = c;
            return true;
        });
    return ok;
}

struct LatticeSearch {
    const Segment& base;
    int target_blocks;  // 0 = unconstrained
    std::vector<int> pref_max;
    std::vector<int> group;  // label per base block
    long long candidates = 0;

    // Decided element prefix once base blocks [0, j) carry labels:
    // pref_max[d] counts the distinct base blocks among the first d elements.
    int decided_prefix(int j) const {
        int d = 0;
        while (d < base.domain() && pref_max[static_cast<size_t>(d) + 1] <= j) ++d;
        return d;
    }

    std::vector<int> merged_labels(int upto) const {
        std::vector<int> out(static_cast<size_t>(upto));
        for (int i = 0; i < upto; ++i)
            out[static_cast<size_t>(i)] = group[static_cast<size_t>(base.label(i))];
        return out;
    }

    template <typename Prune, typename Accept>
    bool dfs(int j, int max_so_far, const Prune& prune, const Accept& accept) {
        int blocks = base.block_count();
        if (j == blocks) {
            if (target_blocks > 0 && max_so_far + 1 != target_blocks) return false;
            ++candidates;
            return accept(merged_labels(base.domain()));
        }
        if (target_blocks > 0 && (target_blocks - 1 - max_so_far) > (blocks - j)) return false;
        int hi = max_so_far + 1;
        if (target_blocks > 0) hi = std::min(hi, target_blocks - 1);
        // Largest admissible label first: the finest coarsening is visited
        // first and the identity grouping is the first full candidate.
        for (int lab = hi; lab >= 0; --lab) {
            group[static_cast<size_t>(j)] = lab;
            int decided = decided_prefix(j + 1);
            if (prune(merged_labels(decided))) continue;
            if (dfs(j + 1, std::max(max_so_far, lab), prune, accept)) return true;
        }
        return false;
    }
};

}  // namespace

std::vector<Segment> finite_scale_family(const Segment& x, int k) {
    return family_of(x.labels(), k, std::nullopt);
}

std::vector<Segment> finite_scale_family(const Segment& x, int k, const Segment& within) {
    return family_of(x.labels(), k, within);
}

bool verify_dr_witness(const Coloring& pi, const Segment& witness, int k, int* color_out,
                       bool* degenerate_out) {
    std::vector<Segment> members = finite_scale_family(witness, k);
    if (degenerate_out) *degenerate_out = members.size() < 2;
    if (members.empty()) {
        if (color_out) *color_out = 0;
        return true;
    }
    int c0 = pi.color_of(members.front());
    for (const Segment& u : members)
        if (pi.color_of(u) != c0) return false;
    if (color_out) *color_out = c0;
    return true;
}

bool verify_scp_witness(const Coloring& pi, const Segment& witness, int depth, int level_base) {
    for (int d = 0; d <= witness.domain(); ++d) {
        Segment s = witness.prefix(d);
        int level = s.block_count() - 1;
        if (level < 0 || level >= depth) continue;
        std::vector<Segment> members = finite_scale_family(witness, s.block_count() + level_base, s);
        if (members.size() < 2) continue;
        int c0 = pi.color_of(members.front());
        for (const Segment& u : members)
            if (pi.color_of(u) != c0) return false;
    }
    return true;
}

WitnessResult dr_witness_search(const Coloring& pi, const InfinitePartition& base,
                                int domain_bound, int target_blocks, int arity) {
    return dr_witness_search_gated(pi, base, domain_bound, target_blocks, arity, {});
}

WitnessResult dr_witness_search_gated(const Coloring& pi, const InfinitePartition& base,
                                      int domain_bound, int target_blocks, int arity,
                                      const WitnessGate& gate) {
    int k = arity > 0 ? arity : pi.arity().value_or(0);
    if (k < 1) throw std::invalid_argument("dr search needs an arity (from the coloring or explicit)");
    if (target_blocks <= k)
        throw std::invalid_argument("dr search: target blocks must exceed the coloring arity");
    Segment base_seg = base.restrict_to(domain_bound);
    WitnessResult result;
    if (target_blocks > base_seg.block_count()) return result;  // empty lattice

    LatticeSearch search{base_seg, target_blocks,
                         {}, std::vector<int>(static_cast<size_t>(base_seg.block_count()), 0), 0};
    search.pref_max.resize(static_cast<size_t>(base_seg.domain()) + 1);
    int mx = -1;
    search.pref_max[0] = 0;
    for (int i = 0; i < base_seg.domain(); ++i) {
        mx = std::max(mx, base_seg.label(i));
        search.pref_max[static_cast<size_t>(i) + 1] = mx + 1;
    }

    search.dfs(
        0, -1,
        [&](const std::vector<int>& decided) { return !prefix_monochromatic(pi, decided, k, std::nullopt); },
        [&](const std::vector<int>& labels) {
            Segment cand = Segment::canonicalize(labels);
            int color = 0;
            bool degenerate = false;
            if (!verify_dr_witness(pi, cand, k, &color, &degenerate)) return false;
            if (gate && !gate(cand, color, degenerate)) return false;
            result.found = true;
            result.witness = cand;
            result.color = color;
            result.degenerate = degenerate;
            return true;
        });
    result.candidates = search.candidates;
    return result;
}

WitnessResult scp_witness_search(const Coloring& pi, const InfinitePartition& base,
                                 int domain_bound, int depth, int level_base) {
    if (depth < 1) throw std::invalid_argument("scp search: depth must be >= 1");
    Segment base_seg = base.restrict_to(domain_bound);
    WitnessResult result;
    LatticeSearch search{base_seg, 0,
                         {}, std::vector<int>(static_cast<size_t>(base_seg.block_count()), 0), 0};
    search.pref_max.resize(static_cast<size_t>(base_seg.domain()) + 1);
    int mx = -1;
    search.pref_max[0] = 0;
    for (int i = 0; i < base_seg.domain(); ++i) {
        mx = std::max(mx, base_seg.label(i));
        search.pref_max[static_cast<size_t>(i) + 1] = mx + 1;
    }

    auto scp_conflict = [&](const std::vector<int>& decided) {
        Segment part = Segment::canonicalize(decided);
        for (int d = 0; d <= part.domain(); ++d) {
            Segment s = part.prefix(d);
            int level = s.block_count() - 1;
            if (level < 0 || level >= depth) continue;
            if (!prefix_monochromatic(pi, part.labels(), s.block_count() + level_base, s))
                return true;
        }
        return false;
    };

    search.dfs(0, -1, scp_conflict, [&](const std::vector<int>& labels) {
        Segment cand = Segment::canonicalize(labels);
        if (!verify_scp_witness(pi, cand, depth, level_base)) return false;
        result.found = true;
        result.witness = cand;
        // Degeneracy: no level family reaches 2 members.
        bool any = false;
        for (int d = 0; d <= cand.domain() && !any; ++d) {
            Segment s = cand.prefix(d);
            int level = s.block_count() - 1;
            if (level < 0 || level >= depth) continue;
            any = finite_scale_family(cand, s.block_count() + level_base, s).size() >= 2;
        }
        result.degenerate = !any;
        return true;
    });
    result.candidates = search.candidates;
    return result;
}

}  // namespace partlab
