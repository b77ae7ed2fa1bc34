#include "partlab/filter_lab.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "partlab/segment_space.hpp"
#include "partlab/surjection_algebra.hpp"

namespace partlab {

namespace {

InfinitePartition meet_of_subset(const std::vector<InfinitePartition>& gens,
                                 const std::vector<int>& subset) {
    InfinitePartition acc = gens[static_cast<size_t>(subset[0])];
    for (size_t i = 1; i < subset.size(); ++i)
        acc = meet(acc, gens[static_cast<size_t>(subset[i])]);
    return acc;
}

// Nonempty subsets ordered by size, then lexicographically: small
// certificates are found first.
std::vector<std::vector<int>> subsets_by_size(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

}  // namespace

FilterGens::FilterGens(Mode mode, std::vector<InfinitePartition> gens, int default_horizon)
    : mode_(mode), gens_(std::move(gens)), horizon_(default_horizon) {
    if (gens_.empty()) throw std::invalid_argument("FilterGens: at least one generator required");
    if (mode_ == Mode::Principal && gens_.size() != 1)
        throw std::invalid_argument("FilterGens: a principal filter has exactly one generator");
    if (horizon_ <= 0) throw std::invalid_argument("FilterGens: horizon must be positive");
}

Verdict FilterGens::proper(int horizon) const {
    InfinitePartition all = gens_[0];
    for (size_t i = 1; i < gens_.size(); ++i) all = meet(all, gens_[i]);
    if (mode_ == Mode::Principal) {
        auto bc = gens_[0].block_count();
        if (bc.is_omega()) return Verdict::holds("generator certified infinite");
        if (bc.known_finite() && bc.value >= 2)
            return Verdict::holds("generator has " + std::to_string(bc.value) + " blocks");
        if (bc.known_finite()) return Verdict::fails_note("generator is the one-block partition");
    }
    if (all.block_count().is_omega())
        return Verdict::holds("meet of generators certified infinite");
    int window = 2 * horizon + 64;
    Segment glued = glue_initial(all, horizon).restrict_to(window);
    if (glued.block_count() >= 2)
        return Verdict::holds("second block inside window " + std::to_string(window));
    return Verdict::fails_note("glue at " + std::to_string(horizon) +
                               " shows one block within window " + std::to_string(window));
}

Verdict FilterGens::member(const InfinitePartition& x, int horizon) const {
    if (mode_ == Mode::Principal) return is_coarser(gens_[0], x, horizon);
    Verdict proper_check = proper(horizon);
    if (proper_check.is_fails())
        throw std::invalid_argument("fil_membership: improper generator set (" +
                                    proper_check.note() + ")");
    bool any_unknown = false;
    std::vector<std::string> refutations;
    for (const auto& subset : subsets_by_size(static_cast<int>(gens_.size()))) {
        Verdict v = coarser_star(meet_of_subset(gens_, subset), x, horizon);
        if (v.is_holds()) {
            Verdict out = Verdict::holds_at(v.witness().value_or(0), "subset meet coarser-star");
            out.set_subset(subset);
            return out;
        }
        if (!v.is_fails()) any_unknown = true;
        std::ostringstream os;
        os << "subset {";
        for (size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i];
        os << "}: " << v.to_string();
        refutations.push_back(os.str());
    }
    (void)any_unknown;
    Verdict out = Verdict::unknown(horizon, "no generator subset certifies membership");
    for (auto& r : refutations) out.add_detail(std::move(r));
    return out;
}

std::string FilterGens::to_text() const {
    std::ostringstream os;
    os << "mode: " << (mode_ == Mode::Star ? "star" : "principal") << "\n";
    for (const auto& g : gens_) os << g.to_string() << "\n";
    return os.str();
}

FilterGens FilterGens::parse_text(const std::string& text, int default_horizon) {
    std::istringstream is(text);
    std::string line;
    std::optional<Mode> mode;
    std::vector<InfinitePartition> gens;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::string body = line.substr(start);
        while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) body.pop_back();
        if (!mode) {
            if (body == "mode: star") mode = Mode::Star;
            else if (body == "mode: principal") mode = Mode::Principal;
            else
                throw std::invalid_argument("filter file line " + std::to_string(lineno) +
                                            ": expected 'mode: star|principal'");
            continue;
        }
        gens.push_back(InfinitePartition::parse(body));
    }
    if (!mode) throw std::invalid_argument("filter file: missing mode line");
    return FilterGens(*mode, std::move(gens), default_horizon);
}

FilterGens push_filter(const Surjection& f, const FilterGens& F) {
    std::vector<InfinitePartition> derived;
    std::set<std::string> seen;
    for (const auto& subset : subsets_by_size(static_cast<int>(F.gens().size()))) {
        InfinitePartition image = pushforward(f, meet_of_subset(F.gens(), subset));
        if (seen.insert(image.normalized().to_string()).second) derived.push_back(image);
    }
    int window = 2 * F.default_horizon() + 64;
    bool all_one_block = true;
    for (const auto& g : derived)
        if (g.restrict_to(window).block_count() >= 2) {
            all_one_block = false;
            break;
        }
    if (all_one_block)
        throw std::invalid_argument("push_filter: degenerate image (one-block pushforward of every meet)");
    FilterGens::Mode mode =
        F.mode() == FilterGens::Mode::Principal ? FilterGens::Mode::Principal : FilterGens::Mode::Star;
    return FilterGens(mode, std::move(derived), F.default_horizon());
}

FilterGens preimage_filter(const Surjection& f, const FilterGens& F) {
    std::vector<InfinitePartition> gens;
    gens.reserve(F.gens().size());
    for (const auto& g : F.gens()) gens.push_back(preimage(f, g));
    return FilterGens(F.mode(), std::move(gens), F.default_horizon());
}

FilterGens interleave_filters(const FilterGens& D, const FilterGens& E) {
    Verdict dp = D.proper(), ep = E.proper();
    if (dp.is_fails() || ep.is_fails())
        throw std::invalid_argument("interleave_filters: improper factor");
    std::vector<InfinitePartition> gens;
    for (const auto& x : D.gens())
        for (const auto& y : E.gens()) gens.push_back(interleave(x, y));
    FilterGens::Mode mode = (D.mode() == FilterGens::Mode::Principal &&
                             E.mode() == FilterGens::Mode::Principal)
                                ? FilterGens::Mode::Principal
                                : FilterGens::Mode::Star;
    return FilterGens(mode, std::move(gens), std::max(D.default_horizon(), E.default_horizon()));
}

Verdict below_check(const FilterGens& F, const FilterGens& G, const Surjection& f, int horizon) {
    FilterGens pushed = push_filter(f, G);
    std::vector<Verdict> parts;
    for (const auto& g : F.gens()) parts.push_back(pushed.member(g, horizon));
    for (const auto& g : pushed.gens()) parts.push_back(F.member(g, horizon));
    return Verdict::conjoin(parts);
}

Verdict diagonalizes(const InfinitePartition& x, const DiagFamily& family, int depth, int horizon) {
    std::vector<Verdict> parts;
    try {
        parts.push_back(is_coarser(x, family.at(Segment()), horizon));
    } catch (const std::out_of_range& e) {
        throw std::invalid_argument(std::string("diagonalizes: ") + e.what());
    }
    auto bc = x.block_count();
    for (int n = 0; n < depth; ++n) {
        if (bc.known_finite() && bc.value <= n) break;  // no s of this size has s* initial in X
        Segment s = approx(x, n);
        const InfinitePartition* target = nullptr;
        try {
            target = &family.at(s);
        } catch (const std::out_of_range& e) {
            throw std::invalid_argument(std::string("diagonalizes: ") + e.what());
        }
        parts.push_back(is_coarser(glue_initial(x, s.domain() + 1), *target, horizon));
    }
    return Verdict::conjoin(parts);
}

}  // namespace partlab
