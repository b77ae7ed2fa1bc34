#include "partlab/coloring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "partlab/partition_order.hpp"
#include "partlab/segment_space.hpp"

namespace partlab {

// ---- SetColoring ----

SetColoring SetColoring::constant(int arity, int colors, int value) {
    SetColoring t(arity, colors);
    t.table_[{}] = value;  // sentinel; at() falls back to it
    return t;
}

void SetColoring::set(std::vector<int> key, int color) {
    if (static_cast<int>(key.size()) != arity_)
        throw std::invalid_argument("SetColoring: key arity mismatch");
    if (color < 0 || color >= colors_) throw std::invalid_argument("SetColoring: color out of range");
    std::sort(key.begin(), key.end());
    table_[std::move(key)] = color;
}

int SetColoring::at(const std::vector<int>& key) const {
    std::vector<int> sorted = key;
    std::sort(sorted.begin(), sorted.end());
    auto it = table_.find(sorted);
    if (it != table_.end()) return it->second;
    auto sentinel = table_.find({});
    if (sentinel != table_.end()) return sentinel->second;
    std::ostringstream os;
    os << "tau is partial: no color for {";
    for (size_t i = 0; i < sorted.size(); ++i) os << (i ? "," : "") << sorted[i];
    os << "}";
    throw std::out_of_range(os.str());
}

std::string SetColoring::to_text() const {
    std::ostringstream os;
    os << "n " << arity_ << "; colors " << colors_ << "\n";
    for (const auto& [key, color] : table_) {
        if (key.empty()) {
            os << "* -> " << color << "\n";
            continue;
        }
        for (size_t i = 0; i < key.size(); ++i) os << (i ? "," : "") << key[i];
        os << " -> " << color << "\n";
    }
    return os.str();
}

SetColoring SetColoring::parse_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("tau file: empty");
    int arity = 0, colors = 0;
    if (std::sscanf(line.c_str(), "n %d; colors %d", &arity, &colors) != 2)
        throw std::invalid_argument("tau file: bad header, expected 'n <k>; colors <r>'");
    SetColoring t(arity, colors);
    while (std::getline(is, line)) {
        size_t arrow = line.find("->");
        if (arrow == std::string::npos) continue;
        std::string lhs = line.substr(0, arrow);
        int color = std::stoi(line.substr(arrow + 2));
        if (lhs.find('*') != std::string::npos) {
            t.table_[{}] = color;
            continue;
        }
        std::vector<int> key;
        std::istringstream ls(lhs);
        std::string tok;
        while (std::getline(ls, tok, ',')) key.push_back(std::stoi(tok));
        t.set(std::move(key), color);
    }
    return t;
}

// ---- Coloring ----

int Coloring::color_of(const Segment& u) const {
    if (table_) {
        auto it = table_->find(u);
        if (it == table_->end())
            throw std::out_of_range("coloring table has no entry for " + u.to_string());
        return it->second;
    }
    return eval_(u);
}

Coloring Coloring::constant(int colors, int value) {
    if (value < 0 || value >= colors) throw std::invalid_argument("constant coloring: value out of range");
    return custom(colors, std::nullopt, [value](const Segment&) { return value; },
                  "rule:constant(" + std::to_string(colors) + "," + std::to_string(value) + ")");
}

Coloring Coloring::from_table(int arity, int bound, int colors, std::map<Segment, int> table) {
    for (const auto& [key, color] : table) {
        if (key.block_count() != arity)
            throw std::invalid_argument("coloring table key with wrong arity: " + key.to_string());
        if (color < 0 || color >= colors)
            throw std::invalid_argument("coloring table color out of range");
    }
    Coloring c;
    c.colors_ = colors;
    c.arity_ = arity;
    c.bound_ = bound;
    c.rule_ = "table";
    c.table_ = std::make_shared<const std::map<Segment, int>>(std::move(table));
    return c;
}

Coloring Coloring::custom(int colors, std::optional<int> arity,
                          std::function<int(const Segment&)> eval, std::string rule) {
    Coloring c;
    c.colors_ = colors;
    c.arity_ = arity;
    c.eval_ = std::move(eval);
    c.rule_ = std::move(rule);
    return c;
}

std::string Coloring::to_text() const {
    if (!table_) return rule_ + "\n";
    std::ostringstream os;
    os << "arity " << *arity_ << "; bound " << *bound_ << "; colors " << colors_ << "\n";
    for (const auto& [key, color] : *table_) os << key.to_string() << " -> " << color << "\n";
    return os.str();
}

Coloring Coloring::parse_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        std::string body = line.substr(start);
        if (body.rfind("rule:", 0) == 0) return parse_rule(body);
        int arity = 0, bound = 0, colors = 0;
        if (std::sscanf(body.c_str(), "arity %d; bound %d; colors %d", &arity, &bound, &colors) != 3)
            throw std::invalid_argument("coloring file: bad header");
        std::map<Segment, int> table;
        while (std::getline(is, line)) {
            size_t arrow = line.find("->");
            if (arrow == std::string::npos) continue;
            Segment key = Segment::parse(line.substr(0, arrow));
            table[key] = std::stoi(line.substr(arrow + 2));
        }
        return from_table(arity, bound, colors, std::move(table));
    }
    throw std::invalid_argument("coloring file: empty");
}

Coloring Coloring::parse_rule(std::string_view text) {
    auto body = [&](std::string_view prefix) {
        return std::string(text.substr(prefix.size(), text.size() - prefix.size() - 1));
    };
    if (text.rfind("rule:membership(", 0) == 0 && text.back() == ')') {
        std::string inner = body("rule:membership(");
        size_t comma = inner.rfind(',');
        if (comma == std::string::npos) throw std::invalid_argument("membership rule: expected ',k'");
        InfinitePartition z = InfinitePartition::parse(inner.substr(0, comma));
        int k = std::stoi(inner.substr(comma + 1));
        return mk_membership_coloring(z, k);
    }
    if (text.rfind("rule:lemma1(", 0) == 0 && text.back() == ')') {
        return lemma1_coloring(Surjection::parse(body("rule:lemma1(")));
    }
    if (text.rfind("rule:constant(", 0) == 0 && text.back() == ')') {
        std::string inner = body("rule:constant(");
        size_t comma = inner.find(',');
        return constant(std::stoi(inner.substr(0, comma)), std::stoi(inner.substr(comma + 1)));
    }
    throw std::invalid_argument("unknown coloring rule: " + std::string(text) +
                                " (min/diag rules are file-backed)");
}

// ---- named rules ----

Coloring mk_membership_coloring(const InfinitePartition& z, int k) {
    if (k < 1) throw std::invalid_argument("membership coloring: arity must be >= 1");
    std::string rule = "rule:membership(" + z.to_string() + "," + std::to_string(k) + ")";
    return Coloring::custom(
        2, k,
        [z](const Segment& u) { return is_coarser(u.star(), z).is_holds() ? 0 : 1; },
        std::move(rule));
}

Coloring mk_min_coloring(const SetColoring& tau, int n) {
    if (tau.arity() != n) throw std::invalid_argument("min coloring: tau arity differs from n");
    SetColoring t = tau;
    return Coloring::custom(
        tau.colors(), n,
        [t, n](const Segment& s) {
            if (s.block_count() != n)
                throw std::invalid_argument("min coloring expects " + std::to_string(n) + " blocks");
            std::vector<int> key = s.star().minima();
            key.erase(key.begin());  // drop 0, the minimum of block 0
            return t.at(key);
        },
        "rule:min(tau," + std::to_string(n) + ")");
}

Coloring mk_diag_coloring(const SegmentIndexedFamily& family) {
    SegmentIndexedFamily f = family;
    return Coloring::custom(
        2, std::nullopt,
        [f](const Segment& t) {
            if (t.block_count() < 2)
                throw std::invalid_argument("diag coloring expects at least 2 blocks");
            int cut = t.block_min(t.block_count() - 2);
            Segment s_t = t.prefix(cut);
            const InfinitePartition& target = f.at(s_t);
            Segment glued = glue_initial(t.star(), s_t.domain() + 1);
            return is_coarser(glued, target).is_holds() ? 0 : 1;
        },
        "rule:diag(family)");
}

Coloring lemma1_coloring(const Surjection& f) {
    Surjection fn = f;
    return Coloring::custom(
        2, 2,
        [fn](const Segment& s) {
            if (s.block_count() != 2)
                throw std::invalid_argument("lemma1 coloring expects 2 blocks");
            std::set<long> image0, image1;
            for (int i = 0; i < s.domain(); ++i)
                (s.label(i) == 0 ? image0 : image1).insert(fn.apply(i));
            for (long v : image1)
                if (image0.count(v)) return 1;
            return 0;
        },
        "rule:lemma1(" + f.to_string() + ")");
}

// ---- Relativization ----

Relativization::Relativization(Segment s, InfinitePartition y)
    : s_(std::move(s)), y_(std::move(y)), yp_(seg_meet(s_, y_)), nplus1_(s_.block_count()) {
    if (nplus1_ < 1) throw std::invalid_argument("relativization needs |s| >= 1");
}

std::vector<int> Relativization::yp_labels(int m) const { return yp_.restrict_to(m).labels(); }

bool Relativization::in_r(int m) const { return yp_labels(m + 1)[static_cast<size_t>(m)] < nplus1_; }

int Relativization::comp_element(int rank) const {
    for (int window = std::max(16, 4 * (rank + nplus1_ + 1)); window <= (1 << 16); window *= 2) {
        std::vector<int> lab = yp_labels(window);
        int seen = 0;
        for (int mpos = 0; mpos < window; ++mpos) {
            if (lab[static_cast<size_t>(mpos)] >= nplus1_) {
                if (seen == rank) return mpos;
                ++seen;
            }
        }
    }
    throw std::runtime_error("complement element not found within the scan cap");
}

Segment Relativization::z_restrict(int m) const {
    if (m == 0) return Segment();
    int last = comp_element(m - 1);
    std::vector<int> lab = yp_labels(last + 1);
    std::vector<long long> zlab;
    zlab.reserve(static_cast<size_t>(m));
    for (int mpos = 0; mpos <= last; ++mpos)
        if (lab[static_cast<size_t>(mpos)] >= nplus1_) zlab.push_back(lab[static_cast<size_t>(mpos)]);
    return Segment::canonicalize(std::span<const long long>(zlab));
}

std::vector<Segment> Relativization::z_family(int arity, int domain_bound) const {
    std::vector<Segment> out;
    enumerate_with_labels(
        arity, domain_bound, false, std::nullopt,
        [this](int m) { return z_restrict(m).labels(); },
        [&](const Segment& u) {
            out.push_back(u);
            return true;
        });
    return out;
}

Segment Relativization::xi(const Segment& u) const {
    int d = u.domain();
    int edge = comp_element(d);  // first complement element not pulled back
    std::vector<int> lab = yp_labels(edge);
    std::vector<long long> out;
    out.reserve(static_cast<size_t>(edge));
    int rank = 0;
    for (int mpos = 0; mpos < edge; ++mpos) {
        if (lab[static_cast<size_t>(mpos)] < nplus1_) {
            out.push_back(lab[static_cast<size_t>(mpos)]);
        } else {
            out.push_back(u.label(rank));
            ++rank;
        }
    }
    return Segment::canonicalize(std::span<const long long>(out));
}

std::pair<Relativization, Coloring> relativize(const Coloring& pi, const Segment& s,
                                               const InfinitePartition& y) {
    if (s.block_count() < 1) throw std::invalid_argument("relativize needs |s| >= 1");
    if (!is_coarser(s, y).is_holds())
        throw std::invalid_argument("relativize: s is not coarser than Y on dom(s)");
    auto rel = std::make_shared<Relativization>(s, y);
    Coloring tau = Coloring::custom(
        pi.colors(), pi.arity(),
        [rel, pi](const Segment& u) { return pi.color_of(rel->xi(u)); },
        "rule:relativized(" + pi.rule() + ")");
    return {*rel, tau};
}

}  // namespace partlab
