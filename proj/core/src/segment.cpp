#include "partlab/segment.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace partlab {

Segment Segment::canonicalize(std::span<const long long> labels) {
    Segment s;
    s.rgs_.reserve(labels.size());
    std::map<long long, int> first;
    for (long long lab : labels) {
        auto it = first.find(lab);
        if (it == first.end()) {
            int idx = static_cast<int>(first.size());
            first.emplace(lab, idx);
            s.rgs_.push_back(idx);
        } else {
            s.rgs_.push_back(it->second);
        }
    }
    s.blocks_ = static_cast<int>(first.size());
    return s;
}

Segment Segment::canonicalize(const std::vector<int>& labels) {
    std::vector<long long> wide(labels.begin(), labels.end());
    return canonicalize(std::span<const long long>(wide));
}

Segment Segment::from_rgs(std::vector<int> rgs) {
    int mx = -1;
    for (size_t i = 0; i < rgs.size(); ++i) {
        if (rgs[i] < 0 || rgs[i] > mx + 1)
            throw std::invalid_argument("not a restricted growth string at position " +
                                        std::to_string(i));
        mx = std::max(mx, rgs[i]);
    }
    Segment s;
    s.rgs_ = std::move(rgs);
    s.blocks_ = mx + 1;
    return s;
}

Segment Segment::parse(std::string_view text) {
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip();
    if (i >= text.size() || text[i] != '[')
        throw std::invalid_argument("segment literal must start with '[' (position " +
                                    std::to_string(i) + ")");
    ++i;
    std::vector<int> vals;
    skip();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip();
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start)
                throw std::invalid_argument("expected digit at position " + std::to_string(i));
            vals.push_back(std::stoi(std::string(text.substr(start, i - start))));
            skip();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ']') { ++i; break; }
            throw std::invalid_argument("expected ',' or ']' at position " + std::to_string(i));
        }
    }
    skip();
    if (i != text.size())
        throw std::invalid_argument("trailing input at position " + std::to_string(i));
    return from_rgs(std::move(vals));
}

std::string Segment::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < rgs_.size(); ++i) {
        if (i) os << ',';
        os << rgs_[i];
    }
    os << ']';
    return os.str();
}

std::vector<std::vector<int>> Segment::blocks() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(blocks_));
    for (int i = 0; i < domain(); ++i) out[static_cast<size_t>(rgs_[static_cast<size_t>(i)])].push_back(i);
    return out;
}

int Segment::block_min(int b) const {
    for (int i = 0; i < domain(); ++i)
        if (rgs_[static_cast<size_t>(i)] == b) return i;
    throw std::out_of_range("no block " + std::to_string(b));
}

std::vector<int> Segment::minima() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(blocks_));
    int seen = 0;
    for (int i = 0; i < domain(); ++i) {
        if (rgs_[static_cast<size_t>(i)] == seen) {
            out.push_back(i);
            ++seen;
        }
    }
    return out;
}

Segment Segment::star() const {
    Segment s = *this;
    s.rgs_.push_back(s.blocks_);
    s.blocks_ += 1;
    return s;
}

Segment Segment::prefix(int m) const {
    if (m > domain()) throw std::out_of_range("prefix longer than domain");
    Segment s;
    s.rgs_.assign(rgs_.begin(), rgs_.begin() + m);
    int mx = -1;
    for (int v : s.rgs_) mx = std::max(mx, v);
    s.blocks_ = mx + 1;
    return s;
}

std::strong_ordering Segment::operator<=>(const Segment& o) const {
    if (auto c = rgs_.size() <=> o.rgs_.size(); c != 0) return c;
    for (size_t i = 0; i < rgs_.size(); ++i)
        if (auto c = rgs_[i] <=> o.rgs_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

}  // namespace partlab
