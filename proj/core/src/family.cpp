#include "partlab/family.hpp"

#include <sstream>
#include <stdexcept>

namespace partlab {

SegmentIndexedFamily SegmentIndexedFamily::constant(const InfinitePartition& x) {
    SegmentIndexedFamily f;
    f.set_default(x);
    return f;
}

void SegmentIndexedFamily::set(const Segment& s, const InfinitePartition& x) {
    entries_.insert_or_assign(s, x);
}

bool SegmentIndexedFamily::covers(const Segment& s) const {
    return default_.has_value() || entries_.count(s) > 0;
}

const InfinitePartition& SegmentIndexedFamily::at(const Segment& s) const {
    auto it = entries_.find(s);
    if (it != entries_.end()) return it->second;
    if (default_) return *default_;
    throw std::out_of_range("family coverage gap at " + s.to_string());
}

std::string SegmentIndexedFamily::to_text() const {
    std::ostringstream os;
    auto root = entries_.find(Segment());
    if (root != entries_.end()) os << "root: " << root->second.to_string() << "\n";
    for (const auto& [key, val] : entries_) {
        if (key == Segment()) continue;
        os << "on " << key.to_string() << ": " << val.to_string() << "\n";
    }
    if (default_) os << "default: " << default_->to_string() << "\n";
    return os.str();
}

SegmentIndexedFamily SegmentIndexedFamily::parse_text(const std::string& text) {
    SegmentIndexedFamily f;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::string body = line.substr(start);
        auto err = [&](const std::string& what) {
            throw std::invalid_argument("family line " + std::to_string(lineno) + ": " + what);
        };
        if (body.rfind("root:", 0) == 0) {
            f.set_root(InfinitePartition::parse(body.substr(5)));
        } else if (body.rfind("default:", 0) == 0) {
            f.set_default(InfinitePartition::parse(body.substr(8)));
        } else if (body.rfind("on ", 0) == 0) {
            size_t colon = body.find(':', 3);
            if (colon == std::string::npos) err("expected ':' after the segment key");
            Segment key = Segment::parse(body.substr(3, colon - 3));
            f.set(key, InfinitePartition::parse(body.substr(colon + 1)));
        } else {
            err("expected 'root:', 'on [..]:' or 'default:'");
        }
    }
    return f;
}

}  // namespace partlab
