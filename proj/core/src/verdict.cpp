#include "partlab/verdict.hpp"

#include <sstream>

namespace partlab {

std::string Verdict::to_string() const {
    std::ostringstream os;
    switch (tag_) {
        case Tag::Holds:
            os << "Holds";
            if (witness_) os << "(n=" << *witness_ << ")";
            break;
        case Tag::Fails:
            os << "Fails";
            if (pair_) os << "(" << pair_->first << "," << pair_->second << ")";
            break;
        case Tag::Unknown:
            os << "Unknown(h=" << horizon_ << ")";
            break;
    }
    if (!note_.empty()) os << " [" << note_ << "]";
    return os.str();
}

Verdict Verdict::conjoin(const std::vector<Verdict>& parts) {
    for (const auto& p : parts)
        if (p.is_fails()) return p;
    for (const auto& p : parts)
        if (p.is_unknown()) return p;
    Verdict v = holds("all clauses hold");
    for (const auto& p : parts)
        if (!p.note().empty()) v.add_detail(p.note());
    return v;
}

}  // namespace partlab
