#include "partlab/surjection.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace partlab {

namespace {
std::string build_repr(Surjection::Kind k, const std::vector<long>& tab, long shift) {
    switch (k) {
        case Surjection::Kind::Identity: return "id";
        case Surjection::Kind::Halving: return "half";
        case Surjection::Kind::Fact3F: return "fact3f";
        case Surjection::Kind::Fact3G: return "fact3g";
        case Surjection::Kind::Table: {
            std::ostringstream os;
            os << "table:[";
            for (size_t i = 0; i < tab.size(); ++i) {
                if (i) os << ',';
                os << tab[i];
            }
            os << "];shift:" << shift;
            return os.str();
        }
    }
    return "";
}
}  // namespace

Surjection::Surjection(Kind k, std::vector<long> tab, long shift)
    : kind_(k), table_(std::move(tab)), shift_(shift), repr_(build_repr(k, table_, shift_)) {}

Surjection Surjection::identity() { return Surjection(Kind::Identity, {}, 0); }
Surjection Surjection::halving() { return Surjection(Kind::Halving, {}, 0); }
Surjection Surjection::fact3f() { return Surjection(Kind::Fact3F, {}, 0); }
Surjection Surjection::fact3g() { return Surjection(Kind::Fact3G, {}, 0); }

Surjection Surjection::table(std::vector<long> tab, long shift) {
    long len = static_cast<long>(tab.size());
    if (shift < 0) throw std::invalid_argument("table surjection: shift must be >= 0");
    if (len < shift) throw std::invalid_argument("table surjection: shift exceeds table length");
    for (long v : tab)
        if (v < 0) throw std::invalid_argument("table surjection: negative value");
    // Tail n -> n - shift covers [len - shift, inf); the table must cover the rest.
    std::set<long> have(tab.begin(), tab.end());
    for (long v = 0; v < len - shift; ++v)
        if (!have.count(v))
            throw std::invalid_argument("table surjection: value " + std::to_string(v) +
                                        " never attained");
    return Surjection(Kind::Table, std::move(tab), shift);
}

long Surjection::apply(long n) const {
    switch (kind_) {
        case Kind::Identity: return n;
        case Kind::Halving: return n / 2;
        case Kind::Fact3F: return n % 2 == 0 ? n / 2 : 0;
        case Kind::Fact3G: return n % 2 == 1 ? (n - 1) / 2 : 0;
        case Kind::Table:
            if (n < static_cast<long>(table_.size())) return table_[static_cast<size_t>(n)];
            return n - shift_;
    }
    return 0;
}

long Surjection::coverage_bound(long m) const {
    switch (kind_) {
        case Kind::Identity: return m;
        case Kind::Halving: return 2 * m;
        case Kind::Fact3F: return 2 * m;
        case Kind::Fact3G: return 2 * m + 1;
        case Kind::Table: return std::max<long>(static_cast<long>(table_.size()), m + shift_);
    }
    return m;
}

Surjection Surjection::parse(std::string_view text) {
    if (text == "id") return identity();
    if (text == "half") return halving();
    if (text == "fact3f") return fact3f();
    if (text == "fact3g") return fact3g();
    if (text.rfind("table:[", 0) == 0) {
        size_t close = text.find(']');
        if (close == std::string_view::npos)
            throw std::invalid_argument("surjection parse: missing ']'");
        std::vector<long> tab;
        std::string inner(text.substr(7, close - 7));
        if (!inner.empty()) {
            std::istringstream is(inner);
            std::string tok;
            while (std::getline(is, tok, ',')) tab.push_back(std::stol(tok));
        }
        std::string_view rest = text.substr(close + 1);
        if (rest.rfind(";shift:", 0) != 0)
            throw std::invalid_argument("surjection parse: expected ';shift:<d>'");
        long shift = std::stol(std::string(rest.substr(7)));
        return table(std::move(tab), shift);
    }
    throw std::invalid_argument("unknown surjection expression: " + std::string(text));
}

std::string Surjection::to_string() const { return repr_; }

}  // namespace partlab
