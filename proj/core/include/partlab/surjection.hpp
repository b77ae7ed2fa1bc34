#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace partlab {

// A total surjection omega -> omega from a fixed constructor set, with a
// coverage bound: every value below m is attained by some argument below
// coverage_bound(m). The bound is what makes preimage restrictions and
// pushforward closures exact at a horizon.
//
// Expression grammar: id | half | fact3f | fact3g | table:[v0,...,vk];shift:<d>
class Surjection {
public:
    enum class Kind { Identity, Halving, Fact3F, Fact3G, Table };

    static Surjection identity();
    // n -> floor(n/2)
    static Surjection halving();
    // n/2 if n even, else 0
    static Surjection fact3f();
    // (n-1)/2 if n odd, else 0
    static Surjection fact3g();
    // table[n] for n < len, n - shift beyond; validated surjective.
    static Surjection table(std::vector<long> table, long shift);

    static Surjection parse(std::string_view text);
    std::string to_string() const;

    Kind kind() const { return kind_; }
    long apply(long n) const;
    // Smallest window of arguments guaranteed to attain every value < m.
    long coverage_bound(long m) const;

    bool operator==(const Surjection& o) const { return repr_ == o.repr_; }

private:
    Surjection(Kind k, std::vector<long> tab, long shift);
    Kind kind_;
    std::vector<long> table_;
    long shift_ = 0;
    std::string repr_;
};

}  // namespace partlab
