#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace partlab {

// Three-valued certified result for predicates that quantify over omega.
// Holds and Fails carry a re-checkable certificate; Unknown only records the
// horizon that was exhausted.
class Verdict {
public:
    enum class Tag { Holds, Fails, Unknown };

    static Verdict holds(std::string note = "") {
        Verdict v;
        v.tag_ = Tag::Holds;
        v.note_ = std::move(note);
        return v;
    }
    // Holds with a numeric witness (e.g. the n of a coarser-star certificate).
    static Verdict holds_at(long witness, std::string note = "") {
        Verdict v = holds(std::move(note));
        v.witness_ = witness;
        return v;
    }
    // Fails with a counterexample pair (a, b).
    static Verdict fails(long a, long b, std::string note = "") {
        Verdict v;
        v.tag_ = Tag::Fails;
        v.pair_ = {a, b};
        v.note_ = std::move(note);
        return v;
    }
    static Verdict fails_note(std::string note) {
        Verdict v;
        v.tag_ = Tag::Fails;
        v.note_ = std::move(note);
        return v;
    }
    static Verdict unknown(long horizon, std::string note = "") {
        Verdict v;
        v.tag_ = Tag::Unknown;
        v.horizon_ = horizon;
        v.note_ = std::move(note);
        return v;
    }

    Tag tag() const { return tag_; }
    bool is_holds() const { return tag_ == Tag::Holds; }
    bool is_fails() const { return tag_ == Tag::Fails; }
    bool is_unknown() const { return tag_ == Tag::Unknown; }

    const std::optional<long>& witness() const { return witness_; }
    const std::optional<std::pair<long, long>>& counterexample() const { return pair_; }
    long horizon() const { return horizon_; }
    const std::string& note() const { return note_; }

    const std::vector<std::string>& details() const { return details_; }
    void add_detail(std::string d) { details_.push_back(std::move(d)); }

    // Witness subset indices (filter membership certificates).
    const std::vector<int>& subset() const { return subset_; }
    void set_subset(std::vector<int> s) { subset_ = std::move(s); }

    std::string to_string() const;

    // Conjunction: Fails dominates, then Unknown, else Holds.
    static Verdict conjoin(const std::vector<Verdict>& parts);

private:
    Tag tag_ = Tag::Unknown;
    std::optional<long> witness_;
    std::optional<std::pair<long, long>> pair_;
    long horizon_ = -1;
    std::string note_;
    std::vector<std::string> details_;
    std::vector<int> subset_;
};

}  // namespace partlab
