#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wordeq/words.hpp"

namespace wordeq {

// An identity u ≈ v between words of the free monoid.
struct Identity {
    Word lhs;
    Word rhs;

    bool trivial() const { return lhs == rhs; }

    // Distinct variables of both sides, in order of first occurrence
    // scanning lhs then rhs.
    std::vector<Variable> variables() const;

    friend bool operator==(const Identity& a, const Identity& b) {
        return a.lhs == b.lhs && a.rhs == b.rhs;
    }
    friend bool operator<(const Identity& a, const Identity& b) {
        if (a.lhs != b.lhs) return a.lhs < b.lhs;
        return a.rhs < b.rhs;
    }
};

// Both sides renamed jointly (one numbering across the identity, first
// occurrence order scanning lhs then rhs).
Identity alpha_canonical(const Identity& id);

// Canonical representative of an identity viewed as an unordered pair of
// words up to variable renaming: the shortlex-smaller of the two jointly
// canonicalised orientations. Two identities assert the same relation up
// to renaming and swapping sides iff their canonical forms are equal.
Identity canonical_unordered(const Identity& id);

// "lhs = rhs" in the word grammar.
std::string format_identity(const Identity& id);

// Parses one "LHS = RHS" line. Throws ParseError if there is not exactly
// one '=' or either side fails to parse.
Identity parse_identity(std::string_view line);

// A finite set of identities with a name. Insertion order is preserved;
// u≈v and v≈u count as the same identity and are stored once.
class IdentitySystem {
public:
    IdentitySystem() = default;
    explicit IdentitySystem(std::string name) : name_(std::move(name)) {}
    IdentitySystem(std::string name, std::vector<Identity> ids);

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    // Returns false (and stores nothing) if the identity, in either
    // orientation, is already present.
    bool add(Identity id);
    void add_all(const IdentitySystem& other);

    bool contains(const Identity& id) const;

    std::size_t size() const { return identities_.size(); }
    bool empty() const { return identities_.empty(); }
    const std::vector<Identity>& identities() const { return identities_; }
    auto begin() const { return identities_.begin(); }
    auto end() const { return identities_.end(); }

private:
    std::string name_;
    std::vector<Identity> identities_;
};

// Union with a fresh name; left operand's identities first.
IdentitySystem merge(const IdentitySystem& a, const IdentitySystem& b, std::string name);

}  // namespace wordeq
