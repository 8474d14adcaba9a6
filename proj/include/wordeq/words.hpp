#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordeq {

// A variable of the countable alphabet X. Names match [a-z][a-z0-9_]*;
// equality and ordering are by name.
struct Variable {
    std::string name;

    Variable() = default;
    explicit Variable(std::string n) : name(std::move(n)) {}

    friend bool operator==(const Variable& a, const Variable& b) { return a.name == b.name; }
    friend bool operator!=(const Variable& a, const Variable& b) { return a.name != b.name; }
    friend bool operator<(const Variable& a, const Variable& b) { return a.name < b.name; }
};

// A word of the free monoid X*: a finite sequence of variables. The empty
// word is the monoid identity and is written "1". Ordering is shortlex
// (length first, then letterwise by variable name), which is the order
// used everywhere a deterministic enumeration of words is required.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Variable> letters) : letters_(std::move(letters)) {}

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    const Variable& operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Variable>& letters() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    // Contiguous subword of `len` letters starting at `pos`.
    Word subword(std::size_t pos, std::size_t len) const;

    // Concatenation (the monoid operation).
    friend Word operator*(const Word& a, const Word& b);
    Word& operator*=(const Word& b);

    void push_back(Variable v) { letters_.push_back(std::move(v)); }

    // Distinct variables in order of first occurrence.
    std::vector<Variable> variables() const;
    bool contains(const Variable& v) const;

    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b);  // shortlex

private:
    std::vector<Variable> letters_;
};

struct ParseError : std::runtime_error {
    std::size_t position;  // byte offset into the input

    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what), position(pos) {}
};

// Parses the word grammar: whitespace-separated tokens, each a variable
// name [a-z][a-z0-9_]* optionally followed by ^k with k >= 0; the single
// token "1" denotes the empty word. Exponents expand (x^3 -> x x x) and
// exponent 0 contributes nothing. Throws ParseError on malformed input.
Word parse_word(std::string_view text);

// Renders a word in the same grammar; runs of a variable print with an
// exponent (x x x -> "x^3") and the empty word prints as "1".
// parse_word(format_word(w)) == w for every word.
std::string format_word(const Word& w);

// All nonempty contiguous subwords, deduplicated.
std::set<Word> factors(const Word& w);

// Variables renamed v1, v2, ... by order of first occurrence. Two words
// have equal canonical forms iff they differ only by a variable bijection.
Word alpha_canonical(const Word& w);

}  // namespace wordeq
