#include "wordeq/words.hpp"

#include <algorithm>
#include <cctype>

#include <fmt/format.h>

namespace wordeq {

Word Word::subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Variable>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word operator*(const Word& a, const Word& b) {
    std::vector<Variable> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.letters_.begin(), a.letters_.end());
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
}

Word& Word::operator*=(const Word& b) {
    letters_.insert(letters_.end(), b.letters_.begin(), b.letters_.end());
    return *this;
}

std::vector<Variable> Word::variables() const {
    std::vector<Variable> seen;
    for (const auto& v : letters_) {
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
    }
    return seen;
}

bool Word::contains(const Variable& v) const {
    return std::find(letters_.begin(), letters_.end(), v) != letters_.end();
}

std::string Word::str() const { return format_word(*this); }

bool operator<(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end(),
        [](const Variable& x, const Variable& y) { return x.name < y.name; });
}

namespace {

bool is_name_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

Word parse_word(std::string_view text) {
    std::vector<Variable> letters;
    bool saw_token = false;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        saw_token = true;
        const std::size_t tok_start = i;
        if (text[i] == '1') {
            ++i;
            if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
                throw ParseError("'1' must stand alone as a token", i);
            // "1" is the empty word: contributes no letters.
            continue;
        }
        if (!is_name_start(text[i]))
            throw ParseError(fmt::format("expected variable name, got '{}'", text[i]), i);
        ++i;
        while (i < n && is_name_char(text[i])) ++i;
        std::string name(text.substr(tok_start, i - tok_start));
        std::size_t count = 1;
        if (i < n && text[i] == '^') {
            ++i;
            const std::size_t exp_start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == exp_start) throw ParseError("expected digits after '^'", exp_start);
            count = 0;
            for (std::size_t j = exp_start; j < i; ++j) {
                count = count * 10 + static_cast<std::size_t>(text[j] - '0');
                if (count > 1000000) throw ParseError("exponent too large", exp_start);
            }
        }
        if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
            throw ParseError(fmt::format("unexpected character '{}' in token", text[i]), i);
        for (std::size_t k = 0; k < count; ++k) letters.emplace_back(name);
    }
    if (!saw_token) throw ParseError("empty input; the empty word is written '1'", 0);
    return Word(std::move(letters));
}

std::string format_word(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    const std::size_t n = w.size();
    while (i < n) {
        std::size_t run = 1;
        while (i + run < n && w[i + run] == w[i]) ++run;
        if (!out.empty()) out += ' ';
        if (run == 1)
            out += w[i].name;
        else
            out += fmt::format("{}^{}", w[i].name, run);
        i += run;
    }
    return out;
}

std::set<Word> factors(const Word& w) {
    std::set<Word> out;
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (std::size_t len = 1; pos + len <= w.size(); ++len) out.insert(w.subword(pos, len));
    return out;
}

Word alpha_canonical(const Word& w) {
    std::vector<Variable> order = w.variables();
    std::vector<Variable> letters;
    letters.reserve(w.size());
    for (const auto& v : w) {
        const auto it = std::find(order.begin(), order.end(), v);
        const auto idx = static_cast<std::size_t>(it - order.begin()) + 1;
        letters.emplace_back(fmt::format("v{}", idx));
    }
    return Word(std::move(letters));
}

}  // namespace wordeq
