#include "wordeq/families.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <fmt/format.h>

namespace wordeq {

namespace {

std::vector<Variable> default_separators(std::size_t r) {
    std::vector<Variable> seps;
    seps.reserve(r);
    for (std::size_t i = 1; i <= r; ++i) seps.emplace_back(fmt::format("t{}", i));
    return seps;
}

}  // namespace

RigidWord::RigidWord(std::vector<std::size_t> exps)
    : exponents(std::move(exps)), base("x") {
    if (exponents.empty())
        throw std::invalid_argument("a rigid word needs at least the exponent e_0");
    separators = default_separators(exponents.size() - 1);
}

RigidWord::RigidWord(std::vector<std::size_t> exps, std::vector<Variable> seps,
                     Variable base_var)
    : exponents(std::move(exps)), separators(std::move(seps)), base(std::move(base_var)) {
    if (exponents.empty())
        throw std::invalid_argument("a rigid word needs at least the exponent e_0");
    if (separators.size() != exponents.size() - 1)
        throw std::invalid_argument(
            fmt::format("{} exponents need {} separators, got {}", exponents.size(),
                        exponents.size() - 1, separators.size()));
}

std::size_t RigidWord::exponent_sum() const {
    return std::accumulate(exponents.begin(), exponents.end(), std::size_t{0});
}

bool RigidWord::n_limited(std::size_t n) const { return exponent_sum() <= n; }

bool RigidWord::m_free(std::size_t m) const {
    for (const std::size_t e : exponents)
        if (e >= m) return false;
    return true;
}

Word RigidWord::to_word() const {
    Word out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i > 0) out.push_back(separators[i - 1]);
        for (std::size_t k = 0; k < exponents[i]; ++k) out.push_back(base);
    }
    return out;
}

bool RigidIdentity::efficient() const {
    for (std::size_t i = 0; i < lhs_exponents.size(); ++i)
        if (lhs_exponents[i] == 0 && rhs_exponents[i] == 0) return false;
    return true;
}

Identity RigidIdentity::to_identity() const {
    if (lhs_exponents.size() != rhs_exponents.size())
        throw std::invalid_argument("rigid identity sides disagree on separator count");
    return Identity{RigidWord(lhs_exponents).to_word(), RigidWord(rhs_exponents).to_word()};
}

IdentitySystem ids_O() {
    IdentitySystem out("O");
    out.add(parse_identity("x y t1 x t2 y = y x t1 x t2 y"));
    out.add(parse_identity("x t1 x y t2 y = x t1 y x t2 y"));
    out.add(parse_identity("x t1 y t2 x y = x t1 y t2 y x"));
    return out;
}

namespace {

// x^k t1 ... tk = (t1 x)(t2 x) ... (tk x): the base absorbs past k
// separators one at a time.
Identity absorption(std::size_t k) {
    const Variable x("x");
    Word lhs;
    for (std::size_t i = 0; i < k; ++i) lhs.push_back(x);
    Word rhs;
    for (std::size_t i = 1; i <= k; ++i) {
        const Variable t(fmt::format("t{}", i));
        lhs.push_back(t);
        rhs.push_back(t);
        rhs.push_back(x);
    }
    return Identity{std::move(lhs), std::move(rhs)};
}

IdentitySystem pairwise(const std::vector<RigidWord>& words, std::string name) {
    IdentitySystem out(std::move(name));
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            out.add(Identity{words[i].to_word(), words[j].to_word()});
    return out;
}

IdentitySystem chain(const std::vector<RigidWord>& words, std::string name) {
    IdentitySystem out(std::move(name));
    for (std::size_t i = 0; i + 1 < words.size(); ++i)
        out.add(Identity{words[i].to_word(), words[i + 1].to_word()});
    return out;
}

}  // namespace

IdentitySystem ids_A(std::size_t n) {
    if (n < 3) throw std::invalid_argument("ids_A needs n >= 3");
    IdentitySystem out(fmt::format("A{}", n));
    out.add(absorption(n));
    return out;
}

std::vector<RigidWord> words_B(std::size_t n) {
    if (n < 3) throw std::invalid_argument("words_B needs n >= 3");
    std::vector<RigidWord> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        out.emplace_back(std::vector<std::size_t>{n - 1 - k, k},
                         std::vector<Variable>{Variable("t")});
    return out;
}

IdentitySystem ids_B(std::size_t n) { return pairwise(words_B(n), fmt::format("B{}", n)); }

IdentitySystem ids_B_chain(std::size_t n) {
    return chain(words_B(n), fmt::format("B{}-chain", n));
}

IdentitySystem ids_C(std::size_t n) {
    if (n < 2) throw std::invalid_argument("ids_C needs n >= 2");
    IdentitySystem out(fmt::format("C{}", n));
    out.add(parse_identity("x^4 = x^3"));
    out.add(parse_identity("x^3 t = t x^3"));
    out.add(absorption(2 * n));
    return out;
}

std::vector<RigidWord> words_D(std::size_t n) {
    if (n < 2) throw std::invalid_argument("words_D needs n >= 2");
    std::vector<RigidWord> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::size_t> exps(n, 2);
        exps[k] = 1;
        out.emplace_back(std::move(exps));
    }
    return out;
}

IdentitySystem ids_D(std::size_t n) { return pairwise(words_D(n), fmt::format("D{}", n)); }

IdentitySystem ids_D_chain(std::size_t n) {
    return chain(words_D(n), fmt::format("D{}-chain", n));
}

IdentitySystem ids_E(std::size_t m) {
    if (m < 1) throw std::invalid_argument("ids_E needs m >= 1");
    IdentitySystem out(fmt::format("E{}", m));
    out.add(parse_identity(fmt::format("x^{} = x^{}", m + 1, m)));
    out.add(parse_identity(fmt::format("x^{} t = t x^{}", m, m)));
    return out;
}

RigidWord word_w(std::size_t m, std::size_t r) {
    if (m < 2) throw std::invalid_argument("word_w needs m >= 2");
    if (r < 1) throw std::invalid_argument("word_w needs r >= 1");
    return RigidWord(std::vector<std::size_t>(r + 1, m - 1));
}

std::vector<RigidWord> enumerate_rigid_words(std::size_t r_max, std::size_t sum_max) {
    std::vector<RigidWord> out;
    for (std::size_t r = 0; r <= r_max; ++r) {
        std::vector<std::size_t> exps(r + 1, 0);
        bool exhausted = false;
        while (!exhausted) {
            if (std::accumulate(exps.begin(), exps.end(), std::size_t{0}) <= sum_max)
                out.emplace_back(exps);
            // Next exponent vector in lexicographic order; digits beyond
            // sum_max cannot satisfy the bound, so each caps there.
            std::size_t i = exps.size();
            while (i-- > 0) {
                if (exps[i] < sum_max) {
                    ++exps[i];
                    break;
                }
                exps[i] = 0;
                if (i == 0) exhausted = true;
            }
        }
    }
    return out;
}

MTestProfile m_test_profile(const Word& w, std::size_t m) {
    if (m < 2) throw std::invalid_argument("m-test profiles need m >= 2");
    MTestProfile profile;
    const std::size_t edge = std::min(m - 1, w.size());
    profile.prefix = w.subword(0, edge);
    profile.suffix = w.subword(w.size() - edge, edge);
    for (std::size_t pos = 0; pos + m <= w.size(); ++pos)
        profile.factor_set.insert(w.subword(pos, m));
    return profile;
}

bool tm_satisfies(std::size_t m, const Identity& id) {
    if (id.lhs.empty() || id.rhs.empty())
        throw std::invalid_argument("tm_satisfies is a semigroup-level test: sides must be nonempty");
    return m_test_profile(id.lhs, m) == m_test_profile(id.rhs, m);
}

namespace {

Word delete_variables(const Word& w, const std::vector<Variable>& vars, std::size_t mask) {
    Word out;
    for (const auto& letter : w) {
        bool deleted = false;
        for (std::size_t j = 0; j < vars.size(); ++j)
            if ((mask >> j) & 1u && letter == vars[j]) {
                deleted = true;
                break;
            }
        if (!deleted) out.push_back(letter);
    }
    return out;
}

}  // namespace

bool tm1_satisfies(std::size_t m, const Identity& id) {
    if (m < 2) throw std::invalid_argument("m-test profiles need m >= 2");
    const std::vector<Variable> vars = id.variables();
    if (vars.size() >= 8 * sizeof(std::size_t))
        throw std::invalid_argument("too many variables for the subset sweep");
    for (std::size_t mask = 0; mask < (std::size_t{1} << vars.size()); ++mask) {
        const Word lhs = delete_variables(id.lhs, vars, mask);
        const Word rhs = delete_variables(id.rhs, vars, mask);
        if (lhs.empty() && rhs.empty()) continue;
        if (lhs.empty() || rhs.empty()) return false;
        if (!tm_satisfies(m, Identity{lhs, rhs})) return false;
    }
    return true;
}

IdentitySystem expand_directive(std::string_view token) {
    if (token.empty() || token[0] != '@')
        throw ParseError("directives start with '@'", 0);
    const std::size_t open = token.find('(');
    std::string family(token.substr(1, open == std::string_view::npos ? token.size() - 1
                                                                      : open - 1));
    std::size_t arg = 0;
    bool has_arg = false;
    if (open != std::string_view::npos) {
        if (token.back() != ')') throw ParseError("unclosed '(' in directive", open);
        const std::string digits(token.substr(open + 1, token.size() - open - 2));
        if (digits.empty() || digits.size() > 4 ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("directive argument must be a small number", open + 1);
        arg = std::stoul(digits);
        has_arg = true;
    }
    auto need_arg = [&](const char* what) {
        if (!has_arg)
            throw ParseError(fmt::format("directive @{} needs an argument, e.g. @{}", family,
                                         what),
                             0);
    };
    try {
        if (family == "O") {
            if (has_arg) throw ParseError("@O takes no argument", 0);
            return ids_O();
        }
        if (family == "A") {
            need_arg("A(3)");
            return ids_A(arg);
        }
        if (family == "B") {
            need_arg("B(3)");
            return ids_B(arg);
        }
        if (family == "C") {
            need_arg("C(2)");
            return ids_C(arg);
        }
        if (family == "D") {
            need_arg("D(2)");
            return ids_D(arg);
        }
        if (family == "E") {
            need_arg("E(2)");
            return ids_E(arg);
        }
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), 0);
    }
    throw ParseError(fmt::format("unknown family directive '@{}'", family), 0);
}

IdentitySystem parse_basis(std::string_view text, std::string name) {
    IdentitySystem out(std::move(name));
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const std::size_t last = line.find_last_not_of(" \t\r");
        const std::string body = line.substr(first, last - first + 1);
        try {
            if (body[0] == '@')
                out.add_all(expand_directive(body));
            else
                out.add(parse_identity(body));
        } catch (const ParseError& err) {
            throw ParseError(fmt::format("line {}: {}", line_no, err.what()), err.position);
        }
    }
    return out;
}

IdentitySystem load_basis_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(fmt::format("cannot open basis file '{}'", path));
    std::ostringstream text;
    text << in.rdbuf();
    return parse_basis(text.str(), path);
}

}  // namespace wordeq
