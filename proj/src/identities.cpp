#include "wordeq/identities.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace wordeq {

std::vector<Variable> Identity::variables() const {
    std::vector<Variable> seen = lhs.variables();
    for (const auto& v : rhs.variables())
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
    return seen;
}

namespace {

Identity rename_jointly(const Word& first, const Word& second) {
    std::vector<Variable> order;
    auto note = [&order](const Variable& v) {
        if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
    };
    for (const auto& v : first) note(v);
    for (const auto& v : second) note(v);
    auto rename = [&order](const Word& w) {
        Word out;
        for (const auto& v : w) {
            const auto it = std::find(order.begin(), order.end(), v);
            out.push_back(Variable(fmt::format("v{}", (it - order.begin()) + 1)));
        }
        return out;
    };
    return Identity{rename(first), rename(second)};
}

}  // namespace

Identity alpha_canonical(const Identity& id) { return rename_jointly(id.lhs, id.rhs); }

Identity canonical_unordered(const Identity& id) {
    const Identity forward = rename_jointly(id.lhs, id.rhs);
    const Identity backward = rename_jointly(id.rhs, id.lhs);
    return std::min(forward, backward);
}

std::string format_identity(const Identity& id) {
    return fmt::format("{} = {}", format_word(id.lhs), format_word(id.rhs));
}

Identity parse_identity(std::string_view line) {
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
        throw ParseError("identity line needs exactly one '='", line.size());
    if (line.find('=', eq + 1) != std::string_view::npos)
        throw ParseError("identity line needs exactly one '='", line.find('=', eq + 1));
    return Identity{parse_word(line.substr(0, eq)), parse_word(line.substr(eq + 1))};
}

IdentitySystem::IdentitySystem(std::string name, std::vector<Identity> ids)
    : name_(std::move(name)) {
    for (auto& id : ids) add(std::move(id));
}

bool IdentitySystem::add(Identity id) {
    if (contains(id)) return false;
    identities_.push_back(std::move(id));
    return true;
}

void IdentitySystem::add_all(const IdentitySystem& other) {
    for (const auto& id : other) add(id);
}

bool IdentitySystem::contains(const Identity& id) const {
    for (const auto& have : identities_)
        if ((have.lhs == id.lhs && have.rhs == id.rhs) ||
            (have.lhs == id.rhs && have.rhs == id.lhs))
            return true;
    return false;
}

IdentitySystem merge(const IdentitySystem& a, const IdentitySystem& b, std::string name) {
    IdentitySystem out(std::move(name));
    out.add_all(a);
    out.add_all(b);
    return out;
}

}  // namespace wordeq
