#include "wordeq/lattices.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

namespace wordeq {

FiniteLattice::FiniteLattice(std::string name, std::vector<std::string> labels,
                             std::vector<std::uint8_t> leq)
    : name_(std::move(name)), labels_(std::move(labels)), leq_(std::move(leq)) {
    if (leq_.size() != labels_.size() * labels_.size())
        throw std::invalid_argument("leq matrix size does not match element count");
}

std::optional<std::size_t> FiniteLattice::find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

namespace {

std::optional<std::size_t> bound_of(const FiniteLattice& L, std::size_t a, std::size_t b,
                                    bool lower) {
    std::vector<std::size_t> candidates;
    for (std::size_t c = 0; c < L.size(); ++c) {
        const bool fits = lower ? L.leq(c, a) && L.leq(c, b) : L.leq(a, c) && L.leq(b, c);
        if (fits) candidates.push_back(c);
    }
    for (const std::size_t c : candidates) {
        bool extreme = true;
        for (const std::size_t d : candidates)
            if (lower ? !L.leq(d, c) : !L.leq(c, d)) {
                extreme = false;
                break;
            }
        if (extreme) return c;  // unique once the order is antisymmetric
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::size_t> FiniteLattice::meet(std::size_t a, std::size_t b) const {
    return bound_of(*this, a, b, /*lower=*/true);
}

std::optional<std::size_t> FiniteLattice::join(std::size_t a, std::size_t b) const {
    return bound_of(*this, a, b, /*lower=*/false);
}

LatticeAxiomReport check_lattice_axioms(const FiniteLattice& L) {
    const std::size_t n = L.size();
    for (std::size_t a = 0; a < n; ++a)
        if (!L.leq(a, a)) return {false, fmt::format("not reflexive at {}", L.label(a))};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && L.leq(a, b) && L.leq(b, a))
                return {false,
                        fmt::format("not antisymmetric at {}, {}", L.label(a), L.label(b))};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!L.leq(a, b)) continue;
            for (std::size_t c = 0; c < n; ++c)
                if (L.leq(b, c) && !L.leq(a, c))
                    return {false, fmt::format("not transitive at {} <= {} <= {}", L.label(a),
                                               L.label(b), L.label(c))};
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!L.meet(a, b))
                return {false, fmt::format("no meet for {}, {}", L.label(a), L.label(b))};
            if (!L.join(a, b))
                return {false, fmt::format("no join for {}, {}", L.label(a), L.label(b))};
        }
    return {true, ""};
}

std::vector<Partition> partition_lattice_elements(std::size_t k) {
    if (k < 1 || k > 6)
        throw std::invalid_argument("partition lattices are supported for 1 <= k <= 6");
    std::vector<Word> ground;
    for (std::size_t i = 1; i <= k; ++i)
        ground.push_back(Word{std::vector<Variable>{Variable(fmt::format("p{}", i))}});
    return enumerate_partitions(std::move(ground));
}

FiniteLattice partition_lattice(std::size_t k) {
    const std::vector<Partition> parts = partition_lattice_elements(k);
    const std::size_t n = parts.size();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& p : parts) {
        std::string label;
        for (const auto& block : p.blocks()) {
            if (!label.empty()) label += '|';
            for (std::size_t i = 0; i < block.size(); ++i)
                label += fmt::format("{}{}", i ? "," : "", block[i] + 1);
        }
        labels.push_back(std::move(label));
    }
    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            leq[a * n + b] = is_finer(parts[a], parts[b]) ? 1 : 0;
    return FiniteLattice(fmt::format("Eq({})", k), std::move(labels), std::move(leq));
}

std::optional<std::vector<std::size_t>> sublattice_embedding_search(const FiniteLattice& L,
                                                                    std::size_t k) {
    if (L.size() > 8) throw std::invalid_argument("embedding search is capped at 8 elements");
    if (k < 1 || k > 5) throw std::invalid_argument("embedding search needs 1 <= k <= 5");

    const std::size_t n = L.size();
    std::vector<std::size_t> l_meet(n * n), l_join(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto m = L.meet(a, b);
            const auto j = L.join(a, b);
            if (!m || !j)
                throw std::invalid_argument(
                    fmt::format("'{}' is not a lattice: no meet/join for {}, {}", L.name(),
                                L.label(a), L.label(b)));
            l_meet[a * n + b] = *m;
            l_join[a * n + b] = *j;
        }

    const FiniteLattice target = partition_lattice(k);
    const std::size_t tn = target.size();
    std::vector<std::size_t> t_meet(tn * tn), t_join(tn * tn);
    for (std::size_t a = 0; a < tn; ++a)
        for (std::size_t b = 0; b < tn; ++b) {
            t_meet[a * tn + b] = *target.meet(a, b);
            t_join[a * tn + b] = *target.join(a, b);
        }

    // Linear extension: fewer elements below first, so meets of placed
    // elements are always placed.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto below = [&](std::size_t a) {
        std::size_t count = 0;
        for (std::size_t c = 0; c < n; ++c)
            if (L.leq(c, a)) ++count;
        return count;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return below(a) < below(b); });

    std::vector<std::size_t> image(n, tn);  // tn = unplaced
    std::vector<std::uint8_t> used(tn, 0);
    auto consistent = [&](std::size_t placed_count) {
        for (std::size_t i = 0; i < placed_count; ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                const std::size_t a = order[i], b = order[j];
                const std::size_t m = l_meet[a * n + b], w = l_join[a * n + b];
                if (image[m] != tn &&
                    image[m] != t_meet[image[a] * tn + image[b]])
                    return false;
                if (image[w] != tn &&
                    image[w] != t_join[image[a] * tn + image[b]])
                    return false;
            }
        return true;
    };
    auto place = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == n) return true;
        for (std::size_t cand = 0; cand < tn; ++cand) {
            if (used[cand]) continue;
            image[order[pos]] = cand;
            used[cand] = 1;
            if (consistent(pos + 1) && self(self, pos + 1)) return true;
            used[cand] = 0;
            image[order[pos]] = tn;
        }
        return false;
    };
    if (!place(place, 0)) return std::nullopt;
    return image;
}

FiniteLattice load_lattice_json(std::string_view text, std::string name) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(fmt::format("bad lattice JSON: {}", err.what()), 0);
    }
    if (!doc.is_object() || !doc.contains("elements") || !doc.contains("leq"))
        throw ParseError("lattice JSON needs 'elements' and 'leq'", 0);
    std::vector<std::string> labels;
    for (const auto& el : doc["elements"]) {
        if (!el.is_string()) throw ParseError("'elements' must hold strings", 0);
        labels.push_back(el.get<std::string>());
    }
    const std::size_t n = labels.size();
    if (n == 0) throw ParseError("a lattice needs at least one element", 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (labels[i] == labels[j])
                throw ParseError(fmt::format("duplicate element '{}'", labels[i]), 0);
    auto resolve = [&](const nlohmann::json& side) -> std::size_t {
        if (side.is_number_unsigned() && side.get<std::size_t>() < n)
            return side.get<std::size_t>();
        if (side.is_string()) {
            const auto it = std::find(labels.begin(), labels.end(), side.get<std::string>());
            if (it != labels.end()) return static_cast<std::size_t>(it - labels.begin());
        }
        throw ParseError(fmt::format("unknown element {} in 'leq'", side.dump()), 0);
    };
    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (const auto& pair : doc["leq"]) {
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError("'leq' entries must be [a, b] pairs", 0);
        leq[resolve(pair[0]) * n + resolve(pair[1])] = 1;
    }
    // Reflexive-transitive closure, so inputs may list only covers.
    for (std::size_t via = 0; via < n; ++via)
        for (std::size_t a = 0; a < n; ++a) {
            if (!leq[a * n + via]) continue;
            for (std::size_t b = 0; b < n; ++b)
                if (leq[via * n + b]) leq[a * n + b] = 1;
        }
    return FiniteLattice(std::move(name), std::move(labels), std::move(leq));
}

FiniteLattice load_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(fmt::format("cannot open lattice file '{}'", path));
    std::ostringstream text;
    text << in.rdbuf();
    return load_lattice_json(text.str(), path);
}

}  // namespace wordeq
