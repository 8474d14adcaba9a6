#include "wordeq/partitions.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace wordeq {

namespace {

std::vector<std::size_t> normalize(const std::vector<std::size_t>& raw) {
    std::vector<std::size_t> relabel;
    std::vector<std::size_t> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto it = std::find(relabel.begin(), relabel.end(), raw[i]);
        if (it == relabel.end()) {
            out[i] = relabel.size();
            relabel.push_back(raw[i]);
        } else {
            out[i] = static_cast<std::size_t>(it - relabel.begin());
        }
    }
    return out;
}

}  // namespace

Partition::Partition(std::vector<Word> ground, std::vector<std::size_t> block_of)
    : ground_(std::move(ground)), block_of_(normalize(block_of)) {
    if (ground_.size() != block_of_.size())
        throw std::invalid_argument("partition needs one block index per ground word");
}

Partition Partition::equality(std::vector<Word> ground) {
    std::vector<std::size_t> rgs(ground.size());
    std::iota(rgs.begin(), rgs.end(), std::size_t{0});
    return Partition(std::move(ground), std::move(rgs));
}

Partition Partition::single_block(std::vector<Word> ground) {
    std::vector<std::size_t> rgs(ground.size(), 0);
    return Partition(std::move(ground), std::move(rgs));
}

std::size_t Partition::block_count() const {
    return block_of_.empty() ? 0 : *std::max_element(block_of_.begin(), block_of_.end()) + 1;
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
    std::vector<std::vector<std::size_t>> out(block_count());
    for (std::size_t i = 0; i < block_of_.size(); ++i) out[block_of_[i]].push_back(i);
    return out;
}

std::string Partition::str() const {
    std::string out;
    for (const auto& block : blocks()) {
        if (!out.empty()) out += '|';
        for (std::size_t k = 0; k < block.size(); ++k) {
            if (k) out += ',';
            out += format_word(ground_[block[k]]);
        }
    }
    return out;
}

std::vector<Partition> enumerate_partitions(std::vector<Word> ground) {
    if (ground.size() > 10)
        throw std::invalid_argument("partition enumeration is capped at 10 ground words");
    std::vector<Partition> out;
    if (ground.empty()) {
        out.emplace_back(ground, std::vector<std::size_t>{});
        return out;
    }
    // Restricted-growth strings in lexicographic order: a[0] = 0 and
    // a[i] <= 1 + max(a[0..i-1]).
    const std::size_t n = ground.size();
    std::vector<std::size_t> rgs(n, 0);
    while (true) {
        out.emplace_back(ground, rgs);
        std::size_t i = n;
        bool advanced = false;
        while (i-- > 1) {
            const std::size_t cap = 1 + *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[i] < cap) {
                ++rgs[i];
                std::fill(rgs.begin() + i + 1, rgs.end(), std::size_t{0});
                advanced = true;
                break;
            }
        }
        if (!advanced) return out;
    }
}

namespace {

void require_same_ground(const Partition& p, const Partition& q) {
    if (p.ground() != q.ground())
        throw std::invalid_argument("partitions live on different ground lists");
}

}  // namespace

Partition meet(const Partition& p, const Partition& q) {
    require_same_ground(p, q);
    const std::size_t n = p.size();
    std::vector<std::size_t> rgs(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < n; ++i) {
        const std::pair<std::size_t, std::size_t> key{p.block_index(i), q.block_index(i)};
        const auto it = std::find(seen.begin(), seen.end(), key);
        if (it == seen.end()) {
            rgs[i] = seen.size();
            seen.push_back(key);
        } else {
            rgs[i] = static_cast<std::size_t>(it - seen.begin());
        }
    }
    return Partition(p.ground(), std::move(rgs));
}

Partition join(const Partition& p, const Partition& q) {
    require_same_ground(p, q);
    const std::size_t n = p.size();
    // Union-find seeded with both partitions' blocks.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto root = [&parent](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p.same_block(i, j) || q.same_block(i, j)) parent[root(j)] = root(i);
    std::vector<std::size_t> rgs(n);
    for (std::size_t i = 0; i < n; ++i) rgs[i] = root(i);
    return Partition(p.ground(), std::move(rgs));
}

bool is_finer(const Partition& p, const Partition& q) {
    require_same_ground(p, q);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p.same_block(i, j) && !q.same_block(i, j)) return false;
    return true;
}

IdentitySystem id_of_partition(const Partition& p) {
    IdentitySystem out(fmt::format("Id({})", p.str()));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p.same_block(i, j)) out.add(Identity{p.ground()[i], p.ground()[j]});
    return out;
}

Partition parse_partition(std::string_view text, const std::vector<Word>& ground) {
    std::vector<std::size_t> rgs(ground.size(), 0);
    std::vector<bool> placed(ground.size(), false);
    std::size_t block = 0;
    std::size_t start = 0;
    auto take = [&](std::string_view chunk, std::size_t at) {
        std::size_t from = 0;
        while (from <= chunk.size()) {
            const std::size_t comma = std::min(chunk.find(',', from), chunk.size());
            const Word w = parse_word(chunk.substr(from, comma - from));
            const auto it = std::find(ground.begin(), ground.end(), w);
            if (it == ground.end())
                throw ParseError(fmt::format("'{}' is not a ground word", format_word(w)),
                                 at + from);
            const auto idx = static_cast<std::size_t>(it - ground.begin());
            if (placed[idx])
                throw ParseError(fmt::format("'{}' appears twice", format_word(w)), at + from);
            placed[idx] = true;
            rgs[idx] = block;
            from = comma + 1;
        }
    };
    while (start <= text.size()) {
        const std::size_t bar = std::min(text.find('|', start), text.size());
        take(text.substr(start, bar - start), start);
        ++block;
        start = bar + 1;
    }
    for (std::size_t i = 0; i < ground.size(); ++i)
        if (!placed[i])
            throw ParseError(fmt::format("ground word '{}' missing from partition",
                                         format_word(ground[i])),
                             text.size());
    return Partition(ground, std::move(rgs));
}

}  // namespace wordeq
