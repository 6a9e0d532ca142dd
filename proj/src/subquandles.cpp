#include <quandlekit/structure.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace quandlekit {

namespace {
    using Mask = std::vector<std::uint64_t>;

    auto to_mask(std::size_t n, const std::vector<index_t> & members) -> Mask
    {
        Mask mask((n + 63) / 64, 0);
        for (auto v : members)
            mask[v / 64] |= std::uint64_t{1} << (v % 64);
        return mask;
    }

    // Closure of closed ∪ {extra}; closed is already closed under *.
    auto extend_closure(const QuandleTable & q, const std::vector<index_t> & closed, index_t extra,
        std::vector<char> & member) -> std::vector<index_t>
    {
        const auto n = q.order();
        std::vector<index_t> members = closed;
        for (auto v : closed)
            member[v] = 1;
        auto done = members.size();
        members.push_back(extra);
        member[extra] = 1;
        for (; done < members.size() && members.size() < n; ++done) {
            auto x = members[done];
            for (std::size_t k = 0; k <= done; ++k) {
                auto y = members[k];
                auto xy = q.at(x, y), yx = q.at(y, x);
                if (! member[xy]) {
                    member[xy] = 1;
                    members.push_back(xy);
                }
                if (! member[yx]) {
                    member[yx] = 1;
                    members.push_back(yx);
                }
            }
        }
        for (auto v : members)
            member[v] = 0;
        std::sort(members.begin(), members.end());
        return members;
    }
}

auto SubquandleInventory::class_representatives() const -> std::vector<std::size_t>
{
    std::vector<std::size_t> reps;
    for (std::size_t k = 0; k < subquandles.size(); ++k)
        if (subquandles[k].class_representative == k)
            reps.push_back(k);
    return reps;
}

auto enumerate_subquandles(const QuandleTable & q, const EnumerationLimits & limits) -> SubquandleInventory
{
    const auto n = q.order();
    if (n > limits.max_order)
        throw QuandleError(ErrorKind::SizeLimitExceeded,
            "order " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(limits.max_order),
            {static_cast<std::uint32_t>(n)});

    std::set<Mask> seen;
    std::vector<std::vector<index_t>> found;
    std::deque<std::size_t> queue;
    auto record = [&](std::vector<index_t> members) {
        if (seen.insert(to_mask(n, members)).second) {
            if (found.size() == limits.max_subquandles)
                throw QuandleError(ErrorKind::SizeLimitExceeded,
                    "more than " + std::to_string(limits.max_subquandles) + " subquandles");
            found.push_back(std::move(members));
            queue.push_back(found.size() - 1);
        }
    };

    for (index_t x = 0; x < n; ++x) {
        auto closure = subquandle_closure(q, {Element{x}});
        std::vector<index_t> members;
        for (auto e : closure)
            members.push_back(e.index());
        record(std::move(members));
    }

    std::vector<char> member(n, 0), inside(n, 0);
    while (! queue.empty()) {
        auto current = found[queue.front()];
        queue.pop_front();
        if (current.size() == n)
            continue;
        for (auto v : current)
            inside[v] = 1;
        for (index_t x = 0; x < n; ++x)
            if (! inside[x])
                record(extend_closure(q, current, x, member));
        for (auto v : current)
            inside[v] = 0;
    }

    std::sort(found.begin(), found.end(), [](const auto & a, const auto & b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });

    SubquandleInventory inventory;
    inventory.subquandles.reserve(found.size());
    std::vector<QuandleTable> tables;
    tables.reserve(found.size());
    // (order, profile) buckets holding class representatives
    std::map<std::pair<std::size_t, std::string>, std::vector<std::size_t>> buckets;
    for (auto & members : found) {
        SubquandleEntry entry;
        for (auto v : members)
            entry.elements.emplace_back(v);
        tables.push_back(subquandle_table(q, entry.elements));
        const auto & table = tables.back();
        entry.profile = profile(table);
        const auto index = inventory.subquandles.size();
        entry.class_representative = index;
        auto & reps = buckets[{members.size(), entry.profile.to_string()}];
        for (auto rep : reps)
            if (are_isomorphic(tables[rep], table)) {
                entry.class_representative = rep;
                break;
            }
        if (entry.class_representative == index)
            reps.push_back(index);
        inventory.subquandles.push_back(std::move(entry));
    }
    return inventory;
}

} // namespace quandlekit
