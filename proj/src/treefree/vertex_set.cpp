#include "treefree/vertex_set.hpp"

#include <algorithm>
#include <cassert>

namespace treefree {

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0)
{
}

VertexSet VertexSet::full(std::size_t universe)
{
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    if (universe % 64 != 0 && !s.words_.empty())
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<int> members)
{
    return of(universe, std::span<const int>(members.begin(), members.size()));
}

VertexSet VertexSet::of(std::size_t universe, std::span<const int> members)
{
    VertexSet s(universe);
    for (int v : members)
        s.insert(v);
    return s;
}

void VertexSet::clear()
{
    std::fill(words_.begin(), words_.end(), 0);
}

std::size_t VertexSet::size() const
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const
{
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

VertexSet& VertexSet::operator|=(const VertexSet& o)
{
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o)
{
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o)
{
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~o.words_[i];
    return *this;
}

std::size_t VertexSet::intersection_count(const VertexSet& o) const
{
    assert(universe_ == o.universe_);
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        total += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return total;
}

bool VertexSet::intersects(const VertexSet& o) const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i])
            return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i])
            return false;
    return true;
}

int VertexSet::first() const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i])
            return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
}

int VertexSet::next(int v) const
{
    std::size_t i = static_cast<std::size_t>(v + 1) >> 6;
    if (i >= words_.size())
        return -1;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << ((v + 1) & 63));
    while (true) {
        if (w)
            return static_cast<int>(i * 64) + std::countr_zero(w);
        if (++i >= words_.size())
            return -1;
        w = words_[i];
    }
}

std::vector<int> VertexSet::to_vector() const
{
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this)
        out.push_back(v);
    return out;
}

} // namespace treefree
