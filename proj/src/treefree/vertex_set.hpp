#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace treefree {

// Fixed-universe set of vertices 0..universe-1, stored as 64-bit words.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const VertexSet* set, int v) : set_(set), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++()
        {
            v_ = set_->next(v_);
            return *this;
        }
        iterator operator++(int)
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const iterator& o) const { return v_ == o.v_; }

    private:
        const VertexSet* set_ = nullptr;
        int v_ = -1;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t universe);

    static VertexSet full(std::size_t universe);
    static VertexSet of(std::size_t universe, std::initializer_list<int> members);
    static VertexSet of(std::size_t universe, std::span<const int> members);

    std::size_t universe() const { return universe_; }

    bool contains(int v) const
    {
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    void insert(int v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(int v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void clear();

    std::size_t size() const;
    bool empty() const;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    bool operator==(const VertexSet& o) const = default;

    std::size_t intersection_count(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;
    bool is_subset_of(const VertexSet& o) const;

    // -1 when there is no such member.
    int first() const;
    int next(int v) const;

    iterator begin() const { return iterator(this, first()); }
    iterator end() const { return iterator(this, -1); }

    std::vector<int> to_vector() const;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace treefree
