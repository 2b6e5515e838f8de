#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace biclique {

using Vertex = std::uint32_t;

// Bit-indexed vertex membership. Universes of up to 128 ids live inline;
// larger universes spill to the heap.
class VertexSet {
public:
	using word_type = std::uint64_t;
	static constexpr std::size_t word_bits = 64;

	class iterator {
	public:
		using iterator_category = std::forward_iterator_tag;
		using value_type = Vertex;
		using difference_type = std::ptrdiff_t;
		using pointer = const Vertex *;
		using reference = Vertex;

		iterator() = default;
		iterator(const VertexSet *set, std::size_t pos) : set_(set), pos_(pos) {}

		Vertex operator*() const { return static_cast<Vertex>(pos_); }
		iterator &operator++() {
			pos_ = set_->next_from(pos_ + 1);
			return *this;
		}
		iterator operator++(int) {
			iterator tmp = *this;
			++*this;
			return tmp;
		}
		bool operator==(const iterator &o) const { return pos_ == o.pos_; }

	private:
		const VertexSet *set_ = nullptr;
		std::size_t pos_ = 0;
	};

	VertexSet() = default;
	explicit VertexSet(std::size_t capacity)
		: capacity_(capacity), words_((capacity + word_bits - 1) / word_bits, 0) {}
	VertexSet(std::size_t capacity, std::initializer_list<Vertex> members) : VertexSet(capacity) {
		for (Vertex v : members)
			insert(v);
	}

	static VertexSet full(std::size_t capacity) {
		VertexSet s(capacity);
		for (std::size_t i = 0; i < s.words_.size(); ++i)
			s.words_[i] = ~word_type{0};
		s.trim();
		return s;
	}

	std::size_t capacity() const { return capacity_; }

	bool contains(Vertex v) const {
		return v < capacity_ && (words_[v / word_bits] >> (v % word_bits)) & 1U;
	}
	void insert(Vertex v) { words_[v / word_bits] |= word_type{1} << (v % word_bits); }
	void erase(Vertex v) { words_[v / word_bits] &= ~(word_type{1} << (v % word_bits)); }
	void clear() {
		for (auto &w : words_)
			w = 0;
	}

	std::size_t size() const {
		std::size_t n = 0;
		for (word_type w : words_)
			n += static_cast<std::size_t>(std::popcount(w));
		return n;
	}
	bool empty() const {
		for (word_type w : words_)
			if (w)
				return false;
		return true;
	}
	bool intersects(const VertexSet &o) const {
		for (std::size_t i = 0; i < words_.size(); ++i)
			if (words_[i] & o.words_[i])
				return true;
		return false;
	}
	bool is_subset_of(const VertexSet &o) const {
		for (std::size_t i = 0; i < words_.size(); ++i)
			if (words_[i] & ~o.words_[i])
				return false;
		return true;
	}
	std::size_t intersection_size(const VertexSet &o) const {
		std::size_t n = 0;
		for (std::size_t i = 0; i < words_.size(); ++i)
			n += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
		return n;
	}

	// Smallest member, or capacity() when empty.
	Vertex first() const { return static_cast<Vertex>(next_from(0)); }

	iterator begin() const { return iterator(this, next_from(0)); }
	iterator end() const { return iterator(this, capacity_); }

	std::vector<Vertex> to_vector() const { return {begin(), end()}; }

	VertexSet &operator|=(const VertexSet &o) {
		for (std::size_t i = 0; i < words_.size(); ++i)
			words_[i] |= o.words_[i];
		return *this;
	}
	VertexSet &operator&=(const VertexSet &o) {
		for (std::size_t i = 0; i < words_.size(); ++i)
			words_[i] &= o.words_[i];
		return *this;
	}
	VertexSet &operator-=(const VertexSet &o) {
		for (std::size_t i = 0; i < words_.size(); ++i)
			words_[i] &= ~o.words_[i];
		return *this;
	}
	friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
	friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
	friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

	friend bool operator==(const VertexSet &a, const VertexSet &b) {
		return a.capacity_ == b.capacity_ && a.words_ == b.words_;
	}

private:
	std::size_t next_from(std::size_t pos) const {
		std::size_t wi = pos / word_bits;
		if (wi >= words_.size())
			return capacity_;
		word_type w = words_[wi] & (~word_type{0} << (pos % word_bits));
		while (true) {
			if (w)
				return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
			if (++wi >= words_.size())
				return capacity_;
			w = words_[wi];
		}
	}
	void trim() {
		if (capacity_ % word_bits && !words_.empty())
			words_.back() &= (word_type{1} << (capacity_ % word_bits)) - 1;
	}

	std::size_t capacity_ = 0;
	boost::container::small_vector<word_type, 2> words_;
};

} // namespace biclique
