#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace biclique {

// Evaluates task(i) for i in [0, count) on up to `threads` workers and returns
// the hit with the smallest index, so the outcome matches a sequential scan.
// Tasks whose index exceeds an already-found hit are skipped.
template <typename T>
std::optional<T> first_hit(std::size_t count, unsigned threads,
						   const std::function<std::optional<T>(std::size_t)> &task) {
	if (threads <= 1 || count <= 1) {
		for (std::size_t i = 0; i < count; ++i)
			if (auto r = task(i))
				return r;
		return std::nullopt;
	}
	std::atomic<std::size_t> next{0};
	std::atomic<std::size_t> best{count};
	std::vector<std::optional<T>> results(count);
	auto worker = [&] {
		for (;;) {
			std::size_t i = next.fetch_add(1);
			if (i >= count || i > best.load())
				return;
			if (auto r = task(i)) {
				results[i] = std::move(r);
				std::size_t cur = best.load();
				while (i < cur && !best.compare_exchange_weak(cur, i)) {
				}
			}
		}
	};
	{
		std::vector<std::jthread> pool;
		unsigned n = std::min<std::size_t>(threads, count);
		for (unsigned t = 0; t < n; ++t)
			pool.emplace_back(worker);
	}
	std::size_t b = best.load();
	if (b == count)
		return std::nullopt;
	return std::move(results[b]);
}

} // namespace biclique
