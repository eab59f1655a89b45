#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace cycomp {

// Single-consumer lazy stream. Callers never need the full sequence in
// memory; drain() materializes it when convenient at desk scale.
template <typename T>
class Stream {
 public:
  using Producer = std::function<std::optional<T>()>;

  explicit Stream(Producer producer) : producer_(std::move(producer)) {}

  std::optional<T> next() { return producer_(); }

  template <typename F>
  void for_each(F&& fn) {
    while (auto v = next()) fn(*v);
  }

  std::vector<T> drain() {
    std::vector<T> out;
    for_each([&](const T& v) { out.push_back(v); });
    return out;
  }

  std::uint64_t count() {
    std::uint64_t n = 0;
    while (next()) ++n;
    return n;
  }

  template <typename F>
  auto map(F fn) -> Stream<decltype(fn(std::declval<T>()))> {
    using U = decltype(fn(std::declval<T>()));
    auto src = std::make_shared<Stream<T>>(std::move(*this));
    return Stream<U>([src, fn]() -> std::optional<U> {
      if (auto v = src->next()) return fn(*v);
      return std::nullopt;
    });
  }

  template <typename P>
  Stream<T> filter(P pred) {
    auto src = std::make_shared<Stream<T>>(std::move(*this));
    return Stream<T>([src, pred]() -> std::optional<T> {
      while (auto v = src->next()) {
        if (pred(*v)) return v;
      }
      return std::nullopt;
    });
  }

 private:
  Producer producer_;
};

}  // namespace cycomp
