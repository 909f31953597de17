#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace linord {

// Restartable lazy sequence: start() yields an independent puller.
template <class T>
class Stream {
public:
    using Puller = std::function<std::optional<T>()>;

    Stream() : start_([] { return [] { return std::optional<T>{}; }; }) {}
    explicit Stream(std::function<Puller()> start) : start_(std::move(start)) {}

    Puller start() const { return start_(); }

    static Stream of_vector(std::vector<T> v) {
        auto data = std::make_shared<std::vector<T>>(std::move(v));
        return Stream([data] {
            std::size_t i = 0;
            return [data, i]() mutable -> std::optional<T> {
                if (i >= data->size()) return std::nullopt;
                return (*data)[i++];
            };
        });
    }

    // f(k) for k = 0, 1, ...; stops at the first nullopt.
    static Stream of_fn(std::function<std::optional<T>(std::uint64_t)> f) {
        return Stream([f] {
            std::uint64_t k = 0;
            return [f, k]() mutable { return f(k++); };
        });
    }

    std::vector<T> take(std::size_t n) const {
        std::vector<T> out;
        auto pull = start();
        while (out.size() < n) {
            auto v = pull();
            if (!v) break;
            out.push_back(*v);
        }
        return out;
    }

    Stream filter(std::function<bool(const T&)> keep) const {
        auto base = start_;
        return Stream([base, keep] {
            auto pull = base();
            return [pull, keep]() mutable -> std::optional<T> {
                while (true) {
                    auto v = pull();
                    if (!v) return std::nullopt;
                    if (keep(*v)) return v;
                }
            };
        });
    }

    template <class U>
    Stream<U> map(std::function<U(const T&)> f) const {
        auto base = start_;
        return Stream<U>([base, f] {
            auto pull = base();
            return [pull, f]() mutable -> std::optional<U> {
                auto v = pull();
                if (!v) return std::optional<U>{};
                return f(*v);
            };
        });
    }

private:
    std::function<Puller()> start_;
};

}  // namespace linord
