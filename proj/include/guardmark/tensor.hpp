#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace guardmark::nk {

class NkError : public std::runtime_error {
  public:
    explicit NkError(const std::string& what) : std::runtime_error(what) {}
};

// Dense row-major f32 array.
struct Tensor {
    std::vector<int> shape;
    std::vector<float> data;

    Tensor() = default;
    explicit Tensor(std::vector<int> s) : shape(std::move(s)), data(checked_numel(shape), 0.0f) {}
    Tensor(std::vector<int> s, std::vector<float> d) : shape(std::move(s)), data(std::move(d)) {
        if (checked_numel(shape) != data.size()) throw NkError("tensor shape/data mismatch");
    }

    static std::size_t checked_numel(const std::vector<int>& s) {
        std::size_t n = 1;
        for (int e : s) {
            if (e <= 0) throw NkError("tensor extent must be positive");
            n *= static_cast<std::size_t>(e);
        }
        return n;
    }

    std::size_t numel() const { return data.size(); }
    int rows() const { return shape.empty() ? 1 : shape[0]; }
    int cols() const {
        if (shape.size() < 2) return 1;
        int c = 1;
        for (std::size_t i = 1; i < shape.size(); ++i) c *= shape[i];
        return c;
    }
    float& at(std::size_t i) { return data[i]; }
    float at(std::size_t i) const { return data[i]; }
    void fill(float v) { std::fill(data.begin(), data.end(), v); }
};

// Trainable tensor with its gradient accumulator.
struct Param {
    std::string name;
    Tensor value;
    Tensor grad;

    Param() = default;
    Param(std::string n, Tensor v) : name(std::move(n)), value(std::move(v)), grad(value.shape) {}

    void zero_grad() { grad.fill(0.0f); }
    std::size_t numel() const { return value.numel(); }
};

} // namespace guardmark::nk
