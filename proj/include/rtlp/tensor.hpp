// Copyright 2026 The RTLP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rtlp/common.hpp"

namespace rtlp {

using Shape = std::vector<int>;

std::string shape_str(const Shape& s);
std::size_t shape_numel(const Shape& s);

namespace detail {

// One node of the recorded computation graph. Ops link results to their
// parents and attach a pull-style backward closure; backward() walks the
// DAG once in reverse topological order.
struct Node {
  std::vector<double> value;
  Shape shape;
  std::vector<double> grad;  // allocated on first accumulation
  bool requires_grad = false;
  std::string op;  // empty for leaves
  std::vector<std::shared_ptr<Node>> parents;
  std::function<void(Node&)> backward_fn;

  std::size_t numel() const { return value.size(); }
  void ensure_grad() {
    if (grad.size() != value.size()) grad.assign(value.size(), 0.0);
  }
};

}  // namespace detail

// Handle to a graph node. Copies share storage (PyTorch-style); completed
// grad-free tensors are safe to share read-only across workers.
class Tensor {
 public:
  Tensor() = default;
  Tensor(Shape shape, bool requires_grad);
  static Tensor zeros(Shape shape);
  static Tensor from(std::vector<double> data, Shape shape, bool requires_grad = false);
  static Tensor scalar(double v);

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const { return node_->shape; }
  int dim(int axis) const { return node_->shape[static_cast<std::size_t>(axis)]; }
  int ndim() const { return static_cast<int>(node_->shape.size()); }
  std::size_t numel() const { return node_->numel(); }

  std::vector<double>& data() { return node_->value; }
  const std::vector<double>& data() const { return node_->value; }
  double& at(std::size_t i) { return node_->value[i]; }
  double at(std::size_t i) const { return node_->value[i]; }
  double item() const;

  bool requires_grad() const { return node_->requires_grad; }
  void set_requires_grad(bool b) { node_->requires_grad = b; }
  bool has_grad() const { return !node_->grad.empty(); }
  std::vector<double>& grad();
  const std::vector<double>& grad() const;
  void zero_grad();

  // Detached value copy: same data, fresh leaf, no history.
  Tensor detach_copy() const;

  std::shared_ptr<detail::Node> node() const { return node_; }
  static Tensor wrap(std::shared_ptr<detail::Node> n);

 private:
  std::shared_ptr<detail::Node> node_;
};

// Reverse-mode sweep from a scalar root. Each reachable node is visited
// exactly once; non-finite gradients trip NumericError.
void backward(const Tensor& root);

void check_finite(const std::vector<double>& v, const char* op);

}  // namespace rtlp
