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

#include <vector>

#include "rtlp/rng.hpp"
#include "rtlp/tensor.hpp"

namespace rtlp {

// Elementwise. `b` may be a strict suffix of `a`'s shape (bias broadcast).
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double c);
Tensor relu(const Tensor& a);

// matmul: [m,k] x [k,n]. bmm: [N,m,k] x [N,k,n] batched.
Tensor matmul(const Tensor& a, const Tensor& b);
Tensor bmm(const Tensor& a, const Tensor& b);

// x [B,Cin,L], w [Cout,Cin,K], bias [Cout]; no padding, Lout = (L-K)/stride + 1.
Tensor conv1d(const Tensor& x, const Tensor& w, const Tensor& bias, int stride);

// Non-overlapping window max, stride = width, floor division on length.
Tensor maxpool1d(const Tensor& x, int width);

// Running statistics live outside the graph; eval mode reads them.
struct BatchNormState {
  std::vector<double> running_mean;
  std::vector<double> running_var;
  explicit BatchNormState(int channels = 0)
      : running_mean(static_cast<std::size_t>(channels), 0.0),
        running_var(static_cast<std::size_t>(channels), 1.0) {}
};

// x [B,C] or [B,C,L]; per-channel statistics over batch (and length).
Tensor batchnorm1d(const Tensor& x, const Tensor& gamma, const Tensor& beta,
                   BatchNormState& state, bool training, double momentum = 0.1,
                   double eps = 1e-5);

// Normalizes the last axis; gamma/beta [E].
Tensor layernorm(const Tensor& x, const Tensor& gamma, const Tensor& beta,
                 double eps = 1e-5);

// Inverted dropout; identity when p == 0 or not training.
Tensor dropout(const Tensor& x, double p, RngStream& rng, bool training);

Tensor softmax(const Tensor& x, int axis);
Tensor log_softmax(const Tensor& x, int axis);

// table [C,M]; result shape = ids_shape + [M].
Tensor embedding_lookup(const Tensor& table, const std::vector<int>& ids,
                        const Shape& ids_shape);

// logits [...,C] folded to rows; mean NLL over targets != ignore_index.
Tensor cross_entropy(const Tensor& logits, const std::vector<int>& targets,
                     int ignore_index = -1);

struct AttentionParams {
  Tensor wq, bq, wk, bk, wv, bv, wo, bo;  // all [E,E] / [E]
};

// query [B,Sq,E], keyval [B,Sk,E], additive mask [B,Sq,Sk] (0 keep,
// -1e30 drop) or undefined. Composite of primitive ops, so gradients are
// exact by construction. attn_weights, when non-null, receives the
// post-softmax weights [B*heads, Sq, Sk].
Tensor multi_head_attention(const Tensor& query, const Tensor& keyval,
                            const AttentionParams& p, int heads,
                            const Tensor& mask, Tensor* attn_weights = nullptr);

Tensor concat(const std::vector<Tensor>& parts, int axis);
Tensor slice(const Tensor& a, int axis, int start, int len);
Tensor transpose(const Tensor& a);  // 2-D
Tensor permute(const Tensor& a, const std::vector<int>& perm);
Tensor reshape(const Tensor& a, Shape shape);
Tensor mean(const Tensor& a);
Tensor mean_axis(const Tensor& a, int axis);
Tensor sum(const Tensor& a);

}  // namespace rtlp
