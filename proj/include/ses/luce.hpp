// Copyright 2026 The Authors.
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

// Luce-choice attendance kernels over per-user columns.
//
// All arguments are user-indexed arrays for one (event, interval) pair:
//   activity   - social activity probability of each user at the interval
//   scheduled  - summed interest in the organizer's events at the interval
//   competing  - summed interest in the third-party events at the interval
//   interest   - interest in the event being evaluated
//
// A user whose denominator is zero contributes nothing: that only happens
// when every interest in the numerator is zero as well.

#ifndef SES_LUCE_HPP_
#define SES_LUCE_HPP_

#include <Eigen/Core>

namespace ses::luce {

// Per-user probability of attending an event already counted in
// `scheduled`.
template <typename Activity, typename Scheduled, typename Competing,
          typename Interest>
auto attendance(const Eigen::ArrayBase<Activity>& activity,
                const Eigen::ArrayBase<Scheduled>& scheduled,
                const Eigen::ArrayBase<Competing>& competing,
                const Eigen::ArrayBase<Interest>& interest) {
  using Scalar = typename Activity::Scalar;
  const auto denominator = scheduled + competing;
  return (denominator > Scalar(0))
      .select(activity * interest / denominator, Scalar(0));
}

// Sum of the attendance shares held by the organizer's events, per user.
template <typename Activity, typename Scheduled, typename Competing>
auto scheduled_share(const Eigen::ArrayBase<Activity>& activity,
                     const Eigen::ArrayBase<Scheduled>& scheduled,
                     const Eigen::ArrayBase<Competing>& competing) {
  return attendance(activity, scheduled, competing, scheduled);
}

// Per-user gain in expected attendance when an event with `interest` joins
// the interval. Equal to f(A + mu) - f(A) with f(x) = x / (x + C), written
// as mu * C / ((A + mu + C) * (A + C)) so that it is non-negative and
// non-increasing in A under rounding. When A + C = 0 the share jumps from
// 0 to 1 for any positive interest.
template <typename Activity, typename Scheduled, typename Competing,
          typename Interest>
auto gain(const Eigen::ArrayBase<Activity>& activity,
          const Eigen::ArrayBase<Scheduled>& scheduled,
          const Eigen::ArrayBase<Competing>& competing,
          const Eigen::ArrayBase<Interest>& interest) {
  using Scalar = typename Activity::Scalar;
  const auto before = scheduled + competing;
  const auto after = before + interest;
  const auto jump = (interest > Scalar(0)).template cast<Scalar>();
  return activity * (before > Scalar(0))
                        .select(interest * competing / (after * before), jump);
}

template <typename Activity, typename Scheduled, typename Competing,
          typename Interest>
typename Activity::Scalar total_gain(
    const Eigen::ArrayBase<Activity>& activity,
    const Eigen::ArrayBase<Scheduled>& scheduled,
    const Eigen::ArrayBase<Competing>& competing,
    const Eigen::ArrayBase<Interest>& interest) {
  return gain(activity, scheduled, competing, interest).sum();
}

}  // namespace ses::luce

#endif  // SES_LUCE_HPP_
