#pragma once

#include "causalpath/criteria.hpp"
#include "causalpath/types.hpp"

#include <span>
#include <vector>

namespace causalpath {

struct Vote {
    Method method = Method::M1_gradient;
    Direction direction = Direction::XtoY;
    bool tied = false;  // the criterion's scores were tied; the vote is the convention
};

struct EnsembleResult {
    Direction decision = Direction::XtoY;
    bool unanimous = false;
    int votes_xy = 0;
    int votes_yx = 0;
    Method leader = Method::M1_gradient;
    bool leader_used = false;
    int tied_voters = 0;

    bool operator==(const EnsembleResult&) const = default;
};

/// Majority vote; an exact split is decided by the leader's vote.
/// Throws ConfigError on an empty list, duplicate methods or a leader that does not vote.
EnsembleResult majority_vote(std::span<const Vote> votes, Method leader);

std::vector<Vote> votes_from(std::span<const DirectionScore> scores);

/// Votes of `methods` picked out of `scores`, in the order of `methods`.
/// Throws ConfigError when a method has no score.
std::vector<Vote> select_votes(std::span<const DirectionScore> scores, std::span<const Method> methods);

}  // namespace causalpath
