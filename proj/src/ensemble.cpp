#include "causalpath/ensemble.hpp"

#include "causalpath/errors.hpp"

#include <algorithm>
#include <string>

namespace causalpath {

EnsembleResult majority_vote(std::span<const Vote> votes, Method leader) {
    if (votes.empty()) throw ConfigError("majority vote over an empty list");
    EnsembleResult out;
    out.leader = leader;
    const Vote* leader_vote = nullptr;
    for (std::size_t i = 0; i < votes.size(); ++i) {
        const Vote& v = votes[i];
        for (std::size_t j = 0; j < i; ++j) {
            if (votes[j].method == v.method)
                throw ConfigError("method votes twice: " + std::string(short_name(v.method)));
        }
        if (v.direction == Direction::XtoY) ++out.votes_xy;
        else ++out.votes_yx;
        if (v.tied) ++out.tied_voters;
        if (v.method == leader) leader_vote = &v;
    }
    if (!leader_vote)
        throw ConfigError("leader " + std::string(short_name(leader)) + " is not among the voters");

    out.unanimous = out.votes_xy == 0 || out.votes_yx == 0;
    if (out.votes_xy == out.votes_yx) {
        out.leader_used = true;
        out.decision = leader_vote->direction;
    } else {
        out.decision = out.votes_xy > out.votes_yx ? Direction::XtoY : Direction::YtoX;
    }
    return out;
}

std::vector<Vote> votes_from(std::span<const DirectionScore> scores) {
    std::vector<Vote> out;
    out.reserve(scores.size());
    for (const auto& s : scores) out.push_back({s.method, s.decision, s.tie});
    return out;
}

std::vector<Vote> select_votes(std::span<const DirectionScore> scores, std::span<const Method> methods) {
    std::vector<Vote> out;
    out.reserve(methods.size());
    for (Method m : methods) {
        const auto it = std::find_if(scores.begin(), scores.end(),
                                     [m](const DirectionScore& s) { return s.method == m; });
        if (it == scores.end())
            throw ConfigError("no score for method " + std::string(short_name(m)));
        out.push_back({it->method, it->decision, it->tie});
    }
    return out;
}

}  // namespace causalpath
