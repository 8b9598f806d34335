// Internal: shared scaffolding for the concrete group instances.
#ifndef ENDOSTAR_INSTANCES_HPP
#define ENDOSTAR_INSTANCES_HPP

#include <algorithm>

#include "endostar/group.hpp"

namespace endostar {

class InstanceBase : public GroupInstance {
public:
    InstanceBase(std::string id, std::vector<std::string> bases)
        : id_(std::move(id)), bases_(std::move(bases)) {}

    const std::string& id() const override { return id_; }
    const std::vector<std::string>& bases() const override { return bases_; }

protected:
    void require_base(int b) const {
        if (b < 0 || static_cast<size_t>(b) >= bases_.size())
            throw Error(ErrorCode::InvalidArgument,
                        id_ + ": base index " + std::to_string(b) + " not in configured family");
    }

    std::string id_;
    std::vector<std::string> bases_;
};

// Coset intersection for instances whose lattice subgroups form a chain under
// inclusion: t1*L1 meets t2*L2 iff the rep of the larger subgroup's coset
// absorbs the other, and then the intersection is the smaller coset.
std::optional<BasicCoset> chain_coset_intersect(const GroupInstance& G, const BasicCoset& a,
                                                const BasicCoset& b);

// Enumerator that post-composes another enumerator with a map (used to
// enumerate subgroups through an isomorphism with G).
class MappedEnumerator : public Enumerator {
public:
    MappedEnumerator(std::unique_ptr<Enumerator> inner,
                     std::function<GroupElement(const GroupElement&)> fn)
        : inner_(std::move(inner)), fn_(std::move(fn)) {}
    GroupElement next() override { return fn_(inner_->next()); }

private:
    std::unique_ptr<Enumerator> inner_;
    std::function<GroupElement(const GroupElement&)> fn_;
};

std::unique_ptr<GroupInstance> make_shiftz(const std::vector<std::string>& bases);
std::unique_ptr<GroupInstance> make_freeshift(const std::vector<std::string>& bases);
std::unique_ptr<GroupInstance> make_times2(const std::vector<std::string>& bases);

}  // namespace endostar

#endif
