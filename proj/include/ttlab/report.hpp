#ifndef TTLAB_REPORT_HPP
#define TTLAB_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ttlab {

struct Mismatch {
    std::string where;  // coefficient index (monomial) of the first difference
    std::string lhs;
    std::string rhs;
};

// One verified identity or residual.  `tag` names the mathematical object
// being checked; params carry the exact configuration so reruns are
// reproducible.
struct CheckResult {
    std::string check_id;
    std::string tag;
    std::map<std::string, std::string> params;
    bool pass = false;
    int order_verified = 0;
    std::optional<Mismatch> mismatch;
    std::string note;

    static CheckResult ok(std::string id, std::string tag_, int order) {
        CheckResult r;
        r.check_id = std::move(id);
        r.tag = std::move(tag_);
        r.pass = true;
        r.order_verified = order;
        return r;
    }
};

using CheckList = std::vector<CheckResult>;

}  // namespace ttlab

#endif
