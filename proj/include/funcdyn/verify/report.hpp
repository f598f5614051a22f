#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace funcdyn {

using json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Inapplicable };

inline std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inapplicable: return "inapplicable";
    }
    return "?";
}

/// Outcome of one claim on one instance. A Fail always carries a witness that reproduces it.
struct VerificationReport {
    std::string claim;
    std::string instance;
    Status status = Status::Pass;
    json witness;                   // null unless something noteworthy was found
    json stats = json::object();
    std::string reason;             // why the claim does not apply, or what failed

    bool passed() const { return status == Status::Pass; }
    bool failed() const { return status == Status::Fail; }

    void fail_with(std::string why, json w) {
        status = Status::Fail;
        reason = std::move(why);
        witness = std::move(w);
    }
    void not_applicable(std::string why) {
        status = Status::Inapplicable;
        reason = std::move(why);
    }

    json to_json() const {
        json j{{"claim", claim}, {"instance", instance}, {"status", status_name(status)}};
        if (!reason.empty()) j["reason"] = reason;
        if (!witness.is_null()) j["witness"] = witness;
        j["stats"] = stats;
        return j;
    }
};

inline VerificationReport make_report(std::string claim, std::string instance) {
    VerificationReport r;
    r.claim = std::move(claim);
    r.instance = std::move(instance);
    return r;
}

/// Fail if any part failed, Pass if any part passed, else Inapplicable.
inline Status combine(const std::vector<Status>& parts) {
    bool pass = false;
    for (auto s : parts) {
        if (s == Status::Fail) return Status::Fail;
        pass = pass || s == Status::Pass;
    }
    return pass ? Status::Pass : Status::Inapplicable;
}

struct Tally {
    std::size_t pass = 0, fail = 0, inapplicable = 0;

    void add(Status s) {
        if (s == Status::Pass) ++pass;
        else if (s == Status::Fail) ++fail;
        else ++inapplicable;
    }
    Tally& operator+=(const Tally& o) {
        pass += o.pass;
        fail += o.fail;
        inapplicable += o.inapplicable;
        return *this;
    }
    std::size_t total() const { return pass + fail + inapplicable; }
    json to_json() const { return {{"pass", pass}, {"fail", fail}, {"inapplicable", inapplicable}}; }
};

}  // namespace funcdyn
