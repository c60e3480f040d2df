#ifndef MWPLET_REPORT_HPP
#define MWPLET_REPORT_HPP

#include <json.hpp>

#include "arrangements.hpp"
#include "heights.hpp"

namespace mwplet {

using Json = nlohmann::ordered_json;

Json section_json(const Section& s);
Json fibers_json(const std::vector<FiberPlace>& fibers);
Json height_json(const HeightReport& rep);
Json profile_json(const IntersectionProfile& prof);
Json member_json(const ArrangementMember& m);
Json arrangement_json(const NTArrangement& arr);
Json plet_json(const PletCertificate& cert);

struct Check {
    std::string name;
    bool pass = false;
    std::string expected, actual, note;
    int criterion = 0; // which acceptance criterion the check belongs to
};

Json check_json(const Check& c);
Json checks_json(const std::vector<Check>& checks, const std::string& command);
bool all_pass(const std::vector<Check>& checks);

} // namespace mwplet

#endif
