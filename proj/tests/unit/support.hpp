#pragma once

#include <string>

#include "clausen/real.hpp"

namespace testing_support {

inline int agree(const clausen::Real& a, const clausen::Real& b) { return clausen::agree_digits(a, b, 100000); }

// Reference values, 70 significant digits.  Produced by the oracles in
// tests/oracles and frozen here; oracle_test.cpp re-derives them.
inline constexpr const char* kCatalan =
    "0.915965594177219015054603514932384110774149374281672134266498119621763";
inline constexpr const char* kLminus7at2 =
    "1.151925470544491047101692397320549964797821404686566914083968636166124";
inline constexpr const char* kLminus4at2_5 =
    "0.9486221740370547074456757680366512399277689286973897330948491766519593";
inline constexpr const char* kL5at2 =
    "0.7062114032597409699310031757625640276602464718529468639421174021656776";
inline constexpr const char* kLminus3at2 =
    "0.781302412896486296867187429624092356365134336545285420222100062966887";
inline constexpr const char* kLminus8at2 =
    "1.06473417104350337039282745146166888948309915177448512441987450806399";
inline constexpr const char* kPhi7 =
    "1.209429202888188813642133015319084761085975456475332776674095229862055";
inline constexpr const char* kZeta3 =
    "1.202056903159594285399738161511449990764986292340498881792271555341838";

// zeta(2, l/7), l = 1..6
inline constexpr const char* kHurwitzSevenths[6] = {
    "50.35747143691169318567352521115000296056998251468386367493555762508782",
    "13.40162274093671423795157885713981433745548366531859173013383900360954",
    "6.442264812630629306553596846094235610454994401518174163670166509170337",
    "3.941497454849057705704323665568261380775955863781596495641232462252867",
    "2.744692838542825907328190317527411177455412063729302998937872174264779",
    "2.069285924843948607464713101529483615797766748894795947988127235375021",
};

inline clausen::Real ref(const char* text, int digits = 90) { return clausen::Real::parse(text, digits); }

}  // namespace testing_support
