#include "sicp/classification.hpp"

// Hand-transcribed coefficient lists. verify_derivations() rebuilds each of
// them from scratch and compares.

namespace sicp::data {

const char* const F_text = R"(
9 - 22*p^2 + 9*p^4 + 87*q - 126*p^2*q + 27*p^4*q + 298*q^2 - 226*p^2*q^2 + 24*p^4*q^2 + 414*q^3
- 138*p^2*q^3 + 189*q^4 + 27*q^5 - 3*p*r - 50*p^3*r - 15*p^5*r + 88*p*q*r - 48*p^3*q*r +
234*p*q^2*r + 18*p^3*q^2*r - 144*p*q^3*r + 81*p*q^4*r + 189*r^2 - 480*p^2*r^2 - 153*p^4*r^2 +
1398*q*r^2 - 306*p^2*q*r^2 + 2736*q^2*r^2 - 486*p^2*q^2*r^2 + 810*q^3*r^2 + 243*q^4*r^2 -
558*p*r^3 - 486*p^3*r^3 + 2376*p*q*r^3 - 810*p*q^2*r^3 + 567*r^4 - 162*p^2*r^4 + 6399*q*r^4 +
486*q^2*r^4 + 1701*p*r^5 + 2187*r^6
)";

const char* const F1_text = R"(
36 - 66*a^2 + 27*a^4 + 218*b - 288*a^2*b + 54*a^4*b + 614*b^2 - 452*a^2*b^2 + 48*a^4*b^2 +
828*b^3 - 276*a^2*b^3 + 378*b^4 + 54*b^5 - 41*a*c + 159*a^3*c - 63*a^5*c - 567*a*b*c +
270*a^3*b*c - 246*a*b^2*c + 18*a^3*b^2*c - 279*a*b^3*c + 81*a*b^4*c + 834*c^2 - 708*a^2*c^2 -
153*a^4*c^2 + 1968*b*c^2 - 171*a^2*b*c^2 + 2871*b^2*c^2 - 486*a^2*b^2*c^2 + 810*b^3*c^2 +
243*b^4*c^2 - 693*a*c^3 - 486*a^3*c^3 + 2376*a*b*c^3 - 810*a*b^2*c^3 + 567*c^4 - 162*a^2*c^4 +
6399*b*c^4 + 486*b^2*c^4 + 1701*a*c^5 + 2187*c^6 - 712*d + 687*a^2*d + 414*a^4*d - 2632*b*d +
351*a^2*b*d + 216*a^4*b*d - 4470*b^2*d + 1107*a^2*b^2*d - 5454*b^3*d + 243*a^2*b^3*d -
1782*b^4*d - 486*b^5*d + 453*a*c*d + 927*a^3*c*d - 3330*a*b*c*d + 2835*a^3*b*c*d -
7857*a*b^2*c*d + 1458*a*b^3*c*d + 666*c^2*d - 1485*a^2*c^2*d - 4968*b*c^2*d + 2268*a^2*b*c^2*d -
24786*b^2*c^2*d - 1944*b^3*c^2*d - 6075*a*c^3*d - 9477*a*b*c^3*d - 1701*c^4*d - 13122*b*c^4*d +
4656*d^2 - 531*a^2*d^2 - 2673*a^4*d^2 + 14436*b*d^2 + 9774*a^2*b*d^2 + 12042*b^2*d^2 -
2349*a^2*b^2*d^2 + 13608*b^3*d^2 + 972*b^4*d^2 + 3861*a*c*d^2 - 1944*a^3*c*d^2 + 37665*a*b*c*d^2
+ 13365*a*b^2*c*d^2 + 6966*c^2*d^2 + 8991*a^2*c^2*d^2 + 7776*b*c^2*d^2 + 19683*b^2*c^2*d^2 +
13122*a*c^3*d^2 - 11448*d^3 - 11907*a^2*d^3 - 35640*b*d^3 - 12393*a^2*b*d^3 - 7290*b^2*d^3 -
4374*b^3*d^3 - 16281*a*c*d^3 - 26244*a*b*c*d^3 - 13122*c^2*d^3 + 8748*d^4 + 6561*a^2*d^4 +
13122*b*d^4
)";

const char* const F2_text = R"(
63*a - 243*a^3 + 81*a^5 + 829*a*b - 846*a^3*b + 81*a^5*b + 1706*a*b^2 - 642*a^3*b^2 + 1092*a*b^3
+ 18*a^3*b^3 + 45*a*b^4 + 81*a*b^5 - 1086*c + 741*a^2*c - 18*a^4*c - 2348*b*c + 123*a^2*b*c -
153*a^4*b*c + 24*b^2*c - 630*a^2*b^2*c + 2493*b^3*c - 486*a^2*b^3*c + 810*b^4*c + 243*b^5*c +
135*a*c^2 + 81*a^3*c^2 - 18*a*b*c^2 - 486*a^3*b*c^2 + 2376*a*b^2*c^2 - 810*a*b^3*c^2 - 162*c^3 +
567*b*c^3 - 162*a^2*b*c^3 + 6399*b^2*c^3 + 486*b^3*c^3 + 1701*a*b*c^4 + 2187*b*c^5 - 1512*a*d +
2583*a^3*d + 405*a^5*d - 8709*a*b*d + 2232*a^3*b*d - 11583*a*b^2*d + 1944*a^3*b^2*d -
7479*a*b^3*d - 891*a*b^4*d + 1926*c*d + 1080*a^2*c*d + 1701*a^4*c*d + 270*b*c*d - 5859*a^2*b*c*d
- 2862*b^2*c*d + 4374*a^2*b^2*c*d - 11988*b^3*c*d - 972*b^4*c*d - 2916*a*c^2*d + 486*a^3*c^2*d -
25272*a*b*c^2*d - 7533*a*b^2*c^2*d - 5103*a^2*c^3*d - 1701*b*c^3*d - 8748*b^2*c^3*d -
6561*a*c^4*d + 10422*a*d^2 - 3807*a^3*d^2 + 37071*a*b*d^2 - 3888*a^3*b*d^2 + 29160*a*b^2*d^2 +
4617*a*b^3*d^2 + 486*c*d^2 + 14337*a^2*c*d^2 + 41472*b*c*d^2 + 17010*a^2*b*c*d^2 +
7290*b^2*c*d^2 + 6561*b^3*c*d^2 + 15309*a*c^2*d^2 + 26244*a*b*c^2*d^2 + 13122*c^3*d^2 -
46656*a*d^3 - 6561*a^3*d^3 - 28431*a*b*d^3 - 10935*a*b^2*d^3 - 10206*c*d^3 - 13122*a^2*c*d^3 -
30618*b*c*d^3 + 19683*a*d^4
)";

const char* const F3_text = R"(
780 - 978*a^2 - 180*a^4 + 27*a^6 + 3468*b - 1320*a^2*b - 396*a^4*b + 4968*b^2 - 81*a^2*b^2 +
54*a^4*b^2 + 2268*b^3 - 108*a^2*b^3 + 324*b^4 + 243*a^2*b^4 - 594*a*c - 693*a^3*c - 459*a^5*c +
2250*a*b*c - 1161*a^3*b*c + 6993*a*b^2*c - 1458*a^3*b^2*c + 2430*a*b^3*c + 729*a*b^4*c + 900*c^2
- 1188*a^2*c^2 - 1458*a^4*c^2 + 648*b*c^2 + 7128*a^2*b*c^2 - 2430*a^2*b^2*c^2 + 1701*a*c^3 -
486*a^3*c^3 + 19197*a*b*c^3 + 1458*a*b^2*c^3 + 5103*a^2*c^4 + 6561*a*c^5 - 5304*d + 4446*a^2*d +
4509*a^4*d - 22644*b*d - 6318*a^2*b*d + 3645*a^4*b*d - 32076*b^2*d - 10044*a^2*b^2*d -
10692*b^3*d - 486*a^2*b^3*d - 2916*b^4*d + 6642*a*c*d + 4779*a^3*c*d - 34668*a*b*c*d +
5832*a^3*b*c*d - 26244*a*b^2*c*d - 2916*a*b^3*c*d - 7776*c^2*d - 16281*a^2*c^2*d - 76788*b*c^2*d
- 18225*a^2*b*c^2*d - 5832*b^2*c^2*d - 25515*a*c^3*d - 26244*a*b*c^3*d - 26244*c^4*d + 19440*d^2
+ 18954*a^2*d^2 - 2187*a^4*d^2 + 50868*b*d^2 + 19440*a^2*b*d^2 + 75816*b^2*d^2 +
9477*a^2*b^2*d^2 + 5832*b^3*d^2 + 85050*a*c*d^2 + 11664*a^3*c*d^2 + 65610*a*b*c*d^2 +
19683*a*b^2*c*d^2 + 20412*c^2*d^2 + 19683*a^2*c^2*d^2 + 78732*b*c^2*d^2 - 68040*d^3 -
39366*a^2*d^3 - 32076*b*d^3 - 13122*a^2*b*d^3 - 26244*b^2*d^3 - 65610*a*c*d^3 + 26244*d^4
)";

const char* const F4_text = R"(
70*a - 168*a^3 + 9*a^5 + 464*a*b - 228*a^3*b + 525*a*b^2 + 18*a^3*b^2 - 36*a*b^3 + 81*a*b^4 -
26*c - 399*a^2*c - 153*a^4*c + 1158*b*c - 387*a^2*b*c + 2655*b^2*c - 486*a^2*b^2*c + 810*b^3*c +
243*b^4*c - 504*a*c^2 - 486*a^3*c^2 + 2376*a*b*c^2 - 810*a*b^2*c^2 + 567*c^3 - 162*a^2*c^3 +
6399*b*c^3 + 486*b^2*c^3 + 1701*a*c^4 + 2187*c^5 - 762*a*d + 963*a^3*d - 3942*a*b*d +
1215*a^3*b*d - 4320*a*b^2*d - 162*a*b^3*d + 486*c*d - 675*a^2*c*d - 3348*b*c*d + 1944*a^2*b*c*d
- 11988*b^2*c*d - 972*b^3*c*d - 6075*a*c^2*d - 6075*a*b*c^2*d - 1701*c^3*d - 8748*b*c^3*d +
4266*a*d^2 - 729*a^3*d^2 + 10692*a*b*d^2 + 3159*a*b^2*d^2 + 5994*c*d^2 + 3888*a^2*c*d^2 +
4374*b*c*d^2 + 6561*b^2*c*d^2 + 6561*a*c^2*d^2 - 4374*a*d^3 - 4374*a*b*d^3 - 4374*c*d^3
)";

const char* const G_text = R"(
1 - 3*a^2 + 6*b + 9*b^2 - 18*a*c - 27*c^2 + 18*d + 54*b*d + 81*d^2
)";

const char* const case_iv_quadric_text = R"(
16 + 9*a^2 + 27*a*c - 144*d
)";

const char* const case_iv_sextic_text = R"(
4194304 - 73728*a^2 - 132192*a^4 + 6561*a^6 - 4866048*a*c - 746496*a^3*c + 78732*a^5*c -
8626176*c^2 - 699840*a^2*c^2 + 354294*a^4*c^2 + 1679616*a*c^3 + 708588*a^3*c^3 + 1889568*c^4 +
531441*a^2*c^4
)";

}  // namespace sicp::data
