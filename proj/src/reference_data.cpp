#include "lagmesh/reference.hpp"

namespace lagmesh {

// Mirror of data/paper_reference.txt; a unit test keeps the two in sync.
const char* embedded_reference_text() {
  return R"refdata(# Quartic anharmonic oscillator V(x) = -(lambda/2) x^2 + (1/4) x^4:
# published energy expansions and their mesh-size digit markers.
#
#   ref <lambda> <state> <digit-string>
#       digit strings are truncated decimal expansions; they are normative.
#   marker <lambda> <state> <mesh-points> <decimal-place>
#       the digit at <decimal-place> is first reproduced with <mesh-points>
#       mesh points.

ref -1 0 0.620927029825748660858035732987120698200017253619138982542367325062962748188768883979391351303479456083601618760073476624891085768308099065938402580084530397024737474347663406954493075566093052396859302472486392601975136357293108871529439117092275
marker -1 0 25 8
marker -1 0 50 14
marker -1 0 75 20
marker -1 0 100 25
marker -1 0 150 33
marker -1 0 200 44
marker -1 0 250 50
marker -1 0 300 59
marker -1 0 400 72
marker -1 0 500 87
marker -1 0 1000 145
marker -1 0 1900 237
marker -1 0 2000 246

ref 1 0 0.14723514009003564996912489775646601732575531887453925499280026312098135737713807999998229717929602189034976241924609672512905592940758258984598195589648254770171956921631815910299854465883156178417785383526483338694737220893463001292856478
marker 1 0 25 7
marker 1 0 50 14
marker 1 0 75 19
marker 1 0 100 24
marker 1 0 200 40
marker 1 0 300 55
marker 1 0 400 69
marker 1 0 500 85
marker 1 0 1000 140
marker 1 0 1900 230
marker 1 0 2000 239

ref 1 19 42.387460398659976360748460339151340412521474939156835342873143475834442346776630858786014482728909852009515813795919753312244257330182061161689338128957261369362484027548806789503865374787715466718578447536669810863978041
marker 1 19 50 1
marker 1 19 100 8
marker 1 19 150 15
marker 1 19 200 22
marker 1 19 250 31
marker 1 19 300 37
marker 1 19 400 51
marker 1 19 500 64
marker 1 19 1000 121
marker 1 19 1900 208
marker 1 19 2000 219

ref 16 0 -61.187397609723934704051951487837640847511044866265399919578834499630898026753728525948951003309559623352261458567996340964347302074068801017081360119109362199469453000146444413730116152941798936942637
marker 16 0 25 2
marker 16 0 50 7
marker 16 0 100 12
marker 16 0 150 18
marker 16 0 200 24
marker 16 0 250 29
marker 16 0 300 36
marker 16 0 400 47
marker 16 0 500 58
marker 16 0 1000 109
marker 16 0 1900 190
marker 16 0 2000 198
)refdata";
}

}  // namespace lagmesh
