#include "qgl/koszul.hpp"

namespace qgl {

// The wrappers below run on the exact backend with a context built per
// call.  Anything that touches several windows in one process should hold a
// KoszulContext instead, so the symmetrizer caches survive between calls.

LinMap<ExactField> koszul_map(const HeckeSymmetry& H, KoszulKind which, int k, int l) {
    KoszulContext<ExactField> C(H);
    return C.matrix(which, k, l);
}

IdentityReport verify_ct3(const HeckeSymmetry& H, int k, int l) {
    KoszulContext<ExactField> C(H);
    return verify_ct3(C, k, l);
}

IdentityReport verify_ct60(const HeckeSymmetry& H, int p, int r) {
    KoszulContext<ExactField> C(H);
    return verify_ct60(C, p, r);
}

std::vector<HomologyEntry> homology_K(const HeckeSymmetry& H, int a, int window) {
    KoszulContext<ExactField> C(H);
    return homology_K(C, a, window);
}

SplitReport<ExactField> image_splitting(const HeckeSymmetry& H, int k, int l) {
    KoszulContext<ExactField> C(H);
    return image_splitting(C, k, l);
}

}  // namespace qgl
