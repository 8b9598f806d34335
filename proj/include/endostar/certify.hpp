// Constructive certificates: given a self-adjoint element with nonvanishing
// conditional expectation, produce orthogonal projections f_i carried by
// deep cosets, isometries z_i with z_i z_i* = f_i and z_i* z_i = 1, and
// verify the compression identities
//   f_i x f_i = lambda_i f_i        (cross terms annihilate exactly)
//   ||sum f_i theta(x) f_i|| = ||theta(x)||   (as exact diagonal norms)
// along with pairwise orthogonality.  Every emitted certificate re-checks
// itself; the transcript records each identity.
#ifndef ENDOSTAR_CERTIFY_HPP
#define ENDOSTAR_CERTIFY_HPP

#include "endostar/algebra.hpp"
#include "endostar/window.hpp"

namespace endostar {

struct CertifyConfig {
    size_t witness_cap = kDefaultWitnessCap;
    size_t search_cap = 100'000; // enumeration cap for the deep-coset search
};

// One spectral component of theta(x): all atoms sharing the same (nonzero)
// coefficient, plus an inner coset h * phi^m(G) sitting under the projection.
struct SpectralPart {
    Scalar lambda;
    VirtualIndicator projection;     // integer combination, a projection
    std::vector<uint32_t> atom_ids;  // indices into ThetaDecomposition::atoms
    GroupElement h;
    int m = 0;
};

struct ThetaDecomposition {
    int depth = 0; // common isometry depth of the diagonal terms
    std::vector<BasicCoset> cosets;  // deduplicated coset family of theta(x)
    std::vector<Scalar> coset_coeffs;
    std::vector<Atom> atoms;
    std::vector<SpectralPart> parts; // sorted by lambda, all nonzero
};

// Critical data of a non-diagonal term: the pair (l, l') of isometry powers
// and the group element g'^{-1} g = (a b)^{-1} entering the separation
// condition  phi^{l'}(w^{-1}) (a b)^{-1} phi^{l}(w) != e.
struct CriticalTerm {
    GroupElement ab;
    int l = 0;
    int lp = 0;

    bool operator<(const CriticalTerm& o) const {
        if (l != o.l) return l < o.l;
        if (lp != o.lp) return lp < o.lp;
        return ab < o.ab;
    }
    bool operator==(const CriticalTerm& o) const {
        return l == o.l && lp == o.lp && ab == o.ab;
    }
};

GroupElement critical_value(const GroupInstance& G, const CriticalTerm& t, const GroupElement& w);
std::vector<CriticalTerm> extract_criticals(const GroupInstance& G, const AlgebraElement& x);

ThetaDecomposition decompose_theta(const GroupInstance& G, const AlgebraElement& x,
                                   const CertifyConfig& cfg = {});

// First element w of phi^{-depth}(h) phi^{m-depth}(G) with every critical
// value != e.
GroupElement find_a(const GroupInstance& G, const std::vector<CriticalTerm>& criticals,
                    const GroupElement& h, int m, int depth, const CertifyConfig& cfg = {});

// Least b >= floor with every critical value outside phi^b(G); finite because
// the endomorphism is pure.
int find_b(const GroupInstance& G, const std::vector<CriticalTerm>& criticals,
           const GroupElement& a, int floor);

struct CertificateRegion {
    Scalar lambda;
    GroupElement h;
    int m = 0;
    GroupElement a;
    int b = 0;
    Monomial f; // e_[a phi^b(G)]
    Monomial z; // u_a s^b
};

struct TranscriptEntry {
    std::string identity;
    bool pass = false;
};

struct Certificate {
    AlgebraElement x;
    ThetaDecomposition decomposition;
    std::vector<CriticalTerm> criticals;
    std::vector<CertificateRegion> regions;
    std::vector<TranscriptEntry> transcript;
    bool verified = false;
};

// Builds and fully re-verifies a certificate; throws ThetaZero /
// HypothesisViolation / VerificationFailure as appropriate.
Certificate certify(const GroupInstance& G, const AlgebraElement& x,
                    const CertifyConfig& cfg = {});

// Replays the identities of an existing certificate (used by tests and by
// the machine-readable transcript consumers).
std::vector<TranscriptEntry> verify_certificate(const GroupInstance& G, const Certificate& cert);

// Window cross-check: represent(f_i x f_i) == lambda_i represent(f_i).
bool cross_check_certificate(const GroupInstance& G, const Certificate& cert, const Window& w);

}  // namespace endostar

#endif
