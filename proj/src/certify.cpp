#include "endostar/certify.hpp"

#include <algorithm>

namespace endostar {

GroupElement critical_value(const GroupInstance& G, const CriticalTerm& t, const GroupElement& w) {
    // phi^{l'}(w^{-1}) * (ab)^{-1} * phi^{l}(w)
    return G.mul(G.phi_pow(G.inv(w), t.lp), G.mul(G.inv(t.ab), G.phi_pow(w, t.l)));
}

std::vector<CriticalTerm> extract_criticals(const GroupInstance& G, const AlgebraElement& x) {
    std::vector<CriticalTerm> out;
    for (auto& [t, c] : x.terms()) {
        if (is_identity_degree(G, t)) continue;
        out.push_back(CriticalTerm{G.mul(t.a, t.b), t.n, t.m});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ThetaDecomposition decompose_theta(const GroupInstance& G, const AlgebraElement& x,
                                   const CertifyConfig& cfg) {
    AlgebraElement tx = theta(G, x);
    if (tx.is_zero()) throw Error(ErrorCode::ThetaZero, "conditional expectation vanishes");

    auto hyp = check_phi_power_hypothesis(G);
    if (!hyp.holds) {
        std::string bad;
        for (auto& [name, w] : hyp.failures) bad += (bad.empty() ? "" : ", ") + name;
        throw Error(ErrorCode::HypothesisViolation,
                    "no power of the endomorphism lands inside base subgroup(s): " + bad);
    }

    ThetaDecomposition dec;

    // common isometry depth; canonical identity-degree labels are diagonal
    // (depth 0), but deeper labels are handled by lifting the cosets
    for (auto& [t, c] : tx.terms()) dec.depth = std::max(dec.depth, t.n);

    // weighted coset family of theta(x), all inside phi^depth(G)
    std::map<BasicCoset, Scalar> weights;
    for (auto& [t, c] : tx.terms()) {
        BasicCoset d = G.coset_phi(diagonal_coset(G, t), 0); // canonical copy
        auto it = weights.find(d);
        if (it == weights.end())
            weights.emplace(d, c);
        else {
            it->second += c;
            if (it->second.is_zero()) weights.erase(it);
        }
    }
    if (weights.empty())
        throw Error(ErrorCode::ThetaZero, "conditional expectation cancels to zero");

    // refine the subgroup family so that every pairwise index is 1 or
    // infinite, rewriting each coset over its refined subgroup
    std::vector<BasicCoset> raw;
    std::vector<Scalar> raw_c;
    std::vector<LatticeSubgroup> fam;
    for (auto& [c, k] : weights) {
        raw.push_back(c);
        raw_c.push_back(k);
        fam.push_back(c.sub);
    }
    std::vector<LatticeSubgroup> refined = refine_family(G, fam);

    std::map<BasicCoset, Scalar> rewritten;
    for (size_t i = 0; i < raw.size(); ++i) {
        std::vector<BasicCoset> pieces;
        if (refined[i] == fam[i]) {
            pieces.push_back(raw[i]);
        } else {
            for (const auto& r : G.coset_transversal(fam[i], refined[i]))
                pieces.push_back(G.make_coset(G.mul(raw[i].rep, r), refined[i]));
        }
        for (const auto& p : pieces) {
            auto it = rewritten.find(p);
            if (it == rewritten.end())
                rewritten.emplace(p, raw_c[i]);
            else {
                it->second += raw_c[i];
                if (it->second.is_zero()) rewritten.erase(it);
            }
        }
    }
    if (rewritten.empty())
        throw Error(ErrorCode::ThetaZero, "conditional expectation cancels to zero");

    for (auto& [c, k] : rewritten) {
        dec.cosets.push_back(c);
        dec.coset_coeffs.push_back(k);
    }

    dec.atoms = orthogonalize(G, dec.cosets, cfg.witness_cap);

    // group atoms by their (nonzero) coefficient value
    std::map<Scalar, std::vector<uint32_t>> groups;
    for (uint32_t i = 0; i < dec.atoms.size(); ++i) {
        Scalar v;
        for (size_t j = 0; j < dec.cosets.size(); ++j)
            if (dec.atoms[i].support >> j & 1) v += dec.coset_coeffs[j];
        if (!v.is_zero()) groups[v].push_back(i);
    }
    if (groups.empty())
        throw Error(ErrorCode::ThetaZero,
                    "conditional expectation vanishes on every atom of its coset family");

    for (auto& [lambda, ids] : groups) {
        SpectralPart part;
        part.lambda = lambda;
        part.atom_ids = ids;
        for (uint32_t i : ids) part.projection.add(dec.atoms[i].indicator);
        const Atom& pick = dec.atoms[ids.front()];
        part.h = pick.witness;
        auto m = G.min_phi_power_inside(pick.inner);
        if (!m)
            throw Error(ErrorCode::HypothesisViolation,
                        "no power of the endomorphism inside an atom subgroup");
        part.m = std::max(*m, dec.depth);

        // the inner coset must be dominated by its spectral projection, as a
        // formal indicator identity
        BasicCoset W = G.make_coset(part.h, G.phi_power_subgroup(part.m));
        VirtualIndicator expect;
        expect.add(W, 1);
        if (!(indicator_restrict(G, part.projection, W) == expect))
            throw Error(ErrorCode::VerificationFailure,
                        "inner coset not dominated by its spectral projection");
        dec.parts.push_back(std::move(part));
    }
    return dec;
}

GroupElement find_a(const GroupInstance& G, const std::vector<CriticalTerm>& criticals,
                    const GroupElement& h, int m, int depth, const CertifyConfig& cfg) {
    auto h0 = G.phi_preimage(h, depth);
    if (!h0)
        throw Error(ErrorCode::InvalidArgument, "find_a: representative not in image of phi^depth");
    auto en = G.enumerate_subgroup(G.phi_power_subgroup(m - depth));
    GroupElement e = G.identity();
    for (size_t i = 0; i < cfg.search_cap; ++i) {
        GroupElement cand = G.mul(*h0, en->next());
        bool good = true;
        for (const auto& crit : criticals)
            if (critical_value(G, crit, cand) == e) {
                good = false;
                break;
            }
        if (good) return cand;
    }
    throw Error(ErrorCode::NotFound, "find_a: no separating element within the search cap");
}

int find_b(const GroupInstance& G, const std::vector<CriticalTerm>& criticals,
           const GroupElement& a, int floor) {
    int b = floor;
    GroupElement e = G.identity();
    for (const auto& crit : criticals) {
        GroupElement v = critical_value(G, crit, a);
        if (v == e)
            throw Error(ErrorCode::InvalidArgument, "find_b: critical value equals the identity");
        int depth = 0;
        GroupElement cur = v;
        for (;;) {
            auto p = G.phi_inv(cur);
            if (!p) break;
            cur = *p;
            ++depth;
            if (depth > 4096)
                throw Error(ErrorCode::NotFound, "find_b: element survives every probed power");
        }
        b = std::max(b, depth + 1);
    }
    return b;
}

Certificate certify(const GroupInstance& G, const AlgebraElement& x, const CertifyConfig& cfg) {
    if (adjoint(G, x) != x)
        throw Error(ErrorCode::InvalidArgument, "certify: element is not self-adjoint");

    Certificate cert;
    cert.x = x;
    cert.decomposition = decompose_theta(G, x, cfg);
    cert.criticals = extract_criticals(G, x);

    for (const auto& part : cert.decomposition.parts) {
        CertificateRegion reg;
        reg.lambda = part.lambda;
        reg.h = part.h;
        reg.m = part.m;
        reg.a = find_a(G, cert.criticals, part.h, part.m, cert.decomposition.depth, cfg);
        reg.b = find_b(G, cert.criticals, reg.a, reg.m - cert.decomposition.depth);
        auto f = canonicalize(G, 0, reg.a, BasicCoset{G.identity(), G.phi_power_subgroup(reg.b)},
                              G.inv(reg.a), 0);
        auto z = canonicalize(G, 0, reg.a, BasicCoset{G.identity(), G.whole_group()},
                              G.identity(), reg.b);
        reg.f = *f;
        reg.z = *z;
        cert.regions.push_back(std::move(reg));
    }

    cert.transcript = verify_certificate(G, cert);
    cert.verified = std::all_of(cert.transcript.begin(), cert.transcript.end(),
                                [](const TranscriptEntry& t) { return t.pass; });
    if (!cert.verified) {
        std::string bad;
        for (auto& t : cert.transcript)
            if (!t.pass) bad += (bad.empty() ? "" : "; ") + t.identity;
        throw Error(ErrorCode::VerificationFailure, "certificate failed its re-check: " + bad);
    }
    return cert;
}

std::vector<TranscriptEntry> verify_certificate(const GroupInstance& G, const Certificate& cert) {
    std::vector<TranscriptEntry> out;
    const auto& regs = cert.regions;
    AlgebraElement one = alg_one(G);
    AlgebraElement tx = theta(G, cert.x);

    // (i) pairwise orthogonality
    for (size_t i = 0; i < regs.size(); ++i)
        for (size_t j = i + 1; j < regs.size(); ++j) {
            bool ok = mul(G, AlgebraElement::monomial(regs[i].f),
                          AlgebraElement::monomial(regs[j].f))
                          .is_zero();
            out.push_back({"(i) f_" + std::to_string(i) + " f_" + std::to_string(j) + " = 0", ok});
        }

    // (ii) z z* = f and z* z = 1
    for (size_t i = 0; i < regs.size(); ++i) {
        AlgebraElement z = AlgebraElement::monomial(regs[i].z);
        bool range_ok = mul(G, z, adjoint(G, z)) == AlgebraElement::monomial(regs[i].f);
        bool isom_ok = mul(G, adjoint(G, z), z) == one;
        out.push_back({"(ii) z_" + std::to_string(i) + " z* = f", range_ok});
        out.push_back({"(ii) z*_" + std::to_string(i) + " z = 1", isom_ok});
    }

    // (iii) exact diagonal norm equality for sum f_i theta(x) f_i
    {
        AlgebraElement compressed;
        for (const auto& r : regs) {
            AlgebraElement f = AlgebraElement::monomial(r.f);
            compressed = compressed + mul(G, f, mul(G, tx, f));
        }
        bool ok = diagonal_norm(G, compressed) == diagonal_norm(G, tx);
        out.push_back({"(iii) diagonal norm preserved under compression", ok});
    }

    // (iv) f x f = lambda f
    for (size_t i = 0; i < regs.size(); ++i) {
        AlgebraElement f = AlgebraElement::monomial(regs[i].f);
        AlgebraElement lhs = mul(G, f, mul(G, cert.x, f));
        bool ok = lhs == scale(regs[i].lambda, f);
        out.push_back({"(iv) f_" + std::to_string(i) + " x f_" + std::to_string(i) +
                           " = lambda f_" + std::to_string(i),
                       ok});
    }
    return out;
}

bool cross_check_certificate(const GroupInstance& G, const Certificate& cert, const Window& w) {
    for (const auto& r : cert.regions) {
        AlgebraElement f = AlgebraElement::monomial(r.f);
        AlgebraElement lhs = mul(G, f, mul(G, cert.x, f));
        auto ml = represent(G, lhs, w);
        auto mr = represent(G, scale(r.lambda, f), w);
        if (!ml.equal_on(mr, w.core())) return false;
    }
    return true;
}

}  // namespace endostar
