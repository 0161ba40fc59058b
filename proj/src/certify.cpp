#include "locc/certify.hpp"

#include "json.hpp"

namespace locc {

bool HermitianMat::is_scalar() const {
    if (!imag.is_zero()) return false;
    const Rational& d = real.at(0, 0);
    for (int i = 0; i < real.rows(); ++i)
        for (int j = 0; j < real.cols(); ++j)
            if (!(real.at(i, j) == (i == j ? d : Rational(0)))) return false;
    return true;
}

namespace {

// Real parameterization of Hermitian d x d matrices:
//   d diagonal entries, d(d-1)/2 symmetric real parts, d(d-1)/2 antisymmetric
//   imaginary parts, in that order, (p,q) pairs with p < q in row-major order.
struct HermParam {
    int d;
    int n_off;

    explicit HermParam(int d_) : d(d_), n_off(d_ * (d_ - 1) / 2) {}
    int total() const { return d + 2 * n_off; }
    int diag(int p) const { return p; }
    int sym(int p, int q) const { return d + pair_index(p, q); }
    int antisym(int p, int q) const { return d + n_off + pair_index(p, q); }

    int pair_index(int p, int q) const {
        // p < q, both 0-based
        return p * (2 * d - p - 1) / 2 + (q - p - 1);
    }
};

HermitianMat to_hermitian(const Vec& x, const HermParam& hp) {
    HermitianMat h{Mat(hp.d, hp.d), Mat(hp.d, hp.d)};
    for (int p = 0; p < hp.d; ++p) h.real.at(p, p) = x[hp.diag(p)];
    for (int p = 0; p < hp.d; ++p) {
        for (int q = p + 1; q < hp.d; ++q) {
            h.real.at(p, q) = x[hp.sym(p, q)];
            h.real.at(q, p) = x[hp.sym(p, q)];
            h.imag.at(p, q) = x[hp.antisym(p, q)];
            h.imag.at(q, p) = -x[hp.antisym(p, q)];
        }
    }
    return h;
}

}  // namespace

IndistCertificate certify_party(const StateSet& s, Party party) {
    if (!verify_orthogonality(s).empty())
        throw precondition_error("certify_party: input set is not mutually orthogonal");

    const int d = party == Party::A ? s.n : s.m;
    HermParam hp(d);

    std::vector<Vec> rows;
    int active = 0;
    for (size_t i = 0; i < s.states.size(); ++i) {
        for (size_t j = i + 1; j < s.states.size(); ++j) {
            const Ket& oi = party == Party::A ? s.states[i].b : s.states[i].a;
            const Ket& oj = party == Party::A ? s.states[j].b : s.states[j].a;
            if (dot(oi, oj) == 0) continue;  // vacuous pair
            ++active;
            const Ket& ai = party == Party::A ? s.states[i].a : s.states[i].b;
            const Ket& aj = party == Party::A ? s.states[j].a : s.states[j].b;
            // <ai|H|aj> = 0 splits into a real and an imaginary condition.
            Vec re(hp.total()), im(hp.total());
            bool has_im = false;
            for (const auto& [pi, ci] : ai.amps) {
                for (const auto& [qj, cj] : aj.amps) {
                    int p = pi - 1, q = qj - 1;
                    long long w = ci * cj;
                    if (p == q) {
                        re[hp.diag(p)] += Rational(w);
                    } else if (p < q) {
                        re[hp.sym(p, q)] += Rational(w);
                        im[hp.antisym(p, q)] += Rational(w);
                        has_im = true;
                    } else {
                        re[hp.sym(q, p)] += Rational(w);
                        im[hp.antisym(q, p)] -= Rational(w);
                        has_im = true;
                    }
                }
            }
            rows.push_back(std::move(re));
            if (has_im && !is_zero(im)) rows.push_back(std::move(im));
        }
    }

    Mat m(static_cast<int>(rows.size()), hp.total());
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < hp.total(); ++c) m.at(static_cast<int>(r), c) = rows[r][c];

    IndistCertificate cert;
    cert.party = party;
    cert.local_dim = d;
    cert.constraint_count = active;
    for (const Vec& x : kernel_basis(m)) cert.solution_basis.push_back(to_hermitian(x, hp));
    cert.is_scalar_only = cert.solution_basis.size() == 1;
    if (cert.solution_basis.empty())
        throw std::logic_error("certify_party: identity missing from solution space");
    return cert;
}

std::pair<IndistCertificate, IndistCertificate> certify_both(const StateSet& s) {
    return {certify_party(s, Party::A), certify_party(s, Party::B)};
}

std::optional<HermitianMat> witness_matrix(const IndistCertificate& c) {
    if (c.is_scalar_only) return std::nullopt;
    const int d = c.local_dim;
    for (const auto& h : c.solution_basis) {
        Rational t = h.real.trace() / Rational(d);
        HermitianMat w{h.real, h.imag};
        for (int i = 0; i < d; ++i) w.real.at(i, i) -= t;
        if (!w.real.is_zero() || !w.imag.is_zero()) return w;
    }
    return std::nullopt;
}

bool satisfies_constraints(const StateSet& s, Party party, const HermitianMat& h) {
    for (size_t i = 0; i < s.states.size(); ++i) {
        for (size_t j = i + 1; j < s.states.size(); ++j) {
            const Ket& oi = party == Party::A ? s.states[i].b : s.states[i].a;
            const Ket& oj = party == Party::A ? s.states[j].b : s.states[j].a;
            if (dot(oi, oj) == 0) continue;
            const Ket& ai = party == Party::A ? s.states[i].a : s.states[i].b;
            const Ket& aj = party == Party::A ? s.states[j].a : s.states[j].b;
            Rational re, im;
            for (const auto& [pi, ci] : ai.amps) {
                for (const auto& [qj, cj] : aj.amps) {
                    Rational w(ci * cj);
                    re += w * h.real.at(pi - 1, qj - 1);
                    im += w * h.imag.at(pi - 1, qj - 1);
                }
            }
            if (!re.is_zero() || !im.is_zero()) return false;
        }
    }
    return true;
}

std::string certificate_to_json(const IndistCertificate& c) {
    nlohmann::ordered_json j;
    j["party"] = party_name(c.party);
    j["dim"] = c.local_dim;
    j["solution_dim"] = c.solution_dim();
    j["scalar_only"] = c.is_scalar_only;
    j["active_pairs"] = c.constraint_count;
    auto w = witness_matrix(c);
    if (!w) {
        j["witness"] = nullptr;
    } else {
        auto dump = [](const Mat& m) {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (int i = 0; i < m.rows(); ++i) {
                nlohmann::ordered_json row = nlohmann::ordered_json::array();
                for (int jj = 0; jj < m.cols(); ++jj) row.push_back(m.at(i, jj).str());
                rows.push_back(std::move(row));
            }
            return rows;
        };
        j["witness"] = {{"real", dump(w->real)}, {"imag", dump(w->imag)}};
    }
    return j.dump(2) + "\n";
}

}  // namespace locc
