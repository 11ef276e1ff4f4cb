#include "latflow/exterior.hpp"

#include <sstream>

namespace latflow {

std::string to_string(const BasisBlade& b) {
    if (b.I.empty() && b.J.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i : b.I) {
        os << (first ? "" : "^") << "e" << i;
        first = false;
    }
    for (int j : b.J) {
        os << (first ? "" : "^") << "v" << j;
        first = false;
    }
    return os.str();
}

XReal g_eigenvalue(const FlowVector& t, const BasisBlade& b) {
    XReal f;
    for (int i : b.I) f *= t.weight(i - 1);
    for (int j : b.J) f /= t.weight(t.m() + j - 1);
    return f;
}

double g_log_eigenvalue(const FlowVector& t, const BasisBlade& b) {
    return g_eigenvalue(t, b).log_double();
}

std::optional<Rational> g_log_eigenvalue_exact(const FlowVector& t, const BasisBlade& b) {
    if (!t.exponents()) return std::nullopt;
    const auto& tau = *t.exponents();
    Rational s(0);
    for (int i : b.I) s += tau[i - 1];
    for (int j : b.J) s -= tau[t.m() + j - 1];
    return s;
}

MultiVector<double> g_action(const FlowVector& t, const MV& w) {
    require(t.m() == w.m() && t.n() == w.n(), "g_action: shape mismatch");
    MultiVector<double> out(w.m(), w.n());
    for (const auto& [b, c] : w)
        out.add_term(b, to_double(c) * g_eigenvalue(t, b).to_double());
    return out;
}

Rational WitnessForm::eval(const MatQ& Y) const {
    Rational s(0);
    for (const auto& [pos, coeff] : terms) s += Rational(coeff) * minor(Y, pos);
    return s;
}

bool WitnessForm::nontrivial() const {
    for (const auto& [pos, coeff] : terms)
        if (sgn(coeff) != 0) return true;
    return false;
}

std::string WitnessForm::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pos, coeff] : terms) {
        if (sgn(coeff) == 0) continue;
        std::string mag = Int(abs(coeff)).get_str();
        if (first) {
            if (sgn(coeff) < 0) os << "-";
        } else {
            os << (sgn(coeff) < 0 ? " - " : " + ");
        }
        if (pos.I.empty()) {
            os << mag;  // the constant term
        } else {
            if (mag != "1") os << mag << "*";
            os << latflow::to_string(pos);
        }
        first = false;
    }
    return os.str();
}

std::optional<std::pair<int, IndexPair>> symbolic_u_coeff(int m, const BasisBlade& source,
                                                          const BasisBlade& target) {
    // u_Y(e_I ∧ v_J) hits e_{I∪K} ∧ v_{J∖L}; match target = (T_I, T_J).
    if (!is_subset(source.I, target.I)) return std::nullopt;
    if (!is_subset(target.J, source.J)) return std::nullopt;
    IndexSet K = set_difference(target.I, source.I);
    IndexSet L = set_difference(source.J, target.J);
    if (K.size() != L.size()) return std::nullopt;
    for (int idx : K)
        if (idx > m) return std::nullopt;
    const int sign_v = merge_inversions(L, target.J) % 2 == 0 ? 1 : -1;
    const int sign_e = merge_inversions(source.I, K) % 2 == 0 ? 1 : -1;
    return std::make_pair(sign_v * sign_e, IndexPair{std::move(K), std::move(L)});
}

WitnessForm find_witness(const MV& w) {
    require(!w.is_zero(), "find_witness: zero multivector");
    for (const auto& [b, c] : w)
        require(c.get_den() == 1, "find_witness: coefficients must be integers");

    const int m = w.m(), n = w.n(), k = m + n;
    const int ell = w.grade();

    WitnessForm out;
    if (ell == 0 || ell == k) {
        // u_Y fixes the scalar grade and the top grade; the pairing is the
        // constant coefficient itself.
        out.w0 = w.begin()->first;
        out.terms[IndexPair{{}, {}}] = w.begin()->second.get_num();
        out.degenerate = true;
        out.proof_case = 0;
        return out;
    }

    // std::map iterates blades in lexicographic (I, J) order, so begin() is
    // the tie-break choice.
    const BasisBlade& lead = w.begin()->first;

    if (ell <= m) {
        // Case 1: w₀ = e_{I∪K}, K the smallest completion of I inside {1..m}.
        const IndexSet comp = set_difference(full_range(m), lead.I);
        IndexSet K(comp.begin(), comp.begin() + lead.J.size());
        IndexSet union_IK;
        merge_sign(lead.I, K, &union_IK);
        out.w0 = BasisBlade{union_IK, {}};
        out.proof_case = 1;
    } else {
        // Case 2: w₀ = e_{1..m} ∧ v_{J∖K}, K the smallest |{1..m}∖I|-subset
        // of J.
        const IndexSet I = set_difference(full_range(m), lead.I);
        IndexSet K(lead.J.begin(), lead.J.begin() + I.size());
        out.w0 = BasisBlade{full_range(m), set_difference(lead.J, K)};
        out.proof_case = 2;
    }

    for (const auto& [b, c] : w) {
        auto hit = symbolic_u_coeff(m, b, out.w0);
        if (!hit) continue;
        Int contribution = Int(hit->first) * c.get_num();
        auto [it, fresh] = out.terms.emplace(hit->second, contribution);
        if (!fresh) {
            it->second += contribution;
            if (sgn(it->second) == 0) out.terms.erase(it);
        }
    }
    require(out.nontrivial(), "find_witness: internal error, trivial form");
    return out;
}

Json json_of(const MV& w) {
    Json arr = Json::array();
    for (const auto& [b, c] : w) {
        Json item;
        item["I"] = b.I;
        item["J"] = b.J;
        item["coeff"] = to_string(c);
        arr.push_back(std::move(item));
    }
    return arr;
}

MV mv_from_json(int m, int n, const Json& j) {
    require(j.is_array(), "mv_from_json: expected an array of blade terms");
    MV w(m, n);
    for (const auto& item : j) {
        require(item.contains("I") && item.contains("J") && item.contains("coeff"),
                "mv_from_json: blade term needs I, J, coeff");
        BasisBlade b{item["I"].get<IndexSet>(), item["J"].get<IndexSet>()};
        w.add_term(std::move(b), rational_from_json(item["coeff"]));
    }
    return w;
}

} // namespace latflow
