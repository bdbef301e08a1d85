#include "lenscape/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "lenscape/artin.hpp"
#include "lenscape/covers.hpp"
#include "lenscape/errors.hpp"
#include "lenscape/invariants.hpp"
#include "lenscape/io.hpp"
#include "lenscape/lattice.hpp"
#include "lenscape/mcg.hpp"
#include "lenscape/milnor.hpp"
#include "lenscape/numbers.hpp"
#include "lenscape/tight.hpp"

namespace lenscape {
namespace {

constexpr const char* kRotHelp =
    "rotation numbers r1,...,rn in EXPANSION ORDER: the first entry belongs to "
    "the first coefficient of [a1,...,an]";

std::string join_ints(const std::vector<Int>& v, const char* open, const char* close) {
    std::ostringstream os;
    os << open;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << close;
    return os.str();
}

std::string bracketed(const std::vector<Int>& v) { return join_ints(v, "[", "]"); }
std::string rot_str(const std::vector<Int>& v) { return join_ints(v, "(", ")"); }

std::string pretty(const Fraction& f) { return f.den == 1 ? f.num.str() : f.str(); }

std::string lens_str(const LensSpace& l) { return "L(" + l.p.str() + "," + l.q.str() + ")"; }

std::string total_str(const std::optional<LensSpace>& t) { return t ? lens_str(*t) : "S^3"; }

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::vector<Int> parse_rot_list(const std::string& s) {
    std::vector<Int> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        if (b == std::string::npos) throw invalid_input_error("empty entry in rotation list");
        size_t e = tok.find_last_not_of(" \t");
        out.push_back(parse_int(tok.substr(b, e - b + 1)));
    }
    if (out.empty()) throw invalid_input_error("empty rotation list");
    return out;
}

Json read_json(std::istream& in) {
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw invalid_input_error(std::string("invalid JSON on stdin: ") + e.what());
    }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json lens_json(const LensSpace& l) {
    Json j;
    j["p"] = json_int(l.p);
    j["q"] = json_int(l.q);
    return j;
}

Json total_json(const std::optional<LensSpace>& t) {
    if (t) return lens_json(*t);
    return "S3";
}

void print_matrix(std::ostream& out, const IntMatrix& m) {
    for (int i = 0; i < m.rows; ++i) {
        out << "[";
        for (int j = 0; j < m.cols; ++j) {
            if (j) out << ", ";
            out << m.at(i, j);
        }
        out << "]\n";
    }
}

IntMatrix matrix_from_json(const Json& rows) {
    if (!rows.is_array() || rows.empty())
        throw invalid_input_error("matrix must be a nonempty array of rows");
    int n = static_cast<int>(rows.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        if (!rows[static_cast<size_t>(i)].is_array() ||
            static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
            throw invalid_input_error("matrix must be square");
        for (int j = 0; j < n; ++j)
            m.at(i, j) = int_from_json(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return m;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += "x" + std::to_string(std::abs(w[i]));
        if (w[i] < 0) s += "^-1";
    }
    return s;
}

void print_presentation(std::ostream& out, const ArtinPresentation& p) {
    out << "n: " << p.n << "\n";
    for (size_t i = 0; i < p.relations.size(); ++i)
        out << "r" << (i + 1) << ": " << word_str(p.relations[i]) << "\n";
}

std::string h1_str(const PalfInvariants& inv) {
    std::vector<std::string> parts;
    if (inv.h1_rank == 1) parts.push_back("Z");
    else if (inv.h1_rank > 1) parts.push_back("Z^" + inv.h1_rank.str());
    for (const Int& t : inv.h1_torsion) parts.push_back("Z/" + t.str());
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

const char* class_words(TightClass c) {
    return c == TightClass::UniversallyTight ? "universally tight" : "virtually overtwisted";
}
const char* class_tag(TightClass c) {
    return c == TightClass::UniversallyTight ? "universally_tight" : "virtually_overtwisted";
}

const char* status_tag(PairingStatus s) {
    switch (s) {
    case PairingStatus::Validated: return "validated";
    case PairingStatus::Heuristic: return "heuristic";
    default: return "pairing_failed";
    }
}

const char* verdict_tag(SignVerdict v) {
    switch (v) {
    case SignVerdict::OnlyConstantSigns: return "only_constant_signs";
    case SignVerdict::MixedSolutionExists: return "mixed_solution_exists";
    default: return "inconsistent";
    }
}
const char* verdict_words(SignVerdict v) {
    switch (v) {
    case SignVerdict::OnlyConstantSigns: return "only constant signs";
    case SignVerdict::MixedSolutionExists: return "mixed solution exists";
    default: return "inconsistent";
    }
}

const char* milnor_verdict_tag(MilnorVerdict v) {
    switch (v) {
    case MilnorVerdict::Obstructed: return "Obstructed";
    case MilnorVerdict::Inconclusive: return "Inconclusive";
    default: return "NotApplicable";
    }
}

bool all_twos(const std::vector<Int>& cf) {
    for (const Int& a : cf)
        if (a != 2) return false;
    return true;
}

Json rows_of_rots(const std::vector<RotationVector>& rs) {
    Json arr = Json::array();
    for (const RotationVector& r : rs) arr.push_back(json_int_list(r));
    return arr;
}

std::string curve_str(const HoleSet& s, const std::vector<std::string>& names) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += names[static_cast<size_t>(s[i])];
    }
    return out + "}";
}

PalfInvariants palf_of_configuration(const Configuration& c, int holes) {
    TwistFactorization f;
    f.num_holes = holes;
    for (const HoleSet& s : c) f.twists.push_back({s, Int(1)});
    return palf_euler(f);
}

// ---------------------------------------------------------------- handlers

int cmd_info(const Int& p, const Int& q, bool json, std::ostream& out) {
    LensSpace l = normalize_lens(p, q);
    auto cf = neg_cf_expand(l);
    auto dual = riemenschneider_dual(l);
    Fraction dual_value = cf_evaluate(dual);
    Int count = tight_count(cf);
    bool even = true;
    for (const Int& a : cf)
        if (a % 2 != 0) even = false;
    Int classes = (count + (even ? 1 : 0)) / 2; // orbits of r -> -r; r = 0 is the only fixed point
    Int chi = chi_upper_bound(l);

    if (json) {
        Json j;
        j["p"] = json_int(l.p);
        j["q"] = json_int(l.q);
        j["expansion"] = json_int_list(cf);
        j["dual"] = json_int_list(dual);
        j["tight_count"] = json_int(count);
        j["class_count"] = json_int(classes);
        j["chi_upper_bound"] = json_int(chi);
        emit(out, j);
    } else {
        out << lens_str(l) << "\n";
        out << "expansion: " << bracketed(cf) << "\n";
        out << "dual: " << bracketed(dual) << " (" << dual_value.num << "/" << dual_value.den
            << ")\n";
        out << "tight structures: " << count << " in " << classes << " classes\n";
        out << "chi bound: any Stein filling has chi <= " << chi << "\n";
    }
    return 0;
}

int cmd_tight(const Int& p, const Int& q, bool json, std::ostream& out) {
    LensSpace l = normalize_lens(p, q);
    auto cf = neg_cf_expand(l);
    auto structures = enumerate_tight(cf);
    auto classes = contactomorphism_classes(cf);
    std::map<RotationVector, size_t> class_of;
    for (size_t ci = 0; ci < classes.size(); ++ci)
        for (const RotationVector& r : classes[ci]) class_of[r] = ci + 1;

    if (json) {
        Json j;
        j["p"] = json_int(l.p);
        j["q"] = json_int(l.q);
        j["expansion"] = json_int_list(cf);
        j["tight_count"] = json_int(Int(structures.size()));
        j["class_count"] = json_int(Int(classes.size()));
        Json arr = Json::array();
        for (const RotationVector& r : structures) {
            Json s;
            s["rot"] = json_int_list(r);
            s["class_index"] = json_int(Int(class_of.at(r)));
            s["type"] = class_tag(classify(cf, r));
            auto pd = pd_euler_class(cf, r);
            s["pd"] = json_int(pd.reduced);
            s["pd_unreduced"] = json_int(pd.unreduced);
            s["d3"] = json_fraction(d3_chain(cf, r));
            arr.push_back(std::move(s));
        }
        j["structures"] = std::move(arr);
        emit(out, j);
    } else {
        out << lens_str(l) << " expansion " << bracketed(cf) << "\n";
        out << structures.size() << " tight structures in " << classes.size() << " classes\n";
        for (const RotationVector& r : structures) {
            auto pd = pd_euler_class(cf, r);
            out << "rot " << rot_str(r) << "  class " << class_of.at(r) << "  "
                << class_words(classify(cf, r)) << "  PD " << pd.reduced << "  d3 "
                << d3_chain(cf, r).str() << "\n";
        }
    }
    return 0;
}

int cmd_d3(const Int& p, const Int& q, const std::vector<Int>& r, bool json, std::ostream& out) {
    LensSpace l = normalize_lens(p, q);
    auto cf = neg_cf_expand(l);
    require_rotation_valid(cf, r);
    Fraction d3 = d3_chain(cf, r);
    if (json) {
        Json j;
        j["p"] = json_int(l.p);
        j["q"] = json_int(l.q);
        j["rot"] = json_int_list(r);
        j["d3"] = json_fraction(d3);
        emit(out, j);
    } else {
        out << d3.str() << "\n";
    }
    return 0;
}

int cmd_euler(const Int& p, const Int& q, const std::vector<Int>& r, bool json,
              std::ostream& out) {
    LensSpace l = normalize_lens(p, q);
    auto cf = neg_cf_expand(l);
    auto pd = pd_euler_class(cf, r);
    bool zero = c1_is_zero(cf, r);
    if (json) {
        Json j;
        j["p"] = json_int(l.p);
        j["q"] = json_int(l.q);
        j["rot"] = json_int_list(r);
        j["pd_unreduced"] = json_int(pd.unreduced);
        j["pd"] = json_int(pd.reduced);
        j["c1_zero"] = zero;
        emit(out, j);
    } else {
        out << "PD(e) unreduced: " << pd.unreduced << "\n";
        out << "PD(e) mod " << l.p << ": " << pd.reduced << "\n";
        out << "c1 zero: " << yesno(zero) << "\n";
    }
    return 0;
}

int cmd_cover(const Int& p, const Int& q, const Int& d, const std::optional<std::vector<Int>>& rot,
              bool json, std::ostream& out) {
    LensSpace l = normalize_lens(p, q);
    if (d < 1 || d > l.p) throw invalid_input_error("degree must lie between 1 and p");
    if (l.p % d != 0) throw invalid_input_error("degree must divide p");
    bool s3 = (d == l.p);
    std::optional<LensSpace> total;
    if (!s3) total = normalize_lens(l.p / d, l.q);

    bool basic = overtwisted_lift_basic(l, d);
    RefinedLiftCriterion refined = overtwisted_lift_refined(l, d);
    bool ut_force = s3 || all_twos(neg_cf_expand(*total));

    std::optional<SignConstraintSystem> sys;
    std::optional<SignSolution> sol;
    if (total && d > 1) {
        sys = lift_sign_constraints(l, d);
        if (sys->status != PairingStatus::PairingFailed) sol = solve_sign_constraints(*sys);
    }
    std::optional<std::vector<RotationVector>> lifts;
    if (rot && !s3) lifts = euler_compatibility_filter(l, *rot, d);

    if (json) {
        Json j;
        j["p"] = json_int(l.p);
        j["q"] = json_int(l.q);
        j["degree"] = json_int(d);
        j["total"] = total_json(total);
        j["basic_criterion"] = basic;
        Json rj;
        rj["truncated_value"] = json_fraction(refined.expansion_route);
        rj["intrinsic_value"] = json_fraction(refined.intrinsic_route);
        rj["routes_agree"] = refined.routes_agree;
        rj["fires"] = refined.overtwisted;
        j["refined"] = std::move(rj);
        j["ut_forcing"] = ut_force;
        if (sys) {
            Json sj;
            sj["modulus"] = json_int(sys->modulus);
            sj["status"] = status_tag(sys->status);
            sj["note"] = sys->note;
            Json terms = Json::array();
            for (const SignTerm& t : sys->terms) {
                Json tj;
                tj["coefficient"] = json_int(t.coefficient);
                tj["linked"] = t.linked;
                tj["provenance"] = t.provenance;
                terms.push_back(std::move(tj));
            }
            sj["terms"] = std::move(terms);
            j["sign_system"] = std::move(sj);
        }
        if (sol) {
            j["sign_verdict"] = verdict_tag(sol->verdict);
            if (sol->verdict == SignVerdict::MixedSolutionExists) {
                Json w = Json::array();
                for (int s : sol->witness) w.push_back(s);
                j["witness"] = std::move(w);
            }
        }
        if (rot) j["rot"] = json_int_list(*rot);
        if (lifts) j["compatible_lifts"] = rows_of_rots(*lifts);
        emit(out, j);
    } else {
        out << "degree-" << d << " cover of " << lens_str(l) << ": " << total_str(total) << "\n";
        out << "basic criterion (q < p < d*q): " << yesno(basic) << "\n";
        out << "refined criterion (p' < d*q'): " << yesno(refined.overtwisted)
            << "  [truncated chain value " << pretty(refined.expansion_route) << ", intrinsic "
            << pretty(refined.intrinsic_route) << ", routes agree: "
            << yesno(refined.routes_agree) << "]\n";
        out << "ut forcing upstairs: " << yesno(ut_force) << "\n";
        if (sys) {
            out << "sign system (mod " << sys->modulus << "):";
            if (sys->terms.empty()) out << " empty";
            for (const SignTerm& t : sys->terms)
                out << " +-" << t.coefficient << (t.linked ? "[linked]" : "[free]");
            out << "\n";
            out << "pairing status: " << status_tag(sys->status);
            if (!sys->note.empty()) out << " (" << sys->note << ")";
            out << "\n";
            if (sol) {
                out << "sign verdict: " << verdict_words(sol->verdict) << "\n";
                if (sol->verdict == SignVerdict::MixedSolutionExists) {
                    out << "mixed witness:";
                    for (int s : sol->witness) out << " " << (s > 0 ? "+" : "-");
                    out << "\n";
                }
            }
        } else if (s3) {
            out << "sign system: skipped (universal cover S^3)\n";
        } else {
            out << "sign system: skipped (trivial cover)\n";
        }
        if (lifts) {
            out << "compatible lifts of " << rot_str(*rot) << ": " << lifts->size() << "\n";
            for (const RotationVector& v : *lifts) out << "  " << rot_str(v) << "\n";
        } else if (rot && s3) {
            out << "compatible lifts: no rotation coordinates on S^3\n";
        }
    }
    return 0;
}

int cmd_pi1(const Int& p, const Int& q, const std::vector<Int>& r, bool json, std::ostream& out) {
    LensSpace l = normalize_lens(p, q);
    Pi1Report rep = pi1_chi_report(l, r);

    if (json) {
        Json j;
        j["p"] = json_int(l.p);
        j["q"] = json_int(l.q);
        j["rot"] = json_int_list(r);
        j["base_class"] = rep.base_is_ut ? "universally_tight" : "virtually_overtwisted";
        if (rep.chi_exact) j["chi_exact"] = json_int(*rep.chi_exact);
        j["chi_at_least_two"] = rep.chi_at_least_two;
        j["chi_min"] = json_fraction(rep.chi_min);
        Json divs = Json::array();
        for (const DivisorRecord& dr : rep.divisors) {
            Json dj;
            dj["degree"] = json_int(dr.degree);
            dj["total"] = total_json(dr.total);
            dj["basic_criterion"] = dr.basic_criterion;
            dj["refined_criterion"] = dr.refined_criterion;
            dj["ut_forcing"] = dr.ut_forcing;
            if (dr.euler_filter_empty) dj["euler_filter_empty"] = *dr.euler_filter_empty;
            if (dr.sign_verdict) dj["sign_verdict"] = verdict_tag(*dr.sign_verdict);
            dj["known_overtwisted"] = dr.known_overtwisted;
            dj["chi_bound"] = json_fraction(dr.chi_bound);
            divs.push_back(std::move(dj));
        }
        j["divisors"] = std::move(divs);
        j["excluded_orders"] = json_int_list(rep.excluded_orders);
        j["surviving_orders"] = json_int_list(rep.surviving_orders);
        j["note"] = rep.note;
        emit(out, j);
    } else {
        out << lens_str(l) << " rot " << rot_str(r) << ": "
            << (rep.base_is_ut ? "universally tight" : "virtually overtwisted") << "\n";
        if (rep.chi_exact)
            out << "chi of any Stein filling: exactly " << *rep.chi_exact << "\n";
        else
            out << "chi of any Stein filling: >= " << pretty(rep.chi_min) << "\n";
        for (const DivisorRecord& dr : rep.divisors) {
            out << "degree " << dr.degree << ": total " << total_str(dr.total) << "  basic "
                << yesno(dr.basic_criterion) << "  refined " << yesno(dr.refined_criterion)
                << "  ut-forcing " << yesno(dr.ut_forcing);
            if (dr.euler_filter_empty) out << "  filter-empty " << yesno(*dr.euler_filter_empty);
            if (dr.sign_verdict) out << "  signs " << verdict_words(*dr.sign_verdict);
            out << "  overtwisted-lift " << yesno(dr.known_overtwisted) << "  chi-bound "
                << pretty(dr.chi_bound) << "\n";
        }
        out << "excluded pi1 orders: ";
        if (rep.excluded_orders.empty()) out << "none";
        for (size_t i = 0; i < rep.excluded_orders.size(); ++i)
            out << (i ? ", " : "") << rep.excluded_orders[i];
        out << "\n";
        out << "surviving pi1 orders: ";
        if (rep.surviving_orders.empty()) out << "none";
        for (size_t i = 0; i < rep.surviving_orders.size(); ++i)
            out << (i ? ", " : "") << rep.surviving_orders[i];
        out << "\n";
        if (!rep.note.empty()) out << "note: " << rep.note << "\n";
    }
    return 0;
}

int cmd_embed(const Int& p, const Int& q, bool json, std::ostream& out) {
    LensSpace l = normalize_lens(p, q);
    auto dual = riemenschneider_dual(l);
    LinearPlumbing pl = plumbing_from_cf(dual);
    DiagonalEmbedding emb = max_irreducible_embedding(pl);
    ComplementReport comp = orthogonal_complement(emb);
    std::optional<IntMatrix> reduced;
    if (comp.gram.rows == 2) reduced = gauss_reduced_binary(comp.gram);

    struct OracleLine {
        int rank;
        size_t classes;
        int irreducible;
    };
    std::vector<OracleLine> oracle;
    std::string oracle_note;
    try {
        for (int rank = emb.ambient_rank; rank <= emb.ambient_rank + 1; ++rank) {
            OracleResult res = embedding_oracle(pl, rank);
            oracle.push_back({rank, res.classes.size(), res.irreducible_count});
        }
    } catch (const resource_limit_error& e) {
        oracle_note = std::string("oracle skipped: ") + e.what();
    }

    if (json) {
        Json j;
        j["p"] = json_int(l.p);
        j["q"] = json_int(l.q);
        j["dual"] = json_int_list(dual);
        j["weights"] = json_int_list(pl.weights);
        j["greedy_rank"] = emb.ambient_rank;
        Json imgs = Json::array();
        for (const auto& image : emb.images) {
            Json row = Json::array();
            for (const auto& [basis, sign] : image) row.push_back(sign * (basis + 1));
            imgs.push_back(std::move(row));
        }
        j["images"] = std::move(imgs);
        Json cj;
        cj["rank"] = comp.gram.rows;
        cj["det"] = json_int(comp.det);
        cj["negative_definite"] = comp.negative_definite;
        cj["has_minus_one_vector"] = comp.has_minus_one_vector;
        cj["gram"] = json_matrix(comp.gram);
        if (reduced) cj["gauss_reduced"] = json_matrix(*reduced);
        j["complement"] = std::move(cj);
        if (!oracle.empty()) {
            Json oj = Json::array();
            for (const OracleLine& ol : oracle) {
                Json e;
                e["rank"] = ol.rank;
                e["classes"] = json_int(Int(ol.classes));
                e["irreducible"] = ol.irreducible;
                oj.push_back(std::move(e));
            }
            j["oracle"] = std::move(oj);
        }
        if (!oracle_note.empty()) j["oracle_note"] = oracle_note;
        emit(out, j);
    } else {
        out << lens_str(l) << ": dual chain " << bracketed(dual) << ", weights "
            << bracketed(pl.weights) << "\n";
        out << "greedy ambient rank: " << emb.ambient_rank << "\n";
        out << "images:";
        for (const auto& image : emb.images) {
            out << " [";
            for (size_t i = 0; i < image.size(); ++i)
                out << (i ? ", " : "") << image[i].second * (image[i].first + 1);
            out << "]";
        }
        out << "\n";
        out << "complement: rank " << comp.gram.rows << ", det " << comp.det
            << ", negative definite " << yesno(comp.negative_definite) << ", -1-vector "
            << yesno(comp.has_minus_one_vector) << "\n";
        out << "complement gram:\n";
        print_matrix(out, comp.gram);
        if (reduced) {
            out << "gauss-reduced binary form:\n";
            print_matrix(out, *reduced);
        }
        for (const OracleLine& ol : oracle)
            out << "oracle rank " << ol.rank << ": " << ol.irreducible
                << " irreducible classes, " << ol.classes << " total\n";
        if (!oracle_note.empty()) out << oracle_note << "\n";
    }
    return 0;
}

int cmd_milnor(const Int& p, const Int& q, const std::vector<Int>& r, bool json,
               std::ostream& out) {
    LensSpace l = normalize_lens(p, q);
    MilnorReport rep = milnor_verdict(l, r);
    UniqueFillingNote note = unique_filling_note(l, r);
    if (json) {
        Json j;
        j["p"] = json_int(l.p);
        j["q"] = json_int(l.q);
        j["rot"] = json_int_list(r);
        j["verdict"] = milnor_verdict_tag(rep.verdict);
        j["case"] = rep.case_tag;
        j["reason"] = rep.reason;
        j["certified"] = rep.certified;
        j["unique_filling_hypothesis"] = note.unique_filling_hypothesis;
        j["isolated_singularity_eligible"] = note.isolated_singularity_eligible;
        emit(out, j);
    } else {
        out << milnor_verdict_tag(rep.verdict);
        if (!rep.case_tag.empty()) out << " (case " << rep.case_tag << ")";
        out << "\n";
        out << "reason: " << rep.reason << "\n";
        out << "certified by exhaustive isometry search: " << yesno(rep.certified) << "\n";
        out << "unique filling hypothesis (r = 0): " << yesno(note.unique_filling_hypothesis)
            << "\n";
        out << "isolated singularity boundary (q = p-1): "
            << yesno(note.isolated_singularity_eligible) << "\n";
    }
    return 0;
}

ArtinPresentation presentation_from_args(const std::vector<std::string>& abc, std::istream& in) {
    size_t given = 0;
    for (const std::string& s : abc)
        if (!s.empty()) ++given;
    if (given == 3) return pabc(parse_int(abc[0]), parse_int(abc[1]), parse_int(abc[2]));
    if (given != 0)
        throw invalid_input_error("give all three of a b c (the p_{a,b,c} family) or none");
    return presentation_from_json(read_json(in));
}

int cmd_artin_validate(const std::vector<std::string>& abc, bool json, std::istream& in,
                       std::ostream& out) {
    ArtinPresentation pres = presentation_from_args(abc, in);
    bool ok = artin_valid(pres);
    if (json) {
        Json j = presentation_to_json(pres);
        j["valid"] = ok;
        emit(out, j);
    } else {
        print_presentation(out, pres);
        out << "valid: " << yesno(ok) << "\n";
    }
    return 0;
}

int cmd_artin_product(bool json, std::istream& in, std::ostream& out) {
    Json j = read_json(in);
    if (!j.is_array() || j.size() < 2)
        throw invalid_input_error("expected a JSON array of at least two presentations");
    ArtinPresentation acc = presentation_from_json(j[0]);
    for (size_t i = 1; i < j.size(); ++i)
        acc = artin_product(acc, presentation_from_json(j[i]));
    if (json) {
        Json pj = presentation_to_json(acc);
        pj["valid"] = artin_valid(acc);
        emit(out, pj);
    } else {
        print_presentation(out, acc);
        out << "valid: " << yesno(artin_valid(acc)) << "\n";
    }
    return 0;
}

int cmd_artin_matrix(const std::vector<std::string>& abc, bool json, std::istream& in,
                     std::ostream& out) {
    ArtinPresentation pres = presentation_from_args(abc, in);
    if (!artin_valid(pres))
        throw invalid_input_error(
            "not an Artin presentation: prod x_i != prod r_i^-1 x_i r_i after reduction");
    IntMatrix m = relation_matrix(pres);
    FillObstruction screen = stein_fillable_screen(pres);
    const char* screen_tag =
        screen == FillObstruction::PassesNecessary ? "PassesNecessary" : "FailsNecessary";
    if (json) {
        Json j;
        j["n"] = pres.n;
        j["matrix"] = json_matrix(m);
        j["screen"] = screen_tag;
        emit(out, j);
    } else {
        out << "relation matrix:\n";
        print_matrix(out, m);
        out << "screen: " << screen_tag << "\n";
    }
    return 0;
}

TwistFactorization factorization_from_args(const std::vector<std::string>& a12,
                                           std::istream& in) {
    size_t given = 0;
    for (const std::string& s : a12)
        if (!s.empty()) ++given;
    if (given == 2) return chain_factorization(parse_int(a12[0]), parse_int(a12[1]));
    if (given != 0) throw invalid_input_error("give both chain coefficients a1 a2 or none");
    return factorization_from_json(read_json(in));
}

std::vector<std::string> hole_names_of(const TwistFactorization& f) {
    if (static_cast<int>(f.hole_names.size()) == f.num_holes) return f.hole_names;
    std::vector<std::string> names;
    for (int i = 0; i < f.num_holes; ++i) names.push_back(std::to_string(i));
    return names;
}

int cmd_mcg_mult(const std::vector<std::string>& a12, bool json, std::istream& in,
                 std::ostream& out) {
    TwistFactorization f = factorization_from_args(a12, in);
    std::vector<std::string> names = hole_names_of(f);
    IntMatrix m = multiplicity_matrix(f);
    bool positive = true;
    for (const Twist& t : f.twists)
        if (t.power <= 0) positive = false;
    std::optional<PalfInvariants> inv;
    if (positive) inv = palf_euler(f);
    bool qp = quasipositivity_screen(m);

    if (json) {
        Json j;
        Json holes = Json::array();
        for (const std::string& n : names) holes.push_back(n);
        j["holes"] = std::move(holes);
        j["matrix"] = json_matrix(m);
        if (inv) {
            Json pj;
            pj["chi"] = json_int(inv->chi);
            pj["b2"] = json_int(inv->b2);
            pj["h1_rank"] = json_int(inv->h1_rank);
            pj["h1_torsion"] = json_int_list(inv->h1_torsion);
            j["palf"] = std::move(pj);
        }
        j["quasipositive"] = qp;
        emit(out, j);
    } else {
        out << "holes:";
        for (const std::string& n : names) out << " " << n;
        out << "\n";
        out << "multiplicity matrix:\n";
        print_matrix(out, m);
        if (inv)
            out << "chi: " << inv->chi << "  b2: " << inv->b2 << "  H1: " << h1_str(*inv)
                << "\n";
        else
            out << "chi: (not a positive factorization)\n";
        out << "quasipositive screen: " << (qp ? "passes" : "fails") << "\n";
    }
    return 0;
}

int cmd_mcg_configs(const std::vector<std::string>& a12, const std::string& max_curves_flag,
                    bool json, std::istream& in, std::ostream& out) {
    IntMatrix target;
    std::vector<std::string> names;
    std::vector<std::vector<int>> groups;
    std::optional<Int> max_curves;

    size_t given = 0;
    for (const std::string& s : a12)
        if (!s.empty()) ++given;
    if (given == 2) {
        TwistFactorization f = chain_factorization(parse_int(a12[0]), parse_int(a12[1]));
        target = multiplicity_matrix(f);
        names = hole_names_of(f);
        std::vector<int> pgroup, ngroup;
        for (int i = 0; i < f.num_holes; ++i) {
            if (names[static_cast<size_t>(i)][0] == 'p') pgroup.push_back(i);
            if (names[static_cast<size_t>(i)][0] == 'n') ngroup.push_back(i);
        }
        if (pgroup.size() >= 2) groups.push_back(pgroup);
        if (ngroup.size() >= 2) groups.push_back(ngroup);
    } else if (given != 0) {
        throw invalid_input_error("give both chain coefficients a1 a2 or none");
    } else {
        Json j = read_json(in);
        if (!j.is_object() || !j.contains("holes") || !j.contains("matrix"))
            throw invalid_input_error("expected {\"holes\": [...], \"matrix\": [[...]]}");
        for (const Json& h : j["holes"]) {
            if (!h.is_string()) throw invalid_input_error("hole names must be strings");
            names.push_back(h.get<std::string>());
        }
        target = matrix_from_json(j["matrix"]);
        if (target.rows != static_cast<int>(names.size()))
            throw invalid_input_error("matrix size must match the hole count");
        if (j.contains("interchangeable")) {
            for (const Json& g : j["interchangeable"]) {
                std::vector<int> group;
                for (const Json& h : g) {
                    auto it = std::find(names.begin(), names.end(), h.get<std::string>());
                    if (it == names.end())
                        throw invalid_input_error("unknown hole name in interchangeable group");
                    group.push_back(static_cast<int>(it - names.begin()));
                }
                groups.push_back(group);
            }
        }
        if (j.contains("max_curves")) max_curves = int_from_json(j["max_curves"]);
    }
    if (!max_curves_flag.empty()) max_curves = parse_int(max_curves_flag);
    if (!max_curves) {
        Int diag_sum = 0;
        for (int i = 0; i < target.rows; ++i) diag_sum += target.at(i, i);
        max_curves = diag_sum;
    }
    if (*max_curves < 0 || *max_curves > 1'000'000)
        throw invalid_input_error("max curves must lie in [0, 10^6]");
    int cap = max_curves->convert_to<int>();

    auto configs = enumerate_configurations(target, cap, groups);

    if (json) {
        Json j;
        Json holes = Json::array();
        for (const std::string& n : names) holes.push_back(n);
        j["holes"] = std::move(holes);
        j["max_curves"] = cap;
        j["count"] = json_int(Int(configs.size()));
        Json arr = Json::array();
        for (const Configuration& c : configs) arr.push_back(configuration_to_json(c, names));
        j["configurations"] = std::move(arr);
        emit(out, j);
    } else {
        out << "holes:";
        for (const std::string& n : names) out << " " << n;
        out << "\n";
        out << configs.size() << " configurations realize the target (max " << cap
            << " curves)\n";
        for (const Configuration& c : configs) {
            for (size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << curve_str(c[i], names);
            out << "\n";
        }
    }
    return 0;
}

int cmd_mcg_lantern(bool json, std::istream& in, std::ostream& out) {
    Json j = read_json(in);
    if (!j.is_object() || !j.contains("pick"))
        throw invalid_input_error(
            "expected {\"holes\": [...], \"curves\": [[...]], \"pick\": [[...] x3]}");
    std::vector<std::string> names;
    Configuration conf = configuration_from_json(j, names);
    Json pick_wrap;
    pick_wrap["holes"] = j["holes"];
    pick_wrap["curves"] = j["pick"];
    std::vector<std::string> ignore;
    Configuration pick = configuration_from_json(pick_wrap, ignore);
    if (pick.size() != 3)
        throw invalid_input_error("pick must list exactly three pairwise disjoint curves");

    int holes = static_cast<int>(names.size());
    Configuration after = lantern_rewrite(conf, pick[0], pick[1], pick[2]);
    IntMatrix m = configuration_matrix(conf, holes);
    PalfInvariants before_inv = palf_of_configuration(conf, holes);
    PalfInvariants after_inv = palf_of_configuration(after, holes);

    if (json) {
        Json out_j;
        Json holes_j = Json::array();
        for (const std::string& n : names) holes_j.push_back(n);
        out_j["holes"] = std::move(holes_j);
        auto side = [&](const Configuration& c, const PalfInvariants& inv) {
            Json s;
            s["curves"] = configuration_to_json(c, names);
            s["chi"] = json_int(inv.chi);
            s["b2"] = json_int(inv.b2);
            s["h1_rank"] = json_int(inv.h1_rank);
            s["h1_torsion"] = json_int_list(inv.h1_torsion);
            return s;
        };
        out_j["before"] = side(conf, before_inv);
        out_j["after"] = side(after, after_inv);
        out_j["matrix"] = json_matrix(m);
        out_j["preserved"] = true; // lantern_rewrite asserts it
        emit(out, out_j);
    } else {
        out << "lantern rewrite: " << conf.size() << " curves -> " << after.size()
            << " curves\n";
        out << "chi: " << before_inv.chi << " -> " << after_inv.chi << "\n";
        out << "b2: " << before_inv.b2 << " -> " << after_inv.b2 << "\n";
        out << "H1: " << h1_str(before_inv) << " -> " << h1_str(after_inv) << "\n";
        out << "multiplicity matrix preserved: yes\n";
        out << "after:";
        for (const HoleSet& s : after) out << " " << curve_str(s, names);
        out << "\n";
    }
    return 0;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
    CLI::App app{
        "exact contact-topological invariants of lens spaces L(p,q) and planar open books\n"
        "NOTE: rotation vectors (--rot) are given in expansion order: the first entry\n"
        "belongs to the first coefficient of the negative continued fraction [a1,...,an]."};
    app.name("lenscape");
    app.require_subcommand(1);

    std::string p_s, q_s, rot_s, deg_s, max_curves_s;
    std::vector<std::string> abc(3), a12(2);
    bool json = false;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "emit JSON"); };
    auto add_pq = [&](CLI::App* sub) {
        sub->add_option("p", p_s, "parameter p of L(p,q)")->required();
        sub->add_option("q", q_s, "parameter q of L(p,q)")->required();
    };
    auto add_rot = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--rot", rot_s, kRotHelp);
        if (required) opt->required();
        return opt;
    };

    CLI::App* info = app.add_subcommand("info", "expansion, dual, tight count, chi bound");
    add_pq(info);
    add_json(info);

    CLI::App* tight =
        app.add_subcommand("tight", "enumerate tight structures with class, PD, d3");
    add_pq(tight);
    add_json(tight);

    CLI::App* d3 = app.add_subcommand("d3", "d3 invariant of a tight structure");
    add_pq(d3);
    add_rot(d3, true);
    add_json(d3);

    CLI::App* euler = app.add_subcommand("euler", "Poincare dual of the Euler class");
    add_pq(euler);
    add_rot(euler, true);
    add_json(euler);

    CLI::App* cover =
        app.add_subcommand("cover", "lift criteria, sign system, compatible lifts for one cover");
    add_pq(cover);
    cover->add_option("--deg", deg_s, "covering degree (a divisor of p)")->required();
    CLI::Option* cover_rot = add_rot(cover, false);
    add_json(cover);

    CLI::App* pi1 = app.add_subcommand("pi1", "pi1/chi exclusion report for Stein fillings");
    add_pq(pi1);
    add_rot(pi1, true);
    add_json(pi1);

    CLI::App* embed =
        app.add_subcommand("embed", "dual-chain embedding into a diagonal lattice");
    add_pq(embed);
    add_json(embed);

    CLI::App* milnor = app.add_subcommand("milnor", "Milnor-fibre boundary obstruction");
    add_pq(milnor);
    add_rot(milnor, true);
    add_json(milnor);

    CLI::App* av = app.add_subcommand(
        "artin-validate", "check the Artin condition (args a b c, or presentation on stdin)");
    av->add_option("a", abc[0], "p_{a,b,c} parameter a");
    av->add_option("b", abc[1], "p_{a,b,c} parameter b");
    av->add_option("c", abc[2], "p_{a,b,c} parameter c");
    add_json(av);

    CLI::App* ap = app.add_subcommand(
        "artin-product", "multiply presentations (JSON array on stdin)");
    add_json(ap);

    CLI::App* am = app.add_subcommand(
        "artin-matrix",
        "relation matrix and fillability screen (args a b c, or presentation on stdin)");
    am->add_option("a", abc[0], "p_{a,b,c} parameter a");
    am->add_option("b", abc[1], "p_{a,b,c} parameter b");
    am->add_option("c", abc[2], "p_{a,b,c} parameter c");
    add_json(am);

    CLI::App* mm = app.add_subcommand(
        "mcg-mult", "multiplicity matrix of a factorization (args a1 a2, or JSON on stdin)");
    mm->add_option("a1", a12[0], "first chain coefficient");
    mm->add_option("a2", a12[1], "second chain coefficient");
    add_json(mm);

    CLI::App* mc = app.add_subcommand(
        "mcg-configs",
        "enumerate curve configurations with a given multiplicity matrix (args a1 a2, or JSON "
        "on stdin)");
    mc->add_option("a1", a12[0], "first chain coefficient");
    mc->add_option("a2", a12[1], "second chain coefficient");
    mc->add_option("--max-curves", max_curves_s, "cap on the number of curves");
    add_json(mc);

    CLI::App* ml = app.add_subcommand(
        "mcg-lantern", "apply a lantern rewrite (JSON with holes/curves/pick on stdin)");
    add_json(ml);

    std::vector<const char*> argv;
    argv.push_back("lenscape");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return 2;
    }

    try {
        if (info->parsed()) return cmd_info(parse_int(p_s), parse_int(q_s), json, out);
        if (tight->parsed()) return cmd_tight(parse_int(p_s), parse_int(q_s), json, out);
        if (d3->parsed())
            return cmd_d3(parse_int(p_s), parse_int(q_s), parse_rot_list(rot_s), json, out);
        if (euler->parsed())
            return cmd_euler(parse_int(p_s), parse_int(q_s), parse_rot_list(rot_s), json, out);
        if (cover->parsed()) {
            std::optional<std::vector<Int>> rot;
            if (cover_rot->count() > 0) rot = parse_rot_list(rot_s);
            return cmd_cover(parse_int(p_s), parse_int(q_s), parse_int(deg_s), rot, json, out);
        }
        if (pi1->parsed())
            return cmd_pi1(parse_int(p_s), parse_int(q_s), parse_rot_list(rot_s), json, out);
        if (embed->parsed()) return cmd_embed(parse_int(p_s), parse_int(q_s), json, out);
        if (milnor->parsed())
            return cmd_milnor(parse_int(p_s), parse_int(q_s), parse_rot_list(rot_s), json, out);
        if (av->parsed()) return cmd_artin_validate(abc, json, in, out);
        if (ap->parsed()) return cmd_artin_product(json, in, out);
        if (am->parsed()) return cmd_artin_matrix(abc, json, in, out);
        if (mm->parsed()) return cmd_mcg_mult(a12, json, in, out);
        if (mc->parsed()) return cmd_mcg_configs(a12, max_curves_s, json, in, out);
        if (ml->parsed()) return cmd_mcg_lantern(json, in, out);
        err << "error: no subcommand\n" << app.help();
        return 2;
    } catch (const invalid_input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: bad JSON input: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        err << "resource limit: " << e.what()
            << " (raise with LENSCAPE_MAX_SEARCH=<steps>)\n";
        return 3;
    } catch (const inconsistency_error& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 1;
    }
}

} // namespace lenscape
