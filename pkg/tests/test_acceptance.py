"""Acceptance suite: one test per criterion, plus strict expected failures.

Each criterion test asserts the stated identities at the stated ranks and
degrees, and checks the wall-clock target with empty algebra caches.  Where
part of a criterion does not hold as stated, that part is asserted in a
separate strict ``xfail`` test (so it must keep failing) and the working form
is asserted in the criterion test.  The terminal summary prints one line per
criterion and reports FAIL for criteria with such parts.
"""

import time

import pytest

from bracketalg import checks
from bracketalg.checks import EVIDENCE, PASS, THROUGH, bracket_algebra, run_check
from bracketalg.nichols import symmetrizer_dims
from bracketalg.roots import RootSystem


class Timer:
    def __init__(self, limit_s: float, note):
        self.limit = limit_s
        self.note = note

    def __enter__(self):
        # time each criterion from scratch, not from algebras cached by earlier tests
        for builder in (checks.bracket_algebra, checks.nichols_algebra, checks.quantum_algebra, checks.abelian_algebra):
            builder.cache_clear()
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        elapsed = time.perf_counter() - self.start
        self.note(f"{elapsed:.1f}s of {self.limit:.0f}s")
        if exc[0] is None:
            assert elapsed < self.limit, f"took {elapsed:.1f}s, target {self.limit}s"


def exact(result):
    assert result.verdict == PASS, (result.checkId, result.verdict, result.details)
    return result.details


def through(result, degree):
    assert result.verdict in (PASS, THROUGH), (result.checkId, result.verdict, result.details)
    assert result.degreeVerified is None or result.degreeVerified >= degree, (result.checkId, result.degreeVerified)
    return result.details


def all_true(mapping):
    return all(mapping.values())


# ---------------------------------------------------------------------------
# 1


@pytest.mark.criterion(1, "RSM families commute (A exact n=2..4; B n=2,3 and G2 through degree 6)")
def test_criterion_1_commutativity(note):
    with Timer(120, note):
        d = exact(run_check("rsm-commute-a", {"n": [2, 3, 4]}, "full"))
        assert {c["n"] for c in d["cases"]} == {2, 3, 4}
        assert all(not c["noncommuting_pairs"] for c in d["cases"])

        d = through(run_check("rsm-commute-b", {"n": [2, 3], "max_deg": 6}, "full"), 6)
        assert {c["n"] for c in d["cases"]} == {2, 3}
        assert all(not c["noncommuting_pairs"] for c in d["cases"])
        assert bracket_algebra("B", 2, 6).complete

        d = through(run_check("rsm-commute-g2", {"max_deg": 6}, "full"), 6)
        assert d["BE(G2)"] and d["B(G2)"]


# ---------------------------------------------------------------------------
# 2


@pytest.mark.criterion(2, "e_j(G) = 0 and power sums = n for k in -3..3, n <= 4")
def test_criterion_2_type_a_relations(note):
    with Timer(120, note):
        assert sum(bracket_algebra("A", 4, 6).dims()) == 576
        d = exact(run_check("rsm-a-relations", {"n": [2, 3, 4], "powers": list(range(-3, 4))}, "full"))
        checked = [c for c in d["cases"] if "e_j(G) = 0" in c]
        assert {c["n"] for c in checked} == {2, 3, 4}
        for c in checked:
            assert all_true(c["e_j(G) = 0"]) and len(c["e_j(G) = 0"]) == c["n"]
            assert set(c["power sums = n"]) == {str(k) for k in range(-3, 4)}
            assert all_true(c["power sums = n"])


# ---------------------------------------------------------------------------
# 3


@pytest.mark.criterion(3, "Grothendieck solver: S3 list, S4 oracle, c(s1,s2)")
def test_criterion_3_grothendieck_calculus(note):
    with Timer(60, note):
        d = exact(run_check("grothendieck-bruhat", {"n": [3, 4]}))
        assert all_true(d["n=3"]["printed_S3"]) and len(d["n=3"]["printed_S3"]) == 6
        assert d["n=4"]["permutations"] == 24 and d["n=4"]["oracle_mismatches"] == []

        d = exact(run_check("structure-constants", {"n": [3]}))
        # derived with the Bruhat-action solver, cross-checked against the oracle expansion
        assert d["n=3"]["c(s1,s2)"] == {"s2s1": 1, "s1s2": 1, "s1s2s1": 1}
        assert d["n=3"]["disagreements"] == 0


# ---------------------------------------------------------------------------
# 4


@pytest.mark.criterion(4, "S3 worked example: e_k(Theta), G_w(G) expansions, 2E_1")
def test_criterion_4_worked_example(note):
    with Timer(30, note):
        d = exact(run_check("worked-example-s3"))["identities"]
        for key in ("e_1(Theta) = 3", "e_2(Theta) = 3", "e_3(Theta) = 1", "2E_1 = h13 h12 + h12 h13"):
            assert d[key], key
        expansions = [k for k in d if k.startswith("G_s") or k.startswith("G_w0")]
        assert len(expansions) == 4 and all(d[k] for k in expansions)


# ---------------------------------------------------------------------------
# 5


@pytest.mark.criterion(5, "Abelianization Hilbert series (n <= 5) and BE(B3) vs B(B3) gap")
def test_criterion_5_hilbert_series(note):
    with Timer(600, note):
        d = exact(run_check("abelianization-hilbert", {"n": [2, 3, 4, 5]}, "full"))
        assert {c["n"] for c in d["cases"]} == {2, 3, 4, 5}
        for c in d["cases"]:
            assert c["hilbert"] == c["expected"]
        assert d["cases"][-1]["hilbert"] == [1, 10, 35, 50, 24]

        d = through(run_check("hilbert-gap-b3", {"max_deg": 6}, "full"), 6)
        assert d["difference"] == [0, 0, 0, 0, 0, 0, 4]


# ---------------------------------------------------------------------------
# 6


@pytest.mark.criterion(6, "Nichols dimensions 12 and 64 from the symmetrizer; zero derivation kernel")
def test_criterion_6_nichols_regression(note):
    with Timer(120, note):
        a2, b2 = RootSystem("A", 3), RootSystem("B", 2)
        # brute-force oracle: sum over all permutations of the braid action
        naive_a2 = symmetrizer_dims(a2, 5, "naive")
        naive_b2 = symmetrizer_dims(b2, 6, "naive")
        assert naive_a2 == [1, 3, 4, 3, 1, 0]
        assert naive_b2 == [1, 4, 8, 12, 14, 12, 8]
        factor_b2 = symmetrizer_dims(b2, 9, "factorized")
        assert factor_b2[:7] == naive_b2 and factor_b2 == [1, 4, 8, 12, 14, 12, 8, 4, 1, 0]

        d = exact(run_check("nichols-dimensions", {}, "full"))
        assert d["B(A2)"]["total"] == 12 and d["B(A2)"]["hilbert"][:5] == [1, 3, 4, 3, 1]
        assert d["B(B2)"]["total"] == 64 and d["B(B2)"]["hilbert"] == factor_b2

        d = through(run_check("derivation-kernel", {}, "full"), 6)
        complete = [c for c in d["cases"] if c["complete"]]
        assert {c["system"] for c in complete} >= {"A3", "B2"}
        assert all(not any(c["kernel_dims"]) for c in d["cases"])


# ---------------------------------------------------------------------------
# 7


@pytest.mark.criterion(7, "K-theory relations: B2 exact, B3 through degree 6, D3 identities, A via specialization")
def test_criterion_7_k_theory_relations(note):
    with Timer(600, note):
        d = exact(run_check("k-theory-relations", {"b_ranks": [2], "a_ranks": [3]}, "full"))
        assert all_true(d["B2"]["eps_j = 0"]) and all_true(d["A2 (from B3)"]["eps_j = 0"])

        d = through(run_check("k-theory-relations", {"b_ranks": [3], "a_ranks": [], "max_deg": 6}, "full"), 6)
        assert all_true(d["B3"]["eps_j = 0"]) and len(d["B3"]["eps_j = 0"]) == 3

        d = exact(run_check("d-type-relations", {"n": [3]}, "full"))["cases"][0]
        # e_k(Theta + Theta^-1) equals its value at Theta = 1, i.e. eps-form of the relation
        assert all_true(d["e_k - e_k(2..2) = 0"]) and d["half product = 0"]


@pytest.mark.criterion(7, "K-theory relations: B2 exact, B3 through degree 6, D3 identities, A via specialization")
@pytest.mark.xfail(strict=True, reason="e_k(Theta + Theta^-1) = 0 literally has constant term e_k(2,..,2); see ledger")
def test_criterion_7_d3_literal_form():
    assert run_check("d-type-relations-printed", {"n": [3]}, "full").verdict == PASS


# ---------------------------------------------------------------------------
# 8


@pytest.mark.criterion(8, "Operator calculus: Q-table, conjugations, intertwining, tau relations")
def test_criterion_8_operator_calculus(note):
    with Timer(120, note):
        d = through(run_check("q-theta-table", {"n": [2, 3]}, "full"), 5)
        assert all(not c["failures"] for c in d["cases"])
        d = through(run_check("reflection-conjugation", {"n": [2, 3]}, "full"), 6)
        assert all(not c["failures"] for c in d["cases"])

        cases = [["A", 3], ["A", 4], ["B", 2], ["D", 3], ["B", 3]]
        d = through(run_check("intertwining", {"cases": cases, "count": 20, "seed": 0}, "full"), 5)
        assert {(c["family"], c["n"]) for c in d["cases"]} == {tuple(c) for c in cases}
        assert all(c["monomials"] >= 20 and c["failure_count"] == 0 for c in d["cases"])
        d = through(run_check("intertwining-g2", {"count": 20}, "full"), 5)
        assert d["monomials"] >= 20 and not d["failures"]

        d = exact(run_check("tau-relations", {}, "full"))
        assert len(d["cases"]) >= 7 and all(not c["failures"] for c in d["cases"])


@pytest.mark.criterion(8, "Operator calculus: Q-table, conjugations, intertwining, tau relations")
@pytest.mark.xfail(strict=True, reason="with the displayed tau_i, tau_i^2 = -tau_i rather than tau_i; see ledger")
def test_criterion_8_tau_square_displayed():
    assert run_check("tau-square-printed").verdict == PASS


@pytest.mark.criterion(8, "Operator calculus: Q-table, conjugations, intertwining, tau relations")
@pytest.mark.xfail(strict=True, reason="Q_n on the type C family matches tau^B_n, not tau^C_n; see ledger")
def test_criterion_8_type_c_intertwining():
    assert run_check("intertwining-c", {"count": 20}).verdict == PASS


# ---------------------------------------------------------------------------
# 9


@pytest.mark.criterion(9, "G2: relations in B(G2), phi_1 = phi_2 = 6, bracket conjecture")
def test_criterion_9_g2(note):
    with Timer(300, note):
        d = through(run_check("nichols-g2-relations", {"max_deg": 6}, "full"), 6)
        assert not d["failures"]
        d = through(run_check("bracket-g2-epimorphism", {"max_deg": 6}, "full"), 6)
        assert not d["failing"]
        d = through(run_check("k-theory-relations-g2", {"max_deg": 6}, "full"), 6)
        assert d["phi_1"]["equals 6"] and d["phi_2"]["equals 6"]


@pytest.mark.criterion(9, "G2: relations in B(G2), phi_1 = phi_2 = 6, bracket conjecture")
@pytest.mark.xfail(strict=True, reason="phi_j(Theta) - 6 is nonzero in degree 4 of BE(G2); see ledger")
def test_criterion_9_conjecture_in_bracket_algebra():
    assert run_check("conj-g2-bracket", {"max_deg": 6}, "full").verdict == EVIDENCE


# ---------------------------------------------------------------------------
# 10


@pytest.mark.criterion(10, "Conjectures in BE(B2), BE(B3) as evidence; quantum commutativity")
def test_criterion_10_conjectures(note):
    with Timer(300, note):
        for cid in ("conj-trig-b", "conj-power-difference-b"):
            r = run_check(cid, {"n": [2]}, "full")
            assert r.verdict == EVIDENCE and r.kind == "conjecture"
            # BE(B3) through degree 5; degree 6 is the separate expected failure below
            r = run_check(cid, {"n": [3], "max_deg": 5})
            assert r.verdict == EVIDENCE and r.degreeVerified == 5

        d = through(run_check("quantum-rsm-commute-a", {"cases": [[3, 8], [4, 6]]}, "full"), 6)
        assert {c["n"] for c in d["cases"]} == {3, 4} and all(not c["noncommuting"] for c in d["cases"])


@pytest.mark.criterion(10, "Conjectures in BE(B2), BE(B3) as evidence; quantum commutativity")
@pytest.mark.xfail(strict=True, reason="both conjectures fail in degree 6 of BE(B3); see ledger")
def test_criterion_10_conjectures_b3_degree_6():
    for cid in ("conj-trig-b", "conj-power-difference-b"):
        assert run_check(cid, {"n": [3], "max_deg": 6}, "full").verdict == EVIDENCE


# ---------------------------------------------------------------------------
# 11


@pytest.mark.criterion(11, "Commutation lemmas in BE(B3), BE(B4); small examples; product formulas")
def test_criterion_11_commutation_lemmas(note):
    with Timer(120, note):
        d = through(run_check("commutation-lemmas", {"n": [3, 4]}, "full"), 5)
        pairs = {(c["n"], c["i"], c["j"]) for c in d["cases"]}
        assert pairs == {(n, i, j) for n in (3, 4) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
        assert all(not c["failures"] for c in d["cases"])

        d = through(run_check("rsm-b-small-examples", {}, "full"), 6)
        assert all_true(d["n=2"]) and all_true(d["n=3"])
        d = through(run_check("product-formula-b", {"n": [2, 3]}, "full"), 6)
        assert all(not c["failures"] for c in d["cases"])


@pytest.mark.criterion(11, "Commutation lemmas in BE(B3), BE(B4); small examples; product formulas")
@pytest.mark.xfail(strict=True, reason="three displayed commutation identities differ from the working forms; see ledger")
def test_criterion_11_displayed_lemmas():
    assert run_check("commutation-lemmas-printed", {"n": [3]}).verdict in (PASS, THROUGH)
