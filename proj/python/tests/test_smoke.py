from fractions import Fraction

import pytest

import centersvar as cv

STANDARD = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1)]
GOLDEN_CENTER = (43, -50, 6, -5)


def rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    for c in range(len(m[0]) if m else 0):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def proportional(p, q):
    return rank([p, q]) == 1


def numeric(point):
    return [complex(float(re), float(im)) for re, im in point["coords"]]


def close(p, q, tol=1e-7):
    scale_p = max(p, key=abs)
    scale_q = max(q, key=abs)
    return max(abs(u / scale_p - v / scale_q) for u, v in zip(p, q)) < tol


def test_project_golden():
    img = cv.project(STANDARD, GOLDEN_CENTER)
    assert img == [(1, 0, 0), (0, 1, 0), (0, 0, 1), (43, -50, 6), (48, -45, 11)]


def test_project_accepts_strings_and_fractions():
    img = cv.project([("1/2", 0, 0, 0), (0, Fraction(3, 4), 0, 0)], ("43", -50, 6, -5))
    assert img[:2] == [(1, 0, 0), (0, 1, 0)]


def test_center_on_a_point_is_rejected():
    with pytest.raises(cv.CentersvarError) as err:
        cv.project(STANDARD, (1, 1, 1, 1))
    assert err.value.code in {"CenterHit", "InadmissibleCenter"}


def test_float_input_is_rejected():
    with pytest.raises(cv.CentersvarError):
        cv.project(STANDARD, (0.5, 1, 2, 3))


def test_golden_cubic_quadrics():
    report = cv.cubic_locus_n5(STANDARD, STANDARD, GOLDEN_CENTER)
    assert report["type"] == "CubicFibrationN5"
    got = [[Fraction(c) for c in q["coefficients"]] for q in report["quadrics"]]
    # grlex order on b0..b3: b0^2 b0b1 b0b2 b0b3 b1^2 b1b2 b1b3 b2^2 b2b3 b3^2
    printed = [
        [0, 0, 0, 0, 0, 28, 27, 0, -55, 0],
        [0, 0, 185, 288, 0, 0, 0, 0, -473, 0],
        [0, 31, 0, -160, 0, 0, 129, 0, 0, 0],
    ]
    assert rank(got) == 3
    assert rank(got + printed) == 3


def test_conic_invariants():
    inst = cv.generate_degenerate("OnConic", 6, 3)
    assert cv.t6(inst["points"])[5] == 0
    seven = cv.generate_degenerate("OnConic", 7, 4)
    assert cv.fano15(seven["points"]) == [1] * 15


def test_gale_twice_is_identity():
    pts = cv.generate_reconstruction(6, seed=1)["y"]["points"]
    plane = cv.project([[Fraction(c) for c in p] for p in pts], (1, 2, 3, 5))
    twice = cv.gale_transform(cv.gale_transform(plane))
    assert cv.t6(twice) == cv.t6(plane)


def test_six_points_partner_map():
    inst = cv.generate_reconstruction(6, seed=0)
    x, y = inst["x"]["points"], inst["y"]["points"]
    a, b = inst["ground_truth"]["a"], inst["ground_truth"]["b"]
    assert proportional(cv.map_a_to_b_n6(x, y, a), [Fraction(c) for c in b])
    report = cv.centers(x, y, a)
    assert report["type"] == "SurfacePairN6"
    assert proportional([Fraction(c) for c in report["matched_b"]], [Fraction(c) for c in b])


def test_seven_points_three_pairs():
    inst = cv.generate_reconstruction(7, seed=0)
    report = cv.centers(inst["x"]["points"], inst["y"]["points"], seed=3)
    assert report["type"] == "ThreePairsN7"
    assert len(report["pairs"]) == 3
    truth = [complex(Fraction(c)) for c in inst["ground_truth"]["a"]]
    hits = [p for p in report["pairs"] if close(numeric(p["a"]), truth)]
    assert len(hits) == 1


def test_generation_is_deterministic():
    assert cv.generate_reconstruction(5, seed=9) == cv.generate_reconstruction(5, seed=9)
    with pytest.raises(cv.CentersvarError):
        cv.generate_reconstruction(5, seed=0, bound=3)
